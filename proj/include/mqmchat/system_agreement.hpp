#pragma once

#include <span>
#include <string>
#include <vector>

namespace mqmchat {

// One system's human-derived and automatic scores under one comparison
// condition (a language pair x length class slice).
struct SystemScore {
  std::string condition;
  std::string system;
  double human = 0;
  double automatic = 0;
};

struct TiePolicy {
  // A tie on both sides is concordant under the default policy; a tie on
  // exactly one side is always discordant.
  bool both_tie_concordant = true;
};

struct PairwiseAccuracy {
  long long concordant = 0;
  long long total = 0;
  double value = 0;
};

// System pairs are compared within their condition only. Throws when no
// condition holds two systems.
PairwiseAccuracy pairwise_accuracy(const std::vector<SystemScore>& scores, const TiePolicy& policy);

// Sample Pearson correlation. Throws on length mismatch, fewer than two
// points, or a constant vector (the value is undefined, not zero).
double pearson(std::span<const double> x, std::span<const double> y);

}  // namespace mqmchat
