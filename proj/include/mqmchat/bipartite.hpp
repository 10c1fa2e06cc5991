#pragma once

#include <utility>
#include <vector>

namespace mqmchat {

struct WeightedEdge {
  int left = 0;
  int right = 0;
  double weight = 0;  // in [0, 1]
};

// One-to-one assignment of maximum cardinality; among maximum matchings the
// one maximizing total edge weight. Deterministic for a fixed input order.
// Returned pairs are (left, right), sorted by left index.
std::vector<std::pair<int, int>> max_cardinality_max_weight_matching(
    int n_left, int n_right, const std::vector<WeightedEdge>& edges);

}  // namespace mqmchat
