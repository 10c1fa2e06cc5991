#include "mqmchat/system_agreement.hpp"

#include <cmath>
#include <map>
#include <set>

#include "mqmchat/error.hpp"

namespace mqmchat {

PairwiseAccuracy pairwise_accuracy(const std::vector<SystemScore>& scores, const TiePolicy& policy) {
  std::set<std::pair<std::string, std::string>> seen;
  std::map<std::string, std::vector<const SystemScore*>> by_condition;
  for (const auto& s : scores) {
    if (!seen.insert({s.condition, s.system}).second)
      throw Error("duplicate system " + s.system + " in condition " + s.condition);
    by_condition[s.condition].push_back(&s);
  }

  PairwiseAccuracy out;
  for (const auto& [condition, group] : by_condition) {
    for (std::size_t i = 0; i < group.size(); ++i) {
      for (std::size_t j = i + 1; j < group.size(); ++j) {
        ++out.total;
        auto sign = [](double d) { return d > 0 ? 1 : d < 0 ? -1 : 0; };
        int h = sign(group[i]->human - group[j]->human);
        int a = sign(group[i]->automatic - group[j]->automatic);
        if (h == 0 && a == 0) {
          if (policy.both_tie_concordant) ++out.concordant;
        } else if (h != 0 && h == a) {
          ++out.concordant;
        }
      }
    }
  }
  if (out.total == 0) throw Error("no comparable system pairs in any condition");
  out.value = static_cast<double>(out.concordant) / static_cast<double>(out.total);
  return out;
}

double pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw Error("pearson: input lengths differ");
  if (x.size() < 2) throw Error("pearson: need at least two points");
  const auto n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double dx = x[i] - mx;
    double dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0 || syy == 0) throw Error("pearson: correlation undefined for a constant vector");
  return sxy / std::sqrt(sxx * syy);
}

}  // namespace mqmchat
