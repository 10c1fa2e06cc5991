#include "mqmchat/bipartite.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "mqmchat/error.hpp"

namespace mqmchat {

// Successive shortest paths on the standard assignment network: source ->
// left (cap 1), admissible left -> right edges (cap 1, cost 1 - weight),
// right -> sink (cap 1). Max flow maximizes cardinality, min cost then
// maximizes total weight among maximum matchings. Potentials keep reduced
// costs nonnegative so Dijkstra applies throughout.
std::vector<std::pair<int, int>> max_cardinality_max_weight_matching(
    int n_left, int n_right, const std::vector<WeightedEdge>& edges) {
  struct Arc {
    int to;
    int rev;
    int cap;
    double cost;
  };
  const int source = 0;
  const int sink = n_left + n_right + 1;
  const int n = sink + 1;
  std::vector<std::vector<Arc>> graph(n);

  auto add_arc = [&](int from, int to, int cap, double cost) {
    graph[from].push_back({to, static_cast<int>(graph[to].size()), cap, cost});
    graph[to].push_back({from, static_cast<int>(graph[from].size()) - 1, 0, -cost});
  };

  for (int i = 0; i < n_left; ++i) add_arc(source, 1 + i, 1, 0.0);
  for (int j = 0; j < n_right; ++j) add_arc(1 + n_left + j, sink, 1, 0.0);
  for (const auto& e : edges) {
    if (e.left < 0 || e.left >= n_left || e.right < 0 || e.right >= n_right)
      throw Error("matching edge endpoint out of range");
    add_arc(1 + e.left, 1 + n_left + e.right, 1, 1.0 - e.weight);
  }

  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> potential(n, 0.0);
  std::vector<double> dist(n);
  std::vector<int> prev_node(n), prev_arc(n);

  while (true) {
    std::fill(dist.begin(), dist.end(), inf);
    dist[source] = 0.0;
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    heap.push({0.0, source});
    while (!heap.empty()) {
      auto [d, u] = heap.top();
      heap.pop();
      if (d > dist[u]) continue;
      for (std::size_t k = 0; k < graph[u].size(); ++k) {
        const Arc& a = graph[u][k];
        if (a.cap <= 0) continue;
        double nd = d + a.cost + potential[u] - potential[a.to];
        if (nd < dist[a.to] - 1e-15) {
          dist[a.to] = nd;
          prev_node[a.to] = u;
          prev_arc[a.to] = static_cast<int>(k);
          heap.push({nd, a.to});
        }
      }
    }
    if (dist[sink] == inf) break;
    for (int v = 0; v < n; ++v)
      if (dist[v] < inf) potential[v] += dist[v];
    for (int v = sink; v != source; v = prev_node[v]) {
      Arc& a = graph[prev_node[v]][prev_arc[v]];
      a.cap -= 1;
      graph[v][a.rev].cap += 1;
    }
  }

  std::vector<std::pair<int, int>> matches;
  for (int i = 0; i < n_left; ++i) {
    for (const Arc& a : graph[1 + i]) {
      if (a.to == source || a.cap != 0) continue;
      if (a.to >= 1 + n_left && a.to < 1 + n_left + n_right)
        matches.emplace_back(i, a.to - 1 - n_left);
    }
  }
  std::sort(matches.begin(), matches.end());
  return matches;
}

}  // namespace mqmchat
