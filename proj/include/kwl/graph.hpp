#ifndef KWL_GRAPH_HPP
#define KWL_GRAPH_HPP

#include <limits>
#include <queue>
#include <vector>

namespace kwl {

// Undirected weighted graph with optional per-node traversal costs
// (charged on entering a node; sources enter free).
struct WeightedGraph {
  std::vector<std::vector<std::pair<int, double>>> adj;
  std::vector<double> node_cost;  // empty means all-zero

  int size() const { return static_cast<int>(adj.size()); }
  void resize(int n) { adj.assign(n, {}); }
  void add_edge(int a, int b, double w) {
    adj[a].push_back({b, w});
    adj[b].push_back({a, w});
  }
};

struct ShortestPaths {
  std::vector<double> dist;
  std::vector<int> parent;
};

inline ShortestPaths dijkstra(const WeightedGraph& g, const std::vector<int>& sources) {
  const double inf = std::numeric_limits<double>::infinity();
  ShortestPaths out;
  out.dist.assign(g.adj.size(), inf);
  out.parent.assign(g.adj.size(), -1);
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  for (int s : sources) {
    out.dist[s] = 0;
    heap.push({0.0, s});
  }
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    if (d > out.dist[u]) continue;
    for (auto [v, w] : g.adj[u]) {
      double nd = d + w;
      if (!g.node_cost.empty()) nd += g.node_cost[v];
      if (nd < out.dist[v] - 1e-18) {
        out.dist[v] = nd;
        out.parent[v] = u;
        heap.push({nd, v});
      }
    }
  }
  return out;
}

}  // namespace kwl

#endif
