#pragma once

#include <vector>

namespace forestcover {

struct MaxFlowResult {
  double value = 0.0;
  // Nodes reachable from the source in the final residual network.
  std::vector<bool> source_side;
};

// Directed flow network with real capacities, solved by Dinic's algorithm.
// Residual capacities at or below `eps` are treated as saturated.
class FlowNetwork {
 public:
  explicit FlowNetwork(int node_count, double eps = 1e-12);

  int node_count() const noexcept { return static_cast<int>(head_.size()); }

  // Returns the arc index.
  int add_arc(int from, int to, double capacity);

  // Computes a maximum flow from scratch (flows are reset on every call).
  MaxFlowResult solve(int source, int sink);

  // Total capacity of arcs leaving `side` (true) towards its complement.
  double cut_capacity(const std::vector<bool>& side) const;

 private:
  struct Arc {
    int to;
    int next;
    double capacity;
    double flow;
  };

  bool build_levels(int source, int sink);
  double push(int v, int sink, double limit);

  double eps_;
  std::vector<int> head_;
  std::vector<Arc> arcs_;
  std::vector<int> level_;
  std::vector<int> cursor_;
};

}  // namespace forestcover
