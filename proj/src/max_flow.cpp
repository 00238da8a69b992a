#include "forestcover/max_flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "forestcover/errors.hpp"

namespace forestcover {

FlowNetwork::FlowNetwork(int node_count, double eps)
    : eps_(eps), head_(static_cast<std::size_t>(node_count), -1) {}

int FlowNetwork::add_arc(int from, int to, double capacity) {
  if (capacity < 0.0) throw SolverError("flow network: negative capacity");
  const int id = static_cast<int>(arcs_.size());
  arcs_.push_back({to, head_[from], capacity, 0.0});
  head_[from] = id;
  arcs_.push_back({from, head_[to], 0.0, 0.0});
  head_[to] = id + 1;
  return id;
}

bool FlowNetwork::build_levels(int source, int sink) {
  level_.assign(head_.size(), -1);
  std::queue<int> q;
  level_[source] = 0;
  q.push(source);
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (int a = head_[v]; a != -1; a = arcs_[a].next) {
      const Arc& arc = arcs_[a];
      if (level_[arc.to] < 0 && arc.capacity - arc.flow > eps_) {
        level_[arc.to] = level_[v] + 1;
        q.push(arc.to);
      }
    }
  }
  return level_[sink] >= 0;
}

double FlowNetwork::push(int v, int sink, double limit) {
  if (v == sink) return limit;
  for (int& a = cursor_[v]; a != -1; a = arcs_[a].next) {
    Arc& arc = arcs_[a];
    const double residual = arc.capacity - arc.flow;
    if (residual <= eps_ || level_[arc.to] != level_[v] + 1) continue;
    const double pushed = push(arc.to, sink, std::min(limit, residual));
    if (pushed > 0.0) {
      arc.flow += pushed;
      arcs_[a ^ 1].flow -= pushed;
      return pushed;
    }
  }
  return 0.0;
}

MaxFlowResult FlowNetwork::solve(int source, int sink) {
  for (Arc& arc : arcs_) arc.flow = 0.0;
  MaxFlowResult result;
  if (source != sink) {
    while (build_levels(source, sink)) {
      cursor_ = head_;
      while (true) {
        const double pushed = push(source, sink, std::numeric_limits<double>::infinity());
        if (pushed <= 0.0) break;
        result.value += pushed;
      }
    }
  }
  build_levels(source, sink);
  result.source_side.resize(head_.size());
  for (std::size_t v = 0; v < head_.size(); ++v) result.source_side[v] = level_[v] >= 0;
  return result;
}

double FlowNetwork::cut_capacity(const std::vector<bool>& side) const {
  double total = 0.0;
  for (std::size_t v = 0; v < head_.size(); ++v) {
    if (!side[v]) continue;
    for (int a = head_[v]; a != -1; a = arcs_[a].next) {
      if (!side[arcs_[a].to]) total += arcs_[a].capacity;
    }
  }
  return total;
}

}  // namespace forestcover
