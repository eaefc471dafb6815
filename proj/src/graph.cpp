#include "dqa/graph.hpp"

#include <algorithm>
#include <string>

namespace dqa {

namespace {

std::string describe(const EdgePair& e) {
  return "(" + std::to_string(e.first) + ", " + std::to_string(e.second) + ")";
}

}  // namespace

DirectedGraph::DirectedGraph(std::size_t vertex_count, std::span<const EdgePair> edges)
    : successors_(vertex_count), predecessors_(vertex_count) {
  for (const auto& e : edges) {
    if (e.first >= vertex_count || e.second >= vertex_count) {
      throw GraphError("edge " + describe(e) + " references a vertex outside 0.." +
                       std::to_string(vertex_count) + "-1");
    }
    if (e.first == e.second) {
      throw GraphError("self-loop " + describe(e) + " is not allowed in a simple digraph");
    }
    successors_[e.first].push_back(e.second);
    predecessors_[e.second].push_back(e.first);
  }
  for (VertexId v = 0; v < vertex_count; ++v) {
    auto& succ = successors_[v];
    std::sort(succ.begin(), succ.end());
    auto dup = std::adjacent_find(succ.begin(), succ.end());
    if (dup != succ.end()) {
      throw GraphError("duplicate edge " + describe({v, *dup}));
    }
    std::sort(predecessors_[v].begin(), predecessors_[v].end());
  }
  edge_count_ = edges.size();
}

bool DirectedGraph::has_edge(VertexId from, VertexId to) const {
  if (from >= vertex_count() || to >= vertex_count()) return false;
  const auto& succ = successors_[from];
  return std::binary_search(succ.begin(), succ.end(), to);
}

std::vector<EdgePair> DirectedGraph::edges() const {
  std::vector<EdgePair> out;
  out.reserve(edge_count_);
  for (VertexId v = 0; v < vertex_count(); ++v) {
    for (VertexId w : successors_[v]) out.emplace_back(v, w);
  }
  return out;
}

}  // namespace dqa
