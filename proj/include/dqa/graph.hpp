#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace dqa {

using VertexId = std::uint32_t;
using EdgePair = std::pair<VertexId, VertexId>;

/// Raised when a graph or an input file violates the simple-digraph rules.
class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Simple directed graph on vertices 0..n-1.
///
/// Successor and predecessor lists are kept sorted so that coface candidates
/// can be found by merging adjacency lists. Immutable once constructed.
class DirectedGraph {
 public:
  DirectedGraph() = default;

  /// Throws GraphError naming the offending edge on a self-loop, a repeated
  /// ordered pair, or an endpoint >= vertex_count.
  DirectedGraph(std::size_t vertex_count, std::span<const EdgePair> edges);

  std::size_t vertex_count() const { return successors_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  std::span<const VertexId> successors(VertexId v) const { return successors_[v]; }
  std::span<const VertexId> predecessors(VertexId v) const { return predecessors_[v]; }

  bool has_edge(VertexId from, VertexId to) const;

  /// All edges in (from, to) lexicographic order.
  std::vector<EdgePair> edges() const;

 private:
  std::size_t edge_count_ = 0;
  std::vector<std::vector<VertexId>> successors_;
  std::vector<std::vector<VertexId>> predecessors_;
};

}  // namespace dqa
