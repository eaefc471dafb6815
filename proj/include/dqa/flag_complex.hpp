#pragma once

#include <climits>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "dqa/graph.hpp"
#include "dqa/simplex.hpp"

namespace dqa {

/// Stable simplex identifier: dimension plus position within the
/// lexicographically sorted level. Serialized as "d.k".
struct SimplexId {
  std::uint32_t dim = 0;
  std::uint32_t ordinal = 0;

  auto operator<=>(const SimplexId&) const = default;

  /// Order-preserving 64-bit packing: (dim, ordinal) compares like the packed value.
  constexpr std::uint64_t packed() const {
    return (static_cast<std::uint64_t>(dim) << 40) | ordinal;
  }
  static constexpr SimplexId unpack(std::uint64_t p) {
    return {static_cast<std::uint32_t>(p >> 40),
            static_cast<std::uint32_t>(p & ((std::uint64_t{1} << 40) - 1))};
  }

  std::string to_string() const;
};

/// Directed flag complex: every simplex of a graph grouped by dimension.
/// Immutable after construction.
class FlagComplex {
 public:
  FlagComplex() = default;

  /// Highest stored dimension; -1 for an empty complex.
  int max_dim() const { return static_cast<int>(levels_.size()) - 1; }
  std::size_t vertex_count() const { return levels_.empty() ? 0 : levels_[0].size(); }

  std::span<const Simplex> level(int d) const;
  std::size_t level_size(int d) const { return level(d).size(); }
  std::vector<std::size_t> level_sizes() const;

  /// |Σ_{>=q}|.
  std::size_t count_from(int q) const;

  const Simplex& simplex(SimplexId id) const { return levels_[id.dim][id.ordinal]; }

  std::optional<SimplexId> find(const Simplex& s) const;
  std::optional<SimplexId> find(std::span<const VertexId> vertices) const;

  /// Dimension clip the complex was built with, if any.
  std::optional<int> d_max() const { return d_max_; }

  friend FlagComplex build_flag_complex(const DirectedGraph& graph, std::optional<int> d_max);

 private:
  std::vector<std::vector<Simplex>> levels_;
  std::vector<std::unordered_map<Simplex, std::uint32_t, SimplexHash>> index_;
  std::optional<int> d_max_;
};

/// Enumerates all simplices of dimension <= d_max (all when absent). Each
/// simplex (v0..vk) is extended by every w in succ(v0) ∩ ... ∩ succ(vk), so
/// every totally ordered clique appears exactly once.
/// Throws std::invalid_argument when d_max < 1.
FlagComplex build_flag_complex(const DirectedGraph& graph, std::optional<int> d_max = {});

/// Sorted intersection of two sorted ranges, written to `out`.
void intersect_sorted(std::span<const VertexId> a, std::span<const VertexId> b,
                      std::vector<VertexId>& out);

/// Vertices v such that inserting v at `position` of `tuple` gives a simplex:
/// v must be a successor of every vertex before the position and a
/// predecessor of every vertex at or after it. Sorted ascending.
std::vector<VertexId> insertion_candidates(std::span<const VertexId> tuple, std::size_t position,
                                           const DirectedGraph& graph);

/// coF_i(s) computed from the graph: all simplices t with face(t, i) == s.
std::vector<Simplex> coface_scan(const Simplex& s, std::size_t i, const DirectedGraph& graph);

namespace detail {

template <class Fn>
void extend_simplex(const DirectedGraph& graph, std::vector<VertexId>& tuple,
                    std::span<const VertexId> candidates, int max_dim, Fn& fn) {
  fn(std::span<const VertexId>(tuple));
  if (static_cast<int>(tuple.size()) - 1 >= max_dim) return;
  std::vector<VertexId> next;
  for (VertexId w : candidates) {
    intersect_sorted(candidates, graph.successors(w), next);
    tuple.push_back(w);
    extend_simplex(graph, tuple, next, max_dim, fn);
    tuple.pop_back();
  }
}

}  // namespace detail

/// Calls fn(std::span<const VertexId>) for every simplex whose first vertex is
/// `root`, up to dimension max_dim (unbounded when negative), in
/// lexicographic depth-first order.
template <class Fn>
void for_each_simplex_rooted(const DirectedGraph& graph, VertexId root, int max_dim, Fn&& fn) {
  if (max_dim < 0) max_dim = INT_MAX;
  std::vector<VertexId> tuple{root};
  const auto succ = graph.successors(root);
  std::vector<VertexId> candidates(succ.begin(), succ.end());
  detail::extend_simplex(graph, tuple, candidates, max_dim, fn);
}

}  // namespace dqa
