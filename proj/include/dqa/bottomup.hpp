#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dqa/flag_complex.hpp"
#include "dqa/graph.hpp"
#include "dqa/nearness.hpp"
#include "dqa/parallel.hpp"
#include "dqa/qdigraph.hpp"

namespace dqa {

/// All strict supersimplices of mu with dimension <= d_max, found by
/// repeatedly inserting feasible vertices at every position. Sorted.
std::vector<Simplex> supersimplex_closure(const Simplex& mu, const DirectedGraph& graph,
                                          std::optional<int> d_max = {});

/// Edge between two simplices given by their vertex tuples; the key type of
/// the cache-free engine, which never materialises the complex.
struct TupleEdge {
  Simplex src;
  Simplex dst;

  auto operator<=>(const TupleEdge&) const = default;
  bool operator==(const TupleEdge&) const = default;
};

struct TupleEdgeHash {
  std::size_t operator()(const TupleEdge& e) const noexcept {
    SimplexHash h;
    return h(e.src) * 0x9e3779b97f4a7c15ULL ^ h(e.dst);
  }
};

template <>
struct RunCodec<TupleEdge> {
  static void write(std::ostream& os, const TupleEdge& e);
  static bool read(std::istream& is, TupleEdge& e);
};

struct BottomUpResult {
  ShardedEdges<TupleEdge> edges;
  /// Largest number of simplices held at once by one shard for one α
  /// (both closure sides together).
  std::size_t peak_shard_state = 0;
  std::size_t shards = 0;
  /// Criterion-[I] items among edges.emissions.
  std::uint64_t inclusion_emissions = 0;
};

/// Cache-free engine for the novel definition. Work items are the vertices
/// of the graph: shard v handles every simplex whose first vertex is v.
/// For each such α in Σ_q it scans coF_i(α) and coF_j(α) directly from the
/// adjacency lists, closes both sides upward and emits the cross product;
/// for each such tau in Σ_{>q} it emits (face, tau) for every face of
/// dimension q .. dim(tau)-1. Throws std::invalid_argument for HAT.
BottomUpResult bottomup_edges(const DirectedGraph& graph, int q, const Direction& dir,
                              std::optional<int> d_max, const Strategy& strategy = {});

/// Same engine, with edges translated to the ids of `complex` (which must be
/// the flag complex of `graph`; its clip is used as d_max).
QDigraph get_q_bottomup(const DirectedGraph& graph, const FlagComplex& complex, int q,
                        const Direction& dir, const Strategy& strategy = {});

}  // namespace dqa
