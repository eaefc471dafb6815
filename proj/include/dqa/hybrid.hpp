#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dqa/flag_complex.hpp"
#include "dqa/nearness.hpp"
#include "dqa/parallel.hpp"
#include "dqa/qdigraph.hpp"

namespace dqa {

/// A list of simplex ids attached to every simplex whose dimension lies in
/// [lo, hi]. Backs both the up-set cache and the coface caches.
class SimplexLists {
 public:
  SimplexLists() = default;
  /// Dimensions outside the complex are simply absent.
  SimplexLists(const FlagComplex& complex, int lo, int hi);

  void add(SimplexId key, SimplexId value);

  /// Empty span for keys outside the covered dimensions.
  std::span<const SimplexId> operator[](SimplexId key) const;

  /// Total number of registered values.
  std::size_t total() const;

 private:
  int lo_ = 0;
  std::vector<std::vector<std::vector<SimplexId>>> lists_;
};

/// upsets[mu] = every strict supersimplex of mu in the complex.
using UpSetCache = SimplexLists;

/// coF_i / coF_j lookups. NOVEL: keys are Σ_q, values Σ_{q+1} with
/// face(sigma, i) == key. HAT: keys are Σ_{>=q}, every sigma in Σ_{>q} is
/// registered under hat_face(sigma, i) (one key per index).
struct CofaceCache {
  Definition definition = Definition::Novel;
  SimplexLists by_i;
  SimplexLists by_j;
};

/// Criterion-[I] edges (face, supersimplex) over Σ_{>=q}, sorted, together
/// with up-sets for the simplices of the requested dimensions.
struct InclusionPass {
  std::vector<EdgeKey> edges;
  UpSetCache upsets;
  std::uint64_t emitted = 0;
  std::uint32_t max_merge_count = 0;
};

/// Enumerates, for every tau in Σ_{>q}, all of its faces of dimension q to
/// dim(tau)-1. Faces whose dimension is in cache_dims get tau appended to
/// their up-set. No pairwise simplex comparison.
InclusionPass compute_inclusions(const FlagComplex& complex, int q, std::span<const int> cache_dims,
                                 const Strategy& strategy = {});

/// Registers cofaces per the rules of CofaceCache. Throws
/// std::invalid_argument for an invalid NOVEL direction.
CofaceCache build_coface_cache(const FlagComplex& complex, int q, const Direction& dir);

/// Criterion-[II] edges among (q+1)-simplices: the union over α in Σ_q of
/// coF_i(α) × coF_j(α), minus self-loops. NOVEL caches only.
ShardedEdges<EdgeKey> compute_e_q1(const FlagComplex& complex, int q, const CofaceCache& cache,
                                   const Strategy& strategy = {});

/// All criterion-[II] edges of the NOVEL digraph: for every α in Σ_q and
/// every (mu_sigma, mu_tau) in coF_i(α) × coF_j(α), emits
/// δ*(mu_sigma) × δ*(mu_tau) where δ*(mu) = {mu} ∪ upsets[mu]. Per-edge
/// emission counts are kept in the result.
ShardedEdges<EdgeKey> propagate_up(const FlagComplex& complex, int q, const CofaceCache& cache,
                                   const UpSetCache& upsets, const Strategy& strategy = {});

/// Output-sensitive engine for the novel definition (inclusion pass, coface
/// cache, upward propagation). Throws std::invalid_argument for a HAT
/// direction.
QDigraph get_q_hybrid(const FlagComplex& complex, int q, const Direction& dir,
                      const Strategy& strategy = {});

/// Hybrid engine for the hatted definition: for every α in Σ_q and every
/// pair mu_sigma, mu_tau in δ*(α), emits cache_i[mu_sigma] × cache_j[mu_tau].
QDigraph get_qhat_hybrid(const FlagComplex& complex, int q, const Direction& dir,
                         const Strategy& strategy = {});

}  // namespace dqa
