#include "dqa/hybrid.hpp"

#include <algorithm>
#include <stdexcept>

namespace dqa {

namespace {

SimplexId require_id(const FlagComplex& complex, std::span<const VertexId> vertices) {
  auto id = complex.find(vertices);
  if (!id) {
    throw std::logic_error("face " + to_string(Simplex(vertices)) + " missing from the complex");
  }
  return *id;
}

std::vector<SimplexId> ids_of_dims(const FlagComplex& complex, int lo, int hi) {
  std::vector<SimplexId> ids;
  for (int d = std::max(lo, 0); d <= std::min(hi, complex.max_dim()); ++d) {
    for (std::uint32_t k = 0; k < complex.level_size(d); ++k) {
      ids.push_back({static_cast<std::uint32_t>(d), k});
    }
  }
  return ids;
}

// Sorted merge of inclusion edges and criterion-[II] edges.
std::vector<Edge> combine(const std::vector<EdgeKey>& inclusions,
                          const std::vector<std::pair<EdgeKey, EdgeEntry>>& shared) {
  std::vector<Edge> out;
  out.reserve(inclusions.size() + shared.size());
  auto push = [&](const EdgeKey& k, Provenance p) {
    out.push_back({SimplexId::unpack(k.src), SimplexId::unpack(k.dst), p});
  };
  auto a = inclusions.begin();
  auto b = shared.begin();
  while (a != inclusions.end() || b != shared.end()) {
    if (b == shared.end() || (a != inclusions.end() && *a < b->first)) {
      push(*a++, Provenance::Inclusion);
    } else if (a == inclusions.end() || b->first < *a) {
      push(b->first, b->second.provenance);
      ++b;
    } else {
      push(*a, Provenance::Inclusion | b->second.provenance);
      ++a;
      ++b;
    }
  }
  return out;
}

QDigraph assemble(const FlagComplex& complex, int q, const Direction& dir,
                  const InclusionPass& inclusions, const ShardedEdges<EdgeKey>& shared) {
  QDigraph out = make_qdigraph(complex, q, dir);
  out.edges = combine(inclusions.edges, shared.edges);
  out.stats.inclusion_emissions = inclusions.emitted;
  out.stats.emissions = shared.emissions;
  out.stats.max_duplicates = shared.max_emissions(Provenance::SharedFace);
  out.stats.max_merge_count = std::max(inclusions.max_merge_count, shared.max_merge_count);
  return out;
}

}  // namespace

SimplexLists::SimplexLists(const FlagComplex& complex, int lo, int hi) : lo_(std::max(lo, 0)) {
  for (int d = lo_; d <= std::min(hi, complex.max_dim()); ++d) {
    lists_.emplace_back(complex.level_size(d));
  }
}

void SimplexLists::add(SimplexId key, SimplexId value) {
  const auto slot = static_cast<std::size_t>(static_cast<int>(key.dim) - lo_);
  lists_.at(slot).at(key.ordinal).push_back(value);
}

std::span<const SimplexId> SimplexLists::operator[](SimplexId key) const {
  const int slot = static_cast<int>(key.dim) - lo_;
  if (slot < 0 || slot >= static_cast<int>(lists_.size())) return {};
  const auto& level = lists_[static_cast<std::size_t>(slot)];
  if (key.ordinal >= level.size()) return {};
  return level[key.ordinal];
}

std::size_t SimplexLists::total() const {
  std::size_t n = 0;
  for (const auto& level : lists_) {
    for (const auto& l : level) n += l.size();
  }
  return n;
}

InclusionPass compute_inclusions(const FlagComplex& complex, int q, std::span<const int> cache_dims,
                                 const Strategy& strategy) {
  InclusionPass pass;
  const auto tops = ids_of_dims(complex, q + 1, complex.max_dim());

  auto shard = [&](std::size_t item, EdgeSink<EdgeKey, EdgeKeyHash>& sink) {
    const SimplexId tau_id = tops[item];
    const Simplex& tau = complex.simplex(tau_id);
    for (int d = q; d < tau.dim(); ++d) {
      for_each_subtuple(tau.vertices(), static_cast<std::size_t>(d) + 1,
                        [&](std::span<const VertexId> f) {
                          sink.emit(EdgeKey::of(require_id(complex, f), tau_id),
                                    Provenance::Inclusion);
                        });
    }
  };
  auto result = run_sharded<EdgeKey, EdgeKeyHash>(tops.size(), shard, strategy);
  pass.emitted = result.emissions;
  pass.max_merge_count = result.max_merge_count;

  int lo = 0;
  int hi = -1;
  if (!cache_dims.empty()) {
    lo = *std::min_element(cache_dims.begin(), cache_dims.end());
    hi = *std::max_element(cache_dims.begin(), cache_dims.end());
  }
  pass.upsets = UpSetCache(complex, lo, hi);
  pass.edges.reserve(result.edges.size());
  for (const auto& [key, entry] : result.edges) {
    pass.edges.push_back(key);
    const SimplexId src = SimplexId::unpack(key.src);
    if (std::find(cache_dims.begin(), cache_dims.end(), static_cast<int>(src.dim)) !=
        cache_dims.end()) {
      pass.upsets.add(src, SimplexId::unpack(key.dst));
    }
  }
  return pass;
}

CofaceCache build_coface_cache(const FlagComplex& complex, int q, const Direction& dir) {
  validate_direction(dir, q);
  CofaceCache cache;
  cache.definition = dir.definition;
  if (dir.definition == Definition::Novel) {
    cache.by_i = SimplexLists(complex, q, q);
    cache.by_j = SimplexLists(complex, q, q);
    const unsigned i = dir.i.resolve_novel(q);
    const unsigned j = dir.j.resolve_novel(q);
    for (const auto& sigma_id : ids_of_dims(complex, q + 1, q + 1)) {
      const Simplex& sigma = complex.simplex(sigma_id);
      cache.by_i.add(require_id(complex, face(sigma, i).vertices()), sigma_id);
      cache.by_j.add(require_id(complex, face(sigma, j).vertices()), sigma_id);
    }
  } else {
    cache.by_i = SimplexLists(complex, q, complex.max_dim() - 1);
    cache.by_j = SimplexLists(complex, q, complex.max_dim() - 1);
    for (const auto& sigma_id : ids_of_dims(complex, q + 1, complex.max_dim())) {
      const Simplex& sigma = complex.simplex(sigma_id);
      cache.by_i.add(require_id(complex, hat_face(sigma, dir.i).vertices()), sigma_id);
      cache.by_j.add(require_id(complex, hat_face(sigma, dir.j).vertices()), sigma_id);
    }
  }
  return cache;
}

ShardedEdges<EdgeKey> compute_e_q1(const FlagComplex& complex, int q, const CofaceCache& cache,
                                   const Strategy& strategy) {
  const auto alphas = ids_of_dims(complex, q, q);
  auto shard = [&](std::size_t item, EdgeSink<EdgeKey, EdgeKeyHash>& sink) {
    for (SimplexId s : cache.by_i[alphas[item]]) {
      for (SimplexId t : cache.by_j[alphas[item]]) {
        if (s != t) sink.emit(EdgeKey::of(s, t), Provenance::SharedFace);
      }
    }
  };
  return run_sharded<EdgeKey, EdgeKeyHash>(alphas.size(), shard, strategy);
}

ShardedEdges<EdgeKey> propagate_up(const FlagComplex& complex, int q, const CofaceCache& cache,
                                   const UpSetCache& upsets, const Strategy& strategy) {
  const auto alphas = ids_of_dims(complex, q, q);
  auto shard = [&](std::size_t item, EdgeSink<EdgeKey, EdgeKeyHash>& sink) {
    for (SimplexId mu_sigma : cache.by_i[alphas[item]]) {
      const auto up_sigma = upsets[mu_sigma];
      for (SimplexId mu_tau : cache.by_j[alphas[item]]) {
        const auto up_tau = upsets[mu_tau];
        // δ*(mu) = {mu} followed by its strict supersimplices.
        for (std::size_t a = 0; a <= up_sigma.size(); ++a) {
          const SimplexId s = a == 0 ? mu_sigma : up_sigma[a - 1];
          for (std::size_t b = 0; b <= up_tau.size(); ++b) {
            const SimplexId t = b == 0 ? mu_tau : up_tau[b - 1];
            if (s != t) sink.emit(EdgeKey::of(s, t), Provenance::SharedFace);
          }
        }
      }
    }
  };
  return run_sharded<EdgeKey, EdgeKeyHash>(alphas.size(), shard, strategy);
}

QDigraph get_q_hybrid(const FlagComplex& complex, int q, const Direction& dir,
                      const Strategy& strategy) {
  if (dir.definition != Definition::Novel) {
    throw std::invalid_argument("get_q_hybrid computes the novel definition; use get_qhat_hybrid");
  }
  validate_direction(dir, q);
  const int cache_dim = q + 1;
  const auto inclusions = compute_inclusions(complex, q, std::span<const int>(&cache_dim, 1),
                                             strategy);
  const auto cache = build_coface_cache(complex, q, dir);
  const auto shared = propagate_up(complex, q, cache, inclusions.upsets, strategy);
  return assemble(complex, q, dir, inclusions, shared);
}

QDigraph get_qhat_hybrid(const FlagComplex& complex, int q, const Direction& dir,
                         const Strategy& strategy) {
  if (dir.definition != Definition::Hat) {
    throw std::invalid_argument("get_qhat_hybrid computes the hatted definition");
  }
  validate_direction(dir, q);
  const int cache_dim = q;
  const auto inclusions = compute_inclusions(complex, q, std::span<const int>(&cache_dim, 1),
                                             strategy);
  const auto cache = build_coface_cache(complex, q, dir);
  const auto alphas = ids_of_dims(complex, q, q);

  auto shard = [&](std::size_t item, EdgeSink<EdgeKey, EdgeKeyHash>& sink) {
    const SimplexId alpha = alphas[item];
    const auto up = inclusions.upsets[alpha];
    // δ*(α) = {α} ∪ upsets[α]; gather both coface sides over it.
    std::vector<SimplexId> left;
    std::vector<SimplexId> right;
    for (std::size_t a = 0; a <= up.size(); ++a) {
      const SimplexId mu = a == 0 ? alpha : up[a - 1];
      const auto ci = cache.by_i[mu];
      const auto cj = cache.by_j[mu];
      left.insert(left.end(), ci.begin(), ci.end());
      right.insert(right.end(), cj.begin(), cj.end());
    }
    for (SimplexId s : left) {
      for (SimplexId t : right) {
        if (s != t) sink.emit(EdgeKey::of(s, t), Provenance::SharedFace);
      }
    }
  };
  const auto shared = run_sharded<EdgeKey, EdgeKeyHash>(alphas.size(), shard, strategy);
  return assemble(complex, q, dir, inclusions, shared);
}

}  // namespace dqa
