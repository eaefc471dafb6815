#include "dqa/topdown.hpp"

#include <atomic>

namespace dqa {

QDigraph get_q_topdown(const FlagComplex& complex, int q, const Direction& dir,
                       const Strategy& strategy) {
  validate_direction(dir, q);
  QDigraph out = make_qdigraph(complex, q, dir);

  std::vector<SimplexId> ids;
  ids.reserve(complex.count_from(q));
  for (int d = q; d <= complex.max_dim(); ++d) {
    for (std::uint32_t k = 0; k < complex.level_size(d); ++k) {
      ids.push_back({static_cast<std::uint32_t>(d), k});
    }
  }

  std::atomic<std::uint64_t> checks{0};
  auto shard = [&](std::size_t src, EdgeSink<EdgeKey, EdgeKeyHash>& sink) {
    const Simplex& sigma = complex.simplex(ids[src]);
    std::uint64_t local = 0;
    for (std::size_t dst = 0; dst < ids.size(); ++dst) {
      if (dst == src) continue;
      ++local;
      const Simplex& tau = complex.simplex(ids[dst]);
      if (common_vertex_count(sigma.vertices(), tau.vertices()) <= static_cast<std::size_t>(q)) {
        continue;
      }
      Provenance p = Provenance::None;
      if (includes(sigma, tau)) p = p | Provenance::Inclusion;
      if (shares_face(sigma, tau, q, dir)) p = p | Provenance::SharedFace;
      if (p != Provenance::None) sink.emit(EdgeKey::of(ids[src], ids[dst]), p);
    }
    checks += local;
  };
  auto result = run_sharded<EdgeKey, EdgeKeyHash>(ids.size(), shard, strategy);

  out.edges = to_edges(result.edges);
  out.stats.pair_checks = checks.load();
  out.stats.max_merge_count = result.max_merge_count;
  return out;
}

}  // namespace dqa
