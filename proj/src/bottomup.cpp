#include "dqa/bottomup.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <stdexcept>
#include <unordered_set>

namespace dqa {

namespace {

using SimplexSet = std::unordered_set<Simplex, SimplexHash>;

// Adds every strict supersimplex of the seeds (up to max_dim) to `seen`.
void close_upward(SimplexSet& seen, std::vector<Simplex> frontier, const DirectedGraph& graph,
                  int max_dim) {
  std::vector<VertexId> grown;
  while (!frontier.empty()) {
    std::vector<Simplex> next;
    for (const Simplex& s : frontier) {
      if (s.dim() >= max_dim) continue;
      for (std::size_t pos = 0; pos <= s.size(); ++pos) {
        for (VertexId v : insertion_candidates(s.vertices(), pos, graph)) {
          grown.assign(s.begin(), s.end());
          grown.insert(grown.begin() + static_cast<std::ptrdiff_t>(pos), v);
          Simplex t(grown);
          if (seen.insert(t).second) next.push_back(std::move(t));
        }
      }
    }
    frontier = std::move(next);
  }
}

void write_simplex(std::ostream& os, const Simplex& s) {
  const auto n = static_cast<std::uint32_t>(s.size());
  os.write(reinterpret_cast<const char*>(&n), sizeof n);
  os.write(reinterpret_cast<const char*>(s.vertices().data()),
           static_cast<std::streamsize>(n * sizeof(VertexId)));
}

bool read_simplex(std::istream& is, Simplex& s) {
  std::uint32_t n = 0;
  if (!is.read(reinterpret_cast<char*>(&n), sizeof n)) return false;
  std::vector<VertexId> v(n);
  is.read(reinterpret_cast<char*>(v.data()), static_cast<std::streamsize>(n * sizeof(VertexId)));
  s = Simplex(std::move(v));
  return static_cast<bool>(is);
}

}  // namespace

void RunCodec<TupleEdge>::write(std::ostream& os, const TupleEdge& e) {
  write_simplex(os, e.src);
  write_simplex(os, e.dst);
}

bool RunCodec<TupleEdge>::read(std::istream& is, TupleEdge& e) {
  return read_simplex(is, e.src) && read_simplex(is, e.dst);
}

std::vector<Simplex> supersimplex_closure(const Simplex& mu, const DirectedGraph& graph,
                                          std::optional<int> d_max) {
  SimplexSet seen;
  close_upward(seen, {mu}, graph, d_max ? *d_max : INT_MAX);
  std::vector<Simplex> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

BottomUpResult bottomup_edges(const DirectedGraph& graph, int q, const Direction& dir,
                              std::optional<int> d_max, const Strategy& strategy) {
  if (dir.definition != Definition::Novel) {
    throw std::invalid_argument("the bottom-up engine supports only the novel definition");
  }
  validate_direction(dir, q);
  const int max_dim = d_max ? *d_max : INT_MAX;
  const unsigned i = dir.i.resolve_novel(q);
  const unsigned j = dir.j.resolve_novel(q);
  std::atomic<std::size_t> peak{0};
  std::atomic<std::uint64_t> inclusion_emits{0};

  auto shard = [&](std::size_t root, EdgeSink<TupleEdge, TupleEdgeHash>& sink) {
    std::size_t local_peak = 0;
    std::uint64_t local_inclusions = 0;
    auto visit = [&](std::span<const VertexId> t) {
      const int dim = static_cast<int>(t.size()) - 1;
      if (dim == q && q + 1 <= max_dim) {
        const Simplex alpha(t);
        // δ*(coF_i(α)) and δ*(coF_j(α)): the cofaces themselves plus everything above them.
        auto closure_of = [&](unsigned pos) {
          auto seeds = coface_scan(alpha, pos, graph);
          SimplexSet seen(seeds.begin(), seeds.end());
          close_upward(seen, std::move(seeds), graph, max_dim);
          return seen;
        };
        const SimplexSet left = closure_of(i);
        if (left.empty()) return;
        const SimplexSet right = closure_of(j);
        local_peak = std::max(local_peak, left.size() + right.size());
        for (const Simplex& s : left) {
          for (const Simplex& u : right) {
            if (s != u) sink.emit(TupleEdge{s, u}, Provenance::SharedFace);
          }
        }
      } else if (dim > q) {
        const Simplex tau(t);
        for (int d = q; d < dim; ++d) {
          for_each_subtuple(t, static_cast<std::size_t>(d) + 1, [&](std::span<const VertexId> f) {
            sink.emit(TupleEdge{Simplex(f), tau}, Provenance::Inclusion);
            ++local_inclusions;
          });
        }
      }
    };
    for_each_simplex_rooted(graph, static_cast<VertexId>(root), d_max ? *d_max : -1, visit);
    inclusion_emits += local_inclusions;
    std::size_t seen = peak.load();
    while (local_peak > seen && !peak.compare_exchange_weak(seen, local_peak)) {
    }
  };

  BottomUpResult result;
  result.edges = run_sharded<TupleEdge, TupleEdgeHash>(graph.vertex_count(), shard, strategy);
  result.peak_shard_state = peak.load();
  result.shards = graph.vertex_count();
  result.inclusion_emissions = inclusion_emits.load();
  return result;
}

QDigraph get_q_bottomup(const DirectedGraph& graph, const FlagComplex& complex, int q,
                        const Direction& dir, const Strategy& strategy) {
  auto raw = bottomup_edges(graph, q, dir, complex.d_max(), strategy);
  QDigraph out = make_qdigraph(complex, q, dir);
  out.edges.reserve(raw.edges.edges.size());
  for (const auto& [edge, entry] : raw.edges.edges) {
    const auto src = complex.find(edge.src);
    const auto dst = complex.find(edge.dst);
    if (!src || !dst) {
      throw std::logic_error("bottom-up produced a simplex absent from the complex: " +
                             to_string(src ? edge.dst : edge.src));
    }
    out.edges.push_back({*src, *dst, entry.provenance});
  }
  std::sort(out.edges.begin(), out.edges.end(), [](const Edge& a, const Edge& b) {
    return a.src != b.src ? a.src < b.src : a.dst < b.dst;
  });
  out.stats.inclusion_emissions = raw.inclusion_emissions;
  out.stats.emissions = raw.edges.emissions - raw.inclusion_emissions;
  out.stats.max_duplicates = raw.edges.max_emissions(Provenance::SharedFace);
  out.stats.max_merge_count = raw.edges.max_merge_count;
  out.stats.peak_shard_state = raw.peak_shard_state;
  return out;
}

}  // namespace dqa
