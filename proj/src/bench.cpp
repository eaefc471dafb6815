#include "dqa/bench.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <map>
#include <ostream>
#include <stdexcept>
#include <tuple>

namespace dqa {

namespace {

struct Prepared {
  DirectedGraph graph;
  FlagComplex complex;
};

using ReferenceKey = std::tuple<std::string, int, std::string, std::string, int, int>;

std::vector<std::pair<SimplexId, SimplexId>> edge_set(const QDigraph& g) {
  std::vector<std::pair<SimplexId, SimplexId>> out;
  out.reserve(g.edges.size());
  for (const Edge& e : g.edges) out.emplace_back(e.src, e.dst);
  return out;
}

double time_ms(const std::function<void()>& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::uint64_t duplicate_bound(int max_dim, int q) {
  if (max_dim <= q || q < 0) return 0;
  const auto spread = static_cast<std::uint64_t>(max_dim - q);
  return binomial(static_cast<std::uint64_t>(max_dim) + 1, static_cast<std::uint64_t>(q) + 1) *
         spread * spread;
}

std::vector<BenchRow> run_benchmark(std::span<const BenchCase> cases, const BenchOptions& options) {
  std::map<std::pair<std::string, int>, Prepared> inputs;
  std::map<ReferenceKey, std::pair<Algorithm, std::vector<std::pair<SimplexId, SimplexId>>>>
      references;
  std::vector<BenchRow> rows;

  for (const BenchCase& c : cases) {
    validate_direction(c.direction, c.q);
    validate_combination(c.algorithm, c.direction);
    const std::string name = describe(c.generator);
    const int clip = c.d_max.value_or(-1);
    auto it = inputs.find({name, clip});
    if (it == inputs.end()) {
      DirectedGraph g = generate(c.generator);
      FlagComplex fc = build_flag_complex(g, c.d_max);
      it = inputs.emplace(std::pair{name, clip}, Prepared{std::move(g), std::move(fc)}).first;
    }
    const auto& [graph, complex] = it->second;

    BenchRow row;
    row.generator = name;
    row.n = graph.vertex_count();
    row.edges = graph.edge_count();
    row.q = c.q;
    row.i = c.direction.i.to_string();
    row.j = c.direction.j.to_string();
    row.definition = c.direction.definition;
    row.algorithm = c.algorithm;
    row.strategy = c.strategy.kind;
    row.workers = c.strategy.workers;
    row.sigma_ge_q = complex.count_from(c.q);

    const bool topdown_allowed = row.sigma_ge_q <= options.topdown_cap;
    if (c.algorithm == Algorithm::TopDown && !topdown_allowed) {
      row.verified = "skipped";
      rows.push_back(std::move(row));
      continue;
    }

    QDigraph result;
    auto run = [&] { result = run_engine(c.algorithm, graph, complex, c.q, c.direction, c.strategy); };
    for (int w = 0; w < options.warmups; ++w) run();
    std::vector<double> times;
    for (int r = 0; r < std::max(options.repeats, 1); ++r) times.push_back(time_ms(run));
    std::sort(times.begin(), times.end());
    row.wall_ms = times[times.size() / 2];
    row.q_edges = result.edges.size();
    row.pair_checks = result.stats.pair_checks;
    row.emissions = result.stats.emissions;
    row.max_dup = result.stats.max_duplicates;
    row.peak_shard_state = result.stats.peak_shard_state;

    const ReferenceKey key{name, clip, row.i, row.j, c.q, static_cast<int>(row.definition)};
    auto ref = references.find(key);
    if (ref == references.end()) {
      const Algorithm ref_algo = topdown_allowed ? Algorithm::TopDown : Algorithm::Hybrid;
      auto edges = ref_algo == c.algorithm
                       ? edge_set(result)
                       : edge_set(run_engine(ref_algo, graph, complex, c.q, c.direction));
      ref = references.emplace(key, std::pair{ref_algo, std::move(edges)}).first;
    }
    const auto& [ref_algo, ref_edges] = ref->second;
    if (ref_algo == c.algorithm) {
      row.verified = "reference";
    } else if (edge_set(result) != ref_edges) {
      row.verified = "FAILED: edge set differs from " + std::string(to_string(ref_algo));
    } else {
      row.verified = std::string(to_string(ref_algo));
    }
    const auto bound = duplicate_bound(complex.max_dim(), c.q);
    if (!row.failed() && row.max_dup > bound) {
      row.verified = "FAILED: max_dup " + std::to_string(row.max_dup) + " exceeds bound " +
                     std::to_string(bound);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_csv(std::ostream& os, std::span<const BenchRow> rows) {
  os << "generator,n,edges,q,i,j,definition,algorithm,strategy,workers,sigma_ge_q,q_edges,wall_ms,"
        "pair_checks,emissions,max_dup,verified\n";
  for (const BenchRow& r : rows) {
    os << csv_field(r.generator) << ',' << r.n << ',' << r.edges << ',' << r.q << ',' << r.i << ','
       << r.j << ',' << to_string(r.definition) << ',' << to_string(r.algorithm) << ','
       << to_string(r.strategy) << ',' << r.workers << ',' << r.sigma_ge_q << ',' << r.q_edges
       << ',' << std::fixed << std::setprecision(3) << r.wall_ms << std::defaultfloat << ','
       << r.pair_checks << ',' << r.emissions << ',' << r.max_dup << ',' << csv_field(r.verified)
       << '\n';
  }
}

void write_markdown(std::ostream& os, std::span<const BenchRow> rows) {
  os << "| generator | q | (i,j) | def | algorithm | strategy | workers | \\|Σ≥q\\| | \\|Q\\| | "
        "wall ms | pair checks | emissions | max dup | peak shard | verified |\n";
  os << "|---|---|---|---|---|---|---|---|---|---|---|---|---|---|---|\n";
  for (const BenchRow& r : rows) {
    os << "| " << r.generator << " | " << r.q << " | (" << r.i << "," << r.j << ") | "
       << to_string(r.definition) << " | " << to_string(r.algorithm) << " | "
       << to_string(r.strategy) << " | " << r.workers << " | " << r.sigma_ge_q << " | "
       << r.q_edges << " | " << std::fixed << std::setprecision(1) << r.wall_ms
       << std::defaultfloat << " | " << r.pair_checks << " | " << r.emissions << " | "
       << r.max_dup << " | " << r.peak_shard_state << " | " << r.verified << " |\n";
  }
}

std::vector<BenchCase> bench_preset(const std::string& name) {
  const Direction zero_inf{FaceIndex(0), FaceIndex::last(), Definition::Novel};
  std::vector<BenchCase> cases;
  if (name == "smoke") {
    for (std::uint64_t seed : {1, 2}) {
      for (double p : {0.3, 0.5}) {
        for (Algorithm a : {Algorithm::TopDown, Algorithm::Hybrid, Algorithm::BottomUp}) {
          cases.push_back({ErdosRenyi{10, p, seed}, 1, zero_inf, a, {}, {}});
        }
        Direction hat = zero_inf;
        hat.definition = Definition::Hat;
        cases.push_back({ErdosRenyi{10, p, seed}, 1, hat, Algorithm::TopDown, {}, {}});
        cases.push_back({ErdosRenyi{10, p, seed}, 1, hat, Algorithm::Hybrid, {}, {}});
      }
    }
    cases.push_back({Tournament{6}, 1, zero_inf, Algorithm::Hybrid, {}, {}});
  } else if (name == "table1") {
    for (Algorithm a : {Algorithm::TopDown, Algorithm::Hybrid, Algorithm::BottomUp}) {
      cases.push_back({ErdosRenyi{300, 0.08, 1}, 2, zero_inf, a, {}, {}});
    }
    for (Algorithm a : {Algorithm::Hybrid, Algorithm::BottomUp}) {
      cases.push_back({ErdosRenyi{1000, 0.05, 1}, 2, zero_inf, a, {}, {}});
    }
  } else if (name == "strategies") {
    for (StrategyKind k : {StrategyKind::Sequential, StrategyKind::SharedAccumulator,
                           StrategyKind::SplitAndMerge, StrategyKind::ShardedBottomUp}) {
      for (unsigned w : {1u, 2u, 4u, 8u}) {
        Strategy s;
        s.kind = k;
        s.workers = w;
        cases.push_back({ErdosRenyi{300, 0.08, 1}, 2, zero_inf, Algorithm::Hybrid, s, {}});
      }
    }
  } else {
    throw std::invalid_argument("unknown bench preset '" + name +
                                "' (expected smoke, table1 or strategies)");
  }
  return cases;
}

}  // namespace dqa
