#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "dqa/bench.hpp"
#include "dqa/engine.hpp"
#include "dqa/flag_complex.hpp"
#include "dqa/io.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kInternal = 1;
constexpr int kConfig = 2;
constexpr int kMismatch = 3;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputOptions {
  std::string input;
  std::string format = "edgelist";
  std::optional<int> d_max;
};

struct QOptions {
  InputOptions in;
  int q = 1;
  std::string i = "0";
  std::string j = "inf";
  std::string definition = "novel";
  std::string algorithm = "hybrid";
  std::string strategy = "sequential";
  unsigned workers = 1;
  std::string spill_dir;
  std::string out = "dqa_out";
  bool verify = false;
  std::string criterion = "both";
};

struct BenchOptionsCli {
  std::string preset = "smoke";
  std::string out;
  int repeats = 3;
  std::size_t topdown_cap = 50000;
};

void add_input_options(CLI::App* cmd, InputOptions& o) {
  cmd->add_option("--input", o.input, "edge-list or flag file")->required();
  cmd->add_option("--format", o.format, "edgelist | flag")
      ->check(CLI::IsMember({"edgelist", "flag"}))
      ->capture_default_str();
  cmd->add_option("--d-max", o.d_max, "clip the flag complex at this dimension (>= 1)");
}

dqa::LoadedGraph load(const InputOptions& o) {
  auto loaded = dqa::load_graph(o.input, dqa::parse_input_format(o.format));
  for (const auto& w : loaded.warnings) std::cerr << "warning: " << w << '\n';
  return loaded;
}

std::ofstream open_out(const fs::path& path) {
  std::ofstream os(path);
  if (!os) throw ConfigError("cannot write " + path.string());
  return os;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

int cmd_complex(const InputOptions& o, const std::string& out) {
  const auto loaded = load(o);
  const auto complex = dqa::build_flag_complex(loaded.graph, o.d_max);
  std::cout << dqa::level_summary(complex) << '\n';
  if (!out.empty()) {
    fs::create_directories(out);
    auto os = open_out(fs::path(out) / "simplices.tsv");
    dqa::write_simplices(os, complex);
    auto vm = open_out(fs::path(out) / "vertex_map.tsv");
    dqa::write_vertex_map(vm, loaded);
  }
  return kOk;
}

void print_edges(const char* label, const std::vector<dqa::Edge>& edges) {
  for (const auto& e : edges) {
    std::cerr << "  " << label << ' ' << e.src.to_string() << " -> " << e.dst.to_string() << " ["
              << dqa::to_string(e.provenance) << "]\n";
  }
}

int cmd_q(const QOptions& o) {
  const auto definition = dqa::parse_definition(o.definition);
  const auto algorithm = dqa::parse_algorithm(o.algorithm);
  const dqa::Direction dir{dqa::FaceIndex::parse(o.i), dqa::FaceIndex::parse(o.j), definition};
  dqa::validate_direction(dir, o.q);
  dqa::validate_combination(algorithm, dir);
  dqa::Strategy strategy;
  strategy.kind = dqa::parse_strategy(o.strategy);
  strategy.workers = o.workers;
  strategy.spill_dir = o.spill_dir;
  std::optional<dqa::Provenance> criterion;
  if (o.criterion == "I") criterion = dqa::Provenance::Inclusion;
  if (o.criterion == "II") criterion = dqa::Provenance::SharedFace;

  const auto loaded = load(o.in);
  const auto t_complex = std::chrono::steady_clock::now();
  const auto complex = dqa::build_flag_complex(loaded.graph, o.in.d_max);
  const double complex_ms = ms_since(t_complex);

  const auto t_engine = std::chrono::steady_clock::now();
  auto result = dqa::run_engine(algorithm, loaded.graph, complex, o.q, dir, strategy);
  const double engine_ms = ms_since(t_engine);

  std::optional<dqa::EdgeDifference> diff;
  if (o.verify) {
    const auto oracle = dqa::run_engine(dqa::Algorithm::TopDown, loaded.graph, complex, o.q, dir);
    diff = dqa::edge_difference(result, oracle, 10);
  }

  const auto written = criterion ? dqa::filter_by_criterion(result, *criterion) : result;
  const fs::path out(o.out);
  fs::create_directories(out);
  {
    auto os = open_out(out / "simplices.tsv");
    dqa::write_simplices(os, complex);
    auto es = open_out(out / "q_edges.tsv");
    dqa::write_q_edges(es, written);
    auto vm = open_out(out / "vertex_map.tsv");
    dqa::write_vertex_map(vm, loaded);
  }

  std::size_t by_criterion[4] = {0, 0, 0, 0};
  for (const auto& e : result.edges) ++by_criterion[static_cast<int>(e.provenance)];
  json report;
  report["input"] = {{"path", o.in.input},
                     {"format", o.in.format},
                     {"vertices", loaded.graph.vertex_count()},
                     {"edges", loaded.graph.edge_count()}};
  report["config"] = {{"q", o.q},
                      {"i", dir.i.to_string()},
                      {"j", dir.j.to_string()},
                      {"definition", dqa::to_string(definition)},
                      {"algorithm", dqa::to_string(algorithm)},
                      {"strategy", dqa::to_string(strategy.kind)},
                      {"workers", strategy.workers},
                      {"d_max", o.in.d_max ? json(*o.in.d_max) : json(nullptr)},
                      {"criterion", o.criterion}};
  report["complex"] = {{"level_sizes", complex.level_sizes()},
                       {"sigma_ge_q", complex.count_from(o.q)}};
  report["q_digraph"] = {{"edges", result.edges.size()},
                         {"written_edges", written.edges.size()},
                         {"inclusion_only", by_criterion[1]},
                         {"shared_face_only", by_criterion[2]},
                         {"both", by_criterion[3]}};
  report["stats"] = {{"pair_checks", result.stats.pair_checks},
                     {"inclusion_emissions", result.stats.inclusion_emissions},
                     {"emissions", result.stats.emissions},
                     {"max_duplicates", result.stats.max_duplicates},
                     {"duplicate_bound", dqa::duplicate_bound(complex.max_dim(), o.q)},
                     {"max_merge_count", result.stats.max_merge_count},
                     {"peak_shard_state", result.stats.peak_shard_state}};
  report["timing_ms"] = {{"complex", complex_ms}, {"engine", engine_ms}};
  if (diff) report["verify"] = {{"against", "topdown"}, {"match", diff->empty()}};
  {
    auto rs = open_out(out / "report.json");
    rs << report.dump(2) << '\n';
  }

  std::cout << dqa::level_summary(complex) << '\n'
            << "q-digraph: " << complex.count_from(o.q) << " vertices, " << result.edges.size()
            << " edges\n";
  if (diff) {
    if (!diff->empty()) {
      std::cerr << "verification FAILED: " << dqa::to_string(algorithm)
                << " differs from topdown (first differences)\n";
      print_edges("only in engine:", diff->only_left);
      print_edges("only in topdown:", diff->only_right);
      return kMismatch;
    }
    std::cout << "verified against topdown\n";
  }
  return kOk;
}

int cmd_bench(const BenchOptionsCli& o) {
  dqa::BenchOptions options;
  options.repeats = o.repeats;
  options.topdown_cap = o.topdown_cap;
  const auto cases = dqa::bench_preset(o.preset);
  const auto rows = dqa::run_benchmark(cases, options);
  dqa::write_markdown(std::cout, rows);
  if (!o.out.empty()) {
    fs::create_directories(o.out);
    auto csv = open_out(fs::path(o.out) / "bench.csv");
    dqa::write_csv(csv, rows);
    auto md = open_out(fs::path(o.out) / "bench.md");
    dqa::write_markdown(md, rows);
  }
  for (const auto& r : rows) {
    if (r.failed()) {
      std::cerr << "benchmark row FAILED: " << r.generator << ' ' << dqa::to_string(r.algorithm)
                << ": " << r.verified << '\n';
      return kMismatch;
    }
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Directed flag complexes and (q,i,j)-digraphs"};
  app.require_subcommand(1);

  InputOptions complex_opts;
  std::string complex_out;
  auto* complex_cmd = app.add_subcommand("complex", "enumerate the directed flag complex");
  add_input_options(complex_cmd, complex_opts);
  complex_cmd->add_option("--out", complex_out, "directory for simplices.tsv and vertex_map.tsv");

  QOptions q_opts;
  auto* q_cmd = app.add_subcommand("q", "compute a (q,i,j)-digraph");
  add_input_options(q_cmd, q_opts.in);
  q_cmd->add_option("--q", q_opts.q, "q >= 0")->capture_default_str();
  q_cmd->add_option("--i", q_opts.i, "face index (integer or inf)")->capture_default_str();
  q_cmd->add_option("--j", q_opts.j, "face index (integer or inf)")->capture_default_str();
  q_cmd->add_option("--definition", q_opts.definition, "novel | hat")
      ->check(CLI::IsMember({"novel", "hat"}))
      ->capture_default_str();
  q_cmd->add_option("--algorithm", q_opts.algorithm, "topdown | hybrid | bottomup")
      ->check(CLI::IsMember({"topdown", "hybrid", "bottomup"}))
      ->capture_default_str();
  q_cmd->add_option("--strategy", q_opts.strategy,
                    "sequential | shared_accumulator | split_and_merge | sharded_bottom_up")
      ->capture_default_str();
  q_cmd->add_option("--workers", q_opts.workers, "worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  q_cmd->add_option("--spill-dir", q_opts.spill_dir, "spill sorted runs here (sharded_bottom_up)");
  q_cmd->add_option("--out", q_opts.out, "output directory")->capture_default_str();
  q_cmd->add_flag("--verify", q_opts.verify, "compare against the topdown oracle");
  q_cmd->add_option("--criterion", q_opts.criterion, "edges written: both | I | II")
      ->check(CLI::IsMember({"both", "I", "II"}))
      ->capture_default_str();

  BenchOptionsCli bench_opts;
  auto* bench_cmd = app.add_subcommand("bench", "run a benchmark preset");
  bench_cmd->add_option("--preset", bench_opts.preset, "smoke | table1 | strategies")
      ->check(CLI::IsMember({"smoke", "table1", "strategies"}))
      ->capture_default_str();
  bench_cmd->add_option("--out", bench_opts.out, "directory for bench.csv and bench.md");
  bench_cmd->add_option("--repeats", bench_opts.repeats, "timed runs per row (median reported)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench_cmd->add_option("--topdown-cap", bench_opts.topdown_cap,
                        "largest |Σ≥q| on which topdown runs")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfig;
  }

  try {
    if (*complex_cmd) return cmd_complex(complex_opts, complex_out);
    if (*q_cmd) return cmd_q(q_opts);
    return cmd_bench(bench_opts);
  } catch (const dqa::GraphError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kConfig;
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kConfig;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}
