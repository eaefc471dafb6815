#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dqa/engine.hpp"
#include "dqa/generators.hpp"

namespace dqa {

/// One benchmark configuration.
struct BenchCase {
  GeneratorSpec generator;
  int q = 1;
  Direction direction;
  Algorithm algorithm = Algorithm::Hybrid;
  Strategy strategy;
  std::optional<int> d_max;
};

struct BenchRow {
  std::string generator;
  std::size_t n = 0;
  std::size_t edges = 0;
  int q = 0;
  std::string i;
  std::string j;
  Definition definition = Definition::Novel;
  Algorithm algorithm = Algorithm::Hybrid;
  StrategyKind strategy = StrategyKind::Sequential;
  unsigned workers = 1;
  std::size_t sigma_ge_q = 0;
  std::size_t q_edges = 0;
  double wall_ms = 0.0;
  std::uint64_t pair_checks = 0;
  std::uint64_t emissions = 0;
  std::uint32_t max_dup = 0;
  std::size_t peak_shard_state = 0;
  /// "topdown"/"hybrid" (the reference it matched), "reference", "skipped"
  /// or "FAILED: ...".
  std::string verified;

  bool failed() const { return verified.starts_with("FAILED"); }
};

struct BenchOptions {
  int warmups = 1;
  int repeats = 3;
  /// Top-down runs (as a row or as the reference) only when |Σ_{>=q}| is at
  /// most this.
  std::size_t topdown_cap = 50000;
};

/// Upper bound on how often the hybrid engine emits one criterion-[II]
/// edge: C(D+1, q+1) (D-q)^2 for maximal dimension D (0 when D <= q).
std::uint64_t duplicate_bound(int max_dim, int q);

/// Runs each case (sequentially), timing the engine as the median of
/// `repeats` runs after `warmups` discarded ones. Every row is compared with
/// a reference engine on the same input and checked against
/// duplicate_bound; mismatches mark the row FAILED.
std::vector<BenchRow> run_benchmark(std::span<const BenchCase> cases,
                                    const BenchOptions& options = {});

void write_csv(std::ostream& os, std::span<const BenchRow> rows);
void write_markdown(std::ostream& os, std::span<const BenchRow> rows);

/// Named case lists for the CLI: "smoke", "table1", "strategies".
std::vector<BenchCase> bench_preset(const std::string& name);

}  // namespace dqa
