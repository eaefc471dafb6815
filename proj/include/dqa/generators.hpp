#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>

#include "dqa/graph.hpp"

namespace dqa {

/// Every ordered pair (u, v), u != v, kept independently with probability p.
struct ErdosRenyi {
  std::size_t n = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
};

/// Transitive tournament: u -> v for all u < v.
struct Tournament {
  std::size_t n = 0;
};

/// Vertices split into consecutive layers of `width`; an edge u -> v is kept
/// with probability p only when u lies in an earlier layer than v.
struct LayeredDag {
  std::size_t n = 0;
  std::size_t width = 1;
  double p = 0.0;
  std::uint64_t seed = 0;
};

using GeneratorSpec = std::variant<ErdosRenyi, Tournament, LayeredDag>;

/// Seeded generators are reproducible across platforms (mt19937_64 with
/// explicit 53-bit uniform conversion). Throws std::invalid_argument for
/// n == 0, p outside [0, 1] or width == 0.
DirectedGraph generate(const GeneratorSpec& spec);

/// e.g. "erdos_renyi(12,0.5,7)".
std::string describe(const GeneratorSpec& spec);

/// Generator family name without parameters, e.g. "erdos_renyi".
std::string kind_name(const GeneratorSpec& spec);

}  // namespace dqa
