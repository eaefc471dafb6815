#include "dqa/generators.hpp"

#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace dqa {

namespace {

class UnitStream {
 public:
  explicit UnitStream(std::uint64_t seed) : engine_(seed) {}
  double next() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

void check_common(std::size_t n, double p) {
  if (n == 0) throw std::invalid_argument("generator needs n >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability must lie in [0, 1]");
}

DirectedGraph make(const ErdosRenyi& g) {
  check_common(g.n, g.p);
  UnitStream rng(g.seed);
  std::vector<EdgePair> edges;
  for (VertexId u = 0; u < g.n; ++u) {
    for (VertexId v = 0; v < g.n; ++v) {
      if (u == v) continue;
      if (rng.next() < g.p) edges.emplace_back(u, v);
    }
  }
  return DirectedGraph(g.n, edges);
}

DirectedGraph make(const Tournament& g) {
  check_common(g.n, 1.0);
  std::vector<EdgePair> edges;
  for (VertexId u = 0; u < g.n; ++u) {
    for (VertexId v = u + 1; v < g.n; ++v) edges.emplace_back(u, v);
  }
  return DirectedGraph(g.n, edges);
}

DirectedGraph make(const LayeredDag& g) {
  check_common(g.n, g.p);
  if (g.width == 0) throw std::invalid_argument("layer width must be >= 1");
  UnitStream rng(g.seed);
  std::vector<EdgePair> edges;
  for (VertexId u = 0; u < g.n; ++u) {
    for (VertexId v = 0; v < g.n; ++v) {
      if (u / g.width >= v / g.width) continue;
      if (rng.next() < g.p) edges.emplace_back(u, v);
    }
  }
  return DirectedGraph(g.n, edges);
}

}  // namespace

DirectedGraph generate(const GeneratorSpec& spec) {
  return std::visit([](const auto& g) { return make(g); }, spec);
}

std::string describe(const GeneratorSpec& spec) {
  std::ostringstream os;
  std::visit(
      [&](const auto& g) {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, ErdosRenyi>) {
          os << "erdos_renyi(" << g.n << ',' << g.p << ',' << g.seed << ')';
        } else if constexpr (std::is_same_v<T, Tournament>) {
          os << "tournament(" << g.n << ')';
        } else {
          os << "layered_dag(" << g.n << ',' << g.width << ',' << g.p << ',' << g.seed << ')';
        }
      },
      spec);
  return os.str();
}

std::string kind_name(const GeneratorSpec& spec) {
  switch (spec.index()) {
    case 0: return "erdos_renyi";
    case 1: return "tournament";
    default: return "layered_dag";
  }
}

}  // namespace dqa
