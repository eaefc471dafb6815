#include "dqa/engine.hpp"

#include <stdexcept>
#include <string>

#include "dqa/bottomup.hpp"
#include "dqa/hybrid.hpp"
#include "dqa/topdown.hpp"

namespace dqa {

std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::TopDown:
      return "topdown";
    case Algorithm::Hybrid:
      return "hybrid";
    case Algorithm::BottomUp:
      return "bottomup";
  }
  return "?";
}

Algorithm parse_algorithm(std::string_view token) {
  if (token == "topdown") return Algorithm::TopDown;
  if (token == "hybrid") return Algorithm::Hybrid;
  if (token == "bottomup") return Algorithm::BottomUp;
  throw std::invalid_argument("unknown algorithm '" + std::string(token) +
                              "' (expected topdown, hybrid or bottomup)");
}

void validate_combination(Algorithm a, const Direction& dir) {
  if (a == Algorithm::BottomUp && dir.definition == Definition::Hat) {
    throw std::invalid_argument("bottomup does not support the hat definition");
  }
}

QDigraph run_engine(Algorithm a, const DirectedGraph& graph, const FlagComplex& complex, int q,
                    const Direction& dir, const Strategy& strategy) {
  validate_combination(a, dir);
  switch (a) {
    case Algorithm::TopDown:
      return get_q_topdown(complex, q, dir, strategy);
    case Algorithm::Hybrid:
      return dir.definition == Definition::Novel ? get_q_hybrid(complex, q, dir, strategy)
                                                 : get_qhat_hybrid(complex, q, dir, strategy);
    case Algorithm::BottomUp:
      return get_q_bottomup(graph, complex, q, dir, strategy);
  }
  throw std::logic_error("unreachable");
}

}  // namespace dqa
