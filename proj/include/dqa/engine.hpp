#pragma once

#include <string_view>

#include "dqa/flag_complex.hpp"
#include "dqa/graph.hpp"
#include "dqa/nearness.hpp"
#include "dqa/parallel.hpp"
#include "dqa/qdigraph.hpp"

namespace dqa {

enum class Algorithm { TopDown, Hybrid, BottomUp };

std::string_view to_string(Algorithm a);

/// Accepts "topdown", "hybrid" or "bottomup".
Algorithm parse_algorithm(std::string_view token);

/// Throws std::invalid_argument for bottomup with the hatted definition.
void validate_combination(Algorithm a, const Direction& dir);

/// Runs one engine; hybrid dispatches on dir.definition. `complex` must be
/// the flag complex of `graph`.
QDigraph run_engine(Algorithm a, const DirectedGraph& graph, const FlagComplex& complex, int q,
                    const Direction& dir, const Strategy& strategy = {});

}  // namespace dqa
