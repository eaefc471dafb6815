#pragma once

#include "dqa/flag_complex.hpp"
#include "dqa/nearness.hpp"
#include "dqa/parallel.hpp"
#include "dqa/qdigraph.hpp"

namespace dqa {

/// Reference engine: tests every ordered pair (sigma, tau) of distinct
/// simplices in Σ_{>=q} with the nearness predicate of dir.definition.
/// Provenance records criteria [I] and [II] separately; stats.pair_checks
/// equals |Σ_{>=q}|^2 - |Σ_{>=q}|. Sharded over the source simplex.
/// Throws std::invalid_argument for an invalid direction.
QDigraph get_q_topdown(const FlagComplex& complex, int q, const Direction& dir,
                       const Strategy& strategy = {});

}  // namespace dqa
