#pragma once

#include "engine.hpp"
#include "p4wis/recognition.hpp"

namespace p4wis::detail {

/// Best independent set of G[S_b ∪ S_d ∪ S_bd ∪ A(V(P))] united with
/// `forced` (which holds a and c, possibly more).
Best containing_ac(Engine& engine, const NeighborhoodPartition& part,
                   const VertexSet& forced);

/// Throws ClassViolation (P4+P4 witness) if G[A(V(P))] has an induced P4.
void require_certified_anti(const Graph& g, const InducedP4& p,
                            const NeighborhoodPartition& part);

}  // namespace p4wis::detail
