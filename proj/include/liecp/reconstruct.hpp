#pragma once

#include <functional>
#include <vector>

#include "liecp/weights.hpp"

namespace liecp {

/// Tie-break hook among equal-height maximal weights during peeling: given
/// the candidates (sorted ascending), return the index to peel next. Every
/// choice yields the same decomposition; the hook exists so tests can prove
/// that. The default takes the lexicographically largest candidate.
using TieBreak = std::function<std::size_t(const std::vector<Weight>&)>;

/// Inverse of linearization: recover the unique decomposition D with
/// rep_weights(rs, D) = gamma by repeatedly peeling a maximal-height weight
/// and subtracting its irreducible weight system. Throws NotACharacter when
/// gamma is not the weight multiset of any finite-dimensional module.
Decomposition decompose(const RootSystem& rs, const WeightMultiset& gamma,
                        std::int64_t dim_cap = kDefaultDimCap, const TieBreak& tie_break = {});

}  // namespace liecp
