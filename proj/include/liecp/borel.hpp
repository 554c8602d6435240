#pragma once

#include "liecp/charpoly.hpp"

namespace liecp {

/// Factored adjoint characteristic polynomial of the Borel subalgebra
/// b = h + sum of positive root spaces, as linear factors: the zero vector
/// with multiplicity rank (the z0^rank part) plus one factor per positive
/// root alpha_j with coefficients (<alpha_j, alpha_1>, ..., <alpha_j, alpha_n>).
/// Total multiplicity = dim b = rank + |positive roots|.
LinearFactors borel_factors(const RootSystem& rs);

/// Square (n+s)x(n+s) matrix of the factor coefficient rows, n = rank,
/// s = |positive roots|: n zero rows first, then one row per positive root
/// with its pairings in the first n columns; all further columns zero.
RationalMatrix spectral_matrix(const RootSystem& rs);

/// rank_over_rationals of the spectral matrix. The result is asserted to
/// equal the rank of the root system before it is returned.
std::size_t spectral_rank(const RootSystem& rs);

}  // namespace liecp
