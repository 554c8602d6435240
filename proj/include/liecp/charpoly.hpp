#pragma once

#include "liecp/sparsepoly.hpp"
#include "liecp/weights.hpp"

namespace liecp {

/// A product of linear forms Pi (z0 + sum_i c[i]*z_i)^mult, stored as the
/// multiset of coefficient vectors — content-identical to a WeightMultiset.
using LinearFactors = WeightMultiset;

/// The canonical (factored) form of a characteristic polynomial: the
/// decomposition into irreducible highest weights it determines.
using CharPoly = Decomposition;

inline constexpr std::int64_t kDefaultDegreeCap = 64;

/// Linearization: restrict to the Cartan variables and factor. One linear
/// factor per weight of the module, i.e. rep_weights reinterpreted.
LinearFactors linearize(const RootSystem& rs, const CharPoly& f,
                        std::int64_t dim_cap = kDefaultDimCap);

/// Minkowski-sum product: coefficient vectors add pairwise, multiplicities
/// multiply, coinciding sums merge. Throws TagMismatch.
LinearFactors resolution_product(const LinearFactors& a, const LinearFactors& b);

/// Multiply two characteristic polynomials in canonical form: linearize,
/// take the resolution product, and recover the decomposition of the result
/// (by construction, the decomposition of the tensor product).
CharPoly product_on_charpoly(const RootSystem& rs, const CharPoly& f, const CharPoly& g,
                             std::int64_t dim_cap = kDefaultDimCap);

/// Exact expansion into a polynomial in z0..z_rank. Throws CapExceeded when
/// the degree (total multiplicity) exceeds degree_cap.
SparsePoly expand_small(const LinearFactors& a, std::int64_t degree_cap = kDefaultDegreeCap);

}  // namespace liecp
