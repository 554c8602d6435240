#pragma once

#include <cstdint>
#include <map>

#include "liecp/rootsys.hpp"

namespace liecp {

/// Default refusal threshold for representation dimensions; the CLI can
/// raise it via --dim-cap / LIECP_DIM_CAP.
inline constexpr std::int64_t kDefaultDimCap = 1'000'000;

/// Weights of a representation with multiplicities. Also the canonical form
/// of a linearized characteristic polynomial: entry (c, mult) is the linear
/// factor (z0 + c[0]*z1 + ... + c[n-1]*zn)^mult.
struct WeightMultiset {
    RsTag tag;
    std::map<Weight, std::int64_t> entries;

    std::int64_t total() const;
    bool operator==(const WeightMultiset&) const = default;
};

/// Multiset of dominant highest weights, one entry per isomorphism class of
/// irreducible constituent. The canonical form of a full characteristic
/// polynomial.
struct Decomposition {
    RsTag tag;
    std::map<Weight, std::int64_t> entries;

    bool operator==(const Decomposition&) const = default;
};

/// Exact dimension of the irreducible module V(highest) (Weyl's formula).
/// Throws NotDominant.
Int weyl_dim(const RootSystem& rs, const Weight& highest);

/// Total dimension of the module described by a decomposition.
Int total_dim(const RootSystem& rs, const Decomposition& d);

/// Throws CapExceeded when dim V(highest) exceeds dim_cap, NotDominant on a
/// bad weight; otherwise does nothing.
void check_dim_cap(const RootSystem& rs, const Weight& highest,
                   std::int64_t dim_cap = kDefaultDimCap);

/// All weights of V(highest) with exact multiplicities, by Freudenthal's
/// recursion. Throws NotDominant, or CapExceeded when weyl_dim exceeds
/// dim_cap.
WeightMultiset irrep_weights(const RootSystem& rs, const Weight& highest,
                             std::int64_t dim_cap = kDefaultDimCap);

/// Weights of the direct sum described by d: the multiset union of
/// irrep_weights over constituents, scaled by constituent multiplicities.
WeightMultiset rep_weights(const RootSystem& rs, const Decomposition& d,
                           std::int64_t dim_cap = kDefaultDimCap);

}  // namespace liecp
