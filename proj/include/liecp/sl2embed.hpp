#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "liecp/sparsepoly.hpp"
#include "liecp/weights.hpp"

namespace liecp {

/// Characteristic polynomial of an sl2 module in compact factored form:
/// z0^{d[0]} * Pi_{n>=1} (z0^2 - n^2(z1^2 + z2*z3))^{d[n]}.
/// Only nonzero exponents are stored; degree = d0 + 2*sum_{n>=1} d_n.
struct Sl2CharPoly {
    std::map<std::int64_t, std::int64_t> d;

    std::int64_t degree() const;

    /// "z0^11 * (z0^2 - 1*(z1^2+z2*z3))^4 * (z0^2 - 4*(z1^2+z2*z3))^1"
    std::string factored_text() const;

    /// Exact expansion over the four variables z0..z3.
    SparsePoly expand() const;

    bool operator==(const Sl2CharPoly&) const = default;
};

/// Read off d_n from an A1 weight multiset: d_n = multiplicity of weight
/// [n], n >= 0. Throws TagMismatch for non-A1 input and NotACharacter when
/// the multiset is not symmetric under negation.
Sl2CharPoly sl2_dims(const WeightMultiset& ws);

/// Closed form for the irreducible (m+1)-dimensional sl2 module, built
/// directly from the parity of m — independent of any weight enumeration.
/// Even m: z0 * Pi_{l=1..m/2} (z0^2 - (2l)^2 X); odd m: Pi_{l=0..(m-1)/2}
/// (z0^2 - (2l+1)^2 X). Throws NotDominant for m < 0.
Sl2CharPoly sl2_irrep_closed_form(std::int64_t m);

/// Which convention a claimed k0 value agrees with: the count over root
/// vectors only, or that count plus the Cartan dimension. The reference
/// table mixes both conventions across rows, so the audit records which one
/// (if either) fits.
enum class K0Convention { None, RootsOnly, WithCartan };

std::string to_string(K0Convention c);

/// Entrywise comparison of the computed counts against one row of the
/// built-in reference table.
struct ReferenceMatch {
    std::string row;                        // e.g. "C_n long" or "A_n, n = rank + 1"
    std::array<std::int64_t, 4> claimed{};  // k0..k3 as published
    std::array<bool, 4> matches{};
    K0Convention k0_convention = K0Convention::None;
    bool full_match = false;
};

/// Eigenvalue multiplicities of ad H_lambda for a root lambda of the given
/// class: k_roots[i] = #{roots beta : <beta, lambda> = i} (for i >= 1 the
/// positive eigenvalue only; k_roots[0] counts every orthogonal root).
/// k0_total adds the Cartan dimension, and the identity
/// dim_l = k0_total + 2*(k1 + k2 + k3) always holds for computed values.
struct EmbeddingReport {
    Family family{};
    int rank = 0;
    RootClass root_class = RootClass::Long;
    std::array<std::int64_t, 4> k_roots{};
    int cartan_dim = 0;
    std::int64_t k0_total = 0;
    std::int64_t dim_l = 0;
    std::vector<ReferenceMatch> references;
};

/// Enumerate <beta, lambda> over all roots for a representative lambda of
/// the requested class (the first stored positive root of that class; every
/// same-class choice yields identical counts). Throws NoSuchRootClass.
EmbeddingReport embed_report(const RootSystem& rs, RootClass root_class);

/// Factored polynomial of ad H_lambda: d0 = k0_total, d_i = k_roots[i].
Sl2CharPoly embed_charpoly(const EmbeddingReport& report);

/// One report per reference-table row, instantiated at every supported
/// rank, in table order: A (ranks 1..8, both rank conventions attached),
/// B long/short (2..8), C long/short (2..8), D (4..8), G2, F4 (both
/// classes), E6, E7, E8.
std::vector<EmbeddingReport> reference_table_audit();

}  // namespace liecp
