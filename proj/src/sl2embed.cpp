#include "liecp/sl2embed.hpp"

#include <cstdlib>
#include <stdexcept>

namespace liecp {

namespace {

void internal_check(bool ok, const char* what) {
    if (!ok) throw std::logic_error(std::string("internal invariant violated: ") + what);
}

}  // namespace

std::int64_t Sl2CharPoly::degree() const {
    std::int64_t deg = 0;
    for (const auto& [n, e] : d) deg += n == 0 ? e : 2 * e;
    return deg;
}

std::string Sl2CharPoly::factored_text() const {
    std::string s;
    for (const auto& [n, e] : d) {
        if (!s.empty()) s += " * ";
        if (n == 0) {
            s += "z0^" + std::to_string(e);
        } else {
            s += "(z0^2 - " + std::to_string(n * n) + "*(z1^2+z2*z3))^" + std::to_string(e);
        }
    }
    return s.empty() ? "1" : s;
}

SparsePoly Sl2CharPoly::expand() const {
    SparsePoly result = SparsePoly::constant(4, 1);
    for (const auto& [n, e] : d) {
        if (n == 0) {
            result = result * SparsePoly::variable(4, 0).pow(e);
            continue;
        }
        SparsePoly factor(4);
        factor.add_term({2, 0, 0, 0}, 1);
        factor.add_term({0, 2, 0, 0}, -n * n);
        factor.add_term({0, 0, 1, 1}, -n * n);
        result = result * factor.pow(e);
    }
    return result;
}

Sl2CharPoly sl2_dims(const WeightMultiset& ws) {
    if (ws.tag != RsTag{Family::A, 1})
        throw TagMismatch("sl2 exponents require an A1 multiset, got " + to_string(ws.tag));
    Sl2CharPoly out;
    for (const auto& [w, m] : ws.entries) {
        const std::int64_t n = w.coords.at(0);
        if (n < 0) continue;
        const Weight negated{{-n}};
        const auto mirror = ws.entries.find(negated);
        const std::int64_t mirror_mult = mirror == ws.entries.end() ? 0 : mirror->second;
        if (n > 0 && mirror_mult != m)
            throw NotACharacter("weight [" + std::to_string(n) + "] has multiplicity " +
                                std::to_string(m) + " but [-" + std::to_string(n) + "] has " +
                                std::to_string(mirror_mult));
        out.d[n] = m;
    }
    for (const auto& [w, m] : ws.entries) {
        if (w.coords.at(0) >= 0) continue;
        if (!ws.entries.count(Weight{{-w.coords.at(0)}}))
            throw NotACharacter("weight " + to_string(w) + " has no positive mirror");
    }
    return out;
}

Sl2CharPoly sl2_irrep_closed_form(std::int64_t m) {
    if (m < 0) throw NotDominant("sl2 highest weight must be nonnegative");
    Sl2CharPoly out;
    if (m % 2 == 0) {
        out.d[0] = 1;
        for (std::int64_t l = 1; l <= m / 2; ++l) out.d[2 * l] = 1;
    } else {
        for (std::int64_t l = 0; l <= (m - 1) / 2; ++l) out.d[2 * l + 1] = 1;
    }
    return out;
}

std::string to_string(K0Convention c) {
    switch (c) {
        case K0Convention::RootsOnly: return "roots_only";
        case K0Convention::WithCartan: return "with_cartan";
        case K0Convention::None: break;
    }
    return "none";
}

namespace {

// One row of the published reference values, with the classical entries as
// quadratics a*n^2 + b*n + c in the rank parameter n of the row.
struct Quad {
    std::int64_t a = 0, b = 0, c = 0;
    std::int64_t eval(std::int64_t n) const { return a * n * n + b * n + c; }
};

struct ReferenceRow {
    const char* row;
    Quad k[4];
};

constexpr ReferenceRow kRowA{"A_n", {{1, -5, 6}, {0, 2, -4}, {0, 0, 1}, {0, 0, 0}}};
constexpr ReferenceRow kRowBLong{"B_n long", {{2, -7, 14}, {0, 4, -8}, {0, 0, 1}, {0, 0, 0}}};
constexpr ReferenceRow kRowBShort{"B_n short", {{2, -3, -2}, {0, 0, 0}, {0, 2, 1}, {0, 0, 0}}};
constexpr ReferenceRow kRowCLong{"C_n long", {{2, -3, 6}, {0, 2, -4}, {0, 0, 1}, {0, 0, 0}}};
constexpr ReferenceRow kRowCShort{"C_n short", {{2, -7, 10}, {0, 4, -8}, {0, 0, 3}, {0, 0, 0}}};
constexpr ReferenceRow kRowDLong{"D_n", {{2, -9, 14}, {0, 4, -8}, {0, 0, 1}, {0, 0, 0}}};
constexpr ReferenceRow kRowG2Long{"G2 long", {{0, 0, 2}, {0, 0, 4}, {0, 0, 1}, {0, 0, 0}}};
constexpr ReferenceRow kRowG2Short{"G2 short", {{0, 0, 2}, {0, 0, 2}, {0, 0, 1}, {0, 0, 2}}};
constexpr ReferenceRow kRowF4Long{"F4 long", {{0, 0, 18}, {0, 0, 14}, {0, 0, 1}, {0, 0, 0}}};
constexpr ReferenceRow kRowF4Short{"F4 short", {{0, 0, 18}, {0, 0, 14}, {0, 0, 1}, {0, 0, 0}}};
constexpr ReferenceRow kRowE6{"E6", {{0, 0, 30}, {0, 0, 12}, {0, 0, 9}, {0, 0, 0}}};
constexpr ReferenceRow kRowE7{"E7", {{0, 0, 60}, {0, 0, 16}, {0, 0, 17}, {0, 0, 0}}};
constexpr ReferenceRow kRowE8{"E8", {{0, 0, 126}, {0, 0, 24}, {0, 0, 33}, {0, 0, 0}}};

ReferenceMatch compare_row(const ReferenceRow& row, std::int64_t n, const std::string& label,
                           const std::array<std::int64_t, 4>& k_roots, int cartan_dim) {
    ReferenceMatch m;
    m.row = label;
    for (int i = 0; i < 4; ++i) m.claimed[i] = row.k[i].eval(n);
    if (m.claimed[0] == k_roots[0]) {
        m.k0_convention = K0Convention::RootsOnly;
    } else if (m.claimed[0] == k_roots[0] + cartan_dim) {
        m.k0_convention = K0Convention::WithCartan;
    }
    m.matches[0] = m.k0_convention != K0Convention::None;
    for (int i = 1; i < 4; ++i) m.matches[i] = m.claimed[i] == k_roots[i];
    m.full_match = m.matches[0] && m.matches[1] && m.matches[2] && m.matches[3];
    return m;
}

std::vector<ReferenceMatch> reference_matches(const RootSystem& rs, RootClass cls,
                                              const std::array<std::int64_t, 4>& k_roots) {
    const int n = rs.rank();
    const bool is_long = cls == RootClass::Long;
    std::vector<ReferenceMatch> out;
    switch (rs.family()) {
        case Family::A:
            // The published A row follows the matrix-size convention of
            // sl_n; compare under both readings of its parameter.
            out.push_back(compare_row(kRowA, n, "A_n, n = rank", k_roots, n));
            out.push_back(compare_row(kRowA, n + 1, "A_n, n = rank + 1", k_roots, n));
            break;
        case Family::B:
            out.push_back(compare_row(is_long ? kRowBLong : kRowBShort, n,
                                      is_long ? "B_n long" : "B_n short", k_roots, n));
            break;
        case Family::C:
            out.push_back(compare_row(is_long ? kRowCLong : kRowCShort, n,
                                      is_long ? "C_n long" : "C_n short", k_roots, n));
            break;
        case Family::D:
            out.push_back(compare_row(kRowDLong, n, "D_n", k_roots, n));
            break;
        case Family::E: {
            const ReferenceRow& row = n == 6 ? kRowE6 : (n == 7 ? kRowE7 : kRowE8);
            out.push_back(compare_row(row, n, row.row, k_roots, n));
            break;
        }
        case Family::F:
            out.push_back(compare_row(is_long ? kRowF4Long : kRowF4Short, n,
                                      is_long ? "F4 long" : "F4 short", k_roots, n));
            break;
        case Family::G:
            out.push_back(compare_row(is_long ? kRowG2Long : kRowG2Short, n,
                                      is_long ? "G2 long" : "G2 short", k_roots, n));
            break;
    }
    return out;
}

}  // namespace

EmbeddingReport embed_report(const RootSystem& rs, RootClass root_class) {
    const PositiveRoot& lambda = rs.first_root_of_class(root_class);

    EmbeddingReport report;
    report.family = rs.family();
    report.rank = rs.rank();
    report.root_class = root_class;
    report.cartan_dim = rs.rank();
    report.dim_l = rs.rank() + 2 * static_cast<std::int64_t>(rs.positive_roots().size());

    for (const auto& beta : rs.positive_roots()) {
        const Rational v = pairing(rs, beta.ambient, lambda.ambient);
        internal_check(denominator(v) == 1, "<beta, lambda> must be an integer for roots");
        const std::int64_t value = numerator(v).convert_to<std::int64_t>();
        internal_check(value >= -3 && value <= 3, "<beta, lambda> must lie in -3..3");
        // The pair {beta, -beta} contributes the eigenvalues {value, -value}.
        if (value == 0) {
            report.k_roots[0] += 2;
        } else {
            report.k_roots[std::abs(value)] += 1;
        }
    }
    report.k0_total = report.k_roots[0] + report.cartan_dim;
    internal_check(report.dim_l == report.k0_total + 2 * (report.k_roots[1] + report.k_roots[2] +
                                                          report.k_roots[3]),
                   "eigenvalue multiplicities must sum to dim L");
    report.references = reference_matches(rs, root_class, report.k_roots);
    return report;
}

Sl2CharPoly embed_charpoly(const EmbeddingReport& report) {
    Sl2CharPoly out;
    if (report.k0_total > 0) out.d[0] = report.k0_total;
    for (std::int64_t i = 1; i <= 3; ++i)
        if (report.k_roots[i] > 0) out.d[i] = report.k_roots[i];
    return out;
}

std::vector<EmbeddingReport> reference_table_audit() {
    std::vector<EmbeddingReport> reports;
    const auto add = [&reports](Family f, int rank, RootClass cls) {
        const RootSystem rs = RootSystem::build(f, rank);
        reports.push_back(embed_report(rs, cls));
    };
    for (int n = 1; n <= 8; ++n) add(Family::A, n, RootClass::Long);
    for (int n = 2; n <= 8; ++n) add(Family::B, n, RootClass::Long);
    for (int n = 2; n <= 8; ++n) add(Family::B, n, RootClass::Short);
    for (int n = 2; n <= 8; ++n) add(Family::C, n, RootClass::Long);
    for (int n = 2; n <= 8; ++n) add(Family::C, n, RootClass::Short);
    for (int n = 4; n <= 8; ++n) add(Family::D, n, RootClass::Long);
    add(Family::G, 2, RootClass::Long);
    add(Family::G, 2, RootClass::Short);
    add(Family::F, 4, RootClass::Long);
    add(Family::F, 4, RootClass::Short);
    add(Family::E, 6, RootClass::Long);
    add(Family::E, 7, RootClass::Long);
    add(Family::E, 8, RootClass::Long);
    return reports;
}

}  // namespace liecp
