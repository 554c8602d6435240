#include "liecp/borel.hpp"

#include <stdexcept>

namespace liecp {

LinearFactors borel_factors(const RootSystem& rs) {
    LinearFactors out;
    out.tag = rs.tag();
    Weight zero;
    zero.coords.assign(rs.rank(), 0);
    out.entries[zero] = rs.rank();
    for (const auto& root : rs.positive_roots()) out.entries[root.fundamental] += 1;
    return out;
}

RationalMatrix spectral_matrix(const RootSystem& rs) {
    const std::size_t n = rs.rank();
    const std::size_t s = rs.positive_roots().size();
    RationalMatrix m(n + s, n + s);
    for (std::size_t j = 0; j < s; ++j) {
        const Weight& row = rs.positive_roots()[j].fundamental;
        for (std::size_t i = 0; i < n; ++i) m.at(n + j, i) = row.coords[i];
    }
    return m;
}

std::size_t spectral_rank(const RootSystem& rs) {
    const std::size_t r = rank_over_rationals(spectral_matrix(rs));
    if (r != static_cast<std::size_t>(rs.rank()))
        throw std::logic_error("internal invariant violated: spectral rank must equal the rank");
    return r;
}

}  // namespace liecp
