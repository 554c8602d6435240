#include "liecp/charpoly.hpp"

#include <stdexcept>

#include "liecp/reconstruct.hpp"

namespace liecp {

LinearFactors linearize(const RootSystem& rs, const CharPoly& f, std::int64_t dim_cap) {
    return rep_weights(rs, f, dim_cap);
}

LinearFactors resolution_product(const LinearFactors& a, const LinearFactors& b) {
    if (a.tag != b.tag)
        throw TagMismatch("resolution product of factors over " + to_string(a.tag) + " and " +
                          to_string(b.tag));
    LinearFactors prod;
    prod.tag = a.tag;
    for (const auto& [wa, ma] : a.entries)
        for (const auto& [wb, mb] : b.entries) prod.entries[wa + wb] += ma * mb;
    if (prod.total() != a.total() * b.total())
        throw std::logic_error("internal invariant violated: product degree must multiply");
    return prod;
}

CharPoly product_on_charpoly(const RootSystem& rs, const CharPoly& f, const CharPoly& g,
                             std::int64_t dim_cap) {
    const LinearFactors prod = resolution_product(linearize(rs, f, dim_cap),
                                                  linearize(rs, g, dim_cap));
    return decompose(rs, prod, dim_cap);
}

SparsePoly expand_small(const LinearFactors& a, std::int64_t degree_cap) {
    if (a.total() > degree_cap)
        throw CapExceeded("expansion degree " + std::to_string(a.total()) + " exceeds cap " +
                          std::to_string(degree_cap));
    const int nvars = a.tag.rank + 1;
    SparsePoly result = SparsePoly::constant(nvars, 1);
    for (const auto& [w, mult] : a.entries) {
        SparsePoly linear(nvars);
        SparsePoly::Exponents e(nvars, 0);
        e[0] = 1;
        linear.add_term(e, 1);
        e[0] = 0;
        for (int i = 0; i < a.tag.rank; ++i) {
            if (w.coords[i] == 0) continue;
            e[i + 1] = 1;
            linear.add_term(e, w.coords[i]);
            e[i + 1] = 0;
        }
        result = result * linear.pow(mult);
    }
    return result;
}

}  // namespace liecp
