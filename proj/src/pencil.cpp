#include "liecp/pencil.hpp"

#include <stdexcept>
#include <utility>

namespace liecp {

namespace {

void internal_check(bool ok, const char* what) {
    if (!ok) throw std::logic_error(std::string("internal invariant violated: ") + what);
}

constexpr int kMaxVariables = 8;

RationalMatrix commutator(const RationalMatrix& a, const RationalMatrix& b) {
    RationalMatrix c = a * b;
    const RationalMatrix d = b * a;
    for (std::size_t i = 0; i < c.rows(); ++i)
        for (std::size_t j = 0; j < c.cols(); ++j) c.at(i, j) -= d.at(i, j);
    return c;
}

RationalMatrix scaled(const RationalMatrix& a, const Rational& s) {
    RationalMatrix c = a;
    for (std::size_t i = 0; i < c.rows(); ++i)
        for (std::size_t j = 0; j < c.cols(); ++j) c.at(i, j) *= s;
    return c;
}

// Determinant by first-row cofactor expansion over the polynomial ring.
SparsePoly cofactor_det(const std::vector<std::vector<SparsePoly>>& m,
                        const std::vector<std::size_t>& rows,
                        const std::vector<std::size_t>& cols, int nvars) {
    if (rows.empty()) return SparsePoly::constant(nvars, 1);
    if (rows.size() == 1) return m[rows[0]][cols[0]];
    SparsePoly det(nvars);
    std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        const SparsePoly& entry = m[rows[0]][cols[c]];
        if (entry.is_zero()) continue;
        std::vector<std::size_t> sub_cols;
        sub_cols.reserve(cols.size() - 1);
        for (std::size_t k = 0; k < cols.size(); ++k)
            if (k != c) sub_cols.push_back(cols[k]);
        SparsePoly minor = entry * cofactor_det(m, sub_rows, sub_cols, nvars);
        if (c % 2 == 0) {
            det += minor;
        } else {
            det -= minor;
        }
    }
    return det;
}

// Fraction-free elimination over the polynomial ring: after each step the
// entries are minors of the original matrix, so dividing by the previous
// pivot is an exact polynomial division.
SparsePoly bareiss_det(std::vector<std::vector<SparsePoly>> m, int nvars) {
    const std::size_t n = m.size();
    SparsePoly prev = SparsePoly::constant(nvars, 1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t sel = k;
        while (sel < n && m[sel][k].is_zero()) ++sel;
        if (sel == n) return SparsePoly(nvars);  // zero column: determinant 0
        if (sel != k) {
            std::swap(m[sel], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = SparsePoly::exact_divide(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
            }
            m[i][k] = SparsePoly(nvars);
        }
        prev = m[k][k];
    }
    SparsePoly det = std::move(m[n - 1][n - 1]);
    if (sign < 0) det = SparsePoly::constant(nvars, -1) * det;
    return det;
}

}  // namespace

MatrixPencil sl2_matrices(std::int64_t m) {
    if (m < 0) throw NotDominant("sl2 highest weight must be nonnegative");
    const std::size_t d = static_cast<std::size_t>(m) + 1;
    RationalMatrix h(d, d), e(d, d), f(d, d);
    for (std::size_t k = 0; k < d; ++k) {
        h.at(k, k) = m - 2 * static_cast<std::int64_t>(k);
        if (k >= 1) e.at(k - 1, k) = m - static_cast<std::int64_t>(k) + 1;
        if (k + 1 < d) f.at(k + 1, k) = static_cast<std::int64_t>(k) + 1;
    }
    internal_check(commutator(h, e) == scaled(e, 2), "[h,e] must equal 2e");
    internal_check(commutator(h, f) == scaled(f, -2), "[h,f] must equal -2f");
    internal_check(commutator(e, f) == h, "[e,f] must equal h");
    return MatrixPencil{d, {h, e, f}};
}

SparsePoly det_pencil(const MatrixPencil& p, std::size_t size_cap) {
    if (p.size > size_cap)
        throw SizeCapExceeded("pencil size " + std::to_string(p.size) + " exceeds cap " +
                              std::to_string(size_cap));
    const int nvars = static_cast<int>(p.generators.size()) + 1;
    if (nvars > kMaxVariables)
        throw SizeCapExceeded("pencil with " + std::to_string(nvars) +
                              " variables exceeds the limit of 8");
    for (const auto& g : p.generators)
        if (g.rows() != p.size || g.cols() != p.size)
            throw ShapeError("pencil generators must all be size x size");

    std::vector<std::vector<SparsePoly>> m(p.size,
                                           std::vector<SparsePoly>(p.size, SparsePoly(nvars)));
    SparsePoly::Exponents e(nvars, 0);
    for (std::size_t i = 0; i < p.size; ++i) {
        for (std::size_t j = 0; j < p.size; ++j) {
            if (i == j) {
                e[0] = 1;
                m[i][j].add_term(e, 1);
                e[0] = 0;
            }
            for (std::size_t g = 0; g < p.generators.size(); ++g) {
                const Rational& c = p.generators[g].at(i, j);
                if (c == 0) continue;
                e[g + 1] = 1;
                m[i][j].add_term(e, c);
                e[g + 1] = 0;
            }
        }
    }

    SparsePoly det(nvars);
    if (p.size < 5) {
        std::vector<std::size_t> idx(p.size);
        for (std::size_t i = 0; i < p.size; ++i) idx[i] = i;
        det = cofactor_det(m, idx, idx, nvars);
    } else {
        det = bareiss_det(std::move(m), nvars);
    }
    internal_check(det.is_homogeneous() &&
                       det.total_degree() == static_cast<std::int64_t>(p.size),
                   "pencil determinant must be homogeneous of degree = size");
    return det;
}

SparsePoly substitute_base_change(const SparsePoly& f, const RationalMatrix& D) {
    const std::size_t n = static_cast<std::size_t>(f.nvars());
    if (D.rows() != n || D.cols() != n)
        throw ShapeError("substitution matrix must be square with one row per variable");
    if (D.at(0, 0) != 1) throw ShapeError("substitution matrix must fix z0 (D[0][0] = 1)");
    for (std::size_t i = 1; i < n; ++i)
        if (D.at(0, i) != 0 || D.at(i, 0) != 0)
            throw ShapeError("substitution matrix must have zero first row and column off D[0][0]");

    std::vector<SparsePoly> images;
    images.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        SparsePoly image(static_cast<int>(n));
        SparsePoly::Exponents e(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            if (D.at(i, j) == 0) continue;
            e[i] = 1;
            image.add_term(e, D.at(i, j));
            e[i] = 0;
        }
        images.push_back(std::move(image));
    }
    return f.substitute(images);
}

bool verify_base_change(const MatrixPencil& p, const RationalMatrix& B, std::size_t size_cap) {
    const std::size_t g = p.generators.size();
    if (B.rows() != g || B.cols() != g)
        throw ShapeError("base-change matrix must be square with one row per generator");
    if (det_over_rationals(B) == 0) throw SingularB("base-change matrix is singular");

    MatrixPencil transformed;
    transformed.size = p.size;
    for (std::size_t i = 0; i < g; ++i) {
        RationalMatrix gi(p.size, p.size);
        for (std::size_t j = 0; j < g; ++j) {
            const Rational& c = B.at(i, j);
            if (c == 0) continue;
            for (std::size_t r = 0; r < p.size; ++r)
                for (std::size_t s = 0; s < p.size; ++s)
                    gi.at(r, s) += c * p.generators[j].at(r, s);
        }
        transformed.generators.push_back(std::move(gi));
    }

    RationalMatrix D(g + 1, g + 1);
    D.at(0, 0) = 1;
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j) D.at(i + 1, j + 1) = B.at(i, j);

    const SparsePoly original = det_pencil(p, size_cap);
    const SparsePoly recomputed = det_pencil(transformed, size_cap);
    return recomputed == substitute_base_change(original, D);
}

}  // namespace liecp
