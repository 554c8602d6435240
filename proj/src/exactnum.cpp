#include "liecp/exactnum.hpp"

#include <cctype>
#include <utility>

namespace liecp {

std::string format_rational(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) {
        s += '/';
        s += denominator(q).str();
    }
    return s;
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view num = text;
    std::string_view den = "1";
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    bool negative = false;
    if (!num.empty() && (num.front() == '-' || num.front() == '+')) {
        negative = num.front() == '-';
        num.remove_prefix(1);
    }
    if (!all_digits(num) || !all_digits(den)) {
        throw ParseError("malformed rational literal: '" + std::string(text) + "'");
    }
    Int n{std::string(num)};
    Int d{std::string(den)};
    if (d == 0) {
        throw ParseError("zero denominator in rational literal: '" + std::string(text) + "'");
    }
    if (negative) n = -n;
    return Rational(n, d);
}

Rational& RationalMatrix::at(std::size_t i, std::size_t j) {
    if (i >= rows_ || j >= cols_) throw IndexOutOfRange("matrix index out of range");
    return entries_[i * cols_ + j];
}

const Rational& RationalMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw IndexOutOfRange("matrix index out of range");
    return entries_[i * cols_ + j];
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::transposed() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols() != b.rows()) throw ShapeError("matrix product: inner dimensions differ");
    RationalMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

namespace {

// Clears denominators row by row (row scaling preserves rank and scales the
// determinant by a known factor), returning the integer matrix and the
// product of the scale factors.
std::vector<std::vector<Int>> to_integer_rows(const RationalMatrix& m, Rational* scale_product) {
    std::vector<std::vector<Int>> a(m.rows(), std::vector<Int>(m.cols()));
    Rational scale = 1;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Int l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) l = lcm(l, denominator(m.at(i, j)));
        scale *= Rational(l);
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rational& q = m.at(i, j);
            a[i][j] = numerator(q) * (l / denominator(q));
        }
    }
    if (scale_product) *scale_product = scale;
    return a;
}

// Fraction-free (Bareiss) elimination over the integers, with column
// skipping. Each interior update (p*a[i][j] - a[i][c]*a[r][j]) / prev is an
// exact integer division: the entries remain minors of the original matrix.
// Returns the rank; when `det` is non-null the matrix must be square and the
// signed determinant is stored there.
std::size_t bareiss(std::vector<std::vector<Int>>& a, Int* det) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    Int prev = 1;
    int sign = 1;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
        std::size_t sel = pivot_row;
        while (sel < rows && a[sel][col] == 0) ++sel;
        if (sel == rows) continue;
        if (sel != pivot_row) {
            std::swap(a[sel], a[pivot_row]);
            sign = -sign;
        }
        const Int& pivot = a[pivot_row][col];
        for (std::size_t i = pivot_row + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                a[i][j] = (pivot * a[i][j] - a[i][col] * a[pivot_row][j]) / prev;
            }
            a[i][col] = 0;
        }
        prev = pivot;
        ++pivot_row;
    }
    if (det) {
        if (rows != cols) throw ShapeError("determinant of a non-square matrix");
        *det = (pivot_row == rows) ? Int(sign) * prev : Int(0);
    }
    return pivot_row;
}

}  // namespace

std::size_t rank_over_rationals(const RationalMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    auto a = to_integer_rows(m, nullptr);
    return bareiss(a, nullptr);
}

Rational det_over_rationals(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw ShapeError("determinant of a non-square matrix");
    if (m.rows() == 0) return 1;
    Rational scale;
    auto a = to_integer_rows(m, &scale);
    Int det;
    bareiss(a, &det);
    return Rational(det) / scale;
}

RationalMatrix inverse(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw ShapeError("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    RationalMatrix a = m;
    RationalMatrix inv = RationalMatrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && a.at(sel, col) == 0) ++sel;
        if (sel == n) throw SingularB("matrix is singular");
        if (sel != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a.at(sel, j), a.at(col, j));
                std::swap(inv.at(sel, j), inv.at(col, j));
            }
        }
        const Rational pivot = a.at(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            a.at(col, j) /= pivot;
            inv.at(col, j) /= pivot;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a.at(i, col) == 0) continue;
            const Rational factor = a.at(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                a.at(i, j) -= factor * a.at(col, j);
                inv.at(i, j) -= factor * inv.at(col, j);
            }
        }
    }
    return inv;
}

}  // namespace liecp
