#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "liecp/errors.hpp"

namespace liecp {

// Arbitrary-precision integer / rational. Rationals are always stored
// reduced with a positive denominator; arithmetic is exact.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "p/q", or just "p" when the denominator is 1.
std::string format_rational(const Rational& q);

/// Inverse of format_rational. Accepts optional leading '-' on the
/// numerator. Throws ParseError on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static RationalMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j);
    const Rational& at(std::size_t i, std::size_t j) const;

    RationalMatrix transposed() const;

    bool operator==(const RationalMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);

/// Rank over the field of rationals, computed exactly by fraction-free
/// (Bareiss) elimination on a denominator-cleared copy.
std::size_t rank_over_rationals(const RationalMatrix& m);

/// Exact determinant of a square matrix (fraction-free elimination).
Rational det_over_rationals(const RationalMatrix& m);

/// Exact inverse by Gauss-Jordan elimination. Throws SingularB when the
/// matrix has no inverse.
RationalMatrix inverse(const RationalMatrix& m);

}  // namespace liecp
