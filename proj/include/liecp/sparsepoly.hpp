#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "liecp/exactnum.hpp"

namespace liecp {

/// Exact sparse multivariate polynomial in variables z0..z_{nvars-1}.
/// Terms live in a sorted map from exponent vector to nonzero rational
/// coefficient, so equal polynomials compare equal structurally.
class SparsePoly {
public:
    using Exponents = std::vector<std::int32_t>;

    explicit SparsePoly(int nvars = 1) : nvars_(nvars) {}

    static SparsePoly constant(int nvars, const Rational& c);
    static SparsePoly variable(int nvars, int index);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Exponents, Rational>& terms() const { return terms_; }

    /// Accumulates c * z^e, dropping the term if the coefficient cancels.
    void add_term(const Exponents& e, const Rational& c);

    SparsePoly& operator+=(const SparsePoly& o);
    SparsePoly& operator-=(const SparsePoly& o);
    SparsePoly pow(std::int64_t k) const;

    bool operator==(const SparsePoly&) const = default;

    /// Max over terms of the exponent sum; -1 for the zero polynomial.
    std::int64_t total_degree() const;
    bool is_homogeneous() const;

    /// Substitute images[i] for variable i (all images over a common
    /// variable set, which becomes the result's variable set).
    SparsePoly substitute(const std::vector<SparsePoly>& images) const;

    /// Quotient f/g for an exact multiple f of g; throws Error when the
    /// division is not exact.
    static SparsePoly exact_divide(const SparsePoly& f, const SparsePoly& g);

    /// Terms in descending exponent order, e.g. "z0^3 - 4*z0*z1^2".
    std::string to_string() const;

private:
    int nvars_ = 1;
    std::map<Exponents, Rational> terms_;
};

SparsePoly operator+(SparsePoly a, const SparsePoly& b);
SparsePoly operator-(SparsePoly a, const SparsePoly& b);
SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);

}  // namespace liecp
