#include "liecp/sparsepoly.hpp"

#include <numeric>

namespace liecp {

SparsePoly SparsePoly::constant(int nvars, const Rational& c) {
    SparsePoly p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

SparsePoly SparsePoly::variable(int nvars, int index) {
    if (index < 0 || index >= nvars) throw IndexOutOfRange("variable index out of range");
    SparsePoly p(nvars);
    Exponents e(nvars, 0);
    e[index] = 1;
    p.add_term(e, 1);
    return p;
}

void SparsePoly::add_term(const Exponents& e, const Rational& c) {
    if (c == 0) return;
    if (e.size() != static_cast<std::size_t>(nvars_))
        throw ShapeError("exponent vector length must equal the variable count");
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
    if (nvars_ != o.nvars_) throw ShapeError("polynomial addition: variable counts differ");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
    if (nvars_ != o.nvars_) throw ShapeError("polynomial subtraction: variable counts differ");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

SparsePoly operator+(SparsePoly a, const SparsePoly& b) {
    a += b;
    return a;
}

SparsePoly operator-(SparsePoly a, const SparsePoly& b) {
    a -= b;
    return a;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    if (a.nvars() != b.nvars()) throw ShapeError("polynomial product: variable counts differ");
    SparsePoly prod(a.nvars());
    SparsePoly::Exponents e(a.nvars());
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            for (int i = 0; i < a.nvars(); ++i) e[i] = ea[i] + eb[i];
            prod.add_term(e, ca * cb);
        }
    }
    return prod;
}

SparsePoly SparsePoly::pow(std::int64_t k) const {
    if (k < 0) throw Error("negative polynomial power");
    SparsePoly result = constant(nvars_, 1);
    SparsePoly base = *this;
    while (k > 0) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return result;
}

std::int64_t SparsePoly::total_degree() const {
    std::int64_t deg = -1;
    for (const auto& [e, c] : terms_)
        deg = std::max(deg, std::accumulate(e.begin(), e.end(), std::int64_t{0}));
    return deg;
}

bool SparsePoly::is_homogeneous() const {
    std::int64_t deg = -1;
    for (const auto& [e, c] : terms_) {
        const std::int64_t d = std::accumulate(e.begin(), e.end(), std::int64_t{0});
        if (deg == -1) deg = d;
        if (d != deg) return false;
    }
    return true;
}

SparsePoly SparsePoly::substitute(const std::vector<SparsePoly>& images) const {
    if (images.size() != static_cast<std::size_t>(nvars_))
        throw ShapeError("substitute: one image required per variable");
    const int out_vars = images.empty() ? nvars_ : images[0].nvars();
    for (const auto& img : images)
        if (img.nvars() != out_vars) throw ShapeError("substitute: images over different variables");

    std::vector<std::vector<SparsePoly>> powers(nvars_);
    const auto power_of = [&](int var, std::int32_t k) -> const SparsePoly& {
        auto& cache = powers[var];
        if (cache.empty()) cache.push_back(constant(out_vars, 1));
        while (cache.size() <= static_cast<std::size_t>(k))
            cache.push_back(cache.back() * images[var]);
        return cache[k];
    };

    SparsePoly result(out_vars);
    for (const auto& [e, c] : terms_) {
        SparsePoly term = constant(out_vars, c);
        for (int i = 0; i < nvars_; ++i)
            if (e[i] != 0) term = term * power_of(i, e[i]);
        result += term;
    }
    return result;
}

SparsePoly SparsePoly::exact_divide(const SparsePoly& f, const SparsePoly& g) {
    if (g.is_zero()) throw Error("polynomial division by zero");
    if (f.nvars() != g.nvars()) throw ShapeError("polynomial division: variable counts differ");
    SparsePoly quotient(f.nvars());
    SparsePoly rem = f;
    const auto& [g_exp, g_coeff] = *g.terms().rbegin();
    Exponents e(f.nvars());
    while (!rem.is_zero()) {
        const auto& [r_exp, r_coeff] = *rem.terms().rbegin();
        for (int i = 0; i < f.nvars(); ++i) {
            e[i] = r_exp[i] - g_exp[i];
            if (e[i] < 0) throw Error("polynomial division is not exact");
        }
        const Rational c = r_coeff / g_coeff;
        quotient.add_term(e, c);
        SparsePoly mono(f.nvars());
        mono.add_term(e, c);
        rem -= mono * g;
    }
    return quotient;
}

std::string SparsePoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        if (s.empty()) {
            if (negative) s += "-";
        } else {
            s += negative ? " - " : " + ";
        }
        std::string mono;
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += '*';
            mono += 'z' + std::to_string(i);
            if (e[i] != 1) mono += '^' + std::to_string(e[i]);
        }
        if (mono.empty()) {
            s += format_rational(mag);
        } else {
            if (mag != 1) s += format_rational(mag) + "*";
            s += mono;
        }
    }
    return s;
}

}  // namespace liecp
