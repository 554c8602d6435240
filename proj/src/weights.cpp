#include "liecp/weights.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <vector>

namespace liecp {

namespace {

void internal_check(bool ok, const char* what) {
    if (!ok) throw std::logic_error(std::string("internal invariant violated: ") + what);
}

void check_highest(const RootSystem& rs, const Weight& highest) {
    if (highest.coords.size() != static_cast<std::size_t>(rs.rank()))
        throw ShapeError("highest weight length must equal the rank of " + to_string(rs.tag()));
    if (!is_dominant(highest))
        throw NotDominant("highest weight " + to_string(highest) + " has a negative coordinate");
}

Weight plus_rho(const Weight& w) {
    Weight r = w;
    for (auto& c : r.coords) c += 1;
    return r;
}

}  // namespace

std::int64_t WeightMultiset::total() const {
    std::int64_t t = 0;
    for (const auto& [w, m] : entries) t += m;
    return t;
}

Int weyl_dim(const RootSystem& rs, const Weight& highest) {
    check_highest(rs, highest);
    const Weight lam_rho = plus_rho(highest);
    Weight rho;
    rho.coords.assign(rs.rank(), 1);
    Rational dim = 1;
    for (const auto& root : rs.positive_roots())
        dim *= weight_inner(rs, lam_rho, root.fundamental) /
               weight_inner(rs, rho, root.fundamental);
    internal_check(denominator(dim) == 1 && dim > 0, "Weyl dimension must be a positive integer");
    return numerator(dim);
}

Int total_dim(const RootSystem& rs, const Decomposition& d) {
    Int t = 0;
    for (const auto& [hw, mult] : d.entries) t += mult * weyl_dim(rs, hw);
    return t;
}

void check_dim_cap(const RootSystem& rs, const Weight& highest, std::int64_t dim_cap) {
    const Int dim = weyl_dim(rs, highest);
    if (dim > dim_cap)
        throw CapExceeded("dim V(" + to_string(highest) + ") = " + dim.str() +
                          " exceeds the dimension cap " + std::to_string(dim_cap));
}

WeightMultiset irrep_weights(const RootSystem& rs, const Weight& highest, std::int64_t dim_cap) {
    check_highest(rs, highest);
    check_dim_cap(rs, highest, dim_cap);
    const Int dim = weyl_dim(rs, highest);

    // The weight set of V(highest) is saturated: a vector belongs to it iff
    // its dominant Weyl representative is dominated by the highest weight.
    // Every weight is reachable from the top by single simple-root steps
    // through the set, so breadth-first descent enumerates all of it.
    std::vector<Weight> simple_in_fundamental(rs.rank());
    for (int j = 0; j < rs.rank(); ++j) {
        simple_in_fundamental[j].coords.resize(rs.rank());
        for (int i = 0; i < rs.rank(); ++i)
            simple_in_fundamental[j].coords[i] = rs.cartan(i, j);
    }
    std::set<Weight> members;
    std::deque<Weight> queue;
    members.insert(highest);
    queue.push_back(highest);
    while (!queue.empty()) {
        const Weight mu = std::move(queue.front());
        queue.pop_front();
        for (int j = 0; j < rs.rank(); ++j) {
            Weight nu = mu - simple_in_fundamental[j];
            if (members.count(nu)) continue;
            if (!dominates(rs, highest, dominant_representative(rs, nu))) continue;
            members.insert(nu);
            queue.push_back(std::move(nu));
        }
    }

    // Freudenthal recursion on the dominant members, in decreasing height
    // order; every weight referenced on the right-hand side is strictly
    // higher, so it is already solved (non-dominant ones via their orbit
    // representative, whose height is no smaller).
    std::vector<Weight> dominant_members;
    for (const auto& w : members)
        if (is_dominant(w)) dominant_members.push_back(w);
    std::sort(dominant_members.begin(), dominant_members.end(),
              [&](const Weight& a, const Weight& b) {
                  const Rational ha = weight_height(rs, a), hb = weight_height(rs, b);
                  if (ha != hb) return ha > hb;
                  return a > b;
              });
    internal_check(!dominant_members.empty() && dominant_members.front() == highest,
                   "highest weight must lead the dominant members");

    const Weight lam_rho = plus_rho(highest);
    const Rational lam_norm = weight_inner(rs, lam_rho, lam_rho);
    std::map<Weight, Int> mult;
    mult[highest] = 1;
    for (const auto& mu : dominant_members) {
        if (mu == highest) continue;
        Rational sum = 0;
        for (const auto& root : rs.positive_roots()) {
            Weight nu = mu;
            while (true) {
                nu = nu + root.fundamental;
                if (!members.count(nu)) break;
                const Int& m_nu = mult.at(dominant_representative(rs, nu));
                sum += Rational(m_nu) * weight_inner(rs, nu, root.fundamental);
            }
        }
        const Weight mu_rho = plus_rho(mu);
        const Rational denom = lam_norm - weight_inner(rs, mu_rho, mu_rho);
        internal_check(denom > 0, "Freudenthal denominator must be positive");
        const Rational m = 2 * sum / denom;
        internal_check(denominator(m) == 1 && m > 0,
                       "Freudenthal multiplicity must be a positive integer");
        mult[mu] = numerator(m);
    }

    WeightMultiset out;
    out.tag = rs.tag();
    Int check_total = 0;
    for (const auto& w : members) {
        const Int& m = mult.at(dominant_representative(rs, w));
        out.entries[w] = m.convert_to<std::int64_t>();
        check_total += m;
    }
    internal_check(check_total == dim, "weight multiplicities must sum to the Weyl dimension");
    return out;
}

WeightMultiset rep_weights(const RootSystem& rs, const Decomposition& d, std::int64_t dim_cap) {
    if (d.tag != rs.tag())
        throw TagMismatch("decomposition belongs to " + to_string(d.tag) + ", not " +
                          to_string(rs.tag()));
    if (d.entries.empty()) throw Error("rep_weights: empty decomposition");
    WeightMultiset out;
    out.tag = rs.tag();
    for (const auto& [hw, mult] : d.entries) {
        if (mult < 1) throw Error("constituent multiplicity must be positive");
        const WeightMultiset part = irrep_weights(rs, hw, dim_cap);
        for (const auto& [w, m] : part.entries) out.entries[w] += mult * m;
    }
    return out;
}

}  // namespace liecp
