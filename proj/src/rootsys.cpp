#include "liecp/rootsys.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace liecp {

namespace {

void internal_check(bool ok, const char* what) {
    if (!ok) throw std::logic_error(std::string("internal invariant violated: ") + what);
}

AmbientVector unit(std::size_t dim, std::size_t i) {
    AmbientVector v(dim);
    v[i] = 1;
    return v;
}

AmbientVector diff(std::size_t dim, std::size_t i, std::size_t j) {
    AmbientVector v(dim);
    v[i] = 1;
    v[j] = -1;
    return v;
}

std::size_t expected_positive_count(Family f, int n) {
    switch (f) {
        case Family::A: return static_cast<std::size_t>(n) * (n + 1) / 2;
        case Family::B:
        case Family::C: return static_cast<std::size_t>(n) * n;
        case Family::D: return static_cast<std::size_t>(n) * (n - 1);
        case Family::E: return n == 6 ? 36 : (n == 7 ? 63 : 120);
        case Family::F: return 24;
        case Family::G: return 6;
    }
    return 0;
}

std::vector<AmbientVector> simple_roots_for(Family f, int n) {
    const auto bad = [&] {
        return UnsupportedType("unsupported type " + std::string(1, static_cast<char>(f)) +
                               std::to_string(n));
    };
    std::vector<AmbientVector> sr;
    switch (f) {
        case Family::A: {
            if (n < 1 || n > 8) throw bad();
            const std::size_t dim = n + 1;
            for (int i = 0; i < n; ++i) sr.push_back(diff(dim, i, i + 1));
            break;
        }
        case Family::B: {
            if (n < 2 || n > 8) throw bad();
            const std::size_t dim = n;
            for (int i = 0; i + 1 < n; ++i) sr.push_back(diff(dim, i, i + 1));
            sr.push_back(unit(dim, n - 1));
            break;
        }
        case Family::C: {
            if (n < 2 || n > 8) throw bad();
            const std::size_t dim = n;
            for (int i = 0; i + 1 < n; ++i) sr.push_back(diff(dim, i, i + 1));
            AmbientVector last(dim);
            last[n - 1] = 2;
            sr.push_back(std::move(last));
            break;
        }
        case Family::D: {
            if (n < 4 || n > 8) throw bad();
            const std::size_t dim = n;
            for (int i = 0; i + 1 < n; ++i) sr.push_back(diff(dim, i, i + 1));
            AmbientVector last(dim);
            last[n - 2] = 1;
            last[n - 1] = 1;
            sr.push_back(std::move(last));
            break;
        }
        case Family::E: {
            if (n < 6 || n > 8) throw bad();
            const std::size_t dim = 8;
            AmbientVector a1(dim, Rational(-1, 2));
            a1[0] = Rational(1, 2);
            a1[7] = Rational(1, 2);
            sr.push_back(std::move(a1));
            AmbientVector a2(dim);
            a2[0] = 1;
            a2[1] = 1;
            sr.push_back(std::move(a2));
            sr.push_back(diff(dim, 1, 0));
            for (int k = 4; k <= n; ++k) sr.push_back(diff(dim, k - 2, k - 3));
            break;
        }
        case Family::F: {
            if (n != 4) throw bad();
            const std::size_t dim = 4;
            sr.push_back(diff(dim, 1, 2));
            sr.push_back(diff(dim, 2, 3));
            sr.push_back(unit(dim, 3));
            AmbientVector a4{Rational(1, 2), Rational(-1, 2), Rational(-1, 2), Rational(-1, 2)};
            sr.push_back(std::move(a4));
            break;
        }
        case Family::G: {
            if (n != 2) throw bad();
            sr.push_back(AmbientVector{1, -1, 0});
            sr.push_back(AmbientVector{-2, 1, 1});
            break;
        }
        default:
            throw bad();
    }
    return sr;
}

}  // namespace

Family family_from_char(char c) {
    switch (c) {
        case 'A': return Family::A;
        case 'B': return Family::B;
        case 'C': return Family::C;
        case 'D': return Family::D;
        case 'E': return Family::E;
        case 'F': return Family::F;
        case 'G': return Family::G;
        default: throw UnsupportedType(std::string("unknown family '") + c + "'");
    }
}

Rational dot(const AmbientVector& a, const AmbientVector& b) {
    if (a.size() != b.size()) throw ShapeError("dot product of vectors of different lengths");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Weight operator+(const Weight& a, const Weight& b) {
    if (a.coords.size() != b.coords.size()) throw ShapeError("weight addition: rank mismatch");
    Weight r = a;
    for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
    return r;
}

Weight operator-(const Weight& a, const Weight& b) {
    if (a.coords.size() != b.coords.size()) throw ShapeError("weight subtraction: rank mismatch");
    Weight r = a;
    for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] -= b.coords[i];
    return r;
}

std::string to_string(const Weight& w) {
    std::string s = "[";
    for (std::size_t i = 0; i < w.coords.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(w.coords[i]);
    }
    s += ']';
    return s;
}

std::string to_string(const RsTag& tag) {
    return std::string(1, static_cast<char>(tag.family)) + std::to_string(tag.rank);
}

RootSystem RootSystem::build(Family family, int rank) {
    RootSystem rs;
    rs.tag_ = RsTag{family, rank};
    rs.simple_roots_ = simple_roots_for(family, rank);
    const int n = rank;

    rs.cartan_.assign(n, std::vector<std::int64_t>(n));
    for (int i = 0; i < n; ++i) {
        const Rational norm_i = dot(rs.simple_roots_[i], rs.simple_roots_[i]);
        for (int j = 0; j < n; ++j) {
            const Rational c = 2 * dot(rs.simple_roots_[j], rs.simple_roots_[i]) / norm_i;
            internal_check(denominator(c) == 1, "Cartan entry must be an integer");
            rs.cartan_[i][j] = numerator(c).convert_to<std::int64_t>();
        }
        internal_check(rs.cartan_[i][i] == 2, "Cartan diagonal must be 2");
    }

    // Positive roots by closure: beta + alpha_i is a root iff the alpha_i
    // string through beta satisfies q = p - <beta, alpha_i> > 0, where p is
    // the number of steps the string extends downward. Processing by height
    // guarantees every downward step is already known.
    std::map<std::vector<std::int64_t>, bool> known;
    std::vector<std::vector<std::int64_t>> order;
    std::vector<std::vector<std::int64_t>> current;
    for (int i = 0; i < n; ++i) {
        std::vector<std::int64_t> e(n);
        e[i] = 1;
        known.emplace(e, true);
        order.push_back(e);
        current.push_back(std::move(e));
    }
    while (!current.empty()) {
        std::vector<std::vector<std::int64_t>> next;
        for (const auto& beta : current) {
            for (int i = 0; i < n; ++i) {
                std::int64_t pair = 0;
                for (int j = 0; j < n; ++j) pair += beta[j] * rs.cartan_[i][j];
                std::int64_t p = 0;
                std::vector<std::int64_t> down = beta;
                while (true) {
                    down[i] -= 1;
                    if (down[i] < 0 || !known.count(down)) break;
                    ++p;
                }
                if (p - pair <= 0) continue;
                std::vector<std::int64_t> cand = beta;
                cand[i] += 1;
                if (known.emplace(cand, true).second) {
                    order.push_back(cand);
                    next.push_back(std::move(cand));
                }
            }
        }
        current = std::move(next);
    }
    internal_check(order.size() == expected_positive_count(family, rank),
                   "positive root count must match the classical value");

    Rational max_norm = 0, min_norm = 0;
    for (const auto& coords : order) {
        PositiveRoot root;
        root.simple_coords = coords;
        root.ambient = AmbientVector(rs.simple_roots_[0].size());
        for (int j = 0; j < n; ++j) {
            if (coords[j] == 0) continue;
            for (std::size_t k = 0; k < root.ambient.size(); ++k)
                root.ambient[k] += Rational(coords[j]) * rs.simple_roots_[j][k];
            root.height += coords[j];
        }
        root.fundamental.coords.resize(n);
        for (int i = 0; i < n; ++i) {
            std::int64_t v = 0;
            for (int j = 0; j < n; ++j) v += coords[j] * rs.cartan_[i][j];
            root.fundamental.coords[i] = v;
        }
        const Rational norm = dot(root.ambient, root.ambient);
        if (rs.positive_roots_.empty()) {
            max_norm = min_norm = norm;
        } else {
            max_norm = std::max(max_norm, norm);
            min_norm = std::min(min_norm, norm);
        }
        rs.positive_roots_.push_back(std::move(root));
    }
    rs.has_two_lengths_ = max_norm != min_norm;
    for (auto& root : rs.positive_roots_)
        root.is_long = dot(root.ambient, root.ambient) == max_norm;

    RationalMatrix cartan_rat(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) cartan_rat.at(i, j) = rs.cartan_[i][j];
    rs.cartan_inverse_ = inverse(cartan_rat);

    // fundamental_weight_i = sum_k inverse_cartan[k][i] * alpha_k, the unique
    // solution of <w_i, alpha_j> = delta_ij inside the span of the roots.
    rs.fundamental_weights_.assign(n, AmbientVector(rs.simple_roots_[0].size()));
    rs.height_form_.assign(n, Rational(0));
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            const Rational& c = rs.cartan_inverse_.at(k, i);
            rs.height_form_[i] += c;
            for (std::size_t d = 0; d < rs.fundamental_weights_[i].size(); ++d)
                rs.fundamental_weights_[i][d] += c * rs.simple_roots_[k][d];
        }
    }
    rs.rho_ = AmbientVector(rs.simple_roots_[0].size());
    for (int i = 0; i < n; ++i)
        for (std::size_t d = 0; d < rs.rho_.size(); ++d)
            rs.rho_[d] += rs.fundamental_weights_[i][d];

    rs.gram_ = RationalMatrix(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            rs.gram_.at(i, j) = dot(rs.fundamental_weights_[i], rs.fundamental_weights_[j]);

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            internal_check(pairing(rs, rs.fundamental_weights_[i], rs.simple_roots_[j]) ==
                               (i == j ? 1 : 0),
                           "<w_i, alpha_j> must be the Kronecker delta");

    return rs;
}

const PositiveRoot& RootSystem::first_root_of_class(RootClass c) const {
    if (c == RootClass::Short && !has_two_lengths_)
        throw NoSuchRootClass("no short roots in " + to_string(tag_) +
                              " (all roots have one length)");
    const bool want_long = c == RootClass::Long;
    for (const auto& root : positive_roots_)
        if (root.is_long == want_long) return root;
    throw NoSuchRootClass("no roots of the requested class in " + to_string(tag_));
}

Rational pairing(const RootSystem& rs, const AmbientVector& beta, const AmbientVector& lambda) {
    if (beta.size() != rs.ambient_dim() || lambda.size() != rs.ambient_dim())
        throw ShapeError("pairing: ambient dimension mismatch");
    const Rational norm = dot(lambda, lambda);
    if (norm == 0) throw ZeroVector("pairing <beta, lambda> requires lambda != 0");
    return 2 * dot(beta, lambda) / norm;
}

Weight to_fundamental(const RootSystem& rs, const AmbientVector& v) {
    if (v.size() != rs.ambient_dim()) throw ShapeError("to_fundamental: ambient dimension mismatch");
    Weight w;
    w.coords.resize(rs.rank());
    for (int i = 0; i < rs.rank(); ++i) {
        const Rational p = pairing(rs, v, rs.simple_roots()[i]);
        if (denominator(p) != 1)
            throw NonIntegral("coordinate <v, alpha_" + std::to_string(i + 1) +
                              "> = " + format_rational(p) + " is not an integer");
        w.coords[i] = numerator(p).convert_to<std::int64_t>();
    }
    return w;
}

AmbientVector to_ambient(const RootSystem& rs, const Weight& w) {
    if (w.coords.size() != static_cast<std::size_t>(rs.rank()))
        throw ShapeError("to_ambient: weight length must equal the rank");
    AmbientVector v(rs.ambient_dim());
    for (int i = 0; i < rs.rank(); ++i) {
        if (w.coords[i] == 0) continue;
        for (std::size_t d = 0; d < v.size(); ++d)
            v[d] += Rational(w.coords[i]) * rs.fundamental_weights()[i][d];
    }
    return v;
}

Weight reflect(const RootSystem& rs, const Weight& w, int i) {
    if (i < 1 || i > rs.rank())
        throw IndexOutOfRange("simple-root index " + std::to_string(i) + " outside 1.." +
                              std::to_string(rs.rank()));
    if (w.coords.size() != static_cast<std::size_t>(rs.rank()))
        throw ShapeError("reflect: weight length must equal the rank");
    const int i0 = i - 1;
    const std::int64_t c = w.coords[i0];
    Weight r = w;
    for (int k = 0; k < rs.rank(); ++k) r.coords[k] -= c * rs.cartan(k, i0);
    return r;
}

bool is_dominant(const Weight& w) {
    return std::all_of(w.coords.begin(), w.coords.end(), [](std::int64_t c) { return c >= 0; });
}

Weight dominant_representative(const RootSystem& rs, Weight w) {
    while (true) {
        int neg = -1;
        for (int i = 0; i < rs.rank(); ++i) {
            if (w.coords[i] < 0) {
                neg = i;
                break;
            }
        }
        if (neg < 0) return w;
        w = reflect(rs, w, neg + 1);
    }
}

bool dominates(const RootSystem& rs, const Weight& hi, const Weight& lo) {
    const Weight d = hi - lo;
    for (int k = 0; k < rs.rank(); ++k) {
        Rational c = 0;
        for (int i = 0; i < rs.rank(); ++i) c += rs.cartan_inverse().at(k, i) * d.coords[i];
        if (denominator(c) != 1 || c < 0) return false;
    }
    return true;
}

Rational weight_height(const RootSystem& rs, const Weight& w) {
    if (w.coords.size() != static_cast<std::size_t>(rs.rank()))
        throw ShapeError("weight_height: weight length must equal the rank");
    Rational h = 0;
    for (int i = 0; i < rs.rank(); ++i) h += rs.height_form_[i] * w.coords[i];
    return h;
}

Rational weight_inner(const RootSystem& rs, const Weight& a, const Weight& b) {
    Rational s = 0;
    for (int i = 0; i < rs.rank(); ++i) {
        if (a.coords[i] == 0) continue;
        for (int j = 0; j < rs.rank(); ++j)
            s += Rational(a.coords[i]) * rs.gram(i, j) * b.coords[j];
    }
    return s;
}

}  // namespace liecp
