#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "liecp/exactnum.hpp"

namespace liecp {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// 'A'..'G' -> Family; anything else throws UnsupportedType.
Family family_from_char(char c);

constexpr char family_char(Family f) {
    return static_cast<char>(f);
}

/// Long/short root classes; in a simply-laced system every root is long.
enum class RootClass { Long, Short };

/// Coordinates of a vector in the realization's ambient Euclidean space.
using AmbientVector = std::vector<Rational>;

Rational dot(const AmbientVector& a, const AmbientVector& b);

/// Integer coordinates of a weight in the fundamental-weight basis:
/// coords[i] = lambda(h_{alpha_i}) = <lambda, alpha_i>.
struct Weight {
    std::vector<std::int64_t> coords;
    auto operator<=>(const Weight&) const = default;
};

Weight operator+(const Weight& a, const Weight& b);
Weight operator-(const Weight& a, const Weight& b);
std::string to_string(const Weight& w);  // "[1,0,-2]"

/// Identifies which root system a weight or multiset belongs to.
struct RsTag {
    Family family{Family::A};
    int rank{1};
    auto operator<=>(const RsTag&) const = default;
};
std::string to_string(const RsTag& tag);  // "C3"

struct PositiveRoot {
    AmbientVector ambient;
    std::vector<std::int64_t> simple_coords;  // expansion over the simple roots
    Weight fundamental;                       // <root, alpha_i> coordinates
    std::int64_t height = 0;                  // sum of simple_coords
    bool is_long = true;
};

/// A simple root system in its standard ambient realization. Immutable after
/// build(); safe for concurrent shared reads.
class RootSystem {
public:
    /// Supported: A1..A8, B2..B8, C2..C8, D4..D8, E6..E8, F4, G2.
    /// Throws UnsupportedType for anything else.
    static RootSystem build(Family family, int rank);

    Family family() const { return tag_.family; }
    int rank() const { return tag_.rank; }
    const RsTag& tag() const { return tag_; }
    std::size_t ambient_dim() const { return simple_roots_[0].size(); }

    const std::vector<AmbientVector>& simple_roots() const { return simple_roots_; }

    /// Positive roots ordered by height, then by discovery order within a
    /// height level (deterministic).
    const std::vector<PositiveRoot>& positive_roots() const { return positive_roots_; }

    /// Cartan matrix entry[i][j] = <alpha_j, alpha_i> = 2(alpha_j,alpha_i)/(alpha_i,alpha_i).
    std::int64_t cartan(int i, int j) const { return cartan_[i][j]; }
    const RationalMatrix& cartan_inverse() const { return cartan_inverse_; }

    const std::vector<AmbientVector>& fundamental_weights() const { return fundamental_weights_; }
    const AmbientVector& rho() const { return rho_; }

    /// Gram matrix of the fundamental weights: gram(i,j) = (w_i, w_j).
    const Rational& gram(int i, int j) const { return gram_.at(i, j); }

    bool has_two_lengths() const { return has_two_lengths_; }

    /// Unique root of maximal height.
    const PositiveRoot& highest_root() const { return positive_roots_.back(); }

    /// First positive root of the given class in storage order. Throws
    /// NoSuchRootClass for Short in a simply-laced system.
    const PositiveRoot& first_root_of_class(RootClass c) const;

private:
    RootSystem() = default;

    RsTag tag_;
    std::vector<AmbientVector> simple_roots_;
    std::vector<PositiveRoot> positive_roots_;
    std::vector<std::vector<std::int64_t>> cartan_;
    RationalMatrix cartan_inverse_;
    std::vector<AmbientVector> fundamental_weights_;
    AmbientVector rho_;
    RationalMatrix gram_;
    std::vector<Rational> height_form_;  // column sums of cartan_inverse_
    bool has_two_lengths_ = false;

    friend Rational weight_height(const RootSystem&, const Weight&);
};

/// 2(beta,lambda)/(lambda,lambda) under the ambient dot product.
/// Throws ZeroVector when lambda = 0.
Rational pairing(const RootSystem& rs, const AmbientVector& beta, const AmbientVector& lambda);

/// Fundamental-weight coordinates of an ambient vector: coords[i] =
/// pairing(rs, v, alpha_i). Throws NonIntegral if any pairing is not an
/// integer. Inverse of to_ambient on the weight lattice.
Weight to_fundamental(const RootSystem& rs, const AmbientVector& v);

/// Ambient representative of a weight: sum of w[i] * fundamental_weight_i.
AmbientVector to_ambient(const RootSystem& rs, const Weight& w);

/// Simple reflection s_i. The index i is 1-based (1 <= i <= rank), matching
/// the usual subscript on alpha_i; throws IndexOutOfRange otherwise.
Weight reflect(const RootSystem& rs, const Weight& w, int i);

bool is_dominant(const Weight& w);

/// The unique dominant weight in the Weyl orbit of w.
Weight dominant_representative(const RootSystem& rs, Weight w);

/// True when hi - lo is a nonnegative integer combination of simple roots.
bool dominates(const RootSystem& rs, const Weight& hi, const Weight& lo);

/// Sum of the simple-root coefficients of w (a rational in general).
Rational weight_height(const RootSystem& rs, const Weight& w);

/// Gram-form inner product of two weights: (a, b) in the ambient metric.
Rational weight_inner(const RootSystem& rs, const Weight& a, const Weight& b);

}  // namespace liecp
