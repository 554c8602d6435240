#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "liecp/rootsys.hpp"

using liecp::AmbientVector;
using liecp::Family;
using liecp::Rational;
using liecp::RootSystem;
using liecp::Weight;

namespace {

struct TypeCase {
    Family family;
    int rank;
    std::size_t positive_roots;
};

const std::vector<TypeCase> kAllTypes = {
    {Family::A, 1, 1},   {Family::A, 2, 3},   {Family::A, 3, 6},   {Family::A, 4, 10},
    {Family::A, 5, 15},  {Family::A, 6, 21},  {Family::A, 7, 28},  {Family::A, 8, 36},
    {Family::B, 2, 4},   {Family::B, 3, 9},   {Family::B, 4, 16},  {Family::B, 5, 25},
    {Family::B, 6, 36},  {Family::B, 7, 49},  {Family::B, 8, 64},  {Family::C, 2, 4},
    {Family::C, 3, 9},   {Family::C, 4, 16},  {Family::C, 5, 25},  {Family::C, 6, 36},
    {Family::C, 7, 49},  {Family::C, 8, 64},  {Family::D, 4, 12},  {Family::D, 5, 20},
    {Family::D, 6, 30},  {Family::D, 7, 42},  {Family::D, 8, 56},  {Family::E, 6, 36},
    {Family::E, 7, 63},  {Family::E, 8, 120}, {Family::F, 4, 24},  {Family::G, 2, 6},
};

AmbientVector vec(std::initializer_list<int> xs) {
    AmbientVector v;
    for (int x : xs) v.emplace_back(x);
    return v;
}

}  // namespace

TEST_CASE("positive root counts for every supported type") {
    for (const TypeCase& t : kAllTypes) {
        CAPTURE(static_cast<char>(t.family));
        CAPTURE(t.rank);
        const RootSystem rs = RootSystem::build(t.family, t.rank);
        CHECK(rs.positive_roots().size() == t.positive_roots);
        // heights increase weakly along the stored order and start at 1
        CHECK(rs.positive_roots().front().height == 1);
        CHECK(std::is_sorted(rs.positive_roots().begin(), rs.positive_roots().end(),
                             [](const auto& a, const auto& b) { return a.height < b.height; }));
    }
}

TEST_CASE("unsupported family/rank combinations are rejected") {
    using liecp::UnsupportedType;
    CHECK_THROWS_AS(RootSystem::build(Family::A, 0), UnsupportedType);
    CHECK_THROWS_AS(RootSystem::build(Family::A, 9), UnsupportedType);
    CHECK_THROWS_AS(RootSystem::build(Family::B, 1), UnsupportedType);
    CHECK_THROWS_AS(RootSystem::build(Family::D, 3), UnsupportedType);
    CHECK_THROWS_AS(RootSystem::build(Family::E, 5), UnsupportedType);
    CHECK_THROWS_AS(RootSystem::build(Family::F, 3), UnsupportedType);
    CHECK_THROWS_AS(RootSystem::build(Family::G, 3), UnsupportedType);
    CHECK_THROWS_AS(liecp::family_from_char('H'), UnsupportedType);
    CHECK(liecp::family_from_char('E') == Family::E);
}

TEST_CASE("Cartan matrices of the rank-2 systems") {
    const RootSystem a2 = RootSystem::build(Family::A, 2);
    CHECK(a2.cartan(0, 0) == 2);
    CHECK(a2.cartan(0, 1) == -1);
    CHECK(a2.cartan(1, 0) == -1);

    // C2 with alpha_1 short and alpha_2 = 2*eps_2 long: evaluating the long
    // root on the short coroot gives -2, the short on the long coroot -1
    const RootSystem c2 = RootSystem::build(Family::C, 2);
    CHECK(c2.cartan(0, 1) == -2);
    CHECK(c2.cartan(1, 0) == -1);

    const RootSystem g2 = RootSystem::build(Family::G, 2);
    const std::set<std::int64_t> off = {g2.cartan(0, 1), g2.cartan(1, 0)};
    CHECK(off == std::set<std::int64_t>{-3, -1});
}

TEST_CASE("C2 realization lists the expected ambient roots") {
    const RootSystem rs = RootSystem::build(Family::C, 2);
    std::set<AmbientVector> got;
    for (const auto& r : rs.positive_roots()) got.insert(r.ambient);
    const std::set<AmbientVector> want = {vec({1, -1}), vec({0, 2}), vec({1, 1}), vec({2, 0})};
    CHECK(got == want);
}

TEST_CASE("long and short root classes") {
    const RootSystem g2 = RootSystem::build(Family::G, 2);
    std::size_t longs = 0, shorts = 0;
    Rational long_norm = 0, short_norm = 0;
    for (const auto& r : g2.positive_roots()) {
        const Rational norm = liecp::dot(r.ambient, r.ambient);
        if (r.is_long) {
            ++longs;
            long_norm = norm;
        } else {
            ++shorts;
            short_norm = norm;
        }
    }
    CHECK(longs == 3);
    CHECK(shorts == 3);
    CHECK(long_norm == 3 * short_norm);
    CHECK(g2.has_two_lengths());

    const RootSystem a3 = RootSystem::build(Family::A, 3);
    CHECK(!a3.has_two_lengths());
    CHECK(std::all_of(a3.positive_roots().begin(), a3.positive_roots().end(),
                      [](const auto& r) { return r.is_long; }));
    CHECK_THROWS_AS(a3.first_root_of_class(liecp::RootClass::Short), liecp::NoSuchRootClass);
    CHECK(g2.first_root_of_class(liecp::RootClass::Short).height == 1);
}

TEST_CASE("pairing values on fixed vectors") {
    const RootSystem c2 = RootSystem::build(Family::C, 2);
    CHECK(liecp::pairing(c2, vec({1, 1}), vec({0, 2})) == 1);
    CHECK(liecp::pairing(c2, vec({0, 2}), vec({0, 2})) == 2);

    const RootSystem a2 = RootSystem::build(Family::A, 2);
    CHECK(liecp::pairing(a2, vec({1, 0, -1}), vec({1, -1, 0})) == 1);
    CHECK_THROWS_AS(liecp::pairing(a2, vec({1, 0, -1}), vec({0, 0, 0})), liecp::ZeroVector);
    CHECK_THROWS_AS(liecp::pairing(a2, vec({1, 0}), vec({1, -1, 0})), liecp::ShapeError);
}

TEST_CASE("pairings of roots always lie in -3..3") {
    for (const TypeCase& t : kAllTypes) {
        const RootSystem rs = RootSystem::build(t.family, t.rank);
        for (const auto& beta : rs.positive_roots()) {
            for (const auto& lam : rs.positive_roots()) {
                const Rational v = liecp::pairing(rs, beta.ambient, lam.ambient);
                CHECK(boost::multiprecision::denominator(v) == 1);
                CHECK(boost::multiprecision::numerator(v) >= -3);
                CHECK(boost::multiprecision::numerator(v) <= 3);
            }
        }
    }
}

TEST_CASE("fundamental coordinates invert the ambient embedding") {
    const RootSystem a1 = RootSystem::build(Family::A, 1);
    CHECK(liecp::to_fundamental(a1, vec({1, -1})) == Weight{{2}});

    const RootSystem a2 = RootSystem::build(Family::A, 2);
    CHECK(liecp::to_fundamental(a2, a2.fundamental_weights()[0]) == Weight{{1, 0}});

    const RootSystem c2 = RootSystem::build(Family::C, 2);
    CHECK(liecp::to_fundamental(c2, vec({2, 0})) == Weight{{2, 0}});

    for (const TypeCase& t : {TypeCase{Family::A, 2, 3}, TypeCase{Family::C, 2, 4},
                              TypeCase{Family::G, 2, 6}}) {
        const RootSystem rs = RootSystem::build(t.family, t.rank);
        const Weight w{{2, -1}};
        CHECK(liecp::to_fundamental(rs, liecp::to_ambient(rs, w)) == w);
    }

    AmbientVector bad = vec({1, 0});
    bad[0] = Rational(1, 3);
    CHECK_THROWS_AS(liecp::to_fundamental(a1, bad), liecp::NonIntegral);
}

TEST_CASE("simple reflections") {
    const RootSystem a1 = RootSystem::build(Family::A, 1);
    CHECK(liecp::reflect(a1, Weight{{5}}, 1) == Weight{{-5}});
    CHECK(liecp::reflect(a1, Weight{{0}}, 1) == Weight{{0}});
    CHECK_THROWS_AS(liecp::reflect(a1, Weight{{1}}, 0), liecp::IndexOutOfRange);
    CHECK_THROWS_AS(liecp::reflect(a1, Weight{{1}}, 2), liecp::IndexOutOfRange);

    const RootSystem a2 = RootSystem::build(Family::A, 2);
    CHECK(liecp::reflect(a2, Weight{{1, 0}}, 1) == Weight{{-1, 1}});
    CHECK(liecp::reflect(a2, Weight{{1, 0}}, 2) == Weight{{1, 0}});
    // involution
    for (int i = 1; i <= 2; ++i)
        CHECK(liecp::reflect(a2, liecp::reflect(a2, Weight{{3, -2}}, i), i) == Weight{{3, -2}});
}

TEST_CASE("a simple reflection permutes the other positive roots") {
    for (const TypeCase& t : {TypeCase{Family::B, 3, 9}, TypeCase{Family::G, 2, 6},
                              TypeCase{Family::D, 4, 12}, TypeCase{Family::A, 3, 6}}) {
        const RootSystem rs = RootSystem::build(t.family, t.rank);
        std::set<Weight> positives;
        for (const auto& r : rs.positive_roots()) positives.insert(r.fundamental);
        for (int i = 1; i <= t.rank; ++i) {
            const Weight alpha_i = rs.positive_roots()[static_cast<std::size_t>(i) - 1].fundamental;
            std::set<Weight> image;
            for (const Weight& beta : positives) {
                if (beta == alpha_i) continue;
                image.insert(liecp::reflect(rs, beta, i));
            }
            std::set<Weight> expected = positives;
            expected.erase(alpha_i);
            CHECK(image == expected);
        }
    }
}

TEST_CASE("dominance order and dominant representatives") {
    const RootSystem a2 = RootSystem::build(Family::A, 2);
    CHECK(liecp::is_dominant(Weight{{1, 1}}));
    CHECK(!liecp::is_dominant(Weight{{1, -1}}));
    CHECK(liecp::dominates(a2, Weight{{1, 1}}, Weight{{0, 0}}));
    // w_1 is not an integer combination of simple roots, so no dominance
    CHECK(!liecp::dominates(a2, Weight{{1, 0}}, Weight{{0, 0}}));
    CHECK(liecp::dominates(a2, Weight{{1, 1}}, Weight{{-1, 2}}));
    CHECK(liecp::dominates(a2, Weight{{1, 1}}, Weight{{1, 1}}));

    // the dominant representative is dominant, in the orbit, and idempotent
    const Weight w{{-3, 2}};
    const Weight dom = liecp::dominant_representative(a2, w);
    CHECK(liecp::is_dominant(dom));
    CHECK(liecp::dominant_representative(a2, dom) == dom);
    const RootSystem b2 = RootSystem::build(Family::B, 2);
    CHECK(liecp::dominant_representative(b2, Weight{{0, -1}}) == Weight{{0, 1}});
}

TEST_CASE("weight heights agree with simple-root coefficients on roots") {
    for (const TypeCase& t : {TypeCase{Family::F, 4, 24}, TypeCase{Family::E, 6, 36}}) {
        const RootSystem rs = RootSystem::build(t.family, t.rank);
        for (const auto& r : rs.positive_roots()) {
            CHECK(liecp::weight_height(rs, r.fundamental) == r.height);
        }
        // rho is the sum of the fundamental weights: all-ones in weight coordinates
        const Weight rho_w{std::vector<std::int64_t>(static_cast<std::size_t>(t.rank), 1)};
        CHECK(liecp::to_ambient(rs, rho_w) == rs.rho());
    }
}

TEST_CASE("highest root is the last stored root and is long") {
    for (const TypeCase& t : kAllTypes) {
        const RootSystem rs = RootSystem::build(t.family, t.rank);
        const auto& top = rs.highest_root();
        CHECK(top.is_long);
        for (const auto& r : rs.positive_roots()) CHECK(r.height <= top.height);
        CHECK(liecp::is_dominant(top.fundamental));
    }
}
