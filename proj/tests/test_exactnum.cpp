#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "liecp/exactnum.hpp"

using liecp::RationalMatrix;
using liecp::Rational;

namespace {

RationalMatrix from_rows(const std::vector<std::vector<int>>& rows) {
    RationalMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
    return m;
}

RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.at(i, j) = Rational(static_cast<int>(rng() % 11) - 5,
                                  1 + static_cast<int>(rng() % 3));
    return m;
}

}  // namespace

TEST_CASE("rational formatting round trips") {
    for (const char* text : {"0", "5", "-7", "2/3", "-22/7", "1000000000000000000000/3"}) {
        CHECK(liecp::format_rational(liecp::parse_rational(text)) == text);
    }
    CHECK(liecp::format_rational(liecp::parse_rational("4/6")) == "2/3");
    CHECK(liecp::format_rational(liecp::parse_rational("-0")) == "0");
    CHECK(liecp::format_rational(Rational(1, 2) + Rational(1, 3)) == "5/6");
}

TEST_CASE("rational parsing rejects malformed input") {
    for (const char* text : {"", "x", "1/", "/2", "1/0", "1.5", "2/3/4", "1 2", "--3"}) {
        CHECK_THROWS_AS(liecp::parse_rational(text), liecp::ParseError);
    }
}

TEST_CASE("rank of small fixed matrices") {
    CHECK(liecp::rank_over_rationals(RationalMatrix::identity(2)) == 2);
    CHECK(liecp::rank_over_rationals(RationalMatrix(3, 3)) == 0);
    CHECK(liecp::rank_over_rationals(from_rows({{0, 0}, {2, 0}})) == 1);
    CHECK(liecp::rank_over_rationals(from_rows({{1, 2, 3}, {2, 4, 6}, {0, 0, 1}})) == 2);
    // non-square, fractions forcing the denominator-clearing path
    RationalMatrix m(2, 3);
    m.at(0, 0) = Rational(1, 2);
    m.at(0, 1) = Rational(1, 3);
    m.at(1, 0) = Rational(3, 2);
    m.at(1, 1) = 2;
    CHECK(liecp::rank_over_rationals(m) == 2);
}

TEST_CASE("determinants of small fixed matrices") {
    CHECK(liecp::det_over_rationals(RationalMatrix::identity(3)) == 1);
    CHECK(liecp::det_over_rationals(from_rows({{1, 2}, {3, 4}})) == -2);
    CHECK(liecp::det_over_rationals(from_rows({{1, 2}, {2, 4}})) == 0);
    RationalMatrix m = from_rows({{2, 0, 1}, {1, 1, 0}, {0, 3, 1}});
    m.at(0, 0) = Rational(1, 2);
    CHECK(liecp::det_over_rationals(m) == Rational(7, 2));
}

TEST_CASE("inverse is a two-sided inverse and rejects singular input") {
    std::mt19937_64 rng(7);
    int invertible = 0;
    while (invertible < 10) {
        const RationalMatrix m = random_matrix(rng, 4);
        if (liecp::det_over_rationals(m) == 0) continue;
        ++invertible;
        const RationalMatrix inv = liecp::inverse(m);
        CHECK(m * inv == RationalMatrix::identity(4));
        CHECK(inv * m == RationalMatrix::identity(4));
    }
    CHECK_THROWS_AS(liecp::inverse(from_rows({{1, 2}, {2, 4}})), liecp::SingularB);
    CHECK_THROWS_AS(liecp::inverse(RationalMatrix(2, 3)), liecp::ShapeError);
}

TEST_CASE("rank is invariant under transposition and submultiplicative") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 25; ++trial) {
        RationalMatrix a = random_matrix(rng, 4);
        RationalMatrix b = random_matrix(rng, 4);
        // plant a dependent row to exercise the low-rank path
        if (trial % 2 == 0)
            for (std::size_t j = 0; j < 4; ++j) a.at(3, j) = a.at(0, j) + a.at(1, j);
        CHECK(liecp::rank_over_rationals(a) == liecp::rank_over_rationals(a.transposed()));
        const std::size_t lhs = liecp::rank_over_rationals(a * b);
        CHECK(lhs <= std::min(liecp::rank_over_rationals(a), liecp::rank_over_rationals(b)));
        CHECK(liecp::det_over_rationals(a * b) ==
              liecp::det_over_rationals(a) * liecp::det_over_rationals(b));
    }
}

TEST_CASE("matrix accessors validate their arguments") {
    RationalMatrix m(2, 2);
    CHECK_THROWS_AS(m.at(2, 0), liecp::IndexOutOfRange);
    CHECK_THROWS_AS(m.at(0, 5), liecp::IndexOutOfRange);
    CHECK_THROWS_AS(liecp::det_over_rationals(RationalMatrix(2, 3)), liecp::ShapeError);
    CHECK_THROWS_AS(RationalMatrix(2, 3) * RationalMatrix(2, 3), liecp::ShapeError);
}
