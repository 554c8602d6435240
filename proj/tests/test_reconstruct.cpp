#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "liecp/reconstruct.hpp"

using liecp::Decomposition;
using liecp::Family;
using liecp::RootSystem;
using liecp::Weight;
using liecp::WeightMultiset;

namespace {

WeightMultiset multiset(const liecp::RsTag& tag,
                        std::initializer_list<std::pair<Weight, std::int64_t>> items) {
    WeightMultiset ws;
    ws.tag = tag;
    for (const auto& [w, m] : items) ws.entries[w] += m;
    return ws;
}

Decomposition decomposition(const liecp::RsTag& tag,
                            std::initializer_list<std::pair<Weight, std::int64_t>> items) {
    Decomposition d;
    d.tag = tag;
    for (const auto& [w, m] : items) d.entries[w] += m;
    return d;
}

}  // namespace

TEST_CASE("peeling recovers decompositions from weight multisets") {
    const RootSystem a1 = RootSystem::build(Family::A, 1);
    CHECK(liecp::decompose(a1, multiset(a1.tag(), {{Weight{{2}}, 1}, {Weight{{0}}, 2},
                                                   {Weight{{-2}}, 1}})) ==
          decomposition(a1.tag(), {{Weight{{2}}, 1}, {Weight{{0}}, 1}}));
    CHECK(liecp::decompose(a1, multiset(a1.tag(), {{Weight{{0}}, 1}})) ==
          decomposition(a1.tag(), {{Weight{{0}}, 1}}));

    const RootSystem a2 = RootSystem::build(Family::A, 2);
    const WeightMultiset adjoint = liecp::irrep_weights(a2, Weight{{1, 1}});
    CHECK(liecp::decompose(a2, adjoint) == decomposition(a2.tag(), {{Weight{{1, 1}}, 1}}));
}

TEST_CASE("round trip through rep_weights on fixed mixed modules") {
    const RootSystem c3 = RootSystem::build(Family::C, 3);
    const Decomposition d = decomposition(
        c3.tag(), {{Weight{{1, 0, 0}}, 2}, {Weight{{0, 1, 0}}, 1}, {Weight{{0, 0, 0}}, 3}});
    CHECK(liecp::decompose(c3, liecp::rep_weights(c3, d)) == d);

    const RootSystem g2 = RootSystem::build(Family::G, 2);
    const Decomposition e = decomposition(g2.tag(), {{Weight{{1, 0}}, 1}, {Weight{{0, 1}}, 2}});
    CHECK(liecp::decompose(g2, liecp::rep_weights(g2, e)) == e);
}

TEST_CASE("non-characters are rejected") {
    using liecp::NotACharacter;
    const RootSystem a1 = RootSystem::build(Family::A, 1);
    // missing the reflected weight -1
    CHECK_THROWS_AS(liecp::decompose(a1, multiset(a1.tag(), {{Weight{{1}}, 1}})),
                    NotACharacter);
    // missing interior weights of V(2)
    CHECK_THROWS_AS(liecp::decompose(a1, multiset(a1.tag(), {{Weight{{2}}, 1}})),
                    NotACharacter);
    // asymmetric multiplicities
    CHECK_THROWS_AS(
        liecp::decompose(a1, multiset(a1.tag(), {{Weight{{1}}, 2}, {Weight{{-1}}, 1}})),
        NotACharacter);
    // the empty multiset describes no module
    CHECK_THROWS_AS(liecp::decompose(a1, multiset(a1.tag(), {})), NotACharacter);
    // nonpositive multiplicities
    WeightMultiset bad = multiset(a1.tag(), {{Weight{{1}}, 1}, {Weight{{-1}}, 1}});
    bad.entries[Weight{{0}}] = 0;
    CHECK_THROWS_AS(liecp::decompose(a1, bad), NotACharacter);

    const RootSystem a2 = RootSystem::build(Family::A, 2);
    CHECK_THROWS_AS(liecp::decompose(a2, multiset(a2.tag(), {{Weight{{1, 0}}, 1}})),
                    NotACharacter);
    // maximal weight not dominant: the lone weight [-1, 1] tops its multiset
    CHECK_THROWS_AS(liecp::decompose(a2, multiset(a2.tag(), {{Weight{{-1, 1}}, 1}})),
                    NotACharacter);
}

TEST_CASE("input validation") {
    const RootSystem a1 = RootSystem::build(Family::A, 1);
    WeightMultiset wrong_tag = multiset({Family::A, 2}, {{Weight{{0, 0}}, 1}});
    CHECK_THROWS_AS(liecp::decompose(a1, wrong_tag), liecp::TagMismatch);

    WeightMultiset wrong_len;
    wrong_len.tag = a1.tag();
    wrong_len.entries[Weight{{1, 0}}] = 1;
    CHECK_THROWS_AS(liecp::decompose(a1, wrong_len), liecp::ShapeError);

    // the dimension guard applies to the candidates that get peeled
    const WeightMultiset v2 =
        multiset(a1.tag(), {{Weight{{2}}, 1}, {Weight{{0}}, 1}, {Weight{{-2}}, 1}});
    CHECK_THROWS_AS(liecp::decompose(a1, v2, 2), liecp::CapExceeded);
}

TEST_CASE("every tie-break choice yields the same decomposition") {
    const RootSystem a2 = RootSystem::build(Family::A, 2);
    Decomposition d = decomposition(a2.tag(), {{Weight{{1, 0}}, 1}, {Weight{{0, 1}}, 1}});
    const WeightMultiset gamma = liecp::rep_weights(a2, d);

    const liecp::TieBreak first = [](const std::vector<Weight>&) -> std::size_t { return 0; };
    const liecp::TieBreak last = [](const std::vector<Weight>& c) { return c.size() - 1; };
    CHECK(liecp::decompose(a2, gamma, liecp::kDefaultDimCap, first) == d);
    CHECK(liecp::decompose(a2, gamma, liecp::kDefaultDimCap, last) == d);
    CHECK(liecp::decompose(a2, gamma) == d);

    // same on a B2 example with equal-height dominant candidates:
    // [3,0] and [0,4] both have height 6
    const RootSystem b2 = RootSystem::build(Family::B, 2);
    Decomposition e = decomposition(b2.tag(), {{Weight{{3, 0}}, 1}, {Weight{{0, 4}}, 2}});
    const WeightMultiset gamma2 = liecp::rep_weights(b2, e);
    CHECK(liecp::decompose(b2, gamma2, liecp::kDefaultDimCap, first) == e);
    CHECK(liecp::decompose(b2, gamma2, liecp::kDefaultDimCap, last) == e);
}
