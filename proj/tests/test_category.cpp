#include <doctest.h>

#include "fixtures.hpp"
#include "oracle.hpp"

using namespace garcat;

namespace {

// Runs fn over every canonical element with atom length <= max_len.
template <typename F>
void for_words(const Category& cat, int max_len, F&& fn) {
    for (int v = 0; v < cat.object_count(); ++v)
        for (const auto& m : cat.ball(v, max_len)) fn(m);
}

}  // namespace

TEST_CASE("canonicalization is idempotent and composition compatible") {
    auto check = [](const Category& cat, int len) {
        for_words(cat, len, [&](const Morphism& m) {
            CHECK(cat.canonicalize(m.word, m.tgt, m.dom) == m);
        });
        for_words(cat, len / 2, [&](const Morphism& u) {
            for_words(cat, len / 2, [&](const Morphism& v) {
                if (u.dom != v.tgt) return;
                Word join = u.word;
                join.insert(join.end(), v.word.begin(), v.word.end());
                CHECK(cat.canonicalize(join, u.tgt, v.dom) == cat.compose(u, v));
            });
        });
    };
    check(*fixtures::free2(), 6);
    check(*fixtures::square2(), 6);
    check(*fixtures::b3(), 6);
}

TEST_CASE("left_divides agrees with brute-force search") {
    auto check = [](const Category& cat, int len) {
        auto ball = cat.ball(0, len);
        for (const auto& a : ball)
            for (const auto& b : ball)
                CHECK(cat.left_divides(a, b) == oracle::divides(cat, a, b));
    };
    check(*fixtures::free2(), 5);
    check(*fixtures::square2(), 5);
    check(*fixtures::b3(), 5);
}

TEST_CASE("mcm elements are minimal common multiples and emptiness is exact") {
    // exact_empty: the oracle's ball is wide enough to see every mcm, so
    // emptiness must agree in both directions. Braid lcms can outgrow the
    // oracle ball, where only the sound direction is asserted.
    auto check = [](const Category& cat, int len, bool exact_empty) {
        auto ball = cat.ball(0, len);
        for (const auto& a : ball)
            for (const auto& b : ball) {
                auto mcms = cat.mcm_set(a, b);
                auto expected = oracle::mcm(cat, a, b, 2 * len);
                for (const auto& m : mcms) {
                    CHECK(oracle::divides(cat, a, m));
                    CHECK(oracle::divides(cat, b, m));
                    bool minimal = true;
                    for (const auto& d : expected)
                        if (oracle::divides(cat, d, m) && !oracle::divides(cat, m, d))
                            minimal = false;
                    CHECK(minimal);
                }
                if (exact_empty) CHECK(mcms.empty() == expected.empty());
                else if (mcms.empty()) CHECK(expected.empty());
            }
    };
    check(*fixtures::free2(), 3, true);
    check(*fixtures::square2(), 2, true);
    check(*fixtures::b3(), 2, false);
}

TEST_CASE("mcm reference values") {
    auto g = fixtures::free2();
    CHECK(g->mcm_set(g->atom(0), g->atom(1)).empty());

    auto kg = fixtures::square2();
    auto mcms = kg->mcm_set(kg->atom(0), kg->atom(1));
    REQUIRE(mcms.size() == 1);
    CHECK(kg->format(mcms[0]) == "ef");

    auto b3 = fixtures::b3();
    auto braid = b3->mcm_set(b3->atom(0), b3->atom(1));
    REQUIRE(braid.size() == 1);
    CHECK(braid[0].word == Word{0, 1, 0});
}

TEST_CASE("left cancellation fuzz on all backends") {
    CHECK(left_cancellation_probe(*fixtures::free2(), 3).ok());
    CHECK(left_cancellation_probe(*fixtures::square2(), 2).ok());
    CHECK(left_cancellation_probe(*fixtures::b3(), 3).ok());
    CHECK(left_cancellation_probe(*fixtures::z2(), 2).ok());
}

TEST_CASE("compose matches backend rules") {
    auto kg = fixtures::square2();
    Morphism fe = kg->compose(kg->atom(1), kg->atom(0));
    CHECK(fe.word == Word{0, 1});
    CHECK(kg->format(fe) == "ef");

    auto g = fixtures::free2();
    CHECK(g->compose(g->atom(0), g->identity(0)) == g->atom(0));
    CHECK(g->compose(g->atom(0), g->atom(1)).word == Word{0, 1});
    CHECK_THROWS_AS((void)fixtures::edge_loop()->compose(fixtures::edge_loop()->atom(1),
                                                         fixtures::edge_loop()->atom(0)),
                    ComposabilityError);
}

TEST_CASE("validate_category accepts the reference fixtures") {
    CHECK(fixtures::free2()->validate().all_hold());
    CHECK(fixtures::square2()->validate().all_hold());
    CHECK(fixtures::b3()->validate().all_hold());
}

TEST_CASE("validate_category pinpoints a left cancellation violation") {
    auto ex = fixtures::non_cancellative();
    auto rep = ex->validate();
    CHECK_FALSE(rep.all_hold());
    const auto* check = rep.find("left cancellation");
    REQUIRE(check != nullptr);
    CHECK(check->verdict.status == Status::Fails);
    REQUIRE(check->verdict.witness.size() == 3);
    const auto& w = check->verdict.witness;
    CHECK(ex->compose(w[0], w[1]) == ex->compose(w[0], w[2]));
    CHECK_FALSE(w[1] == w[2]);
}

TEST_CASE("kgraph validation requires complete square data") {
    KGraphCategory kg(2);
    kg.add_vertex("v");
    kg.add_edge("e", "v", "v", 1);
    kg.add_edge("f", "v", "v", 2);
    auto rep = kg.validate();
    const auto* squares = rep.find("squares");
    REQUIRE(squares != nullptr);
    CHECK(squares->verdict.status == Status::Fails);
}

TEST_CASE("cube condition on a 3-graph") {
    KGraphCategory kg(3);
    kg.add_vertex("v");
    kg.add_edge("e", "v", "v", 1);
    kg.add_edge("f", "v", "v", 2);
    kg.add_edge("g", "v", "v", 3);
    kg.add_square("e", "f", "f", "e");
    kg.add_square("e", "g", "g", "e");
    kg.add_square("f", "g", "g", "f");
    CHECK(kg.validate().all_hold());
}

TEST_CASE("ball enumerations") {
    CHECK(fixtures::free2()->ball(0, 2).size() == 7);
    CHECK(fixtures::b3()->ball(0, 2).size() == 7);  // bb, ab, ba, aa, a, b, id
    // aba = bab collapses at length 3.
    CHECK(fixtures::b3()->ball(0, 3).size() == 14);
}

TEST_CASE("finite alignment probe") {
    auto kg = fixtures::square2();
    auto kgv = finite_alignment_probe(*kg, 2);
    CHECK(kgv.ok());
    CHECK(kgv.exact);
    CHECK(finite_alignment_probe(*fixtures::free2(), 3).ok());
    auto b3v = finite_alignment_probe(*fixtures::b3(), 2);
    CHECK(b3v.ok());
    CHECK(b3v.exact);
}

TEST_CASE("explicit backend units and star representatives") {
    auto z2 = fixtures::z2();
    CHECK_FALSE(z2->trivial_units());
    CHECK(z2->is_unit(z2->atom(0)));
    CHECK(z2->units_at(0).size() == 2);
}

TEST_CASE("right cancellation probes validate the structural claims") {
    CHECK(right_cancellation_probe(*fixtures::b3(), 3).ok());
    CHECK(right_cancellation_probe(*fixtures::square2(), 2).ok());
    CHECK(right_cancellation_probe(*fixtures::free2(), 3).ok());
}
