#include <doctest.h>

#include "fixtures.hpp"
#include "garcat/artin_tools.hpp"
#include "garcat/report.hpp"
#include "oracle.hpp"

using namespace garcat;

namespace {

Morphism word_of(const Category& cat, const std::string& letters) {
    Word w;
    for (char ch : letters) w.push_back(cat.atom_index(std::string(1, ch)));
    return cat.canonicalize(w, 0, 0);
}

}  // namespace

TEST_CASE("validate_family on the reference families") {
    auto g = fixtures::free2();
    auto gf = standard_family(*g);
    REQUIRE(gf);
    CHECK(validate_family(*gf, 4).all_hold());

    auto b3 = fixtures::b3();
    auto bf = standard_family(*b3);
    REQUIRE(bf);
    CHECK(bf->size() == 5);
    CHECK(validate_family(*bf, 4).all_hold());
}

TEST_CASE("atoms of the braid monoid are not closed under comultiples") {
    auto b3 = fixtures::b3();
    GarsideFamily small(*b3, {b3->atom(0), b3->atom(1)});
    auto rep = validate_family(small, 3);
    const auto* rcm = rep.find("right comultiple closure");
    REQUIRE(rcm != nullptr);
    CHECK(rcm->verdict.status == Status::Fails);
    // The offending mcm is aba.
    REQUIRE(rcm->verdict.witness.size() == 3);
    CHECK(rcm->verdict.witness[2].word == Word{0, 1, 0});
}

TEST_CASE("family letters must not be invertible") {
    auto z2 = fixtures::z2();
    CHECK_THROWS_AS(GarsideFamily(*z2, {z2->atom(0)}), StructuralError);
}

TEST_CASE("heads in the braid monoid") {
    auto b3 = fixtures::b3();
    auto fam = standard_family(*b3);
    CHECK(fam->letter(fam->head(word_of(*b3, "aa"))) == word_of(*b3, "a"));
    CHECK(fam->letter(fam->head(word_of(*b3, "abab"))) == word_of(*b3, "aba"));
    CHECK(fam->letter(fam->head(word_of(*b3, "ab"))) == word_of(*b3, "ab"));
    CHECK_THROWS_AS(fam->head(b3->identity(0)), DomainError);
}

TEST_CASE("head of the square element") {
    auto kg = fixtures::square2();
    auto fam = standard_family(*kg);
    Morphism fe = kg->compose(kg->atom(1), kg->atom(0));
    CHECK(kg->format(fam->letter(fam->head(fe))) == "ef");
}

TEST_CASE("heads agree with the brute-force oracle") {
    auto check = [](const Category& cat, const GarsideFamily& fam, int len) {
        for (const auto& m : cat.ball(0, len)) {
            if (m.is_identity()) continue;
            auto expect = oracle::head(fam, m);
            REQUIRE(expect);
            CHECK(fam.head(m) == *expect);
        }
    };
    auto b3 = fixtures::b3();
    check(*b3, *standard_family(*b3), 5);
    auto kg = fixtures::square2();
    check(*kg, *standard_family(*kg), 4);
}

TEST_CASE("junction normality") {
    auto b3 = fixtures::b3();
    auto fam = standard_family(*b3);
    int a = fam->find(word_of(*b3, "a"));
    int ab = fam->find(word_of(*b3, "ab"));
    int aba = fam->find(word_of(*b3, "aba"));
    int b = fam->find(word_of(*b3, "b"));
    CHECK(is_normal(*fam, {aba, b}).normal);
    // a.ab is the greedy form of aab, so that junction passes; b.ab hides
    // the larger divisor a of bab = aba.
    CHECK(is_normal(*fam, {a, ab}).normal);
    auto bad = is_normal(*fam, {b, ab});
    CHECK_FALSE(bad.normal);
    CHECK(bad.violation_index == 0);
    CHECK(bad.violating_letter == a);

    auto kg = fixtures::square2();
    auto kfam = standard_family(*kg);
    int e = kfam->find(kg->atom(0));
    CHECK(is_normal(*kfam, {e, e}).normal);

    // Junctions agree with the oracle on all letter pairs.
    for (int s = 0; s < fam->size(); ++s)
        for (int t = 0; t < fam->size(); ++t)
            CHECK(normal_pair(*fam, s, t) == oracle::junction_normal(*fam, s, t));
}

TEST_CASE("greedy normal decomposition") {
    auto b3 = fixtures::b3();
    auto fam = standard_family(*b3);
    auto nf = normal_decompose(*fam, word_of(*b3, "abab"));
    REQUIRE(nf.size() == 2);
    CHECK(fam->letter(nf[0]) == word_of(*b3, "aba"));
    CHECK(fam->letter(nf[1]) == word_of(*b3, "b"));
    CHECK(normal_decompose(*fam, b3->identity(0)).empty());
    CHECK(s_length(*fam, word_of(*b3, "abab")) == 2);

    auto kg = fixtures::square2();
    auto kfam = standard_family(*kg);
    Morphism eef = kg->canonicalize({0, 0, 1}, 0, 0);
    auto knf = normal_decompose(*kfam, eef);
    REQUIRE(knf.size() == 2);
    CHECK(kg->format(kfam->letter(knf[0])) == "ef");
    CHECK(kg->format(kfam->letter(knf[1])) == "e");
}

TEST_CASE("normal decomposition is a bijection on normal words") {
    auto check = [](const GarsideFamily& fam) {
        for (int v = 0; v < fam.cat().object_count(); ++v)
            for (const auto& path : normal_paths_from(fam, v, 1, 5)) {
                Morphism m = product(fam, path, v);
                CHECK(normal_decompose(fam, m) == path);
            }
    };
    auto b3 = fixtures::b3();
    check(*standard_family(*b3));
    auto kg = fixtures::square2();
    check(*standard_family(*kg));
}

TEST_CASE("incremental head equals head of the product") {
    auto check = [](const GarsideFamily& fam, int depth) {
        const auto& cat = fam.cat();
        for (int v = 0; v < cat.object_count(); ++v) {
            auto paths = normal_paths_from(fam, v, 1, depth);
            std::vector<std::vector<int>> prefixes{{}};
            // Arbitrary letter paths, not only normal ones.
            for (int s : fam.letters_at(v)) prefixes.push_back({s});
            for (int len = 2; len <= depth; ++len) {
                std::vector<std::vector<int>> next;
                for (const auto& p : prefixes) {
                    if (static_cast<int>(p.size()) != len - 1) continue;
                    int at = p.empty() ? v : fam.letter(p.back()).dom;
                    for (int s : fam.letters_at(at)) {
                        auto q = p;
                        q.push_back(s);
                        next.push_back(q);
                    }
                }
                prefixes.insert(prefixes.end(), next.begin(), next.end());
            }
            for (const auto& p : prefixes) {
                if (p.empty()) continue;
                int at = fam.letter(p.back()).dom;
                for (int r : fam.letters_at(at)) {
                    Morphism full = cat.compose(product(fam, p, v), fam.letter(r));
                    CHECK(head_incremental(fam, p, r) == fam.head(full));
                }
            }
        }
    };
    auto b3 = fixtures::b3();
    check(*standard_family(*b3), 3);
    auto kg = fixtures::square2();
    check(*standard_family(*kg), 3);
}

TEST_CASE("normal form of a product starts with the incremental head") {
    auto b3 = fixtures::b3();
    auto fam = standard_family(*b3);
    for (const auto& a : b3->ball(0, 4)) {
        if (a.is_identity()) continue;
        for (const auto& b : b3->ball(0, 4)) {
            if (b.is_identity()) continue;
            auto bnf = normal_decompose(*fam, b);
            auto prefix = normal_decompose(*fam, a);
            int expected = head_incremental(*fam, prefix, bnf.front());
            auto full = normal_decompose(*fam, b3->compose(a, b));
            CHECK(full.front() == expected);
        }
    }
}

TEST_CASE("s-length is subadditive") {
    auto b3 = fixtures::b3();
    auto fam = standard_family(*b3);
    for (const auto& a : b3->ball(0, 4))
        for (const auto& b : b3->ball(0, 4))
            CHECK(s_length(*fam, b3->compose(a, b)) <=
                  s_length(*fam, a) + s_length(*fam, b));
}

TEST_CASE("s-balls") {
    auto b3 = fixtures::b3();
    auto fam = standard_family(*b3);
    CHECK(s_ball(*fam, 0, 1).size() == 6);  // id + five divisors of the lcm

    auto kg = fixtures::square2();
    auto kfam = standard_family(*kg);
    auto ball = s_ball(*kfam, 0, 1);
    CHECK(ball.size() == 4);  // id, e, f, ef
}
