#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "garcat/characters.hpp"
#include "garcat/report.hpp"

using namespace garcat;

namespace {

Morphism word_of(const Category& cat, const std::string& letters) {
    Word w;
    for (char ch : letters) w.push_back(cat.atom_index(std::string(1, ch)));
    return cat.canonicalize(w, 0, 0);
}

int letter_of(const GarsideFamily& fam, const std::string& letters) {
    return fam.find(word_of(fam.cat(), letters));
}

// Random eventually periodic character via a walk on the normal-successor
// graph.
Character random_character(const GarsideFamily& fam, std::mt19937& rng, int v) {
    std::vector<int> walk;
    int at = v;
    std::vector<int> seen_at(fam.size(), -1);
    for (int steps = 0; steps < 64; ++steps) {
        std::vector<int> options;
        if (walk.empty()) {
            options = fam.letters_at(at);
        } else {
            options = normal_successors(fam, walk.back());
        }
        if (options.empty()) break;
        int pick = options[rng() % options.size()];
        if (seen_at[pick] >= 0 && !walk.empty()) {
            std::vector<int> pre(walk.begin(), walk.begin() + seen_at[pick]);
            std::vector<int> per(walk.begin() + seen_at[pick], walk.end());
            if (per.empty()) break;
            return infinite_character(fam, pre, per);
        }
        seen_at[pick] = static_cast<int>(walk.size());
        walk.push_back(pick);
        at = fam.letter(pick).dom;
    }
    if (walk.empty()) return vertex_character(v);
    return finite_character(product(fam, walk, v));
}

// Random germ defined at chi: d divides a prefix, c arbitrary with the same
// domain.
Germ random_germ(const GarsideFamily& fam, std::mt19937& rng, const Character& chi) {
    const auto& cat = fam.cat();
    std::vector<Morphism> ds;
    if (chi.kind == Character::Kind::Infinite) {
        Morphism prefix = character_prefix(fam, chi, 2);
        for (const auto& d : cat.ball(character_vertex(fam, chi), 4))
            if (cat.left_divides(d, prefix)) ds.push_back(d);
    } else if (chi.kind == Character::Kind::Finite) {
        for (const auto& d : cat.ball(chi.finite.tgt, 4))
            if (cat.left_divides(d, chi.finite)) ds.push_back(d);
    } else {
        ds.push_back(cat.identity(chi.vertex));
    }
    Morphism d = ds[rng() % ds.size()];
    std::vector<Morphism> cs;
    for (int v = 0; v < cat.object_count(); ++v)
        for (const auto& c : cat.ball(v, 2))
            if (c.dom == d.dom) cs.push_back(c);
    Morphism c = cs[rng() % cs.size()];
    return make_germ(fam, c, d, chi);
}

}  // namespace

TEST_CASE("character canonical form") {
    auto g = fixtures::free2();
    auto fam = standard_family(*g);
    int a = letter_of(*fam, "a"), b = letter_of(*fam, "b");
    // Preperiod unwinding: a.(ba)^w == (ab)^w.
    Character lhs = infinite_character(*fam, {a}, {b, a});
    Character rhs = infinite_character(*fam, {}, {a, b});
    CHECK(lhs == rhs);
    // Period minimization.
    CHECK(infinite_character(*fam, {}, {a, b, a, b}) == rhs);
    CHECK(character_letter(rhs, 0) == a);
    CHECK(character_letter(rhs, 3) == b);
}

TEST_CASE("infinite characters must be normal") {
    auto b3 = fixtures::b3();
    auto fam = standard_family(*b3);
    int a = letter_of(*fam, "a"), ab = letter_of(*fam, "ab");
    CHECK_THROWS_AS(infinite_character(*fam, {}, {a, ab}), DomainError);
}

TEST_CASE("eval on cones") {
    auto b3 = fixtures::b3();
    auto fam = standard_family(*b3);
    Character chi = finite_character(word_of(*b3, "abab"));
    CHECK(eval(*fam, chi, IdealExpr::cone(word_of(*b3, "ab"))) == 1);
    CHECK(eval(*fam, chi, IdealExpr::cone(word_of(*b3, "ba"))) == 1);  // abab = ba.bb
    CHECK(eval(*fam, chi, IdealExpr::cone(word_of(*b3, "bb"))) == 0);

    Character vtx = vertex_character(0);
    CHECK(eval(*fam, vtx, IdealExpr::cone(b3->atom(0))) == 0);
    CHECK(eval(*fam, vtx, IdealExpr::cone(b3->identity(0))) == 1);

    int aba = letter_of(*fam, "aba");
    Character inf = infinite_character(*fam, {}, {aba});
    CHECK(eval(*fam, inf, IdealExpr::cone(word_of(*b3, "ba"))) == 1);

    // Relative ideal: the a-cone minus the ab-cone still contains chi_aa.
    IdealExpr rel = IdealExpr::relative(word_of(*b3, "a"), {word_of(*b3, "ab")});
    CHECK(eval(*fam, finite_character(word_of(*b3, "aa")), rel) == 1);
    CHECK(eval(*fam, finite_character(word_of(*b3, "aba")), rel) == 0);
}

TEST_CASE("germ application on infinite words") {
    auto g = fixtures::free2();
    auto fam = standard_family(*g);
    int a = letter_of(*fam, "a"), b = letter_of(*fam, "b");
    // a b^{-1} applied to b a^w gives a a^w.
    Character base = infinite_character(*fam, {b}, {a});
    Germ germ = make_germ(*fam, g->atom(0), g->atom(1), base);
    Character image = germ_apply(*fam, germ);
    CHECK(image == infinite_character(*fam, {}, {a}));

    // Unit germs act as the identity.
    Germ unit = unit_germ(*fam, base);
    CHECK(germ_apply(*fam, unit) == base);
}

TEST_CASE("germ application renormalizes in the braid monoid") {
    auto b3 = fixtures::b3();
    auto fam = standard_family(*b3);
    int aba = letter_of(*fam, "aba");
    Character boundary = infinite_character(*fam, {}, {aba});
    // (ab)(aba)^{-1} maps the periodic word to itself after renormalizing.
    Germ germ = make_germ(*fam, word_of(*b3, "ab"), word_of(*b3, "aba"), boundary);
    Character image = germ_apply(*fam, germ);
    CHECK_FALSE(image.non_periodic_approx);
    CHECK(image == boundary);
}

TEST_CASE("germ application on finite and vertex characters") {
    auto g = fixtures::free2();
    auto fam = standard_family(*g);
    Character fin = finite_character(word_of(*g, "ab"));
    Germ germ = make_germ(*fam, g->atom(1), g->atom(0), fin);  // b a^{-1}
    CHECK(germ_apply(*fam, germ) == finite_character(word_of(*g, "bb")));

    Character vtx = vertex_character(0);
    Germ push = make_germ(*fam, word_of(*g, "ab"), g->identity(0), vtx);
    CHECK(germ_apply(*fam, push) == finite_character(word_of(*g, "ab")));

    CHECK_THROWS_AS(make_germ(*fam, g->atom(0), g->atom(1), vtx), DomainError);
}

TEST_CASE("germ equality") {
    auto g = fixtures::free2();
    auto fam = standard_family(*g);
    int a = letter_of(*fam, "a"), b = letter_of(*fam, "b");
    Character chi = infinite_character(*fam, {a}, {b});
    // [a a^{-1}, chi] equals the unit germ at chi.
    Germ idem = make_germ(*fam, g->atom(0), g->atom(0), chi);
    CHECK(germ_eq(*fam, idem, unit_germ(*fam, chi)));

    // Bases differ: never equal.
    Character other = infinite_character(*fam, {}, {b});
    CHECK_FALSE(germ_eq(*fam, make_germ(*fam, g->atom(0), g->identity(0), chi),
                        make_germ(*fam, g->atom(0), g->identity(0), other)));

    auto b3 = fixtures::b3();
    auto bfam = standard_family(*b3);
    Character bd = infinite_character(*bfam, {}, {letter_of(*bfam, "aba")});
    Germ left = make_germ(*bfam, b3->atom(0), b3->identity(0), bd);
    Germ right = make_germ(*bfam, b3->atom(1), b3->identity(0), bd);
    CHECK_FALSE(germ_eq(*bfam, left, right));
}

TEST_CASE("germ composition and inversion") {
    auto g = fixtures::free2();
    auto fam = standard_family(*g);
    int b = letter_of(*fam, "b");
    Character chi = infinite_character(*fam, {}, {b});
    // [a 1^{-1}] then [1 a^{-1}] composes to the unit.
    Germ up = make_germ(*fam, g->atom(0), g->identity(0), chi);
    Character mid = germ_apply(*fam, up);
    Germ down = make_germ(*fam, g->identity(0), g->atom(0), mid);
    Germ round = germ_compose(*fam, down, up);
    CHECK(germ_eq(*fam, round, unit_germ(*fam, chi)));

    auto kg = fixtures::square2();
    auto kfam = standard_family(*kg);
    int ef = 2;  // letters sorted: e, f, ef by word
    ef = kfam->find(kg->compose(kg->atom(0), kg->atom(1)));
    Character kchi = infinite_character(*kfam, {}, {ef});
    Germ ge = make_germ(*kfam, kg->atom(0), kg->identity(0), kchi);
    Character kmid = germ_apply(*kfam, ge);
    Germ gf = make_germ(*kfam, kg->atom(1), kg->identity(0), kmid);
    Germ comp = germ_compose(*kfam, gf, ge);
    // The composite is the ef-translation germ.
    Germ expected = make_germ(*kfam, kfam->letter(ef), kg->identity(0), kchi);
    CHECK(germ_eq(*kfam, comp, expected));
}

TEST_CASE("groupoid laws on seeded random germs") {
    std::mt19937 rng(0);
    auto run = [&](const Category& cat, const GarsideFamily& fam, int rounds) {
        for (int i = 0; i < rounds; ++i) {
            Character chi = random_character(fam, rng, 0);
            Germ g3 = random_germ(fam, rng, chi);
            Germ g2 = random_germ(fam, rng, germ_apply(fam, g3));
            Germ g1 = random_germ(fam, rng, germ_apply(fam, g2));
            // Associativity.
            Germ left = germ_compose(fam, germ_compose(fam, g1, g2), g3);
            Germ right = germ_compose(fam, g1, germ_compose(fam, g2, g3));
            CHECK(germ_eq(fam, left, right));
            // Inverses give unit germs on both sides.
            Germ inv = germ_inverse(fam, g3);
            CHECK(germ_eq(fam, germ_compose(fam, inv, g3), unit_germ(fam, chi)));
            CHECK(germ_eq(fam, germ_compose(fam, g3, inv),
                          unit_germ(fam, germ_apply(fam, g3))));
            // Unit laws.
            CHECK(germ_eq(fam, germ_compose(fam, g3, unit_germ(fam, chi)), g3));
        }
        (void)cat;
    };
    auto g = fixtures::free2();
    run(*g, *standard_family(*g), 40);
    auto b3 = fixtures::b3();
    run(*b3, *standard_family(*b3), 40);
    auto kg = fixtures::square2();
    run(*kg, *standard_family(*kg), 40);
}

TEST_CASE("germ application respects eval") {
    auto g = fixtures::free2();
    auto fam = standard_family(*g);
    std::mt19937 rng(1);
    for (int i = 0; i < 30; ++i) {
        Character chi = random_character(*fam, rng, 0);
        Germ germ = random_germ(*fam, rng, chi);
        Character image = germ_apply(*fam, germ);
        // For every cone root r of small length, eval agrees with the
        // preimage cone test through the germ.
        for (const auto& r : g->ball(0, 3)) {
            if (!g->left_divides(germ.c, r)) continue;
            Morphism tail = *g->left_quotient(germ.c, r);
            Morphism pre = g->compose(germ.d, tail);
            CHECK(eval(*fam, image, IdealExpr::cone(r)) ==
                  eval(*fam, chi, IdealExpr::cone(pre)));
        }
    }
}

TEST_CASE("maximality of characters") {
    auto b3 = fixtures::b3();
    auto fam = standard_family(*b3);
    Character boundary = infinite_character(*fam, {}, {letter_of(*fam, "aba")});
    CHECK(in_omega_max(*fam, boundary, 3).ok());
    Character apow = infinite_character(*fam, {}, {letter_of(*fam, "a")});
    CHECK(in_omega_max(*fam, apow, 3).status == Status::Fails);

    auto g = fixtures::free2();
    auto gfam = standard_family(*g);
    CHECK(in_omega_max(*gfam, vertex_character(0), 3).status == Status::Fails);
    Character ga = infinite_character(*gfam, {}, {letter_of(*gfam, "a")});
    CHECK(in_omega_max(*gfam, ga, 3).ok());
}

TEST_CASE("maximality is preserved by germs") {
    std::mt19937 rng(2);
    auto run = [&](const Category& cat, const GarsideFamily& fam, Character seed) {
        for (int i = 0; i < 25; ++i) {
            Germ germ = random_germ(fam, rng, seed);
            Character image = germ_apply(fam, germ);
            if (in_omega_max(fam, seed, 3).ok())
                CHECK(in_omega_max(fam, image, 3).ok());
        }
        (void)cat;
    };
    auto g = fixtures::free2();
    auto gfam = standard_family(*g);
    run(*g, *gfam, infinite_character(*gfam, {}, {letter_of(*gfam, "a")}));
    auto b3 = fixtures::b3();
    auto bfam = standard_family(*b3);
    run(*b3, *bfam, infinite_character(*bfam, {}, {letter_of(*bfam, "aba")}));
    auto kg = fixtures::square2();
    auto kfam = standard_family(*kg);
    run(*kg, *kfam,
        infinite_character(*kfam, {}, {kfam->find(kg->compose(kg->atom(0), kg->atom(1)))}));
}

TEST_CASE("density surrogate: finite characters reach every cylinder") {
    auto g = fixtures::free2();
    auto fam = standard_family(*g);
    // Every finite character arises as a germ image of a vertex character.
    for (const auto& x : g->ball(0, 3)) {
        if (x.is_identity()) continue;
        Germ push = make_germ(*fam, x, g->identity(0), vertex_character(0));
        CHECK(germ_apply(*fam, push) == finite_character(x));
    }
    // A cylinder holding an infinite character also holds a finite one:
    // a long enough prefix keeps the positive root and misses the negative
    // roots.
    std::mt19937 rng(7);
    for (int i = 0; i < 20; ++i) {
        Character chi = random_character(*fam, rng, 0);
        if (chi.kind != Character::Kind::Infinite) continue;
        Morphism root = character_prefix(*fam, chi, 1);
        std::vector<Morphism> negatives;
        for (const auto& y : g->ball(0, 3))
            if (!divides_character(*fam, y, chi)) {
                negatives.push_back(y);
                if (negatives.size() == 2) break;
            }
        IdealExpr cyl = IdealExpr::relative(root, negatives);
        REQUIRE(eval(*fam, chi, cyl) == 1);
        Character finite = finite_character(character_prefix(*fam, chi, 4));
        CHECK(eval(*fam, finite, cyl) == 1);
    }
}

TEST_CASE("letter limits") {
    auto kg = fixtures::square2();
    auto fam = standard_family(*kg);
    int e = fam->find(kg->atom(0));
    int ef = fam->find(kg->compose(kg->atom(0), kg->atom(1)));
    auto constant = limit_of_letters(*fam, {ef, ef, ef});
    CHECK(constant.kind == LetterLimit::Kind::Letter);
    CHECK(constant.letter == ef);
    auto oscillating = limit_of_letters(*fam, {e, ef});
    CHECK(oscillating.kind == LetterLimit::Kind::Letter);
    CHECK(oscillating.letter == e);

    auto g = fixtures::free2();
    auto gfam = standard_family(*g);
    auto clash = limit_of_letters(*gfam, {0, 1});
    CHECK(clash.kind == LetterLimit::Kind::Vertex);
    CHECK_THROWS_AS(limit_of_letters(*gfam, {}), DomainError);
}
