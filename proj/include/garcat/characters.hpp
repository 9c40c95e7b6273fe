#ifndef GARCAT_CHARACTERS_HPP
#define GARCAT_CHARACTERS_HPP

#include <vector>

#include "garcat/garside.hpp"

namespace garcat {

// A point of the character space: a vertex character, the principal
// character of a finite element, or an eventually periodic infinite normal
// word stored as preperiod + period letter indices. Infinite characters are
// kept in a canonical shape (minimal period, minimal preperiod), so letter
// sequence equality is structural equality.
struct Character {
    enum class Kind { Vertex, Finite, Infinite };
    Kind kind = Kind::Vertex;
    int vertex = -1;
    Morphism finite;
    std::vector<int> preperiod, period;
    // Set when a germ image could not be re-normalized into an eventually
    // periodic word within the horizon; the stored data is then only a
    // finite-prefix approximation.
    bool non_periodic_approx = false;

    friend bool operator==(const Character&, const Character&) = default;
    friend auto operator<=>(const Character&, const Character&) = default;
};

Character vertex_character(int v);
Character finite_character(const Morphism& x);
// Validates composability, normality of preperiod*period*period and the
// period loop, then canonicalizes.
Character infinite_character(const GarsideFamily& fam, std::vector<int> preperiod,
                             std::vector<int> period);

// The vertex the character sits over (its cone's target).
int character_vertex(const GarsideFamily& fam, const Character& chi);
// i-th letter (0-based) of an infinite character's word.
int character_letter(const Character& chi, std::size_t i);
// Product of the first n letters (Infinite only).
Morphism character_prefix(const GarsideFamily& fam, const Character& chi, int n);
std::string character_str(const GarsideFamily& fam, const Character& chi);

// Finite union of cones, or a single cone minus finitely many subcones.
struct IdealExpr {
    enum class Form { Union, Relative } form = Form::Union;
    std::vector<Morphism> positive;
    std::vector<Morphism> negative;

    static IdealExpr cone(const Morphism& root) { return {Form::Union, {root}, {}}; }
    static IdealExpr cones(std::vector<Morphism> roots) {
        return {Form::Union, std::move(roots), {}};
    }
    static IdealExpr relative(const Morphism& root, std::vector<Morphism> minus) {
        return {Form::Relative, {root}, std::move(minus)};
    }
};

int eval(const GarsideFamily& fam, const Character& chi, const IdealExpr& e);
// Whether r divides some finite prefix of the character's word.
bool divides_character(const GarsideFamily& fam, const Morphism& r, const Character& chi);

// Arrow [c d^{-1}, base] of the transformation groupoid: defined when the
// base lies in the cone of d, maps d*y to c*y.
struct Germ {
    Morphism c, d;
    Character base;
};

Germ make_germ(const GarsideFamily& fam, const Morphism& c, const Morphism& d,
               const Character& base);
Germ unit_germ(const GarsideFamily& fam, const Character& chi);

Character germ_apply(const GarsideFamily& fam, const Germ& g, int horizon = 4096);
bool germ_eq(const GarsideFamily& fam, const Germ& g1, const Germ& g2);
Germ germ_compose(const GarsideFamily& fam, const Germ& g1, const Germ& g2);
Germ germ_inverse(const GarsideFamily& fam, const Germ& g);

// Bounded decision of maximality: every cone the character misses must be
// killed by a disjoint prefix cone. Vertex and finite characters are decided
// exactly through the extension structure.
Verdict in_omega_max(const GarsideFamily& fam, const Character& chi, int fuel);

// Limit of a letter sequence, the finite window read cyclically: the
// maximal letters below every window element.
struct LetterLimit {
    enum class Kind { Letter, Vertex, Ambiguous } kind = Kind::Vertex;
    int letter = -1;
    int vertex = -1;
    std::vector<int> maximal;  // all maximal stable divisors
    int window = 0;
};

LetterLimit limit_of_letters(const GarsideFamily& fam, const std::vector<int>& window);

}  // namespace garcat

#endif
