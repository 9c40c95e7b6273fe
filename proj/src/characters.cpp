#include "garcat/characters.hpp"

#include <algorithm>
#include <map>

namespace garcat {

namespace {

// Smallest d dividing period.size() such that the period is a d-repeat.
std::vector<int> minimal_rotation(std::vector<int> period) {
    int n = static_cast<int>(period.size());
    for (int d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        bool rep = true;
        for (int i = d; i < n && rep; ++i) rep = period[i] == period[i - d];
        if (rep) return {period.begin(), period.begin() + d};
    }
    return period;
}

}  // namespace

Character vertex_character(int v) {
    Character chi;
    chi.kind = Character::Kind::Vertex;
    chi.vertex = v;
    return chi;
}

Character finite_character(const Morphism& x) {
    if (x.is_identity()) return vertex_character(x.tgt);
    Character chi;
    chi.kind = Character::Kind::Finite;
    chi.finite = x;
    return chi;
}

Character infinite_character(const GarsideFamily& fam, std::vector<int> preperiod,
                             std::vector<int> period) {
    if (period.empty()) throw DomainError("infinite character needs a nonempty period");
    const Morphism& first = fam.letter(period.front());
    const Morphism& last = fam.letter(period.back());
    if (last.dom != first.tgt)
        throw ComposabilityError("period does not close up at its vertex");
    std::vector<int> probe = preperiod;
    probe.insert(probe.end(), period.begin(), period.end());
    probe.insert(probe.end(), period.begin(), period.end());
    auto res = is_normal(fam, probe);
    if (!res.normal)
        throw DomainError("preperiod*period*period is not normal (junction " +
                          std::to_string(res.violation_index) + ")");

    period = minimal_rotation(std::move(period));
    while (!preperiod.empty() && preperiod.back() == period.back()) {
        std::rotate(period.rbegin(), period.rbegin() + 1, period.rend());
        preperiod.pop_back();
    }
    Character chi;
    chi.kind = Character::Kind::Infinite;
    chi.preperiod = std::move(preperiod);
    chi.period = std::move(period);
    return chi;
}

int character_vertex(const GarsideFamily& fam, const Character& chi) {
    switch (chi.kind) {
        case Character::Kind::Vertex: return chi.vertex;
        case Character::Kind::Finite: return chi.finite.tgt;
        case Character::Kind::Infinite:
            return fam.letter(chi.preperiod.empty() ? chi.period.front() : chi.preperiod.front())
                .tgt;
    }
    return -1;
}

int character_letter(const Character& chi, std::size_t i) {
    if (i < chi.preperiod.size()) return chi.preperiod[i];
    return chi.period[(i - chi.preperiod.size()) % chi.period.size()];
}

Morphism character_prefix(const GarsideFamily& fam, const Character& chi, int n) {
    if (chi.kind != Character::Kind::Infinite)
        throw DomainError("character_prefix: only infinite characters have prefixes");
    Morphism acc = fam.cat().identity(character_vertex(fam, chi));
    for (int i = 0; i < n; ++i)
        acc = fam.cat().compose(acc, fam.letter(character_letter(chi, i)));
    return acc;
}

std::string character_str(const GarsideFamily& fam, const Character& chi) {
    const auto& cat = fam.cat();
    switch (chi.kind) {
        case Character::Kind::Vertex: return "chi(" + cat.object_label(chi.vertex) + ")";
        case Character::Kind::Finite: return "chi[" + cat.format(chi.finite) + "]";
        case Character::Kind::Infinite: {
            std::string s = "chi[";
            for (int l : chi.preperiod) s += cat.format(fam.letter(l)) + ".";
            s += "(";
            for (std::size_t i = 0; i < chi.period.size(); ++i) {
                if (i) s += ".";
                s += cat.format(fam.letter(chi.period[i]));
            }
            return s + ")^w]";
        }
    }
    return "?";
}

bool divides_character(const GarsideFamily& fam, const Morphism& r, const Character& chi) {
    const auto& cat = fam.cat();
    switch (chi.kind) {
        case Character::Kind::Vertex: return r.is_identity() && r.tgt == chi.vertex;
        case Character::Kind::Finite: return cat.left_divides(r, chi.finite);
        case Character::Kind::Infinite: {
            if (r.tgt != character_vertex(fam, chi)) return false;
            if (r.is_identity()) return true;
            // r divides the word iff it divides the prefix of S-length
            // ||r||; one extra period is harmless slack.
            int bound = s_length(fam, r) + static_cast<int>(chi.period.size());
            return cat.left_divides(r, character_prefix(fam, chi, bound));
        }
    }
    return false;
}

int eval(const GarsideFamily& fam, const Character& chi, const IdealExpr& e) {
    bool in_positive = false;
    for (const auto& p : e.positive)
        if (divides_character(fam, p, chi)) {
            in_positive = true;
            break;
        }
    if (!in_positive) return 0;
    for (const auto& q : e.negative)
        if (divides_character(fam, q, chi)) return 0;
    return 1;
}

Germ make_germ(const GarsideFamily& fam, const Morphism& c, const Morphism& d,
               const Character& base) {
    if (c.dom != d.dom) throw ComposabilityError("germ: c and d must share their domain");
    if (!divides_character(fam, d, base))
        throw DomainError("germ undefined at base: base misses the cone of d");
    return Germ{c, d, base};
}

Germ unit_germ(const GarsideFamily& fam, const Character& chi) {
    Morphism id = fam.cat().identity(character_vertex(fam, chi));
    return Germ{id, id, chi};
}

Character germ_apply(const GarsideFamily& fam, const Germ& g, int horizon) {
    const auto& cat = fam.cat();
    if (!divides_character(fam, g.d, g.base))
        throw DomainError("germ undefined at base");
    switch (g.base.kind) {
        case Character::Kind::Vertex:
            return finite_character(g.c);
        case Character::Kind::Finite: {
            auto q = cat.left_quotient(g.d, g.base.finite);
            return finite_character(cat.compose(g.c, *q));
        }
        case Character::Kind::Infinite: break;
    }

    // Find the least n with d | w_n, cancel, then push the carry through
    // the periodic tail one letter at a time. The normal form of
    // carry * r1 r2 ... starts with head(carry * r1), so each step emits
    // one letter and keeps a bounded carry; eventual periodicity is
    // recovered by state repetition on (carry, tail position).
    int need = std::max(1, s_length(fam, g.d)) +
               static_cast<int>(g.base.preperiod.size() + g.base.period.size());
    int n = 0;
    while (n <= need && !cat.left_divides(g.d, character_prefix(fam, g.base, n))) ++n;
    if (n > need) throw DomainError("germ undefined at base");
    Morphism carry = cat.compose(
        g.c, *cat.left_quotient(g.d, character_prefix(fam, g.base, n)));

    auto tail_class = [&](std::size_t i) {
        // Collapses tail positions that see the same remaining word.
        if (i < g.base.preperiod.size()) return i;
        return g.base.preperiod.size() +
               (i - g.base.preperiod.size()) % g.base.period.size();
    };

    std::vector<int> emitted;
    std::map<std::pair<Morphism, std::size_t>, std::size_t> seen;
    std::size_t i = n;
    while (static_cast<int>(emitted.size()) < horizon) {
        if (carry.is_identity()) {
            // Remaining word is exactly the tail from position i.
            std::vector<int> pre = emitted;
            std::size_t j = i;
            for (; j < g.base.preperiod.size(); ++j) pre.push_back(g.base.preperiod[j]);
            std::vector<int> per = g.base.period;
            std::size_t off = (j - g.base.preperiod.size()) % g.base.period.size();
            std::rotate(per.begin(), per.begin() + off, per.end());
            return infinite_character(fam, std::move(pre), std::move(per));
        }
        auto key = std::make_pair(carry, tail_class(i));
        auto [it, fresh] = seen.emplace(key, emitted.size());
        if (!fresh) {
            std::vector<int> pre(emitted.begin(), emitted.begin() + it->second);
            std::vector<int> per(emitted.begin() + it->second, emitted.end());
            return infinite_character(fam, std::move(pre), std::move(per));
        }
        Morphism step = cat.compose(carry, fam.letter(character_letter(g.base, i)));
        int h = fam.head(step);
        emitted.push_back(h);
        carry = *cat.left_quotient(fam.letter(h), step);
        ++i;
    }

    Character approx;
    approx.kind = Character::Kind::Infinite;
    approx.preperiod = std::move(emitted);
    approx.period = {approx.preperiod.back()};
    approx.non_periodic_approx = true;
    return approx;
}

bool germ_eq(const GarsideFamily& fam, const Germ& g1, const Germ& g2) {
    const auto& cat = fam.cat();
    if (!(g1.base == g2.base)) return false;
    switch (g1.base.kind) {
        case Character::Kind::Vertex:
            return g1.c == g2.c;
        case Character::Kind::Finite: {
            const Morphism& x = g1.base.finite;
            return cat.compose(g1.c, *cat.left_quotient(g1.d, x)) ==
                   cat.compose(g2.c, *cat.left_quotient(g2.d, x));
        }
        case Character::Kind::Infinite: {
            int bound = std::max({s_length(fam, g1.c), s_length(fam, g1.d),
                                  s_length(fam, g2.c), s_length(fam, g2.d), 1}) +
                        static_cast<int>(g1.base.period.size() + g1.base.preperiod.size());
            Morphism w = character_prefix(fam, g1.base, bound);
            return cat.compose(g1.c, *cat.left_quotient(g1.d, w)) ==
                   cat.compose(g2.c, *cat.left_quotient(g2.d, w));
        }
    }
    return false;
}

Germ germ_compose(const GarsideFamily& fam, const Germ& g1, const Germ& g2) {
    const auto& cat = fam.cat();
    Character mid = germ_apply(fam, g2);
    if (!(mid == g1.base))
        throw ComposabilityError("germ_compose: range of right factor is not base of left");
    // (c1 d1^{-1})(c2 d2^{-1}) splits over mcm(d1, c2); exactly the branch
    // through the base character survives.
    for (const auto& m : cat.mcm_set(g1.d, g2.c)) {
        Morphism p = *cat.left_quotient(g2.c, m);
        Morphism q = *cat.left_quotient(g1.d, m);
        Morphism d = cat.compose(g2.d, p);
        if (divides_character(fam, d, g2.base))
            return Germ{cat.compose(g1.c, q), d, g2.base};
    }
    throw StructuralError("germ_compose: no mcm branch contains the base (finite alignment "
                          "violated)");
}

Germ germ_inverse(const GarsideFamily& fam, const Germ& g) {
    return Germ{g.d, g.c, germ_apply(fam, g)};
}

Verdict in_omega_max(const GarsideFamily& fam, const Character& chi, int fuel) {
    const auto& cat = fam.cat();
    int v = character_vertex(fam, chi);
    switch (chi.kind) {
        case Character::Kind::Vertex: {
            for (int a = 0; a < cat.atom_count(); ++a)
                if (cat.atom_tgt(a) == v && !cat.is_unit(cat.atom(a)))
                    return Verdict::fails("cone of " + cat.atom_label(a) +
                                              " is missed but meets every prefix cone",
                                          {cat.atom(a)});
            return Verdict::holds("vertex cone consists of units");
        }
        case Character::Kind::Finite: {
            const Morphism& x = chi.finite;
            for (int a = 0; a < cat.atom_count(); ++a) {
                if (cat.atom_tgt(a) != x.dom || cat.is_unit(cat.atom(a))) continue;
                Morphism ext = cat.compose(x, cat.atom(a));
                return Verdict::fails("proper extension " + cat.format(ext) +
                                          " is missed but meets every prefix cone",
                                      {ext});
            }
            return Verdict::holds("element has no proper extensions");
        }
        case Character::Kind::Infinite: break;
    }

    int prefix_bound = fuel + static_cast<int>(chi.preperiod.size() + chi.period.size());
    for (const auto& y : cat.ball(v, fuel)) {
        if (y.is_identity()) continue;
        if (divides_character(fam, y, chi)) continue;
        bool killed = false;
        for (int n = 1; n <= prefix_bound && !killed; ++n)
            killed = cat.mcm_set(y, character_prefix(fam, chi, n)).empty();
        if (!killed) {
            bool exact = cat.left_reversible_structural();
            return Verdict::fails("cone of " + cat.format(y) +
                                      " is missed but no prefix cone is disjoint from it",
                                  {y}, exact, fuel);
        }
    }
    return Verdict::holds("every missed cone in the ball is killed by a prefix cone", false,
                          fuel);
}

LetterLimit limit_of_letters(const GarsideFamily& fam, const std::vector<int>& window) {
    if (window.empty()) throw DomainError("limit_of_letters: empty sequence");
    const auto& cat = fam.cat();
    int v = fam.letter(window.front()).tgt;
    for (int s : window)
        if (fam.letter(s).tgt != v)
            throw ComposabilityError("limit_of_letters: letters do not share a target");

    std::vector<int> stable;
    for (int r : fam.letters_at(v)) {
        bool divides_all = true;
        for (int s : window)
            if (!cat.left_divides(fam.letter(r), fam.letter(s))) {
                divides_all = false;
                break;
            }
        if (divides_all) stable.push_back(r);
    }
    LetterLimit lim;
    lim.window = static_cast<int>(window.size());
    lim.vertex = v;
    for (int r : stable) {
        bool maximal = true;
        for (int r2 : stable)
            if (r2 != r && cat.left_divides(fam.letter(r), fam.letter(r2)) &&
                !cat.left_divides(fam.letter(r2), fam.letter(r))) {
                maximal = false;
                break;
            }
        if (maximal) lim.maximal.push_back(r);
    }
    if (lim.maximal.empty()) {
        lim.kind = LetterLimit::Kind::Vertex;
    } else if (lim.maximal.size() == 1) {
        lim.kind = LetterLimit::Kind::Letter;
        lim.letter = lim.maximal.front();
    } else {
        lim.kind = LetterLimit::Kind::Ambiguous;
    }
    return lim;
}

}  // namespace garcat
