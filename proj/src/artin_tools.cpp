#include "garcat/artin_tools.hpp"

#include <algorithm>

namespace garcat {

SphericalResult spherical_probe(const ArtinCategory& at, long fuel) {
    Word delta{0};
    for (int a = 1; a < at.atom_count(); ++a) {
        auto res = at.reverse(delta, {a}, fuel);
        if (res.kind == ReverseResult::Empty)
            return {Verdict::fails("atoms " + at.atom_label(a) +
                                       " and the partial lcm have disjoint cones",
                                   {at.canonicalize(delta, 0, 0), at.atom(a)}),
                    {}};
        if (res.kind == ReverseResult::OutOfFuel)
            return {Verdict::unknown("reversing exhausted " + std::to_string(fuel) +
                                         " steps while joining atom " + at.atom_label(a),
                                     static_cast<int>(fuel)),
                    {}};
        delta.insert(delta.end(), res.v_comp.begin(), res.v_comp.end());
    }
    Morphism d = at.canonicalize(delta, 0, 0);
    return {Verdict::holds("lcm of all atoms exists"), d};
}

GarsideFamily artin_garside_family(const ArtinCategory& at) {
    auto sph = spherical_probe(at, at.default_fuel());
    if (sph.verdict.ok()) {
        // All nontrivial left divisors of delta, grown atom by atom.
        std::set<Morphism> divisors{at.identity(0)};
        bool grew = true;
        while (grew) {
            grew = false;
            for (const auto& d : std::vector<Morphism>(divisors.begin(), divisors.end()))
                for (int a = 0; a < at.atom_count(); ++a) {
                    Morphism ext = at.compose(d, at.atom(a));
                    if (at.left_divides(ext, sph.delta) && divisors.insert(ext).second)
                        grew = true;
                }
        }
        std::vector<Morphism> letters;
        for (const auto& d : divisors)
            if (!d.is_identity()) letters.push_back(d);
        return GarsideFamily(at, std::move(letters), true);
    }
    if (at.data().right_angled()) {
        // Nonempty cliques of the commutation graph, each realized as the
        // product of its atoms in index order.
        std::vector<Morphism> letters;
        int n = at.atom_count();
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            Word w;
            bool clique = true;
            for (int a = 0; a < n && clique; ++a) {
                if (!(mask & (1u << a))) continue;
                for (int b = a + 1; b < n && clique; ++b)
                    if ((mask & (1u << b)) && at.data().entry(a, b) != 2) clique = false;
                w.push_back(a);
            }
            if (clique) letters.push_back(at.canonicalize(w, 0, 0));
        }
        return GarsideFamily(at, std::move(letters), true);
    }
    throw UnsupportedClassError(
        "no Garside family construction for this presentation: it is neither spherical nor "
        "right-angled (finite families do exist for all finitely generated presentations, "
        "but that construction is not implemented)");
}

Verdict left_reversibility_probe(const ArtinCategory& at, long fuel) {
    for (int a = 0; a < at.atom_count(); ++a)
        for (int b = a + 1; b < at.atom_count(); ++b) {
            auto res = at.reverse({a}, {b}, fuel);
            if (res.kind == ReverseResult::Empty)
                return Verdict::fails("cones of atoms " + at.atom_label(a) + " and " +
                                          at.atom_label(b) + " are disjoint",
                                      {at.atom(a), at.atom(b)});
        }
    auto sph = spherical_probe(at, fuel);
    if (sph.verdict.ok())
        return Verdict::holds("spherical: the lcm of all atoms exists");
    if (sph.verdict.status == Status::Fails)
        return Verdict::fails("a pair of elements has disjoint cones", sph.verdict.witness);
    return Verdict::unknown("reversing inconclusive within fuel", static_cast<int>(fuel));
}

std::pair<std::set<int>, std::set<int>> lr_sets(const ArtinCategory& at, const Morphism& x) {
    std::set<int> left, right;
    for (int a = 0; a < at.atom_count(); ++a) {
        if (at.left_divides(at.atom(a), x)) left.insert(a);
        if (at.right_divides(at.atom(a), x)) right.insert(a);
    }
    return {left, right};
}

ClassificationTarget at_classification_regression(const ArtinCategory& at,
                                                  const GarsideFamily& fam, int depth) {
    if (!at.data().irreducible())
        throw UnsupportedClassError(
            "classification targets are stated for irreducible presentations");
    ClassificationTarget out;
    auto full_T = [&] {
        std::set<int> T;
        for (int i = 0; i < fam.size(); ++i) T.insert(i);
        return T;
    };
    auto sph = spherical_probe(at, at.default_fuel());
    InvariantPair bottom, omega_inf, omega;
    omega_inf.T = full_T();
    omega.T = full_T();
    omega.D = {0};
    if (sph.verdict.ok()) {
        out.shape = ClassificationTarget::Shape::SphericalChain;
        InvariantPair bd;
        bd.T = {fam.find(sph.delta)};
        out.pairs = {bottom, bd, omega_inf, omega};
        out.boundary = bd;
    } else {
        out.shape = ClassificationTarget::Shape::NonSphericalChain;
        out.pairs = {bottom, omega_inf, omega};
        out.boundary = omega_inf;
        // The mechanism behind the chain: the closure of any single letter
        // under H-invariance swallows the atoms and then all of S.
        for (int t = 0; t < fam.size(); ++t) {
            InvariantPair seed;
            seed.T = {t};
            InvariantPair cl = closure(fam, seed, depth);
            if (cl.T != full_T())
                throw StructuralError("closure of a single letter did not reach the full "
                                      "family; classification target does not apply");
        }
    }
    return out;
}

}  // namespace garcat
