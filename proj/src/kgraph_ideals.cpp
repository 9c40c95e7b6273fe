#include "garcat/kgraph_ideals.hpp"

#include <algorithm>
#include <deque>

namespace garcat {

namespace {

// Letters of `allowed` that start an infinite normal path inside `allowed`:
// iteratively prune letters with no successor; the surviving core is
// exactly the set that can continue forever.
std::set<int> infinite_core(const GarsideFamily& fam, const std::set<int>& allowed) {
    std::set<int> core = allowed;
    bool pruned = true;
    while (pruned) {
        pruned = false;
        for (int t : std::vector<int>(core.begin(), core.end())) {
            bool has_next = false;
            for (int t2 : normal_successors(fam, t))
                if (core.count(t2)) {
                    has_next = true;
                    break;
                }
            if (!has_next) {
                core.erase(t);
                pruned = true;
            }
        }
    }
    return core;
}

// Letters of `allowed` from which a normal path inside `allowed` reaches a
// vertex of D (possibly in zero steps past the letter itself).
std::set<int> reaching_d(const GarsideFamily& fam, const std::set<int>& allowed,
                         const std::set<int>& D) {
    std::set<int> good;
    bool grew = true;
    while (grew) {
        grew = false;
        for (int t : allowed) {
            if (good.count(t)) continue;
            bool hit = D.count(fam.letter(t).dom) > 0;
            if (!hit)
                for (int t2 : normal_successors(fam, t))
                    if (allowed.count(t2) && good.count(t2)) {
                        hit = true;
                        break;
                    }
            if (hit) {
                good.insert(t);
                grew = true;
            }
        }
    }
    return good;
}

}  // namespace

GarsideFamily build_kgraph_family(const KGraphCategory& kg) {
    std::vector<Morphism> letters;
    int k = kg.rank();
    for (int v = 0; v < kg.object_count(); ++v)
        for (unsigned mask = 1; mask < (1u << k); ++mask) {
            Degree p(k);
            for (int j = 0; j < k; ++j)
                if (mask & (1u << j)) p.v[j] = 1;
            for (const auto& m : kg.of_degree(v, p)) letters.push_back(m);
        }
    return GarsideFamily(kg, std::move(letters), true);
}

KGraphConditions check_conditions(const KGraphCategory& kg, const GarsideFamily& fam,
                                  const InvariantPair& p) {
    KGraphConditions out;
    out.A = Verdict::holds("every letter has a degree-dominated successor or exits to D");
    for (int t : p.T) {
        if (p.D.count(fam.letter(t).dom)) continue;
        bool ok = false;
        for (int t2 : p.T)
            if (fam.letter(t2).tgt == fam.letter(t).dom &&
                kg.degree(fam.letter(t)).geq(kg.degree(fam.letter(t2)))) {
                ok = true;
                break;
            }
        if (!ok) {
            out.A = Verdict::fails("letter " + kg.format(fam.letter(t)) +
                                       " has no degree-dominated successor",
                                   {fam.letter(t)});
            break;
        }
    }

    out.I = Verdict::holds("atoms push T u D back into T");
    auto check_atom_against = [&](int a, const Morphism& t, bool vertex_case) -> bool {
        Morphism ma = kg.atom(a);
        if (vertex_case) {
            return p.T.count(fam.find(ma)) > 0;
        }
        Degree da = kg.degree(ma), dt = kg.degree(t);
        if (!da.leq(dt)) {
            Morphism at = kg.compose(ma, t);
            return p.T.count(fam.find(at)) > 0;
        }
        auto [r, s] = kg.factor(t, dt.minus(da));
        Morphism ar = kg.compose(ma, r);
        return p.T.count(fam.find(ar)) > 0;
    };
    for (int t : p.T) {
        for (int a = 0; a < kg.atom_count() && out.I.ok(); ++a) {
            if (kg.atom_dom(a) != fam.letter(t).tgt) continue;
            if (!check_atom_against(a, fam.letter(t), false))
                out.I = Verdict::fails("atom " + kg.atom_label(a) + " pushes letter " +
                                           kg.format(fam.letter(t)) + " outside T",
                                       {kg.atom(a), fam.letter(t)});
        }
        if (!out.I.ok()) break;
    }
    if (out.I.ok())
        for (int v : p.D) {
            for (int a = 0; a < kg.atom_count() && out.I.ok(); ++a) {
                if (kg.atom_dom(a) != v) continue;
                if (!check_atom_against(a, kg.identity(v), true))
                    out.I = Verdict::fails("atom " + kg.atom_label(a) + " into D vertex " +
                                               kg.object_label(v) + " is outside T",
                                           {kg.atom(a)});
            }
            if (!out.I.ok()) break;
        }

    out.C = fam.locally_finite()
                ? Verdict::holds("vacuous: family is locally finite")
                : is_max_closed(fam, p);
    return out;
}

bool is_hereditary(const KGraphCategory& kg, const std::set<int>& H) {
    for (int a = 0; a < kg.atom_count(); ++a)
        if (H.count(kg.atom_tgt(a)) && !H.count(kg.atom_dom(a))) return false;
    return true;
}

bool is_saturated(const KGraphCategory& kg, const std::set<int>& H) {
    for (int v = 0; v < kg.object_count(); ++v) {
        if (H.count(v)) continue;
        bool all_into = true, any = false;
        for (int a = 0; a < kg.atom_count(); ++a) {
            if (kg.atom_tgt(a) != v) continue;
            any = true;
            if (!H.count(kg.atom_dom(a))) {
                all_into = false;
                break;
            }
        }
        if (any && all_into) return false;
    }
    return true;
}

std::vector<std::set<int>> hereditary_saturated_enumerate(const KGraphCategory& kg) {
    if (!kg.sourceless())
        throw DomainError("hereditary_saturated_enumerate requires a sourceless skeleton");
    int n = kg.object_count();
    std::vector<std::set<int>> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::set<int> H;
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v)) H.insert(v);
        if (is_hereditary(kg, H) && is_saturated(kg, H)) out.push_back(std::move(H));
    }
    return out;
}

std::set<int> pair_to_hereditary(const KGraphCategory& kg, const GarsideFamily& fam,
                                 const InvariantPair& p, int depth) {
    InvariantPair bd = boundary_pair(fam, depth);
    if (!pair_subset(p, bd))
        throw DomainError("pair_to_hereditary: pair is not contained in the boundary pair");
    std::set<int> can_inf = infinite_core(fam, p.T);
    std::set<int> can_exit = reaching_d(fam, p.T, p.D);
    std::set<int> H;
    for (int v = 0; v < kg.object_count(); ++v) {
        if (p.D.count(v)) continue;  // the vertex character itself lies in X
        bool alive = false;
        for (int t : p.T)
            if (fam.letter(t).tgt == v && (can_inf.count(t) || can_exit.count(t))) {
                alive = true;
                break;
            }
        if (!alive) H.insert(v);
    }
    return H;
}

InvariantPair hereditary_to_pair(const KGraphCategory& kg, const GarsideFamily& fam,
                                 const std::set<int>& H, int depth) {
    // Boundary words avoiding the orbit of H: letters must come from the
    // boundary pair and stay clear of H at every edge endpoint (the
    // divisor-level visits of a normal word are endpoints of its edges).
    InvariantPair bd = boundary_pair(fam, depth);
    std::set<int> avoid;
    for (int t : bd.T) {
        bool ok = !H.count(fam.letter(t).tgt);
        for (int e : fam.letter(t).word)
            if (H.count(kg.atom_tgt(e)) || H.count(kg.atom_dom(e))) {
                ok = false;
                break;
            }
        if (ok) avoid.insert(t);
    }
    InvariantPair p;
    for (int v : bd.D)
        if (!H.count(v)) p.D.insert(v);
    std::set<int> can_inf = infinite_core(fam, avoid);
    std::set<int> can_exit = reaching_d(fam, avoid, p.D);
    for (int t : avoid)
        if (can_inf.count(t) || can_exit.count(t)) p.T.insert(t);
    return p;
}

}  // namespace garcat
