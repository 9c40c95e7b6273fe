#include "garcat/groupoid_checks.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "garcat/explicit_category.hpp"

namespace garcat {

const char* criterion_name(Criterion c) {
    switch (c) {
        case Criterion::Hausdorff: return "hausdorff";
        case Criterion::BoundaryHausdorff: return "boundary-hausdorff";
        case Criterion::TopFree: return "topfree";
        case Criterion::Effective: return "effective";
        case Criterion::BoundaryMinimal: return "boundary-minimal";
        case Criterion::BoundaryLocContr: return "boundary-loccontr";
        case Criterion::BoundaryTopFree: return "boundary-topfree";
        case Criterion::BoundaryEffective: return "boundary-effective";
        case Criterion::Cofinal: return "cofinal";
        case Criterion::PureInfWitness: return "pure-inf-witness";
        case Criterion::GcTrivial: return "gc-trivial";
    }
    return "?";
}

namespace {

// Vertex reachability: reach[v] = vertices u with v C u != {}.
std::vector<std::set<int>> reachability(const Category& cat) {
    int n = cat.object_count();
    std::vector<std::set<int>> reach(n);
    for (int v = 0; v < n; ++v) reach[v].insert(v);
    bool grew = true;
    while (grew) {
        grew = false;
        for (int a = 0; a < cat.atom_count(); ++a) {
            int t = cat.atom_tgt(a), d = cat.atom_dom(a);
            for (int v = 0; v < n; ++v)
                if (reach[v].count(t))
                    for (int u : reach[d])
                        if (reach[v].insert(u).second) grew = true;
        }
    }
    return reach;
}

// Equalizer {x in ball : cx = dx}.
std::vector<Morphism> equalizer(const Category& cat, const Morphism& c, const Morphism& d,
                                int depth) {
    std::vector<Morphism> out;
    for (const auto& x : cat.ball(c.dom, depth))
        if (cat.compose(c, x) == cat.compose(d, x)) out.push_back(x);
    return out;
}

CriterionReport hausdorff_core(const Category& cat, int depth, bool boundary) {
    Criterion crit = boundary ? Criterion::BoundaryHausdorff : Criterion::Hausdorff;
    if (cat.right_cancellative_structural())
        return {crit,
                Verdict::holds("structural: finitely aligned and right cancellative"), depth};
    // Finite explicit tables: equalizers are right ideals, so the cover by
    // their own elements always exists; exhibit it.
    for (int v = 0; v < cat.object_count(); ++v) {
        auto cs = cat.ball(v, depth);
        for (const auto& c : cs)
            for (const auto& d : cs) {
                if (c == d || c.dom != d.dom) continue;
                auto eq = equalizer(cat, c, d, depth);
                for (const auto& x : eq) {
                    bool covered = false;
                    for (const auto& root : eq) {
                        bool meets = boundary ? !cat.mcm_set(root, x).empty()
                                              : cat.left_divides(root, x);
                        if (meets) {
                            covered = true;
                            break;
                        }
                    }
                    if (!covered)
                        return {crit,
                                Verdict::fails("equalizer element not covered", {c, d, x}),
                                depth};
                }
            }
    }
    return {crit, Verdict::holds("equalizer sets are covered by their elements", false, depth),
            depth};
}

}  // namespace

CriterionReport hausdorff_probe(const Category& cat, int depth) {
    return hausdorff_core(cat, depth, false);
}

CriterionReport boundary_hausdorff_probe(const Category& cat, int depth) {
    return hausdorff_core(cat, depth, true);
}

namespace {

// Shared engine for topological freeness / effectiveness over the full
// character space. `require_all` distinguishes the two: effectiveness needs
// every point of the complement fixed, freeness just one.
CriterionReport units_probe(const Category& cat, int depth, bool require_all) {
    Criterion crit = require_all ? Criterion::Effective : Criterion::TopFree;
    if (cat.trivial_units())
        return {crit, Verdict::holds("structural: all invertibles are identities"), depth};

    const auto* ex = dynamic_cast<const ExplicitCategory*>(&cat);
    if (!ex)
        return {crit, Verdict::unknown("nontrivial units on a non-explicit backend", depth),
                depth};
    for (int v = 0; v < cat.object_count(); ++v) {
        auto all = ex->all_at(v);
        for (const auto& u : ex->units_at(v)) {
            if (u.is_identity()) continue;
            // Cone families f_i strictly below vC, size <= 2 at this scale.
            std::vector<std::vector<Morphism>> families{{}};
            std::vector<Morphism> proper;
            for (const auto& f : all)
                if (!ex->is_unit(f)) proper.push_back(f);
            for (const auto& f : proper) families.push_back({f});
            for (std::size_t i = 0; i < proper.size(); ++i)
                for (std::size_t j = i + 1; j < proper.size(); ++j)
                    families.push_back({proper[i], proper[j]});
            for (const auto& fs : families) {
                auto outside = [&](const Morphism& z) {
                    for (const auto& f : fs)
                        if (cat.left_divides(f, z)) return false;
                    return true;
                };
                bool premise = true;
                for (const auto& z : all) {
                    if (!outside(z)) continue;
                    // u z must lie in z C* for the hypothesis.
                    Morphism uz = cat.compose(u, z);
                    bool in_star = false;
                    for (const auto& w : ex->units_at(z.dom))
                        if (cat.compose(z, w) == uz) {
                            in_star = true;
                            break;
                        }
                    if (!in_star) {
                        premise = false;
                        break;
                    }
                }
                if (!premise) continue;
                int fixed = 0, total = 0;
                for (const auto& z : all) {
                    if (!outside(z)) continue;
                    ++total;
                    if (cat.compose(u, z) == z) ++fixed;
                }
                bool ok = require_all ? fixed == total : fixed > 0;
                if (total > 0 && !ok)
                    return {crit,
                            Verdict::fails("unit " + cat.format(u) +
                                               " fixes cones setwise but not pointwise",
                                           {u}),
                            depth};
            }
        }
    }
    return {crit, Verdict::holds("all unit germs act trivially where required", false, depth),
            depth};
}

}  // namespace

CriterionReport topfree_probe(const Category& cat, int depth) {
    return units_probe(cat, depth, false);
}

CriterionReport effective_probe(const Category& cat, int depth) {
    return units_probe(cat, depth, true);
}

CriterionReport boundary_minimal_probe(const Category& cat, int depth) {
    auto reach = reachability(cat);
    for (int v = 0; v < cat.object_count(); ++v)
        for (int w = 0; w < cat.object_count(); ++w) {
            if (reach[w].count(v)) continue;  // identity at v is a one-element family
            // No candidate x_i with w C dom(x_i) nonempty can exist inside
            // the component of v when the components are disjoint.
            bool candidate = false;
            for (const auto& x : cat.ball(v, depth))
                if (reach[w].count(x.dom)) {
                    candidate = true;
                    break;
                }
            if (!candidate)
                return {Criterion::BoundaryMinimal,
                        Verdict::fails("vertex " + cat.object_label(w) + " cannot reach " +
                                       cat.object_label(v)),
                        depth};
            // Bounded search: a family of reach-compatible roots meeting
            // every ball element.
            auto ball = cat.ball(v, depth);
            std::vector<Morphism> roots;
            for (const auto& x : ball)
                if (reach[w].count(x.dom)) roots.push_back(x);
            bool all_met = true;
            for (const auto& x : ball) {
                bool met = false;
                for (const auto& r : roots)
                    if (!cat.mcm_set(x, r).empty()) {
                        met = true;
                        break;
                    }
                if (!met) {
                    all_met = false;
                    break;
                }
            }
            if (!all_met)
                return {Criterion::BoundaryMinimal,
                        Verdict::unknown("no jointly meeting family found on the ball", depth),
                        depth};
        }
    bool cofinal = true;
    for (int v = 0; v < cat.object_count() && cofinal; ++v)
        for (int w = 0; w < cat.object_count(); ++w)
            if (!reach[w].count(v)) {
                cofinal = false;
                break;
            }
    return {Criterion::BoundaryMinimal,
            cofinal ? Verdict::holds("cofinal: identities are jointly meeting families")
                    : Verdict::holds("jointly meeting families found on the ball", false, depth),
            depth};
}

CriterionReport boundary_loccontr_probe(const Category& cat, int depth) {
    if (cat.left_reversible_structural())
        return {Criterion::BoundaryLocContr,
                Verdict::unknown("all cones meet: the disjointness clause is unsatisfiable",
                                 depth),
                depth};
    for (int v = 0; v < cat.object_count(); ++v) {
        auto ball = cat.ball(v, depth);
        for (const auto& x : ball) {
            bool found = false;
            auto ds = cat.ball(v, depth);
            for (const auto& d : ds) {
                if (found) break;
                for (const auto& c : ds) {
                    if (found) break;
                    if (c.dom != d.dom || c == d) continue;
                    auto ys = cat.ball(d.dom, depth);
                    // Families (y_0, y_1); y_0 is the contracting gap.
                    for (const auto& y0 : ys) {
                        if (found) break;
                        if (!cat.left_divides(x, cat.compose(d, y0))) continue;
                        for (const auto& y1 : ys) {
                            if (!cat.left_divides(x, cat.compose(d, y1))) continue;
                            Morphism dy0 = cat.compose(d, y0);
                            Morphism dy1 = cat.compose(d, y1);
                            Morphism cy0 = cat.compose(c, y0);
                            Morphism cy1 = cat.compose(c, y1);
                            if (!cat.mcm_set(dy0, cy0).empty()) continue;
                            if (!cat.mcm_set(dy0, cy1).empty()) continue;
                            // Every z below c y_1 must meet some d y_j.
                            bool absorbed = true;
                            for (const auto& zext : cat.ball(cy1.dom, depth)) {
                                Morphism z = cat.compose(cy1, zext);
                                if (cat.mcm_set(z, dy0).empty() &&
                                    cat.mcm_set(z, dy1).empty()) {
                                    absorbed = false;
                                    break;
                                }
                            }
                            if (absorbed) {
                                found = true;
                                break;
                            }
                        }
                    }
                }
            }
            if (!found)
                return {Criterion::BoundaryLocContr,
                        Verdict::unknown("no contracting witness for " + cat.format(x) +
                                             " within depth",
                                         depth),
                        depth};
        }
    }
    return {Criterion::BoundaryLocContr,
            Verdict::holds("contracting witnesses found for every cone", false, depth), depth};
}

namespace {

// Premise of the boundary effectiveness criterion for the germ d^{-1}c:
// nonempty domain and every translate cone meets its partner.
enum class Premise { Empty, Fails, Holds };

Premise boundary_premise(const Category& cat, const Morphism& c, const Morphism& d,
                         int depth) {
    if (cat.mcm_set(c, d).empty()) return Premise::Empty;
    // Divergence witnesses sit one step past the longer factor, so the
    // premise ball must stretch beyond the (c, d) ball.
    int radius = depth + c.length() + d.length();
    for (const auto& x : cat.ball(c.dom, radius)) {
        Morphism cx = cat.compose(c, x);
        if (!cat.left_divides(d, cx)) continue;
        if (cat.mcm_set(cx, cat.compose(d, x)).empty()) return Premise::Fails;
    }
    return Premise::Holds;
}

}  // namespace

CriterionReport boundary_topfree_probe(const Category& cat, const GarsideFamily* fam,
                                       int depth) {
    bool premise_exact = cat.left_reversible_structural();
    for (int v = 0; v < cat.object_count(); ++v) {
        auto cs = cat.ball(v, depth);
        for (const auto& c : cs)
            for (const auto& d : cs) {
                if (c == d || c.dom != d.dom) continue;
                if (boundary_premise(cat, c, d, depth) != Premise::Holds) continue;
                // Smallest y with cy in dC; the basic set (y; {}) is
                // boundary-nonempty, so a fixed z' in yC with cz' = dz'
                // must exist.
                std::optional<Morphism> y;
                for (const auto& cand : cat.ball(c.dom, depth))
                    if (cat.left_divides(d, cat.compose(c, cand))) {
                        y = cand;
                        break;
                    }
                if (!y) continue;
                bool fixed = false;
                for (const auto& ext : cat.ball(y->dom, depth)) {
                    Morphism z = cat.compose(*y, ext);
                    if (cat.compose(c, z) == cat.compose(d, z)) {
                        fixed = true;
                        break;
                    }
                }
                if (!fixed) {
                    bool exact = premise_exact && cat.right_cancellative_structural();
                    if (!exact)
                        return {Criterion::BoundaryTopFree,
                                Verdict::unknown("isotropy candidate (" + cat.format(c) + ", " +
                                                     cat.format(d) +
                                                     ") fixes no cone on the ball, but the "
                                                     "premise is only checked to depth",
                                                 depth),
                                depth};
                    Verdict verdict = Verdict::fails(
                        "germ of (" + cat.format(c) + ", " + cat.format(d) +
                            ") is isotropy near the boundary but fixes no cone",
                        {c, d, *y}, true, depth);
                    if (fam) {
                        // Cross-check: the Garside probe on the boundary
                        // pair must not certify freeness.
                        InvariantPair bottom;
                        InvariantPair bd = boundary_pair(*fam, depth);
                        Verdict gars = garside_topfree_probe(*fam, bottom, bd, depth);
                        if (gars.ok())
                            throw StructuralError(
                                "inconsistency: direct boundary counterexample but the "
                                "Garside probe certifies freeness");
                    }
                    return {Criterion::BoundaryTopFree, std::move(verdict), depth};
                }
            }
    }
    return {Criterion::BoundaryTopFree,
            Verdict::holds("every near-boundary isotropy germ fixes a cone", false, depth),
            depth};
}

CriterionReport boundary_effective_probe(const Category& cat, const GarsideFamily* fam,
                                         int depth) {
    // For tight groupoids, Hausdorff makes effectiveness and topological
    // freeness coincide; all supported backends certify Hausdorff here.
    auto hd = boundary_hausdorff_probe(cat, depth);
    if (hd.verdict.ok()) {
        auto tf = boundary_topfree_probe(cat, fam, depth);
        tf.criterion = Criterion::BoundaryEffective;
        return tf;
    }
    return {Criterion::BoundaryEffective,
            Verdict::unknown("boundary Hausdorff not certified; effectiveness not decided",
                             depth),
            depth};
}

CriterionReport cofinality_check(const Category& cat) {
    auto reach = reachability(cat);
    for (int v = 0; v < cat.object_count(); ++v)
        for (int w = 0; w < cat.object_count(); ++w)
            if (!reach[w].count(v))
                return {Criterion::Cofinal,
                        Verdict::fails("no morphism from " + cat.object_label(w) + " to " +
                                       cat.object_label(v)),
                        -1};
    return {Criterion::Cofinal, Verdict::holds("all vertex pairs are connected"), -1};
}

CriterionReport pure_inf_witness(const Category& cat, int depth) {
    bool any_fail = false;
    std::string missing;
    for (int v = 0; v < cat.object_count(); ++v) {
        auto ball = cat.ball(v, depth);
        bool found = false;
        for (std::size_t i = 0; i < ball.size() && !found; ++i)
            for (std::size_t j = i + 1; j < ball.size(); ++j)
                if (cat.mcm_set(ball[i], ball[j]).empty()) {
                    found = true;
                    break;
                }
        if (!found) {
            any_fail = true;
            missing = cat.object_label(v);
            break;
        }
    }
    if (!any_fail)
        return {Criterion::PureInfWitness,
                Verdict::holds("disjoint cone pairs exist at every vertex", false, depth),
                depth};
    bool exact = cat.left_reversible_structural();
    if (!exact) {
        // Single-generator vertices are totally ordered, hence exact.
        int atoms_at = 0;
        for (int a = 0; a < cat.atom_count(); ++a)
            if (cat.object_label(cat.atom_tgt(a)) == missing) ++atoms_at;
        exact = atoms_at <= 1;
    }
    return {Criterion::PureInfWitness,
            Verdict::fails("no disjoint cone pair at vertex " + missing, {}, exact, depth),
            depth};
}

bool fraction_reduced(const Category& cat, const Morphism& num, const Morphism& den) {
    if (num.is_identity() || den.is_identity()) return true;
    // Reduced: no atom right-divides both.
    for (int a = 0; a < cat.atom_count(); ++a) {
        Morphism atom = cat.atom(a);
        auto right_div = [&](const Morphism& x) {
            for (const auto& y : cat.ball(x.tgt, x.length()))
                if (y.dom == atom.tgt && cat.compose(y, atom) == x) return true;
            return false;
        };
        if (right_div(num) && right_div(den)) return false;
    }
    return true;
}

GcResult gc_probe(const Category& cat, const Morphism& num, const Morphism& den, int depth) {
    if (!cat.group_embeddable_monoid())
        throw DomainError("gc probe needs a single-vertex, group-embeddable backend");
    if (!fraction_reduced(cat, num, den))
        throw DomainError("fraction is not reduced: numerator and denominator share a right "
                          "divisor");
    // pP meets (u v^{-1}) p P iff some w has u w and v w both in pP. Both
    // solution sets are finite unions of cones through mcms; disjointness
    // of every pair of cones is the separator certificate.
    for (const auto& p : cat.ball(0, depth)) {
        auto wu = cat.mcm_set(num, p);
        auto wv = cat.mcm_set(den, p);
        bool meets = false;
        for (const auto& mu : wu) {
            for (const auto& mv : wv) {
                Morphism ru = *cat.left_quotient(num, mu);
                Morphism rv = *cat.left_quotient(den, mv);
                if (!cat.mcm_set(ru, rv).empty()) {
                    meets = true;
                    break;
                }
            }
            if (meets) break;
        }
        if (!meets) return {true, p, depth};
    }
    return {false, {}, depth};
}

CriterionReport gc_trivial_aggregate(const Category& cat, int depth) {
    if (!cat.group_embeddable_monoid())
        return {Criterion::GcTrivial,
                Verdict::unknown("backend is not a declared group-embeddable monoid", depth),
                depth};
    auto ball = cat.ball(0, depth);
    for (const auto& u : ball)
        for (const auto& v : ball) {
            if (u == v) continue;
            if (static_cast<int>(u.word.size() + v.word.size()) > depth) continue;
            if (!fraction_reduced(cat, u, v)) continue;
            auto res = gc_probe(cat, u, v, depth);
            if (!res.separated) {
                bool exact = cat.left_reversible_structural();
                return {Criterion::GcTrivial,
                        Verdict::fails("no separator for the fraction " + cat.format(u) +
                                           " / " + cat.format(v),
                                       {u, v}, exact, depth),
                        depth};
            }
        }
    return {Criterion::GcTrivial,
            Verdict::holds("every reduced fraction up to the depth has a separator", false,
                           depth),
            depth};
}

std::vector<CriterionReport> check_all(const Category& cat, const GarsideFamily* fam,
                                       int depth) {
    std::vector<CriterionReport> out;
    out.push_back(hausdorff_probe(cat, depth));
    out.push_back(boundary_hausdorff_probe(cat, depth));
    out.push_back(topfree_probe(cat, depth));
    out.push_back(effective_probe(cat, depth));
    out.push_back(boundary_minimal_probe(cat, depth));
    out.push_back(boundary_loccontr_probe(cat, depth));
    out.push_back(boundary_topfree_probe(cat, fam, depth));
    out.push_back(boundary_effective_probe(cat, fam, depth));
    out.push_back(cofinality_check(cat));
    out.push_back(pure_inf_witness(cat, depth));
    out.push_back(gc_trivial_aggregate(cat, depth));
    return out;
}

}  // namespace garcat
