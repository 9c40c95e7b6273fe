#ifndef GARCAT_GROUPOID_CHECKS_HPP
#define GARCAT_GROUPOID_CHECKS_HPP

#include <optional>

#include "garcat/classify.hpp"

namespace garcat {

enum class Criterion {
    Hausdorff,
    BoundaryHausdorff,
    TopFree,
    Effective,
    BoundaryMinimal,
    BoundaryLocContr,
    BoundaryTopFree,
    BoundaryEffective,
    Cofinal,
    PureInfWitness,
    GcTrivial,
};

const char* criterion_name(Criterion c);

struct CriterionReport {
    Criterion criterion;
    Verdict verdict;
    int depth = -1;
};

// Equalizer sets {x : cx = dx} must be finite unions of cones. Right
// cancellative backends hold structurally.
CriterionReport hausdorff_probe(const Category& cat, int depth);
// Boundary variant: a finite equalizing family every equalizer meets.
CriterionReport boundary_hausdorff_probe(const Category& cat, int depth);

// Trivial units give both structurally; explicit tables quantify over
// units and cone families on the ball.
CriterionReport topfree_probe(const Category& cat, int depth);
CriterionReport effective_probe(const Category& cat, int depth);

CriterionReport boundary_minimal_probe(const Category& cat, int depth);
CriterionReport boundary_loccontr_probe(const Category& cat, int depth);

// Bounded transcription of the boundary effectiveness criterion; the
// optional family adds the Garside-level cross-check on the boundary pair.
CriterionReport boundary_topfree_probe(const Category& cat, const GarsideFamily* fam,
                                       int depth);
CriterionReport boundary_effective_probe(const Category& cat, const GarsideFamily* fam,
                                         int depth);

CriterionReport cofinality_check(const Category& cat);
CriterionReport pure_inf_witness(const Category& cat, int depth);

// Search for p with pP and (u v^{-1}) p P disjoint, clearing denominators
// through mcms. Requires a group-embeddable monoid backend and a reduced
// fraction.
struct GcResult {
    bool separated = false;
    Morphism separator;
    int depth = -1;
};
GcResult gc_probe(const Category& cat, const Morphism& num, const Morphism& den, int depth);
// All reduced fractions of total atom length <= depth.
CriterionReport gc_trivial_aggregate(const Category& cat, int depth);

bool fraction_reduced(const Category& cat, const Morphism& num, const Morphism& den);

std::vector<CriterionReport> check_all(const Category& cat, const GarsideFamily* fam,
                                       int depth);

}  // namespace garcat

#endif
