#ifndef GARCAT_KGRAPH_IDEALS_HPP
#define GARCAT_KGRAPH_IDEALS_HPP

#include <set>

#include "garcat/classify.hpp"
#include "garcat/kgraph_category.hpp"

namespace garcat {

// The standard family of a higher rank graph: all morphisms whose degree
// has every component 0 or 1 (nonzero). Locally finite iff the skeleton is
// row-finite, which holds for every materialized skeleton.
GarsideFamily build_kgraph_family(const KGraphCategory& kg);

struct KGraphConditions {
    Verdict A, I, C;
    bool all() const { return A.ok() && I.ok() && C.ok(); }
};

// Degree-level transcription of the pair predicates: (A) every letter has a
// degree-dominated successor or exits to D, (I) atoms push letters back
// into T, (C) is vacuous for locally finite families.
KGraphConditions check_conditions(const KGraphCategory& kg, const GarsideFamily& fam,
                                  const InvariantPair& p);

// Hereditary: reachability-closed along morphisms out of member vertices.
// Saturated (row-finite, sourceless form): a vertex all of whose outgoing
// edges land in the set joins it.
bool is_hereditary(const KGraphCategory& kg, const std::set<int>& H);
bool is_saturated(const KGraphCategory& kg, const std::set<int>& H);
std::vector<std::set<int>> hereditary_saturated_enumerate(const KGraphCategory& kg);

// H(T, D) = vertices none of whose boundary characters lie in X(T, D);
// requires the pair to sit inside the boundary pair.
std::set<int> pair_to_hereditary(const KGraphCategory& kg, const GarsideFamily& fam,
                                 const InvariantPair& p, int depth);
// The pair of the complement of the orbit of H in the boundary.
InvariantPair hereditary_to_pair(const KGraphCategory& kg, const GarsideFamily& fam,
                                 const std::set<int>& H, int depth);

}  // namespace garcat

#endif
