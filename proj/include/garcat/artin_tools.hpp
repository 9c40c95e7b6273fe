#ifndef GARCAT_ARTIN_TOOLS_HPP
#define GARCAT_ARTIN_TOOLS_HPP

#include <set>

#include "garcat/artin_category.hpp"
#include "garcat/classify.hpp"

namespace garcat {

// Iterated pairwise lcm over the atoms. Holds returns the lcm of all atoms;
// Fails certifies a pair with empty intersection; Unknown reports exhausted
// reversing fuel.
struct SphericalResult {
    Verdict verdict;
    Morphism delta;  // valid when verdict holds
};
SphericalResult spherical_probe(const ArtinCategory& at, long fuel);

// Spherical case: nontrivial left divisors of the lcm of the atoms.
// Right-angled case: products over nonempty cliques of the commutation
// graph. Anything else is out of reach of this construction.
GarsideFamily artin_garside_family(const ArtinCategory& at);

Verdict left_reversibility_probe(const ArtinCategory& at, long fuel);

// Atom divisor sets on both sides.
std::pair<std::set<int>, std::set<int>> lr_sets(const ArtinCategory& at, const Morphism& x);

// The lattice shape the classification must produce, by monoid class.
struct ClassificationTarget {
    enum class Shape { SphericalChain, NonSphericalChain } shape;
    std::vector<InvariantPair> pairs;  // expected, sorted as enumerate_pairs sorts
    InvariantPair boundary;
};
ClassificationTarget at_classification_regression(const ArtinCategory& at,
                                                  const GarsideFamily& fam, int depth);

}  // namespace garcat

#endif
