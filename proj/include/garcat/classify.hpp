#ifndef GARCAT_CLASSIFY_HPP
#define GARCAT_CLASSIFY_HPP

#include <set>
#include <vector>

#include "garcat/characters.hpp"
#include "garcat/garside.hpp"

namespace garcat {

// A candidate classification pair: a set of family letters plus a set of
// vertices. Valid pairs (admissible, H-invariant, max-closed) are the
// currency of the closed-invariant-subspace classification.
struct InvariantPair {
    std::set<int> T;  // letter indices
    std::set<int> D;  // vertex ids
    Verdict admissible, h_invariant, max_closed;

    friend bool operator==(const InvariantPair& a, const InvariantPair& b) {
        return a.T == b.T && a.D == b.D;
    }
};

bool pair_subset(const InvariantPair& a, const InvariantPair& b);
std::string pair_str(const GarsideFamily& fam, const InvariantPair& p);

// Every t in T continues normally inside T or exits to a vertex of D.
Verdict is_admissible(const GarsideFamily& fam, const InvariantPair& p);

// H(a x) stays in T for all non-invertible a and x in T u D. With trivial
// units the quantifier reduces exactly to single letters a through the
// nested-head rule; otherwise the ball of radius `depth` is checked and the
// verdict stays inexact.
Verdict is_h_invariant(const GarsideFamily& fam, const InvariantPair& p, int depth);

// Vacuous for locally finite families. Otherwise oscillating windows of
// distinct letters in T are probed: their maximal stable divisors must stay
// in T u D.
Verdict is_max_closed(const GarsideFamily& fam, const InvariantPair& p);

bool pair_valid(const GarsideFamily& fam, InvariantPair& p, int depth);

// Smallest H-invariant, max-closed pair containing p (one pass suffices for
// admissible input); D never grows.
InvariantPair closure(const GarsideFamily& fam, const InvariantPair& p, int depth);
// Biggest admissible pair contained in p.
InvariantPair interior(const GarsideFamily& fam, const InvariantPair& p);

// chi in X(T, D): vertex characters need their vertex in D, finite ones all
// letters in T and their end vertex in D, infinite ones all letters in T.
bool x_membership(const GarsideFamily& fam, const InvariantPair& p, const Character& chi);

InvariantPair pair_of_subspace(const GarsideFamily& fam, const std::vector<Character>& sample);

// A character of X(p) whose word starts with t, built from admissibility
// witnesses (eventually periodic or finite into D).
Character witness_char(const GarsideFamily& fam, const InvariantPair& p, int t);

struct SubspaceLattice {
    std::vector<InvariantPair> pairs;              // sorted by (|T|+|D|, T, D)
    std::vector<std::pair<int, int>> hasse;        // covering edges i < j
    std::vector<int> boundary_index;               // pairs inside the boundary pair
    int boundary = -1;                             // index of the boundary pair, if valid
};

SubspaceLattice enumerate_pairs(const GarsideFamily& fam, int depth, std::size_t cap = 20,
                                int jobs = 1);

std::set<int> d_max_set(const GarsideFamily& fam);
std::set<int> t_max_set(const GarsideFamily& fam, int depth);
// Closure of (T_Max, D_max): the letter/vertex data of the boundary.
InvariantPair boundary_pair(const GarsideFamily& fam, int depth);

// Sufficient criterion for topological freeness of the relative groupoid
// over X(p2) \ X(p1): separating continuations must exist for every pair of
// normal paths with distinct first letters.
Verdict garside_topfree_probe(const GarsideFamily& fam, const InvariantPair& p1,
                              const InvariantPair& p2, int depth);

// Sufficient criterion for local contractiveness of the relative groupoid:
// every normal path in T2 \ T1 must reach a maximal letter with two
// divergent normal return paths.
Verdict garside_loccontr_probe(const GarsideFamily& fam, const InvariantPair& p1,
                               const InvariantPair& p2, int depth);

}  // namespace garcat

#endif
