#ifndef GARCAT_TESTS_FIXTURES_HPP
#define GARCAT_TESTS_FIXTURES_HPP

#include <memory>

#include "garcat/artin_category.hpp"
#include "garcat/artin_tools.hpp"
#include "garcat/explicit_category.hpp"
#include "garcat/graph_category.hpp"
#include "garcat/kgraph_category.hpp"
#include "garcat/kgraph_ideals.hpp"

namespace fixtures {

using namespace garcat;

// Free monoid on {a, b} as a one-vertex graph.
inline std::unique_ptr<GraphCategory> free2() {
    auto g = std::make_unique<GraphCategory>();
    g->add_vertex("v");
    g->add_edge("a", "v", "v");
    g->add_edge("b", "v", "v");
    return g;
}

inline CoxeterData coxeter(std::vector<std::string> atoms,
                           std::vector<std::tuple<int, int, int>> entries) {
    CoxeterData d;
    d.atoms = std::move(atoms);
    int n = static_cast<int>(d.atoms.size());
    d.m.assign(n, std::vector<int>(n, 0));
    for (auto [a, b, m] : entries) {
        d.m[a][b] = m;
        d.m[b][a] = m;
    }
    return d;
}

// Positive braid monoid on two generators: aba = bab.
inline std::unique_ptr<ArtinCategory> b3() {
    return std::make_unique<ArtinCategory>(coxeter({"a", "b"}, {{0, 1, 3}}));
}

// The natural numbers: one atom, no relations.
inline std::unique_ptr<ArtinCategory> nat() {
    return std::make_unique<ArtinCategory>(coxeter({"a"}, {}));
}

// Free monoid as an Artin presentation (both entries infinite).
inline std::unique_ptr<ArtinCategory> free2_artin() {
    return std::make_unique<ArtinCategory>(coxeter({"a", "b"}, {}));
}

// Right-angled, irreducible, non-spherical: only a and c commute.
inline std::unique_ptr<ArtinCategory> right_angled3() {
    return std::make_unique<ArtinCategory>(coxeter({"a", "b", "c"}, {{0, 2, 2}}));
}

// Affine-type presentation where reversing can run forever.
inline std::unique_ptr<ArtinCategory> affine3() {
    return std::make_unique<ArtinCategory>(
        coxeter({"a", "b", "c"}, {{0, 1, 3}, {1, 2, 3}, {0, 2, 3}}));
}

// One-vertex 2-graph with a single commuting square ef = fe.
inline std::unique_ptr<KGraphCategory> square2() {
    auto kg = std::make_unique<KGraphCategory>(2);
    kg->add_vertex("v");
    kg->add_edge("e", "v", "v", 1);
    kg->add_edge("f", "v", "v", 2);
    kg->add_square("e", "f", "f", "e");
    return kg;
}

// One-vertex 2-graph, two blue and two red edges, all squares commuting.
inline std::unique_ptr<KGraphCategory> flip22() {
    auto kg = std::make_unique<KGraphCategory>(2);
    kg->add_vertex("v");
    kg->add_edge("e1", "v", "v", 1);
    kg->add_edge("e2", "v", "v", 1);
    kg->add_edge("f1", "v", "v", 2);
    kg->add_edge("f2", "v", "v", 2);
    for (const char* e : {"e1", "e2"})
        for (const char* f : {"f1", "f2"}) kg->add_square(e, f, f, e);
    return kg;
}

// One-vertex 2-graph with two blue edges, one red, commuting squares.
inline std::unique_ptr<KGraphCategory> blue2red1() {
    auto kg = std::make_unique<KGraphCategory>(2);
    kg->add_vertex("v");
    kg->add_edge("e1", "v", "v", 1);
    kg->add_edge("e2", "v", "v", 1);
    kg->add_edge("f", "v", "v", 2);
    kg->add_square("e1", "f", "f", "e1");
    kg->add_square("e2", "f", "f", "e2");
    return kg;
}

// Two vertices, an edge v -> w and a loop at w (as a 1-graph).
inline std::unique_ptr<KGraphCategory> edge_loop() {
    auto kg = std::make_unique<KGraphCategory>(1);
    kg->add_vertex("v");
    kg->add_vertex("w");
    kg->add_edge("x", "v", "w", 1);
    kg->add_edge("l", "w", "w", 1);
    return kg;
}

// Two disconnected vertices with a loop on each.
inline std::unique_ptr<KGraphCategory> two_loops() {
    auto kg = std::make_unique<KGraphCategory>(1);
    kg->add_vertex("v");
    kg->add_vertex("w");
    kg->add_edge("p", "v", "v", 1);
    kg->add_edge("q", "w", "w", 1);
    return kg;
}

// Group of order two viewed as a one-object category.
inline std::unique_ptr<ExplicitCategory> z2() {
    auto ex = std::make_unique<ExplicitCategory>();
    ex->add_vertex("v");
    ex->add_element("u", "v", "v");
    ex->set_composition("u", "u", "v");
    ex->freeze();
    return ex;
}

// Three-element violation of left cancellation: c absorbs x and y.
inline std::unique_ptr<ExplicitCategory> non_cancellative() {
    auto ex = std::make_unique<ExplicitCategory>();
    ex->add_vertex("v");
    ex->add_element("c", "v", "v");
    ex->add_element("x", "v", "v");
    ex->add_element("y", "v", "v");
    for (const char* f : {"c", "x", "y"})
        for (const char* g : {"c", "x", "y"}) ex->set_composition(f, g, "c");
    ex->freeze();
    return ex;
}

}  // namespace fixtures

#endif
