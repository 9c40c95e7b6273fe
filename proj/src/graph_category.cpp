#include "garcat/graph_category.hpp"

#include <algorithm>

namespace garcat {

int GraphCategory::add_vertex(const std::string& label) {
    if (object_index(label) >= 0)
        throw StructuralError("duplicate vertex label: " + label);
    vertex_labels_.push_back(label);
    return object_count() - 1;
}

int GraphCategory::add_edge(const std::string& label, const std::string& tgt,
                            const std::string& dom) {
    int t = object_index(tgt), d = object_index(dom);
    if (t < 0) throw StructuralError("edge " + label + ": unknown vertex " + tgt);
    if (d < 0) throw StructuralError("edge " + label + ": unknown vertex " + dom);
    return add_edge(label, t, d);
}

int GraphCategory::add_edge(const std::string& label, int tgt, int dom) {
    if (atom_index(label) >= 0)
        throw StructuralError("duplicate edge label: " + label);
    edges_.push_back({label, tgt, dom});
    return atom_count() - 1;
}

Morphism GraphCategory::canonicalize(const Word& w, int tgt, int dom) const {
    int at = tgt;
    for (int a : w) {
        if (atom_tgt(a) != at)
            throw ComposabilityError("word breaks at edge " + atom_label(a));
        at = atom_dom(a);
    }
    if (at != dom) throw ComposabilityError("word does not end at declared domain");
    return Morphism{w, tgt, dom};
}

bool GraphCategory::left_divides(const Morphism& a, const Morphism& b) const {
    if (a.tgt != b.tgt || a.word.size() > b.word.size()) return false;
    return std::equal(a.word.begin(), a.word.end(), b.word.begin());
}

std::optional<Morphism> GraphCategory::left_quotient(const Morphism& a,
                                                     const Morphism& b) const {
    if (!left_divides(a, b)) return std::nullopt;
    Word rest(b.word.begin() + a.word.size(), b.word.end());
    return Morphism{std::move(rest), a.dom, b.dom};
}

std::vector<Morphism> GraphCategory::mcm_set(const Morphism& a, const Morphism& b) const {
    if (a.tgt != b.tgt)
        throw ComposabilityError("mcm_set: targets differ");
    // Cones in a free category are nested or disjoint.
    if (left_divides(a, b)) return {b};
    if (left_divides(b, a)) return {a};
    return {};
}

ValidationReport GraphCategory::validate() const {
    ValidationReport rep;
    if (object_count() == 0)
        throw StructuralError("empty category rejected");
    rep.checks.push_back({"references", Verdict::holds("all edges reference declared vertices")});
    rep.checks.push_back({"left cancellation", Verdict::holds("structural: free category")});
    rep.checks.push_back({"associativity", Verdict::holds("structural: word concatenation")});
    return rep;
}

}  // namespace garcat
