#ifndef GARCAT_GRAPH_CATEGORY_HPP
#define GARCAT_GRAPH_CATEGORY_HPP

#include <string>
#include <vector>

#include "garcat/category.hpp"

namespace garcat {

// Free path category of a directed graph. Edges point tgt -> dom; a word is
// a forward walk and is its own canonical form.
class GraphCategory : public Category {
public:
    int add_vertex(const std::string& label);
    int add_edge(const std::string& label, const std::string& tgt, const std::string& dom);
    int add_edge(const std::string& label, int tgt, int dom);

    const char* backend_name() const override { return "graphpath"; }
    int object_count() const override { return static_cast<int>(vertex_labels_.size()); }
    const std::string& object_label(int v) const override { return vertex_labels_.at(v); }
    int atom_count() const override { return static_cast<int>(edges_.size()); }
    const std::string& atom_label(int a) const override { return edges_.at(a).label; }
    int atom_tgt(int a) const override { return edges_.at(a).tgt; }
    int atom_dom(int a) const override { return edges_.at(a).dom; }

    Morphism canonicalize(const Word& w, int tgt, int dom) const override;
    bool left_divides(const Morphism& a, const Morphism& b) const override;
    std::optional<Morphism> left_quotient(const Morphism& a, const Morphism& b) const override;
    std::vector<Morphism> mcm_set(const Morphism& a, const Morphism& b) const override;

    bool right_cancellative_structural() const override { return true; }
    bool group_embeddable_monoid() const override { return object_count() == 1; }

    ValidationReport validate() const override;

protected:
    struct Edge {
        std::string label;
        int tgt;
        int dom;
    };
    std::vector<std::string> vertex_labels_;
    std::vector<Edge> edges_;
};

}  // namespace garcat

#endif
