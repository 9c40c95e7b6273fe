#ifndef GARCAT_EXPLICIT_CATEGORY_HPP
#define GARCAT_EXPLICIT_CATEGORY_HPP

#include <map>
#include <string>
#include <vector>

#include "garcat/category.hpp"

namespace garcat {

// Finite category given by an explicit composition table. Identities are
// implicit (one per object); every other element is its own one-letter
// canonical word. The only backend that may carry nontrivial invertibles.
class ExplicitCategory : public Category {
public:
    int add_vertex(const std::string& label);
    int add_element(const std::string& label, const std::string& tgt, const std::string& dom);
    // f*g = h, where h may name an element or a vertex (identity).
    void set_composition(const std::string& f, const std::string& g, const std::string& h);

    // Call once after all data is loaded; builds unit and =*-class tables.
    void freeze();

    const char* backend_name() const override { return "explicit"; }
    int object_count() const override { return static_cast<int>(vertex_labels_.size()); }
    const std::string& object_label(int v) const override { return vertex_labels_.at(v); }
    int atom_count() const override { return static_cast<int>(elt_labels_.size()); }
    const std::string& atom_label(int a) const override { return elt_labels_.at(a); }
    int atom_tgt(int a) const override { return elt_tgt_.at(a); }
    int atom_dom(int a) const override { return elt_dom_.at(a); }

    Morphism canonicalize(const Word& w, int tgt, int dom) const override;
    bool left_divides(const Morphism& a, const Morphism& b) const override;
    std::optional<Morphism> left_quotient(const Morphism& a, const Morphism& b) const override;
    std::vector<Morphism> mcm_set(const Morphism& a, const Morphism& b) const override;
    std::vector<Morphism> ball(int v, int radius, std::size_t cap = 1u << 20) const override;

    bool trivial_units() const override { return units_.empty(); }
    bool is_unit(const Morphism& m) const override;
    bool right_cancellative_structural() const override { return false; }

    ValidationReport validate() const override;

    std::vector<Morphism> all_at(int v) const;        // v𝔠, identities included
    std::vector<Morphism> units_at(int v) const;      // v𝔠*v loops
    Morphism star_representative(const Morphism& m) const;  // chosen =*-class rep

private:
    // Table values: element id, or -1 - v for the identity at v.
    int table_at(int f, int g) const;
    Morphism decode(int code) const;
    int encode(const Morphism& m) const;

    std::vector<std::string> vertex_labels_;
    std::vector<std::string> elt_labels_;
    std::vector<int> elt_tgt_, elt_dom_;
    std::map<std::pair<int, int>, int> table_;
    std::vector<int> units_;          // element ids that are invertible
    std::vector<int> star_rep_;       // element id -> representative element id
    bool frozen_ = false;
};

}  // namespace garcat

#endif
