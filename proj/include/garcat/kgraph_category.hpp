#ifndef GARCAT_KGRAPH_CATEGORY_HPP
#define GARCAT_KGRAPH_CATEGORY_HPP

#include <map>
#include <string>
#include <vector>

#include "garcat/category.hpp"

namespace garcat {

// Degree vector in Z_0^k with the componentwise order.
struct Degree {
    std::vector<int> v;

    explicit Degree(int k = 0) : v(k, 0) {}
    int rank() const { return static_cast<int>(v.size()); }
    int total() const;
    bool leq(const Degree& o) const;
    bool geq(const Degree& o) const { return o.leq(*this); }
    Degree join(const Degree& o) const;
    Degree meet(const Degree& o) const;
    Degree plus(const Degree& o) const;
    Degree minus(const Degree& o) const;
    static Degree unit(int k, int color);  // standard generator e_color (1-based color)
    static Degree ones(int k);
    friend bool operator==(const Degree&, const Degree&) = default;
    friend auto operator<=>(const Degree&, const Degree&) = default;
    std::string str() const;
};

// Higher rank graph presented by a colored skeleton plus completing squares.
// An edge points tgt -> dom and carries a color in 1..k. For every
// composable bi-colored pair f*g there is exactly one pair g'*f' with
// f*g = g'*f' and colors swapped; canonical words sort edges into color
// blocks (all color 1 first, then color 2, ...).
class KGraphCategory : public Category {
public:
    explicit KGraphCategory(int rank) : rank_(rank) {}

    int add_vertex(const std::string& label);
    int add_edge(const std::string& label, const std::string& tgt, const std::string& dom,
                 int color);
    // Declares f*g = g2*f2 (and the mirrored orientation).
    void add_square(const std::string& f, const std::string& g, const std::string& g2,
                    const std::string& f2);

    int rank() const { return rank_; }
    int edge_color(int a) const { return colors_.at(a); }

    Degree degree(const Morphism& m) const;
    // The unique factorization b = x*y with degree(x) == p; requires
    // p <= degree(b).
    std::pair<Morphism, Morphism> factor(const Morphism& b, const Degree& p) const;

    const char* backend_name() const override { return "kgraph"; }
    int object_count() const override { return static_cast<int>(vertex_labels_.size()); }
    const std::string& object_label(int v) const override { return vertex_labels_.at(v); }
    int atom_count() const override { return static_cast<int>(edge_labels_.size()); }
    const std::string& atom_label(int a) const override { return edge_labels_.at(a); }
    int atom_tgt(int a) const override { return edge_tgt_.at(a); }
    int atom_dom(int a) const override { return edge_dom_.at(a); }

    Morphism canonicalize(const Word& w, int tgt, int dom) const override;
    bool left_divides(const Morphism& a, const Morphism& b) const override;
    std::optional<Morphism> left_quotient(const Morphism& a, const Morphism& b) const override;
    std::vector<Morphism> mcm_set(const Morphism& a, const Morphism& b) const override;

    bool right_cancellative_structural() const override { return true; }
    bool left_reversible_structural() const override;
    bool group_embeddable_monoid() const override { return false; }

    ValidationReport validate() const override;

    // All morphisms from v with the given degree.
    std::vector<Morphism> of_degree(int v, const Degree& p) const;
    // Vertices with no outgoing edge of some color (k-graph sources).
    bool sourceless() const;

private:
    // Applies the square to the adjacent pair (w[i], w[i+1]); returns false
    // if no square is declared for it.
    bool swap_at(Word& w, std::size_t i) const;

    int rank_;
    std::vector<std::string> vertex_labels_;
    std::vector<std::string> edge_labels_;
    std::vector<int> edge_tgt_, edge_dom_, colors_;
    std::map<std::pair<int, int>, std::pair<int, int>> squares_;
};

}  // namespace garcat

#endif
