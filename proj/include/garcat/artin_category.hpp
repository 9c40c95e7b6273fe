#ifndef GARCAT_ARTIN_CATEGORY_HPP
#define GARCAT_ARTIN_CATEGORY_HPP

#include <map>
#include <mutex>
#include <set>
#include <string>
#include <vector>

#include "garcat/category.hpp"

namespace garcat {

// Presentation data of an Artin-Tits monoid: atoms A and the symmetric
// matrix m with entries in {2,3,...} u {inf}; m[a][b] == 0 encodes inf.
// The relations are the alternating words (ab)^[m] = (ba)^[m].
struct CoxeterData {
    std::vector<std::string> atoms;
    std::vector<std::vector<int>> m;

    int size() const { return static_cast<int>(atoms.size()); }
    int entry(int a, int b) const { return m.at(a).at(b); }
    bool finite_entry(int a, int b) const { return entry(a, b) != 0; }
    // Connectivity of the graph with edges where m != 2.
    bool irreducible() const;
    bool right_angled() const;
};

// Outcome of right-reversing u^{-1} v.
struct ReverseResult {
    enum Kind { Complement, Empty, OutOfFuel } kind;
    // kind == Complement: u * v_comp == v * u_comp == lcm(u, v).
    Word v_comp, u_comp;
    long steps_used = 0;
};

class ArtinCategory : public Category {
public:
    explicit ArtinCategory(CoxeterData data, long default_fuel = 10000);

    const CoxeterData& data() const { return data_; }
    long default_fuel() const { return fuel_; }

    // Right reversing of u^{-1} v by the presentation's complement rules.
    ReverseResult reverse(const Word& u, const Word& v, long fuel) const;
    ReverseResult reverse(const Word& u, const Word& v) const { return reverse(u, v, fuel_); }

    // All words equal to w in the monoid (relations preserve length, so the
    // class is finite). Used as the exact fallback when reversing runs out
    // of fuel, and by equality.
    std::vector<Word> rewriting_class(const Word& w) const;

    bool right_divides(const Morphism& a, const Morphism& b) const;

    const char* backend_name() const override { return "artin"; }
    int object_count() const override { return 1; }
    const std::string& object_label(int) const override { return vertex_label_; }
    int atom_count() const override { return data_.size(); }
    const std::string& atom_label(int a) const override { return data_.atoms.at(a); }
    int atom_tgt(int) const override { return 0; }
    int atom_dom(int) const override { return 0; }

    Morphism canonicalize(const Word& w, int tgt, int dom) const override;
    bool left_divides(const Morphism& a, const Morphism& b) const override;
    std::optional<Morphism> left_quotient(const Morphism& a, const Morphism& b) const override;
    std::vector<Morphism> mcm_set(const Morphism& a, const Morphism& b) const override;

    bool right_cancellative_structural() const override { return true; }
    bool left_reversible_structural() const override;
    bool group_embeddable_monoid() const override { return true; }

    ValidationReport validate() const override;

private:
    Word shortlex_min_of_class(const Word& w) const;

    CoxeterData data_;
    long fuel_;
    std::string vertex_label_ = "*";
    mutable std::map<Word, Word> canon_cache_;
    mutable std::mutex cache_mutex_;
    mutable bool spherical_known_ = false;
    mutable bool spherical_ = false;
};

}  // namespace garcat

#endif
