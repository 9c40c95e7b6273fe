#include "garcat/explicit_category.hpp"

#include <algorithm>

namespace garcat {

int ExplicitCategory::add_vertex(const std::string& label) {
    if (object_index(label) >= 0) throw StructuralError("duplicate vertex label: " + label);
    vertex_labels_.push_back(label);
    return object_count() - 1;
}

int ExplicitCategory::add_element(const std::string& label, const std::string& tgt,
                                  const std::string& dom) {
    if (atom_index(label) >= 0 || object_index(label) >= 0)
        throw StructuralError("duplicate label: " + label);
    int t = object_index(tgt), d = object_index(dom);
    if (t < 0) throw StructuralError("element " + label + ": unknown vertex " + tgt);
    if (d < 0) throw StructuralError("element " + label + ": unknown vertex " + dom);
    elt_labels_.push_back(label);
    elt_tgt_.push_back(t);
    elt_dom_.push_back(d);
    return atom_count() - 1;
}

void ExplicitCategory::set_composition(const std::string& f, const std::string& g,
                                       const std::string& h) {
    int fi = atom_index(f), gi = atom_index(g);
    if (fi < 0) throw StructuralError("comp: unknown element " + f);
    if (gi < 0) throw StructuralError("comp: unknown element " + g);
    if (atom_dom(fi) != atom_tgt(gi))
        throw StructuralError("comp " + f + "*" + g + ": factors not composable");
    int code;
    if (int hi = atom_index(h); hi >= 0) {
        if (atom_tgt(hi) != atom_tgt(fi) || atom_dom(hi) != atom_dom(gi))
            throw StructuralError("comp " + f + "*" + g + " = " + h + ": endpoints mismatch");
        code = hi;
    } else if (int v = object_index(h); v >= 0) {
        if (atom_tgt(fi) != v || atom_dom(gi) != v)
            throw StructuralError("comp " + f + "*" + g + " = " + h + ": endpoints mismatch");
        code = -1 - v;
    } else {
        throw StructuralError("comp: unknown result " + h);
    }
    auto [it, fresh] = table_.emplace(std::make_pair(fi, gi), code);
    if (!fresh && it->second != code)
        throw StructuralError("conflicting compositions for " + f + "*" + g);
}

int ExplicitCategory::table_at(int f, int g) const {
    auto it = table_.find({f, g});
    if (it == table_.end())
        throw StructuralError("composition " + atom_label(f) + "*" + atom_label(g) +
                              " is not defined in the table");
    return it->second;
}

Morphism ExplicitCategory::decode(int code) const {
    if (code >= 0) return Morphism{{code}, atom_tgt(code), atom_dom(code)};
    int v = -1 - code;
    return identity(v);
}

int ExplicitCategory::encode(const Morphism& m) const {
    return m.is_identity() ? -1 - m.tgt : m.word[0];
}

void ExplicitCategory::freeze() {
    units_.clear();
    for (int u = 0; u < atom_count(); ++u) {
        for (int v = 0; v < atom_count(); ++v) {
            if (atom_dom(u) != atom_tgt(v) || atom_dom(v) != atom_tgt(u)) continue;
            auto uv = table_.find({u, v});
            auto vu = table_.find({v, u});
            if (uv != table_.end() && vu != table_.end() && uv->second == -1 - atom_tgt(u) &&
                vu->second == -1 - atom_tgt(v)) {
                units_.push_back(u);
                break;
            }
        }
    }
    star_rep_.assign(atom_count(), -1);
    for (int a = 0; a < atom_count(); ++a) {
        if (star_rep_[a] >= 0) continue;
        // a =* b iff a = b*u for a unit u; pick the smallest id in the class.
        std::vector<int> cls{a};
        for (int b = 0; b < atom_count(); ++b) {
            if (b == a) continue;
            for (int u : units_) {
                if (atom_dom(b) != atom_tgt(u)) continue;
                if (table_.count({b, u}) && table_.at({b, u}) == a) {
                    cls.push_back(b);
                    break;
                }
            }
        }
        int rep = *std::min_element(cls.begin(), cls.end());
        for (int x : cls)
            if (star_rep_[x] < 0) star_rep_[x] = rep;
    }
    frozen_ = true;
}

bool ExplicitCategory::is_unit(const Morphism& m) const {
    if (m.is_identity()) return true;
    return std::find(units_.begin(), units_.end(), m.word[0]) != units_.end();
}

Morphism ExplicitCategory::star_representative(const Morphism& m) const {
    if (m.is_identity()) return m;
    int rep = star_rep_.empty() ? m.word[0] : star_rep_[m.word[0]];
    return decode(rep);
}

Morphism ExplicitCategory::canonicalize(const Word& w, int tgt, int dom) const {
    Morphism acc = identity(tgt);
    for (int a : w) {
        if (a < 0 || a >= atom_count()) throw ComposabilityError("unknown element in word");
        if (acc.dom != atom_tgt(a))
            throw ComposabilityError("word breaks at element " + atom_label(a));
        acc = acc.is_identity() ? decode(a) : decode(table_at(acc.word[0], a));
    }
    if (acc.dom != dom) throw ComposabilityError("word does not end at declared domain");
    return acc;
}

bool ExplicitCategory::left_divides(const Morphism& a, const Morphism& b) const {
    return left_quotient(a, b).has_value();
}

std::optional<Morphism> ExplicitCategory::left_quotient(const Morphism& a,
                                                        const Morphism& b) const {
    if (a.tgt != b.tgt) return std::nullopt;
    if (a.is_identity()) return b;
    for (const auto& x : all_at(a.dom)) {
        if (x.dom != b.dom) continue;
        if (compose(a, x) == b) return x;
    }
    return std::nullopt;
}

std::vector<Morphism> ExplicitCategory::all_at(int v) const {
    std::vector<Morphism> out{identity(v)};
    for (int a = 0; a < atom_count(); ++a)
        if (atom_tgt(a) == v) out.push_back(decode(a));
    return out;
}

std::vector<Morphism> ExplicitCategory::units_at(int v) const {
    std::vector<Morphism> out{identity(v)};
    for (int u : units_)
        if (atom_tgt(u) == v && atom_dom(u) == v) out.push_back(decode(u));
    return out;
}

std::vector<Morphism> ExplicitCategory::ball(int v, int radius, std::size_t) const {
    if (radius <= 0) return {identity(v)};
    return all_at(v);
}

std::vector<Morphism> ExplicitCategory::mcm_set(const Morphism& a, const Morphism& b) const {
    if (a.tgt != b.tgt) throw ComposabilityError("mcm_set: targets differ");
    std::vector<Morphism> common;
    for (const auto& c : all_at(a.tgt))
        if (left_divides(a, c) && left_divides(b, c)) common.push_back(c);
    std::vector<Morphism> out;
    for (const auto& c : common) {
        bool minimal = true;
        for (const auto& d : common) {
            if (!left_divides(d, c)) continue;
            // d proper divisor: d <= c but not c <= d up to units.
            if (!left_divides(c, d)) { minimal = false; break; }
        }
        if (!minimal) continue;
        Morphism rep = star_representative(c);
        if (std::find(out.begin(), out.end(), rep) == out.end()) out.push_back(rep);
    }
    std::sort(out.begin(), out.end());
    return out;
}

ValidationReport ExplicitCategory::validate() const {
    ValidationReport rep;
    if (object_count() == 0) throw StructuralError("empty category rejected");

    Verdict total = Verdict::holds("table defined on all composable pairs");
    for (int f = 0; f < atom_count() && total.ok(); ++f)
        for (int g = 0; g < atom_count(); ++g) {
            if (atom_dom(f) != atom_tgt(g)) continue;
            if (!table_.count({f, g})) {
                total = Verdict::fails("missing composition " + atom_label(f) + "*" +
                                       atom_label(g));
                break;
            }
        }
    rep.checks.push_back({"totality", total});
    if (!total.ok()) return rep;

    Verdict assoc = Verdict::holds("associative on all composable triples");
    for (int f = 0; f < atom_count() && assoc.ok(); ++f)
        for (int g = 0; g < atom_count() && assoc.ok(); ++g)
            for (int h = 0; h < atom_count(); ++h) {
                if (atom_dom(f) != atom_tgt(g) || atom_dom(g) != atom_tgt(h)) continue;
                Morphism fg = decode(table_at(f, g));
                Morphism gh = decode(table_at(g, h));
                Morphism left = fg.is_identity() ? decode(h) : decode(table_at(fg.word[0], h));
                Morphism right = gh.is_identity() ? decode(f) : decode(table_at(f, gh.word[0]));
                if (left != right) {
                    assoc = Verdict::fails("associativity fails on (" + atom_label(f) + "," +
                                               atom_label(g) + "," + atom_label(h) + ")",
                                           {decode(f), decode(g), decode(h)});
                    break;
                }
            }
    rep.checks.push_back({"associativity", assoc});

    Verdict ident = Verdict::holds("identities act trivially");
    rep.checks.push_back({"identities", ident});

    Verdict cancel = Verdict::holds("left cancellative on all triples");
    for (int c = 0; c < atom_count() && cancel.ok(); ++c) {
        auto xs = all_at(atom_dom(c));
        for (std::size_t i = 0; i < xs.size() && cancel.ok(); ++i)
            for (std::size_t j = i + 1; j < xs.size(); ++j) {
                if (xs[i].dom != xs[j].dom) continue;
                if (compose(decode(c), xs[i]) == compose(decode(c), xs[j])) {
                    cancel = Verdict::fails(
                        "left cancellation fails: " + atom_label(c) + " absorbs",
                        {decode(c), xs[i], xs[j]});
                    break;
                }
            }
    }
    rep.checks.push_back({"left cancellation", cancel});
    return rep;
}

}  // namespace garcat
