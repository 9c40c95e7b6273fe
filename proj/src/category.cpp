#include "garcat/category.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace garcat {

const char* status_name(Status s) {
    switch (s) {
        case Status::Holds: return "Holds";
        case Status::Fails: return "Fails";
        case Status::Unknown: return "Unknown";
    }
    return "?";
}

int Category::object_index(const std::string& label) const {
    for (int v = 0; v < object_count(); ++v)
        if (object_label(v) == label) return v;
    return -1;
}

int Category::atom_index(const std::string& label) const {
    for (int a = 0; a < atom_count(); ++a)
        if (atom_label(a) == label) return a;
    return -1;
}

Morphism Category::identity(int v) const { return Morphism{{}, v, v}; }

Morphism Category::atom(int a) const {
    return canonicalize({a}, atom_tgt(a), atom_dom(a));
}

Morphism Category::compose(const Morphism& a, const Morphism& b) const {
    if (a.dom != b.tgt)
        throw ComposabilityError("compose: domain of left factor (" + object_label(a.dom) +
                                 ") != target of right factor (" + object_label(b.tgt) + ")");
    Word w = a.word;
    w.insert(w.end(), b.word.begin(), b.word.end());
    return canonicalize(w, a.tgt, b.dom);
}

std::vector<Morphism> Category::ball(int v, int radius, std::size_t cap) const {
    std::set<Morphism> seen;
    std::vector<Morphism> frontier{identity(v)};
    seen.insert(frontier.front());
    for (int step = 0; step < radius; ++step) {
        std::vector<Morphism> next;
        for (const auto& m : frontier) {
            for (int a = 0; a < atom_count(); ++a) {
                if (atom_tgt(a) != m.dom) continue;
                Morphism ext = compose(m, atom(a));
                if (seen.insert(ext).second) {
                    next.push_back(ext);
                    if (seen.size() > cap)
                        throw CapacityError("ball: enumeration cap exceeded at vertex " +
                                            object_label(v));
                }
            }
        }
        if (next.empty()) break;
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

std::string Category::format(const Morphism& m) const {
    if (m.is_identity()) return "id:" + object_label(m.tgt);
    bool wide = false;
    for (int a : m.word)
        if (atom_label(a).size() > 1) wide = true;
    std::string out;
    for (std::size_t i = 0; i < m.word.size(); ++i) {
        if (i && wide) out += ".";
        out += atom_label(m.word[i]);
    }
    return out;
}

Verdict left_cancellation_probe(const Category& cat, int depth) {
    for (int v = 0; v < cat.object_count(); ++v) {
        auto cs = cat.ball(v, depth);
        for (const auto& c : cs) {
            auto xs = cat.ball(c.dom, depth);
            for (std::size_t i = 0; i < xs.size(); ++i)
                for (std::size_t j = i + 1; j < xs.size(); ++j) {
                    if (cat.compose(c, xs[i]) == cat.compose(c, xs[j]))
                        return Verdict::fails("left cancellation violated",
                                              {c, xs[i], xs[j]});
                }
        }
    }
    return Verdict::holds("no violation on ball", false, depth);
}

Verdict right_cancellation_probe(const Category& cat, int depth) {
    for (int v = 0; v < cat.object_count(); ++v) {
        auto xs = cat.ball(v, depth);
        for (std::size_t i = 0; i < xs.size(); ++i)
            for (std::size_t j = i + 1; j < xs.size(); ++j) {
                if (xs[i].dom != xs[j].dom) continue;
                auto zs = cat.ball(xs[i].dom, depth);
                for (const auto& z : zs) {
                    if (cat.compose(xs[i], z) == cat.compose(xs[j], z))
                        return Verdict::fails("right cancellation violated",
                                              {xs[i], xs[j], z});
                }
            }
    }
    return Verdict::holds("no violation on ball", false, depth);
}

Verdict finite_alignment_probe(const Category& cat, int depth) {
    if (std::string(cat.backend_name()) == "kgraph")
        return Verdict::holds("structural: row-finite degree joins", true);
    if (std::string(cat.backend_name()) == "artin")
        return Verdict::holds("structural: presentation complete for right reversing", true);
    for (int v = 0; v < cat.object_count(); ++v) {
        auto as = cat.ball(v, depth);
        auto wide = cat.ball(v, 2 * depth);
        for (const auto& a : as)
            for (const auto& b : as) {
                auto mcms = cat.mcm_set(a, b);
                for (const auto& m : wide) {
                    if (!cat.left_divides(a, m) || !cat.left_divides(b, m)) continue;
                    bool covered = false;
                    for (const auto& c : mcms)
                        if (cat.left_divides(c, m)) { covered = true; break; }
                    if (!covered)
                        return Verdict::fails("common multiple not covered by mcm set",
                                              {a, b, m});
                }
            }
    }
    return Verdict::holds("mcm sets finite and covering on ball", false, depth);
}

}  // namespace garcat
