#include "garcat/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

#include "garcat/artin_tools.hpp"
#include "garcat/kgraph_ideals.hpp"
#include "garcat/spec_io.hpp"

namespace garcat {

using json = nlohmann::ordered_json;

namespace {

constexpr const char* kToolVersion = "garcat 0.1.0";

json verdict_json(const Category& cat, const Verdict& v) {
    json j;
    j["status"] = status_name(v.status);
    j["certificate"] = v.certificate;
    j["exact"] = v.exact;
    if (v.depth >= 0) j["depth"] = v.depth;
    if (!v.witness.empty()) {
        json w = json::array();
        for (const auto& m : v.witness) w.push_back(cat.format(m));
        j["witness"] = w;
    }
    return j;
}

json pair_json(const GarsideFamily& fam, const InvariantPair& p) {
    json j;
    json t = json::array(), d = json::array();
    for (int i : p.T) t.push_back(fam.cat().format(fam.letter(i)));
    for (int v : p.D) d.push_back(fam.cat().object_label(v));
    j["T"] = t;
    j["D"] = d;
    return j;
}

json lattice_json(const GarsideFamily& fam, const SubspaceLattice& lat) {
    json j;
    json pairs = json::array();
    for (const auto& p : lat.pairs) pairs.push_back(pair_json(fam, p));
    j["pairs"] = pairs;
    json edges = json::array();
    for (const auto& [a, b] : lat.hasse) edges.push_back(json::array({a, b}));
    j["hasse"] = edges;
    j["boundary_contained"] = lat.boundary_index;
    j["boundary"] = lat.boundary;
    return j;
}

json character_json(const GarsideFamily& fam, const Character& chi) {
    json j;
    switch (chi.kind) {
        case Character::Kind::Vertex:
            j["kind"] = "vertex";
            j["vertex"] = fam.cat().object_label(chi.vertex);
            break;
        case Character::Kind::Finite:
            j["kind"] = "finite";
            j["word"] = fam.cat().format(chi.finite);
            break;
        case Character::Kind::Infinite: {
            j["kind"] = "infinite";
            json pre = json::array(), per = json::array();
            for (int l : chi.preperiod) pre.push_back(fam.cat().format(fam.letter(l)));
            for (int l : chi.period) per.push_back(fam.cat().format(fam.letter(l)));
            j["preperiod"] = pre;
            j["period"] = per;
            break;
        }
    }
    return j;
}

json family_json(const GarsideFamily& fam) {
    json letters = json::array();
    for (int i = 0; i < fam.size(); ++i) letters.push_back(fam.cat().format(fam.letter(i)));
    json j;
    j["letters"] = letters;
    j["locally_finite"] = fam.locally_finite();
    return j;
}

std::string render_text(const json& j, int indent = 0) {
    std::ostringstream out;
    std::string pad(indent, ' ');
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            if (value.is_object() || value.is_array()) {
                out << pad << key << ":\n" << render_text(value, indent + 2);
            } else {
                out << pad << key << ": " << value.dump() << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& value : j) {
            if (value.is_object() || value.is_array()) {
                out << pad << "-\n" << render_text(value, indent + 2);
            } else {
                out << pad << "- " << value.dump() << "\n";
            }
        }
    } else {
        out << pad << j.dump() << "\n";
    }
    return out.str();
}

Morphism parse_word_argument(const Category& cat, const std::string& text) {
    // Single-character atom labels may be concatenated; otherwise tokens
    // are separated by '.' or whitespace. "1" or the empty string denotes
    // the identity (single-object backends).
    std::vector<std::string> tokens;
    if (text.find('.') != std::string::npos || text.find(' ') != std::string::npos) {
        std::string cur;
        for (char ch : text) {
            if (ch == '.' || ch == ' ') {
                if (!cur.empty()) tokens.push_back(cur);
                cur.clear();
            } else {
                cur += ch;
            }
        }
        if (!cur.empty()) tokens.push_back(cur);
    } else if (text == "1" || text.empty()) {
        // identity
    } else if (cat.atom_index(text) >= 0) {
        tokens.push_back(text);
    } else {
        for (char ch : text) tokens.push_back(std::string(1, ch));
    }
    Word w;
    for (const auto& tok : tokens) {
        int a = cat.atom_index(tok);
        if (a < 0) throw DomainError("unknown atom '" + tok + "' in word argument");
        w.push_back(a);
    }
    if (w.empty()) {
        if (cat.object_count() != 1)
            throw DomainError("identity word needs a single-object backend");
        return cat.identity(0);
    }
    int tgt = cat.atom_tgt(w.front());
    int dom = cat.atom_dom(w.back());
    return cat.canonicalize(w, tgt, dom);
}

}  // namespace

std::string input_digest(const std::string& text) {
    // FNV-1a, 64 bit.
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    std::ostringstream out;
    out << std::hex << h;
    return out.str();
}

std::optional<GarsideFamily> standard_family(const Category& cat) {
    std::string name = cat.backend_name();
    if (name == "kgraph")
        return build_kgraph_family(dynamic_cast<const KGraphCategory&>(cat));
    if (name == "graphpath") {
        std::vector<Morphism> letters;
        for (int a = 0; a < cat.atom_count(); ++a) letters.push_back(cat.atom(a));
        return GarsideFamily(cat, std::move(letters), true);
    }
    if (name == "artin")
        return artin_garside_family(dynamic_cast<const ArtinCategory&>(cat));
    if (name == "explicit") {
        const auto& ex = dynamic_cast<const ExplicitCategory&>(cat);
        std::vector<Morphism> letters;
        for (int a = 0; a < ex.atom_count(); ++a) {
            Morphism m = ex.atom(a);
            if (!ex.is_unit(m) && ex.star_representative(m) == m) letters.push_back(m);
        }
        if (letters.empty()) return std::nullopt;
        return GarsideFamily(ex, std::move(letters), true);
    }
    return std::nullopt;
}

bool dot_well_formed(const std::string& dot) {
    int depth = 0;
    bool seen_header = dot.find("digraph") != std::string::npos;
    for (char ch : dot) {
        if (ch == '{') ++depth;
        if (ch == '}') --depth;
        if (depth < 0) return false;
    }
    return seen_header && depth == 0;
}

std::string lattice_dot(const GarsideFamily& fam, const SubspaceLattice& lat) {
    std::ostringstream out;
    out << "digraph lattice {\n  rankdir=BT;\n";
    for (std::size_t i = 0; i < lat.pairs.size(); ++i) {
        out << "  p" << i << " [label=\"" << pair_str(fam, lat.pairs[i]) << "\"";
        if (std::find(lat.boundary_index.begin(), lat.boundary_index.end(),
                      static_cast<int>(i)) != lat.boundary_index.end())
            out << ", style=filled, fillcolor=lightgrey";
        out << "];\n";
    }
    for (const auto& [a, b] : lat.hasse) out << "  p" << a << " -> p" << b << ";\n";
    out << "}\n";
    return out.str();
}

std::string skeleton_dot(const Category& cat) {
    static const char* styles[] = {"solid", "dashed", "dotted", "bold"};
    const auto* kg = dynamic_cast<const KGraphCategory*>(&cat);
    std::ostringstream out;
    out << "digraph skeleton {\n";
    for (int v = 0; v < cat.object_count(); ++v)
        out << "  v" << v << " [label=\"" << cat.object_label(v) << "\"];\n";
    for (int a = 0; a < cat.atom_count(); ++a) {
        out << "  v" << cat.atom_tgt(a) << " -> v" << cat.atom_dom(a) << " [label=\""
            << cat.atom_label(a) << "\"";
        if (kg) out << ", style=" << styles[(kg->edge_color(a) - 1) % 4];
        out << "];\n";
    }
    out << "}\n";
    return out.str();
}

RunResult run_command(const Category& cat, const std::string& input_text,
                      const std::string& command, const RunOptions& opts) {
    json report;
    report["schema"] = 1;
    report["tool"] = kToolVersion;
    report["input_digest"] = input_digest(input_text);
    report["backend"] = cat.backend_name();
    report["command"] = command;
    report["depth"] = opts.depth;
    report["fuel"] = opts.fuel;
    report["seed"] = opts.seed;

    std::optional<GarsideFamily> fam;
    auto need_family = [&]() -> GarsideFamily& {
        if (!fam) fam = standard_family(cat);
        if (!fam) throw CapacityError("no Garside family available for this input");
        return *fam;
    };

    int exit_code = 0;
    try {
        if (command == "validate") {
            auto rep = cat.validate();
            json checks = json::array();
            for (const auto& c : rep.checks) {
                json jc;
                jc["axiom"] = c.axiom;
                jc["verdict"] = verdict_json(cat, c.verdict);
                checks.push_back(jc);
            }
            report["category_checks"] = checks;
            try {
                auto& family = need_family();
                auto frep = validate_family(family, opts.depth);
                json fchecks = json::array();
                for (const auto& c : frep.checks) {
                    json jc;
                    jc["axiom"] = c.axiom;
                    jc["verdict"] = verdict_json(cat, c.verdict);
                    fchecks.push_back(jc);
                }
                report["family"] = family_json(family);
                report["family_checks"] = fchecks;
            } catch (const UnsupportedClassError& e) {
                report["family_error"] = e.what();
            } catch (const CapacityError& e) {
                report["family_error"] = e.what();
            }
            report["finite_alignment"] =
                verdict_json(cat, finite_alignment_probe(cat, std::min(opts.depth, 3)));
        } else if (command == "normal-form") {
            auto& family = need_family();
            Morphism m = parse_word_argument(cat, opts.argument);
            auto letters = normal_decompose(family, m);
            std::string rendered;
            for (std::size_t i = 0; i < letters.size(); ++i) {
                if (i) rendered += ".";
                rendered += cat.format(family.letter(letters[i]));
            }
            if (letters.empty()) rendered = "id:" + cat.object_label(m.tgt);
            report["input_word"] = opts.argument;
            report["normal_form"] = rendered;
            report["s_length"] = letters.size();
        } else if (command == "classify") {
            auto& family = need_family();
            auto lat = enumerate_pairs(family, opts.depth, 20, opts.jobs);
            report["family"] = family_json(family);
            report["lattice"] = lattice_json(family, lat);
        } else if (command == "boundary") {
            auto& family = need_family();
            InvariantPair bd = boundary_pair(family, opts.depth);
            report["family"] = family_json(family);
            report["boundary_pair"] = pair_json(family, bd);
            json tmax = json::array();
            for (int t : t_max_set(family, opts.depth))
                tmax.push_back(cat.format(family.letter(t)));
            report["t_max"] = tmax;
            json dmax = json::array();
            for (int v : d_max_set(family)) dmax.push_back(cat.object_label(v));
            report["d_max"] = dmax;
            json witnesses = json::array();
            for (int t : bd.T)
                witnesses.push_back(character_json(family, witness_char(family, bd, t)));
            report["boundary_witnesses"] = witnesses;
        } else if (command == "check") {
            GarsideFamily* family = nullptr;
            try {
                family = &need_family();
            } catch (...) {
            }
            std::vector<CriterionReport> reports;
            if (opts.argument.empty() || opts.argument == "all") {
                reports = check_all(cat, family, opts.depth);
            } else {
                for (auto& r : check_all(cat, family, opts.depth))
                    if (opts.argument == criterion_name(r.criterion)) reports.push_back(r);
                if (reports.empty())
                    throw DomainError("unknown criterion '" + opts.argument + "'");
            }
            json checks = json::array();
            for (const auto& r : reports) {
                json jc;
                jc["criterion"] = criterion_name(r.criterion);
                jc["verdict"] = verdict_json(cat, r.verdict);
                checks.push_back(jc);
            }
            report["criteria"] = checks;
            if (family) {
                InvariantPair bottom;
                InvariantPair bd = boundary_pair(*family, opts.depth);
                report["garside_boundary_topfree"] =
                    verdict_json(cat, garside_topfree_probe(*family, bottom, bd, opts.depth));
                report["garside_boundary_loccontr"] =
                    verdict_json(cat, garside_loccontr_probe(*family, bottom, bd, opts.depth));
            }
        } else if (command == "gc") {
            auto slash = opts.argument.find('/');
            std::string nums = slash == std::string::npos ? opts.argument
                                                          : opts.argument.substr(0, slash);
            std::string dens = slash == std::string::npos ? "" : opts.argument.substr(slash + 1);
            Morphism num = parse_word_argument(cat, nums);
            Morphism den = parse_word_argument(cat, dens);
            auto res = gc_probe(cat, num, den, opts.depth);
            report["fraction"] = cat.format(num) + " / " + cat.format(den);
            report["separated"] = res.separated;
            if (res.separated) report["separator"] = cat.format(res.separator);
            else report["note"] = "no separator up to depth";
        } else if (command == "export-dot") {
            std::string dot;
            if (opts.argument == "lattice") {
                auto& family = need_family();
                auto lat = enumerate_pairs(family, opts.depth, 20, opts.jobs);
                dot = lattice_dot(family, lat);
            } else if (opts.argument == "skeleton" || opts.argument.empty()) {
                dot = skeleton_dot(cat);
            } else {
                throw DomainError("export-dot expects 'lattice' or 'skeleton'");
            }
            if (!dot_well_formed(dot)) throw StructuralError("generated DOT failed validation");
            return {0, dot};
        } else {
            throw DomainError("unknown command '" + command + "'");
        }
    } catch (const CapacityError& e) {
        report["error"] = e.what();
        exit_code = 2;
    } catch (const UnsupportedClassError& e) {
        report["error"] = e.what();
        exit_code = 2;
    } catch (const std::invalid_argument& e) {
        report["error"] = e.what();
        exit_code = 1;
    }

    std::string rendered = opts.format == "text" ? render_text(report)
                                                 : report.dump(2) + "\n";
    return {exit_code, rendered};
}

}  // namespace garcat
