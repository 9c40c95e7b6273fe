#include "garcat/spec_io.hpp"

#include <map>
#include <sstream>
#include <vector>

namespace garcat {

namespace {

struct Line {
    int number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
        std::istringstream ls(raw);
        Line line{number, {}};
        std::string tok;
        while (ls >> tok) line.tokens.push_back(tok);
        if (!line.tokens.empty()) lines.push_back(std::move(line));
    }
    return lines;
}

[[noreturn]] void fail(const Line& line, int column, const std::string& what) {
    throw ParseError(line.number, column, what);
}

void expect_arity(const Line& line, std::size_t n, const std::string& usage) {
    if (line.tokens.size() != n)
        fail(line, 1, "expected '" + usage + "'");
}

}  // namespace

std::unique_ptr<Category> parse_spec(const std::string& text, long fuel) {
    auto lines = tokenize(text);
    if (lines.empty()) throw ParseError(1, 1, "empty description");
    const Line& head = lines.front();
    if (head.tokens[0] != "backend" || head.tokens.size() != 2)
        fail(head, 1, "first line must be 'backend graphpath|kgraph|artin|explicit'");
    const std::string& backend = head.tokens[1];

    if (backend == "graphpath" || backend == "kgraph") {
        int rank = 1;
        if (backend == "kgraph")
            for (std::size_t i = 1; i < lines.size(); ++i)
                if (lines[i].tokens[0] == "edge" && lines[i].tokens.size() == 6 &&
                    lines[i].tokens[4] == "color")
                    rank = std::max(rank, std::stoi(lines[i].tokens[5]));
        auto graph = backend == "graphpath" ? nullptr : std::make_unique<KGraphCategory>(rank);
        auto plain = backend == "graphpath" ? std::make_unique<GraphCategory>() : nullptr;
        auto with = [&](auto&& fn) { graph ? fn(*graph) : fn(*plain); };
        for (std::size_t i = 1; i < lines.size(); ++i) {
            const Line& line = lines[i];
            const std::string& op = line.tokens[0];
            try {
                if (op == "vertex") {
                    expect_arity(line, 2, "vertex <id>");
                    with([&](auto& g) { g.add_vertex(line.tokens[1]); });
                } else if (op == "edge") {
                    if (plain) {
                        expect_arity(line, 4, "edge <id> <src> <dst>");
                        plain->add_edge(line.tokens[1], line.tokens[2], line.tokens[3]);
                    } else {
                        int color = 1;
                        if (line.tokens.size() == 6 && line.tokens[4] == "color")
                            color = std::stoi(line.tokens[5]);
                        else if (line.tokens.size() != 4)
                            fail(line, 1, "expected 'edge <id> <src> <dst> [color <n>]'");
                        graph->add_edge(line.tokens[1], line.tokens[2], line.tokens[3], color);
                    }
                } else if (op == "square" && graph) {
                    expect_arity(line, 6, "square <e> <f> = <f'> <e'>");
                    if (line.tokens[3] != "=") fail(line, 4, "expected '='");
                    graph->add_square(line.tokens[1], line.tokens[2], line.tokens[4],
                                      line.tokens[5]);
                } else {
                    fail(line, 1, "unknown directive '" + op + "' for backend " + backend);
                }
            } catch (const StructuralError& e) {
                fail(line, 1, e.what());
            }
        }
        if (plain) return plain;
        return graph;
    }

    if (backend == "artin") {
        CoxeterData data;
        std::map<std::pair<int, int>, int> entries;
        for (std::size_t i = 1; i < lines.size(); ++i) {
            const Line& line = lines[i];
            const std::string& op = line.tokens[0];
            if (op == "atoms") {
                if (line.tokens.size() < 2) fail(line, 1, "expected 'atoms <a> <b> ...'");
                for (std::size_t j = 1; j < line.tokens.size(); ++j)
                    data.atoms.push_back(line.tokens[j]);
            } else if (op == "m") {
                expect_arity(line, 4, "m <a> <b> <entry|inf>");
                int a = -1, b = -1;
                for (std::size_t k = 0; k < data.atoms.size(); ++k) {
                    if (data.atoms[k] == line.tokens[1]) a = static_cast<int>(k);
                    if (data.atoms[k] == line.tokens[2]) b = static_cast<int>(k);
                }
                if (a < 0) fail(line, 2, "unknown atom " + line.tokens[1]);
                if (b < 0) fail(line, 3, "unknown atom " + line.tokens[2]);
                int entry;
                if (line.tokens[3] == "inf" || line.tokens[3] == "0") {
                    entry = 0;
                } else {
                    entry = std::stoi(line.tokens[3]);
                    if (entry < 2)
                        fail(line, 4, "Coxeter entries lie in {2,3,...} or inf");
                }
                entries[{a, b}] = entry;
                entries[{b, a}] = entry;
            } else {
                fail(line, 1, "unknown directive '" + op + "' for backend artin");
            }
        }
        int n = static_cast<int>(data.atoms.size());
        data.m.assign(n, std::vector<int>(n, 0));
        for (const auto& [key, value] : entries) data.m[key.first][key.second] = value;
        try {
            return std::make_unique<ArtinCategory>(std::move(data), fuel);
        } catch (const StructuralError& e) {
            fail(head, 1, e.what());
        }
    }

    if (backend == "explicit") {
        auto cat = std::make_unique<ExplicitCategory>();
        for (std::size_t i = 1; i < lines.size(); ++i) {
            const Line& line = lines[i];
            const std::string& op = line.tokens[0];
            try {
                if (op == "vertex") {
                    expect_arity(line, 2, "vertex <id>");
                    cat->add_vertex(line.tokens[1]);
                } else if (op == "mor") {
                    expect_arity(line, 4, "mor <id> <src> <dst>");
                    cat->add_element(line.tokens[1], line.tokens[2], line.tokens[3]);
                } else if (op == "comp") {
                    expect_arity(line, 5, "comp <f> <g> = <h>");
                    if (line.tokens[3] != "=") fail(line, 4, "expected '='");
                    cat->set_composition(line.tokens[1], line.tokens[2], line.tokens[4]);
                } else {
                    fail(line, 1, "unknown directive '" + op + "' for backend explicit");
                }
            } catch (const StructuralError& e) {
                fail(line, 1, e.what());
            }
        }
        cat->freeze();
        return cat;
    }

    fail(head, 2, "unknown backend '" + backend + "'");
}

std::string print_spec(const Category& cat) {
    std::ostringstream out;
    std::string name = cat.backend_name();
    out << "backend " << name << "\n";
    if (name == "graphpath" || name == "kgraph") {
        for (int v = 0; v < cat.object_count(); ++v)
            out << "vertex " << cat.object_label(v) << "\n";
        const auto* kg = dynamic_cast<const KGraphCategory*>(&cat);
        for (int a = 0; a < cat.atom_count(); ++a) {
            out << "edge " << cat.atom_label(a) << " " << cat.object_label(cat.atom_tgt(a))
                << " " << cat.object_label(cat.atom_dom(a));
            if (kg) out << " color " << kg->edge_color(a);
            out << "\n";
        }
        if (kg) {
            // Reconstruct one orientation of each square through the
            // canonical form of every bi-colored pair.
            for (int f = 0; f < kg->atom_count(); ++f)
                for (int g = 0; g < kg->atom_count(); ++g) {
                    if (kg->atom_dom(f) != kg->atom_tgt(g)) continue;
                    if (kg->edge_color(f) >= kg->edge_color(g)) continue;
                    Morphism m = kg->compose(kg->atom(f), kg->atom(g));
                    auto [x, y] = kg->factor(m, Degree::unit(kg->rank(), kg->edge_color(g)));
                    out << "square " << kg->atom_label(x.word[0]) << " "
                        << kg->atom_label(y.word[0]) << " = " << kg->atom_label(f) << " "
                        << kg->atom_label(g) << "\n";
                }
        }
    } else if (name == "artin") {
        const auto& at = dynamic_cast<const ArtinCategory&>(cat);
        out << "atoms";
        for (const auto& a : at.data().atoms) out << " " << a;
        out << "\n";
        for (int a = 0; a < at.data().size(); ++a)
            for (int b = a + 1; b < at.data().size(); ++b) {
                int m = at.data().entry(a, b);
                out << "m " << at.data().atoms[a] << " " << at.data().atoms[b] << " ";
                if (m == 0) out << "inf";
                else out << m;
                out << "\n";
            }
    } else {
        const auto& ex = dynamic_cast<const ExplicitCategory&>(cat);
        for (int v = 0; v < ex.object_count(); ++v)
            out << "vertex " << ex.object_label(v) << "\n";
        for (int a = 0; a < ex.atom_count(); ++a)
            out << "mor " << ex.atom_label(a) << " " << ex.object_label(ex.atom_tgt(a)) << " "
                << ex.object_label(ex.atom_dom(a)) << "\n";
        for (int f = 0; f < ex.atom_count(); ++f)
            for (int g = 0; g < ex.atom_count(); ++g) {
                if (ex.atom_dom(f) != ex.atom_tgt(g)) continue;
                Morphism r = ex.compose(ex.atom(f), ex.atom(g));
                out << "comp " << ex.atom_label(f) << " " << ex.atom_label(g) << " = "
                    << (r.is_identity() ? ex.object_label(r.tgt) : ex.atom_label(r.word[0]))
                    << "\n";
            }
    }
    return out.str();
}

}  // namespace garcat
