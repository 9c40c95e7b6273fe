#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "garcat/report.hpp"
#include "garcat/spec_io.hpp"

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int emit(const garcat::RunResult& result, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << result.output;
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "cannot open output file: " << out_path << "\n";
            return 1;
        }
        out << result.output;
    }
    return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"garcat: normal forms, character spaces and invariant-subspace "
                 "classification for Garside categories"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string input_path, out_path;
    garcat::RunOptions opts;
    app.add_option("-i,--input", input_path, "category description file")->required();
    app.add_option("--depth", opts.depth, "search depth for bounded checks")
        ->default_val(4);
    app.add_option("--fuel", opts.fuel, "step budget for word reversing")
        ->default_val(10000);
    app.add_option("--jobs", opts.jobs, "worker threads for enumerations")->default_val(1);
    app.add_option("--seed", opts.seed, "seed recorded in reports")->default_val(0);
    app.add_option("--format", opts.format, "output format: json, text or dot")
        ->default_val("json");
    app.add_option("--out", out_path, "write the report to a file instead of stdout");

    auto* validate = app.add_subcommand("validate", "check the category and family axioms");
    auto* nf = app.add_subcommand("normal-form", "greedy normal form of a word");
    std::string nf_word;
    nf->add_option("word", nf_word, "word over the atom labels")->required();
    auto* classify =
        app.add_subcommand("classify", "enumerate the closed-invariant-subspace pairs");
    auto* boundary = app.add_subcommand("boundary", "compute the boundary pair");
    auto* check = app.add_subcommand("check", "run groupoid criterion probes");
    std::string criterion = "all";
    check->add_option("criterion", criterion, "criterion name or 'all'")->default_val("all");
    auto* gc = app.add_subcommand("gc", "search a separator for a group fraction");
    std::string fraction;
    gc->add_option("fraction", fraction, "reduced fraction u/v over the atoms")->required();
    auto* dot = app.add_subcommand("export-dot", "emit DOT output");
    std::string dot_target = "skeleton";
    dot->add_option("target", dot_target, "lattice or skeleton")->default_val("skeleton");

    CLI11_PARSE(app, argc, argv);

    std::string text;
    std::unique_ptr<garcat::Category> cat;
    try {
        text = slurp(input_path);
        cat = garcat::parse_spec(text, opts.fuel);
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    }

    std::string command;
    if (validate->parsed()) command = "validate";
    if (nf->parsed()) {
        command = "normal-form";
        opts.argument = nf_word;
    }
    if (classify->parsed()) command = "classify";
    if (boundary->parsed()) command = "boundary";
    if (check->parsed()) {
        command = "check";
        opts.argument = criterion;
    }
    if (gc->parsed()) {
        command = "gc";
        opts.argument = fraction;
    }
    if (dot->parsed()) {
        command = "export-dot";
        opts.argument = dot_target;
        opts.format = "dot";
    }

    try {
        auto result = garcat::run_command(*cat, text, command, opts);
        return emit(result, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
