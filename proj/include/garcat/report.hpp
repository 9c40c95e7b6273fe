#ifndef GARCAT_REPORT_HPP
#define GARCAT_REPORT_HPP

#include <memory>
#include <optional>
#include <string>

#include "garcat/classify.hpp"
#include "garcat/groupoid_checks.hpp"

namespace garcat {

struct RunOptions {
    int depth = 4;
    long fuel = 10000;
    int jobs = 1;
    unsigned seed = 0;
    std::string format = "json";  // json | text | dot
    std::string argument;         // word for normal-form, fraction for gc, target for export-dot
};

// The family each backend analyzes by default: edges for a graph, the
// degree-(0/1) family for a k-graph, divisors of the lcm or clique products
// for Artin-Tits, all non-unit class representatives for explicit tables.
std::optional<GarsideFamily> standard_family(const Category& cat);

struct RunResult {
    int exit_code = 0;     // 0 done, 1 input error, 2 capacity/fuel exhausted
    std::string output;    // rendered in the requested format
};

// command: validate | normal-form | classify | boundary | check [<criterion>|all]
//          | gc | export-dot [lattice|skeleton]
RunResult run_command(const Category& cat, const std::string& input_text,
                      const std::string& command, const RunOptions& opts);

// Minimal syntactic DOT validation used by tests and the exporter itself.
bool dot_well_formed(const std::string& dot);

std::string lattice_dot(const GarsideFamily& fam, const SubspaceLattice& lat);
std::string skeleton_dot(const Category& cat);

std::string input_digest(const std::string& text);

}  // namespace garcat

#endif
