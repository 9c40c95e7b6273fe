#ifndef GARCAT_SPEC_IO_HPP
#define GARCAT_SPEC_IO_HPP

#include <memory>
#include <string>

#include "garcat/artin_category.hpp"
#include "garcat/explicit_category.hpp"
#include "garcat/graph_category.hpp"
#include "garcat/kgraph_category.hpp"

namespace garcat {

struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(int line_, int column_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ":" + std::to_string(column_) +
                             ": " + what_),
          line(line_),
          column(column_) {}
};

// Line-oriented category description:
//   backend graphpath|kgraph|artin|explicit
//   vertex <id>
//   edge <id> <src> <dst> [color <n>]      (graphpath, kgraph)
//   square <e> <f> = <f'> <e'>             (kgraph)
//   atoms <a> <b> ...                      (artin)
//   m <a> <b> <entry|inf>                  (artin)
//   mor <id> <src> <dst>                   (explicit)
//   comp <f> <g> = <h>                     (explicit)
// '#' starts a comment. An edge's src is the vertex the path leaves.
std::unique_ptr<Category> parse_spec(const std::string& text, long fuel = 10000);

// Inverse of parse_spec up to comments and ordering.
std::string print_spec(const Category& cat);

}  // namespace garcat

#endif
