#ifndef SPLITCM_PARSE_HPP
#define SPLITCM_PARSE_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "splitcm/graph.hpp"
#include "splitcm/monomial.hpp"

namespace splitcm {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// "x1^2*x3" style; the monomial 1 prints as "1".
std::string to_string(const Monomial& m);
/// "(x1*x2, x3)"; the zero ideal prints as "0" and the unit ideal as "(1)".
std::string to_string(const MonomialIdeal& I);

/// Parse "x1^2*x3" or "1" against a ring with num_vars variables.
Monomial parse_monomial(const std::string& text, int num_vars);

/// Ideal file format: a "ring <n>" line, then one generator per line.
/// "#" starts a comment; blank lines are skipped; no generator lines gives
/// the zero ideal and a single line "1" gives the unit ideal.
MonomialIdeal parse_ideal(std::istream& in);
MonomialIdeal parse_ideal_text(const std::string& text);
MonomialIdeal parse_ideal_file(const std::string& path);
std::string ideal_file_text(const MonomialIdeal& I);

/// Graph file format: "graph <n>" then "edge <i> <j>" lines, "#" comments.
SimpleGraph parse_graph(std::istream& in);
SimpleGraph parse_graph_text(const std::string& text);
SimpleGraph parse_graph_file(const std::string& path);
std::string graph_file_text(const SimpleGraph& G);

}  // namespace splitcm

#endif
