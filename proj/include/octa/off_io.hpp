#pragma once

#include <iosfwd>
#include <string>

#include "octa/polytope.hpp"

namespace octa {

// Reads an OFF file with triangular facets. Coordinates may be "p/q"
// rational tokens, integers, or plain decimals; all are parsed exactly.
// Throws ParseError with a 1-based line number for lexical problems, and
// after parsing validates the polytope (InvalidPolytope on failure).
SimplicialPolytope read_off(std::istream& in);
SimplicialPolytope read_off_file(const std::string& path);

// Writes OFF with exact "p/q" coordinate tokens.
void write_off(std::ostream& out, const SimplicialPolytope& p);

}  // namespace octa
