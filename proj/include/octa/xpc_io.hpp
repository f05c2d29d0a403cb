#pragma once

#include <iosfwd>
#include <string>

#include "octa/complex.hpp"

namespace octa {

// Canonical on-disk form of a cross-polytopal complex ("xpc 1"): a vertex
// block of exact "p/q p/q p/q" rationals and a cell block of six pool
// indices per line in pairing order (v0 v1 | v2 v3 | v4 v5), followed by the
// type tag. A derived boundary block is appended for readers that want it.
// Round-trips losslessly: parsing a written file and re-writing it gives
// byte-identical output.
void write_xpc(std::ostream& out, const CrossPolytopalComplex& c);
void write_xpc_file(const std::string& path, const CrossPolytopalComplex& c);

CrossPolytopalComplex read_xpc(std::istream& in);  // throws ParseError
CrossPolytopalComplex read_xpc_file(const std::string& path);

}  // namespace octa
