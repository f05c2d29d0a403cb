#pragma once

#include <iosfwd>

#include "octa/complex.hpp"

namespace octa {

// Triangle-mesh OBJ of all cell facets for external viewers. Rationals are
// rendered as shortest round-trip decimals; the export is presentation-only
// and lossy by design (8 facet records per cell, no dedup).
void write_obj(std::ostream& out, const CrossPolytopalComplex& c);

}  // namespace octa
