#pragma once

#include <optional>
#include <string>
#include <vector>

#include "octa/complex.hpp"
#include "octa/polytope.hpp"

namespace octa {

struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  bool overall() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// Proper 3-colorability of the graph formed by all cell vertices and cell
// edges, decided by forced propagation over the skeleton's triangles (with
// backtracking on the rare unforced choice).
CheckResult check_balanced_skeleton(const CrossPolytopalComplex& c);

// Stellar-subdivides every cell at its vertex average and verifies the link
// of each interior edge of the refined ball is a single even cycle: a
// 4-cycle when the edge contains a cell center, a 2k-cycle for an original
// edge lying in k cells.
CheckResult check_even_links(const CrossPolytopalComplex& c);

// Boundary of the complex equals the polytope's facet complex exactly (same
// triangles as point sets, no new boundary vertices).
CheckResult check_proper(const CrossPolytopalComplex& c, const SimplicialPolytope& p);

// f3 = 23(f0-2), f2 = 2(f0-2) and even, and exact volume conservation.
CheckResult check_counts_and_volume(const CrossPolytopalComplex& c,
                                    const SimplicialPolytope& p);

// The full battery: validate_complex at the requested level, the skeleton
// and link checks, and (when a polytope is supplied) properness and counts.
VerificationReport verify_complex(const CrossPolytopalComplex& c,
                                  const SimplicialPolytope* against, ValidateLevel level);

}  // namespace octa
