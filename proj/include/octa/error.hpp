#pragma once

#include <stdexcept>
#include <string>

namespace octa {

// Base class for every failure the pipeline can signal. The CLI maps
// subclasses onto its exit-code contract.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input points are collinear/coplanar where a full-dimensional hull is needed.
struct DegenerateInput : Error {
  using Error::Error;
};

// The polytope graph admits no proper 3-coloring.
struct NotBalanced : Error {
  using Error::Error;
};

// A {2,3,4}-colored triangle of the cone triangulation is not shared by
// exactly two tetrahedra.
struct MatchingFailure : Error {
  using Error::Error;
};

// A geometric halving search hit its cap. Signals a violated precondition
// (or a kernel bug), not a tuning problem.
struct SearchExhausted : Error {
  using Error::Error;
};

// Internal: an assembled cell failed certification; consumed by the global
// retry loop and surfaced as SearchExhausted once retries are spent.
struct CellCertificationFailed : Error {
  using Error::Error;
};

// A file could not be parsed. `line` is 1-based; 0 means "whole file".
struct ParseError : Error {
  int line;
  ParseError(int line_, const std::string& msg)
      : Error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

// A structurally or geometrically invalid polytope was supplied.
struct InvalidPolytope : Error {
  using Error::Error;
};

}  // namespace octa
