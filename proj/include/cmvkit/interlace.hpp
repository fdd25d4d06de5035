#pragma once

#include <vector>

#include "cmvkit/types.hpp"
#include "cmvkit/unit_circle.hpp"

namespace cmv {

// Point set on the circle, sorted by strictly increasing principal angle and
// pairwise distinct (chordal gaps above 1e-10). Build through sort_circular.
struct CircularSet {
  std::vector<UnitPoint> points;

  std::size_t size() const { return points.size(); }
};

// Sorts by principal angle; throws DuplicatePoints when two inputs are
// within 1e-10 chordally.
CircularSet sort_circular(std::vector<UnitPoint> points);

// The sign quotients
//   omega_k = prod_j sin((x_{k,1} - x_{j,2})/2) / prod_{j != k} sin((x_{k,1} - x_{j,1})/2)
// for equal-size disjoint sets; empty products equal 1 (so m = 1 works).
// Throws SizeMismatch or CommonPoint.
std::vector<double> omega_values(const CircularSet& z1, const CircularSet& z2);

// True iff all omega_k share one strict sign, which characterizes interlacing
// of the two sets.
bool interlaces(const CircularSet& z1, const CircularSet& z2);

}  // namespace cmv
