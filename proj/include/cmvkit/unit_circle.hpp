#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cmvkit/types.hpp"

namespace cmv {

// Point on the unit circle, kept both as a principal angle in [0, 2*pi) and
// as the cached complex value e^{i*angle}.
struct UnitPoint {
  double angle{0.0};
  Complex value{1.0, 0.0};

  static UnitPoint from_angle(double a);
  // Throws RootOffCircle when | |z| - 1 | > tol; otherwise projects z onto
  // the circle.
  static UnitPoint from_value(Complex z, double tol = 1e-8);
};

// Reduces an angle into [0, 2*pi).
double normalize_angle(double a);

inline double chordal(Complex a, Complex b) { return std::abs(a - b); }
inline double chordal(const UnitPoint& a, const UnitPoint& b) {
  return chordal(a.value, b.value);
}

// Length of the counterclockwise arc from `from` to `to`, in [0, 2*pi).
double arc_from_to(double from, double to);

struct MatchResult {
  std::vector<std::size_t> perm;  // perm[i] = index in b matched to a[i]
  double max_chordal{0.0};
};

// Greedy nearest-neighbour matching between two equal-size point sets.
// Succeeds when the induced map is a bijection with all distances <= tol.
std::optional<MatchResult> match_points(const std::vector<UnitPoint>& a,
                                        const std::vector<UnitPoint>& b,
                                        double tol);

}  // namespace cmv
