#include "cmvkit/unit_circle.hpp"

#include <cmath>
#include <limits>

#include "cmvkit/errors.hpp"

namespace cmv {

double normalize_angle(double a) {
  double r = std::fmod(a, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

UnitPoint UnitPoint::from_angle(double a) {
  if (!std::isfinite(a)) throw ValidationError("angle must be finite");
  UnitPoint p;
  p.angle = normalize_angle(a);
  p.value = std::polar(1.0, p.angle);
  return p;
}

UnitPoint UnitPoint::from_value(Complex z, double tol) {
  require_finite(z, "unit-circle point");
  const double r = std::abs(z);
  if (std::abs(r - 1.0) > tol) {
    throw RootOffCircle("point has modulus " + std::to_string(r) +
                        ", beyond circle tolerance");
  }
  UnitPoint p;
  p.value = z / r;
  p.angle = normalize_angle(std::arg(p.value));
  return p;
}

double arc_from_to(double from, double to) { return normalize_angle(to - from); }

std::optional<MatchResult> match_points(const std::vector<UnitPoint>& a,
                                        const std::vector<UnitPoint>& b,
                                        double tol) {
  if (a.size() != b.size()) return std::nullopt;
  MatchResult res;
  res.perm.resize(a.size());
  std::vector<bool> used(b.size(), false);
  for (std::size_t i = 0; i < a.size(); ++i) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t best_j = 0;
    for (std::size_t j = 0; j < b.size(); ++j) {
      const double d = chordal(a[i], b[j]);
      if (d < best) {
        best = d;
        best_j = j;
      }
    }
    if (best > tol || used[best_j]) return std::nullopt;
    used[best_j] = true;
    res.perm[i] = best_j;
    if (best > res.max_chordal) res.max_chordal = best;
  }
  return res;
}

}  // namespace cmv
