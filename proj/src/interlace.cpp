#include "cmvkit/interlace.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "cmvkit/errors.hpp"

namespace cmv {

CircularSet sort_circular(std::vector<UnitPoint> points) {
  std::sort(points.begin(), points.end(),
            [](const UnitPoint& a, const UnitPoint& b) { return a.angle < b.angle; });
  const std::size_t n = points.size();
  for (std::size_t i = 0; n > 1 && i < n; ++i) {
    if (chordal(points[i], points[(i + 1) % n]) <= 1e-10) {
      throw DuplicatePoints("points " + std::to_string(i) + " and " +
                            std::to_string((i + 1) % n) +
                            " are within 1e-10 chordally");
    }
  }
  return CircularSet{std::move(points)};
}

std::vector<double> omega_values(const CircularSet& z1, const CircularSet& z2) {
  const std::size_t m = z1.size();
  if (m == 0 || z2.size() != m) {
    throw SizeMismatch("omega quotients need equal nonempty sets, got " +
                       std::to_string(m) + " and " + std::to_string(z2.size()));
  }
  for (const UnitPoint& a : z1.points) {
    for (const UnitPoint& b : z2.points) {
      if (chordal(a, b) <= 1e-10) {
        throw CommonPoint("sets share a point near angle " + std::to_string(a.angle));
      }
    }
  }
  std::vector<double> omega(m);
  for (std::size_t k = 0; k < m; ++k) {
    const double xk = z1.points[k].angle;
    double numer = 1.0;
    for (std::size_t j = 0; j < m; ++j) {
      numer *= std::sin(0.5 * (xk - z2.points[j].angle));
    }
    double denom = 1.0;
    for (std::size_t j = 0; j < m; ++j) {
      if (j == k) continue;
      denom *= std::sin(0.5 * (xk - z1.points[j].angle));
    }
    omega[k] = numer / denom;
    if (std::abs(omega[k]) <= 1e-14) {
      throw CommonPoint("vanishing interlacing quotient omega_" + std::to_string(k) +
                        "; points nearly coincide");
    }
  }
  return omega;
}

bool interlaces(const CircularSet& z1, const CircularSet& z2) {
  const std::vector<double> omega = omega_values(z1, z2);
  const bool positive = omega.front() > 0.0;
  for (double w : omega) {
    if ((w > 0.0) != positive) return false;
  }
  return true;
}

}  // namespace cmv
