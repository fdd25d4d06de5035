#include <algorithm>
#include <cmath>
#include <vector>

#include "doctest.h"

#include "cmvkit/errors.hpp"
#include "cmvkit/interlace.hpp"
#include "cmvkit/random_gen.hpp"

#include "test_util.hpp"

using cmv::CircularSet;
using cmv::Complex;
using cmv::UnitPoint;

namespace {

// Direct alternation oracle: every circular gap between consecutive Z1
// points must contain exactly one Z2 point.
bool alternates(const CircularSet& z1, const CircularSet& z2) {
  const std::size_t m = z1.size();
  for (std::size_t i = 0; i < m; ++i) {
    const double lo = z1.points[i].angle;
    const double width =
          m == 1 ? cmv::kTwoPi : cmv::arc_from_to(lo, z1.points[(i + 1) % m].angle);
    std::size_t count = 0;
    for (const UnitPoint& b : z2.points) {
      const double off = cmv::arc_from_to(lo, b.angle);
      if (off > 0.0 && off < width) ++count;
    }
    if (count != 1) return false;
  }
  return true;
}

CircularSet lattice_subset(const std::vector<int>& picks, int lattice) {
  std::vector<UnitPoint> pts;
  for (int p : picks) {
    pts.push_back(UnitPoint::from_angle(cmv::kTwoPi * p / static_cast<double>(lattice)));
  }
  return cmv::sort_circular(std::move(pts));
}

}  // namespace

TEST_CASE("circular sorting") {
  const auto set = cmv::sort_circular(
      testutil::points_from_angles({cmv::kPi, 0.0, 0.5 * cmv::kPi}));
  REQUIRE(set.size() == 3);
  CHECK(set.points[0].angle == 0.0);
  CHECK(set.points[1].angle == doctest::Approx(0.5 * cmv::kPi));
  CHECK(set.points[2].angle == doctest::Approx(cmv::kPi));

  // Idempotent on sorted input.
  const auto again = cmv::sort_circular(set.points);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(again.points[i].angle == set.points[i].angle);
  }

  CHECK_THROWS_AS(cmv::sort_circular(testutil::points_from_angles({0.1, 0.1})),
                  cmv::DuplicatePoints);
}

TEST_CASE("sorting random points yields strictly increasing angles") {
  cmv::SplitMix64 g(51);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<UnitPoint> pts;
    for (int j = 0; j < 10; ++j) {
      pts.push_back(UnitPoint::from_value(cmv::random_unimodular(g)));
    }
    const auto set = cmv::sort_circular(pts);
    for (std::size_t i = 0; i + 1 < set.size(); ++i) {
      CHECK(set.points[i].angle < set.points[i + 1].angle);
    }
  }
}

TEST_CASE("omega quotients on worked examples") {
  const auto z1 = cmv::sort_circular(testutil::points_from_angles({0.0, cmv::kPi}));
  const auto z2 = cmv::sort_circular(
      testutil::points_from_angles({0.5 * cmv::kPi, 1.5 * cmv::kPi}));
  const auto omega = cmv::omega_values(z1, z2);
  REQUIRE(omega.size() == 2);
  CHECK(omega[0] == doctest::Approx(-0.5));
  CHECK(omega[1] == doctest::Approx(-0.5));

  // Both Z2 points on one arc: signs split.
  const auto z2b = cmv::sort_circular(
      testutil::points_from_angles({0.25 * cmv::kPi, 0.75 * cmv::kPi}));
  const auto omegab = cmv::omega_values(z1, z2b);
  CHECK(omegab[0] < 0.0);
  CHECK(omegab[1] > 0.0);

  // Singleton sets; the hatted product is empty and equals 1.
  const auto single = cmv::omega_values(
      cmv::sort_circular(testutil::points_from_angles({0.0})),
      cmv::sort_circular(testutil::points_from_angles({cmv::kPi})));
  REQUIRE(single.size() == 1);
  CHECK(single[0] == doctest::Approx(-1.0));
}

TEST_CASE("omega quotients validate their inputs") {
  const auto z1 = cmv::sort_circular(testutil::points_from_angles({0.0, cmv::kPi}));
  const auto small = cmv::sort_circular(testutil::points_from_angles({1.0}));
  CHECK_THROWS_AS((void)cmv::omega_values(z1, small), cmv::SizeMismatch);
  const auto overlap = cmv::sort_circular(testutil::points_from_angles({0.0, 1.0}));
  CHECK_THROWS_AS((void)cmv::omega_values(z1, overlap), cmv::CommonPoint);
}

TEST_CASE("interlacing on worked examples") {
  std::vector<UnitPoint> roots4, rotated4;
  for (int j = 0; j < 4; ++j) {
    roots4.push_back(UnitPoint::from_angle(0.5 * cmv::kPi * j));
    rotated4.push_back(UnitPoint::from_angle(0.5 * cmv::kPi * j + 0.25 * cmv::kPi));
  }
  CHECK(cmv::interlaces(cmv::sort_circular(roots4), cmv::sort_circular(rotated4)));

  const auto z1 = cmv::sort_circular(testutil::points_from_angles({0.0, cmv::kPi}));
  const auto z2 = cmv::sort_circular(
      testutil::points_from_angles({0.25 * cmv::kPi, 0.75 * cmv::kPi}));
  CHECK_FALSE(cmv::interlaces(z1, z2));
}

TEST_CASE("alternating constructions always interlace") {
  cmv::SplitMix64 g(52);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t m = 1 + g.below(8);
    // Draw 2m sorted angles and alternate them between the two sets.
    std::vector<double> angles;
    for (std::size_t j = 0; j < 2 * m; ++j) angles.push_back(cmv::kTwoPi * g.uniform01());
    std::sort(angles.begin(), angles.end());
    bool distinct = true;
    for (std::size_t j = 0; j + 1 < angles.size(); ++j) {
      if (angles[j + 1] - angles[j] < 1e-6) distinct = false;
    }
    if (!distinct) continue;
    std::vector<UnitPoint> a, b;
    for (std::size_t j = 0; j < 2 * m; ++j) {
      (j % 2 == 0 ? a : b).push_back(UnitPoint::from_angle(angles[j]));
    }
    const auto z1 = cmv::sort_circular(a);
    const auto z2 = cmv::sort_circular(b);
    CHECK(cmv::interlaces(z1, z2));
    CHECK(alternates(z1, z2));
  }
}

TEST_CASE("sign test agrees with the alternation oracle on a lattice") {
  // Exhaustive over disjoint selections of size m <= 4 from a 12-point
  // lattice; the acceptance suite runs the larger stated enumeration.
  const int lattice = 12;
  for (std::size_t m = 1; m <= 4; ++m) {
    std::vector<int> sel1(m);
    const auto next_combination = [&](std::vector<int>& c, int maxval) {
      std::size_t i = c.size();
      while (i-- > 0) {
        if (c[i] < maxval - static_cast<int>(c.size() - 1 - i)) {
          ++c[i];
          for (std::size_t j = i + 1; j < c.size(); ++j) c[j] = c[j - 1] + 1;
          return true;
        }
      }
      return false;
    };
    for (std::size_t i = 0; i < m; ++i) sel1[i] = static_cast<int>(i);
    do {
      std::vector<int> rest;
      for (int v = 0; v < lattice; ++v) {
        if (std::find(sel1.begin(), sel1.end(), v) == sel1.end()) rest.push_back(v);
      }
      std::vector<int> idx(m);
      for (std::size_t i = 0; i < m; ++i) idx[i] = static_cast<int>(i);
      do {
        std::vector<int> sel2v(m);
        for (std::size_t i = 0; i < m; ++i) sel2v[i] = rest[idx[i]];
        const auto z1 = lattice_subset(sel1, lattice);
        const auto z2 = lattice_subset(sel2v, lattice);
        CHECK(cmv::interlaces(z1, z2) == alternates(z1, z2));
      } while (next_combination(idx, static_cast<int>(rest.size()) - 1));
    } while (next_combination(sel1, lattice - 1));
  }
}

TEST_CASE("interlacing is rotation invariant") {
  cmv::SplitMix64 g(53);
  for (int trial = 0; trial < 15; ++trial) {
    const std::size_t m = 1 + g.below(6);
    std::vector<double> angles;
    for (std::size_t j = 0; j < 2 * m; ++j) angles.push_back(cmv::kTwoPi * g.uniform01());
    std::sort(angles.begin(), angles.end());
    std::vector<UnitPoint> a, b;
    for (std::size_t j = 0; j < 2 * m; ++j) {
      // Nonalternating split half the time for variety.
      const bool first = (trial % 2 == 0) ? (j % 2 == 0) : (j < m);
      (first ? a : b).push_back(UnitPoint::from_angle(angles[j]));
    }
    const double shift = cmv::kTwoPi * g.uniform01();
    std::vector<UnitPoint> ar, br;
    for (const auto& p : a) ar.push_back(UnitPoint::from_angle(p.angle + shift));
    for (const auto& p : b) br.push_back(UnitPoint::from_angle(p.angle + shift));
    bool base = false, rotated = false;
    try {
      base = cmv::interlaces(cmv::sort_circular(a), cmv::sort_circular(b));
      rotated = cmv::interlaces(cmv::sort_circular(ar), cmv::sort_circular(br));
    } catch (const cmv::ValidationError&) {
      continue;  // degenerate draw
    }
    CHECK(base == rotated);
  }
}

TEST_CASE("omega values are real and bounded away from zero") {
  cmv::SplitMix64 g(54);
  for (int trial = 0; trial < 15; ++trial) {
    const std::size_t m = 1 + g.below(7);
    std::vector<UnitPoint> a, b;
    for (std::size_t j = 0; j < m; ++j) {
      a.push_back(UnitPoint::from_value(cmv::random_unimodular(g)));
      b.push_back(UnitPoint::from_value(cmv::random_unimodular(g)));
    }
    try {
      const auto omega = cmv::omega_values(cmv::sort_circular(a), cmv::sort_circular(b));
      for (double w : omega) CHECK(std::abs(w) > 1e-14);
    } catch (const cmv::ValidationError&) {
      continue;  // coincident draw
    }
  }
}
