#include <algorithm>
#include <cmath>
#include <vector>

#include "doctest.h"

#include "cmvkit/errors.hpp"
#include "cmvkit/oracle.hpp"
#include "cmvkit/random_gen.hpp"
#include "cmvkit/spectral.hpp"

#include "test_util.hpp"

using cmv::Complex;
using cmv::UnitPoint;
using cmv::VerblunskyData;

namespace {

VerblunskyData free_data(std::size_t n, Complex beta) {
  return VerblunskyData::make(std::vector<Complex>(n - 1, Complex{}), beta);
}

}  // namespace

TEST_CASE("eigenvalues of the free matrix are roots of unity") {
  const auto eigs = cmv::eigenvalues(free_data(4, Complex{1.0, 0.0}));
  REQUIRE(eigs.size() == 4);
  for (int j = 0; j < 4; ++j) {
    CHECK(testutil::circ_diff(eigs[j].angle, 0.5 * cmv::kPi * j) < 1e-12);
  }
}

TEST_CASE("eigenvalues of rotated free matrices follow the closed form") {
  for (std::size_t n : {1u, 2u, 5u, 8u}) {
    for (double theta : {0.0, 1.0, cmv::kPi}) {
      const auto eigs = cmv::eigenvalues(free_data(n, std::polar(1.0, -theta)));
      REQUIRE(eigs.size() == n);
      std::vector<double> expected;
      for (std::size_t j = 0; j < n; ++j) {
        expected.push_back(
            cmv::normalize_angle((theta + cmv::kTwoPi * j) / static_cast<double>(n)));
      }
      std::sort(expected.begin(), expected.end());
      for (std::size_t j = 0; j < n; ++j) {
        CHECK(testutil::circ_diff(eigs[j].angle, expected[j]) < 1e-12);
      }
    }
  }
}

TEST_CASE("single eigenvalue of an order-1 matrix") {
  const Complex beta = std::polar(1.0, 2.2);
  const auto eigs = cmv::eigenvalues(VerblunskyData::make({}, beta));
  REQUIRE(eigs.size() == 1);
  CHECK(cmv::chordal(eigs[0].value, std::conj(beta)) < 1e-12);
}

TEST_CASE("eigenvalues annihilate the paraorthogonal polynomial") {
  cmv::SplitMix64 g(41);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + g.below(12);
    const VerblunskyData data = cmv::random_verblunsky(g, n, 0.9);
    const auto sys = cmv::szego_forward(data);
    const auto eigs = cmv::eigenvalues(data);
    REQUIRE(eigs.size() == n);
    double min_gap = cmv::kTwoPi;
    for (std::size_t j = 0; j < n; ++j) {
      CHECK(std::abs(std::abs(eigs[j].value) - 1.0) < 1e-10);
      CHECK(std::abs(sys.phi_tilde(eigs[j].value)) < 1e-9);
      if (n > 1) {
        min_gap = std::min(min_gap,
                           testutil::circ_diff(eigs[j].angle, eigs[(j + 1) % n].angle));
      }
    }
    if (n > 1) CHECK(min_gap > 1e-9);  // spectra are simple
  }
}

TEST_CASE("tolerance parameter is validated") {
  CHECK_THROWS_AS(cmv::eigenvalues(free_data(2, Complex{1.0, 0.0}), 1e-3),
                  cmv::ValidationError);
  CHECK_THROWS_AS(cmv::eigenvalues(free_data(2, Complex{1.0, 0.0}), 0.0),
                  cmv::ValidationError);
}

TEST_CASE("Weyl function closed forms") {
  const Complex beta = std::polar(1.0, -0.4);
  const Complex w1 = cmv::weyl_eval(VerblunskyData::make({}, beta), Complex{2.0, 0.0});
  CHECK(std::abs(w1 - 1.0 / (2.0 - std::conj(beta))) < 1e-14);

  const VerblunskyData d2 = free_data(2, Complex{1.0, 0.0});
  const Complex z{0.3, 1.7};
  CHECK(std::abs(cmv::weyl_eval(d2, z) - z / (z * z - 1.0)) < 1e-13);
}

TEST_CASE("Weyl function refuses near-pole evaluations") {
  const VerblunskyData d = free_data(4, Complex{1.0, 0.0});
  CHECK_THROWS_AS((void)cmv::weyl_eval(d, Complex{1.0, 0.0}), cmv::PoleProximity);
  CHECK_THROWS_AS((void)cmv::weyl_eval(d, Complex{0.0, 1.0 + 1e-12}),
                  cmv::PoleProximity);
}

TEST_CASE("Weyl function equals its partial-fraction expansion") {
  cmv::SplitMix64 g(42);
  for (int trial = 0; trial < 15; ++trial) {
    const std::size_t n = 1 + g.below(10);
    const VerblunskyData data = cmv::random_verblunsky(g, n, 0.9);
    const auto m = cmv::spectral_measure(data);
    for (int s = 0; s < 5; ++s) {
      const Complex z = std::polar(2.0, cmv::kTwoPi * (s + 0.37) / 5.0);
      Complex sum{};
      for (std::size_t j = 0; j < n; ++j) sum += m.masses[j] / (z - m.points[j].value);
      const Complex w = cmv::weyl_eval(data, z);
      CHECK(std::abs(w - sum) <= 1e-8 * std::abs(w));
    }
  }
}

TEST_CASE("spectral measure of the free matrix is uniform") {
  for (std::size_t n : {1u, 4u, 7u}) {
    const auto m = cmv::spectral_measure(free_data(n, Complex{1.0, 0.0}));
    REQUIRE(m.masses.size() == n);
    for (double mu : m.masses) {
      CHECK(std::abs(mu - 1.0 / static_cast<double>(n)) < 1e-12);
    }
  }
}

TEST_CASE("spectral measure is a normalized positive measure") {
  cmv::SplitMix64 g(43);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + g.below(10);
    const auto m = cmv::spectral_measure(cmv::random_verblunsky(g, n, 0.9));
    double sum = 0.0;
    for (double mu : m.masses) {
      CHECK(mu > 0.0);
      sum += mu;
    }
    CHECK(std::abs(sum - 1.0) <= 1e-10);
    CHECK_NOTHROW(cmv::validate(m));
  }
}

TEST_CASE("rotation covariance of the data and the spectrum") {
  cmv::SplitMix64 g(44);
  const VerblunskyData data = cmv::random_verblunsky(g, 6, 0.9);
  CHECK(cmv::rotate(data, Complex{1.0, 0.0}).alpha == data.alpha);

  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t n = 1 + g.below(9);
    const VerblunskyData d = cmv::random_verblunsky(g, n, 0.9);
    const Complex tau = cmv::random_unimodular(g);
    const auto rotated = cmv::eigenvalues(cmv::rotate(d, tau));
    std::vector<UnitPoint> expected;
    for (const UnitPoint& zeta : cmv::eigenvalues(d)) {
      expected.push_back(UnitPoint::from_value(zeta.value / tau));
    }
    CHECK(testutil::match_defect(expected, rotated) < 1e-9);
  }
  CHECK_THROWS_AS(cmv::rotate(data, Complex{0.5, 0.0}), cmv::TauNotUnimodular);
}

TEST_CASE("boundary parameter is recovered from computed eigenvalues") {
  cmv::SplitMix64 g(45);
  for (int trial = 0; trial < 15; ++trial) {
    const std::size_t n = 1 + g.below(10);
    const VerblunskyData data = cmv::random_verblunsky(g, n, 0.9);
    std::vector<Complex> roots;
    for (const auto& zeta : cmv::eigenvalues(data)) roots.push_back(zeta.value);
    CHECK(std::abs(cmv::beta_from_spectrum(roots) - data.beta) < 1e-9);
  }
}

TEST_CASE("free-case rotation moves beta to tau^n") {
  const std::size_t n = 5;
  const double t = 0.37;
  const auto rotated = cmv::rotate(free_data(n, Complex{1.0, 0.0}), std::polar(1.0, t));
  CHECK(std::abs(rotated.beta - std::polar(1.0, n * t)) < 1e-12);
  const auto eigs = cmv::eigenvalues(rotated);
  for (std::size_t j = 0; j < n; ++j) {
    const double want = cmv::normalize_angle(cmv::kTwoPi * j / double(n) - t);
    double best = cmv::kTwoPi;
    for (const auto& e : eigs) best = std::min(best, testutil::circ_diff(e.angle, want));
    CHECK(best < 1e-10);
  }
}
