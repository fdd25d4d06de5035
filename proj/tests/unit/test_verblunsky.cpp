#include <cmath>
#include <vector>

#include "doctest.h"

#include "cmvkit/errors.hpp"
#include "cmvkit/oracle.hpp"
#include "cmvkit/random_gen.hpp"
#include "cmvkit/verblunsky.hpp"

#include "test_util.hpp"

using cmv::Complex;
using cmv::DenseUnitary;
using cmv::VerblunskyData;

namespace {

// Entrywise formula oracle for the finite CMV matrix, written directly from
// the explicit entry table of the infinite matrix with the terminal
// substitutions alpha_{n-1} -> beta and rho_{n-1} -> 0. Independent of the
// factorized assembly path it checks.
Complex entry_formula(const VerblunskyData& d, std::size_t i, std::size_t j) {
  const std::size_t n = d.n;
  const auto alpha = [&](std::size_t k) -> Complex {
    return k == n - 1 ? d.beta : d.alpha[k];
  };
  const auto rho = [&](std::size_t k) -> double {
    return k == n - 1 ? 0.0 : cmv::rho(d.alpha[k]);
  };
  const auto in_range = [&](std::size_t k) { return k <= n - 1; };

  if (i == 0) {
    if (j == 0) return std::conj(alpha(0));
    if (j == 1 && in_range(1)) return std::conj(alpha(1)) * rho(0);
    if (j == 2 && in_range(1)) return rho(1) * rho(0);
    return Complex{};
  }
  if (i == 1) {
    if (j == 0) return Complex{rho(0), 0.0};
    if (j == 1 && in_range(1)) return -std::conj(alpha(1)) * alpha(0);
    if (j == 2 && in_range(1)) return -rho(1) * alpha(0);
    return Complex{};
  }
  if (i % 2 == 0) {  // even row 2m, m >= 1
    const std::size_t m = i / 2;
    if (j == 2 * m - 1) return std::conj(alpha(2 * m)) * rho(2 * m - 1);
    if (j == 2 * m) return -std::conj(alpha(2 * m)) * alpha(2 * m - 1);
    if (j == 2 * m + 1 && in_range(2 * m + 1))
      return std::conj(alpha(2 * m + 1)) * rho(2 * m);
    if (j == 2 * m + 2 && in_range(2 * m + 1)) return rho(2 * m + 1) * rho(2 * m);
    return Complex{};
  }
  const std::size_t m = (i - 1) / 2;  // odd row 2m+1, m >= 1
  if (j == 2 * m - 1) return Complex{rho(2 * m) * rho(2 * m - 1), 0.0};
  if (j == 2 * m) return -rho(2 * m) * alpha(2 * m - 1);
  if (j == 2 * m + 1 && in_range(2 * m + 1))
    return -std::conj(alpha(2 * m + 1)) * alpha(2 * m);
  if (j == 2 * m + 2 && in_range(2 * m + 1)) return -rho(2 * m + 1) * alpha(2 * m);
  return Complex{};
}

}  // namespace

TEST_CASE("validate accepts valid data and rejects bad data") {
  CHECK_NOTHROW(cmv::validate(VerblunskyData::make({}, Complex{1.0, 0.0})));
  CHECK_NOTHROW(cmv::validate(
      VerblunskyData::make({Complex{0.5, 0.0}}, Complex{0.6, 0.8})));
  CHECK_THROWS_AS(VerblunskyData::make({Complex{1.0, 0.0}}, Complex{1.0, 0.0}),
                  cmv::AlphaOutOfDisk);
  CHECK_THROWS_AS(VerblunskyData::make({}, Complex{0.5, 0.0}),
                  cmv::BetaNotUnimodular);
  VerblunskyData bad;
  bad.n = 3;  // but no coefficients
  CHECK_THROWS_AS(cmv::validate(bad), cmv::LengthMismatch);
}

TEST_CASE("theta block closed forms and unitarity") {
  const auto t0 = cmv::theta_block(Complex{});
  CHECK(t0[0] == Complex{});
  CHECK(t0[1] == Complex{1.0, 0.0});
  CHECK(t0[2] == Complex{1.0, 0.0});
  CHECK(t0[3] == Complex{});

  const auto t = cmv::theta_block(Complex{0.6, 0.0});
  CHECK(std::abs(t[0] - Complex{0.6, 0.0}) < 1e-15);
  CHECK(std::abs(t[1] - Complex{0.8, 0.0}) < 1e-15);
  CHECK(std::abs(t[3] - Complex{-0.6, 0.0}) < 1e-15);

  cmv::SplitMix64 g(21);
  for (int trial = 0; trial < 20; ++trial) {
    const auto th = cmv::theta_block(cmv::random_in_disk(g, 0.99));
    // th * th^H = I
    const Complex a = th[0], b = th[1], c = th[2], d = th[3];
    CHECK(std::abs(a * std::conj(a) + b * std::conj(b) - 1.0) < 1e-15);
    CHECK(std::abs(c * std::conj(c) + d * std::conj(d) - 1.0) < 1e-15);
    CHECK(std::abs(a * std::conj(c) + b * std::conj(d)) < 1e-15);
  }
  CHECK_THROWS_AS(cmv::theta_block(Complex{1.0, 0.0}), cmv::AlphaOutOfDisk);
}

TEST_CASE("assembly of small closed-form matrices") {
  const DenseUnitary c1 = cmv::assemble(VerblunskyData::make({}, Complex{0.0, 1.0}));
  CHECK(c1.order == 1);
  CHECK(c1.at(0, 0) == Complex{0.0, -1.0});

  const DenseUnitary c2 =
      cmv::assemble(VerblunskyData::make({Complex{}}, Complex{1.0, 0.0}));
  CHECK(c2.at(0, 0) == Complex{});
  CHECK(c2.at(0, 1) == Complex{1.0, 0.0});
  CHECK(c2.at(1, 0) == Complex{1.0, 0.0});
  CHECK(c2.at(1, 1) == Complex{});

  // Free case of order 3 is the cyclic shift.
  const DenseUnitary c3 =
      cmv::assemble(VerblunskyData::make({Complex{}, Complex{}}, Complex{1.0, 0.0}));
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      const Complex want = (i == (j + 1) % 3) ? Complex{1.0, 0.0} : Complex{};
      CHECK(c3.at(i, j) == want);
    }
  }
}

TEST_CASE("assembly matches the explicit entry formulas") {
  const VerblunskyData spec_example = VerblunskyData::make(
      {Complex{0.5, 0.0}, Complex{0.0, -0.3}, Complex{0.2, 0.0}}, Complex{0.0, 1.0});
  cmv::SplitMix64 g(22);
  std::vector<VerblunskyData> cases{spec_example};
  for (std::size_t n : {2u, 3u, 5u, 6u, 8u, 9u}) {
    cases.push_back(cmv::random_verblunsky(g, n, 0.9));
  }
  for (const auto& data : cases) {
    const DenseUnitary c = cmv::assemble(data);
    for (std::size_t i = 0; i < data.n; ++i) {
      for (std::size_t j = 0; j < data.n; ++j) {
        CHECK(std::abs(c.at(i, j) - entry_formula(data, i, j)) < 1e-14);
      }
    }
  }
}

TEST_CASE("assembled matrices are unitary with the barely-five-diagonal pattern") {
  cmv::SplitMix64 g(23);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + g.below(32);
    const VerblunskyData data = cmv::random_verblunsky(g, n, 0.99);
    const DenseUnitary c = cmv::assemble(data);
    CHECK(cmv::unitarity_defect(c) < 1e-12);
    CHECK(cmv::pattern_violations(c) == 0);
  }
}

TEST_CASE("forward recurrence closed forms") {
  // Free coefficients: Phi_k = z^k and the paraorthogonal z^n - conj(beta).
  const Complex beta{0.6, -0.8};
  const auto sys = cmv::szego_forward(
      VerblunskyData::make({Complex{}, Complex{}, Complex{}}, beta));
  for (std::size_t k = 0; k < 4; ++k) {
    CHECK(testutil::max_coeff_diff(sys.phi[k], cmv::Polynomial::monomial(k)) == 0.0);
  }
  CHECK(sys.phi_tilde.degree() == 4);
  CHECK(sys.phi_tilde.coeff(0) == -std::conj(beta));

  const auto one = cmv::szego_forward(VerblunskyData::make({}, beta));
  CHECK(one.phi.size() == 1);
  CHECK(one.phi[0].degree() == 0);
  CHECK(one.phi_tilde.coeff(0) == -std::conj(beta));
  CHECK(one.phi_tilde.coeff(1) == Complex{1.0, 0.0});
}

TEST_CASE("paraorthogonal polynomial equals the dense characteristic polynomial") {
  cmv::SplitMix64 g(24);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + g.below(8);
    const VerblunskyData data = cmv::random_verblunsky(g, n, 0.9);
    const auto sys = cmv::szego_forward(data);
    const DenseUnitary c = cmv::assemble(data);
    for (std::size_t s = 0; s <= n; ++s) {
      const Complex z =
          std::polar(2.0, cmv::kTwoPi * static_cast<double>(s) / (n + 1.0));
      const Complex det = cmv::dense_char_poly_at(c, z);
      CHECK(std::abs(sys.phi_tilde(z) - det) <= 1e-9 * std::abs(det));
    }
  }
}

TEST_CASE("chain polynomials are characteristic polynomials of leading blocks") {
  cmv::SplitMix64 g(25);
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t n = 2 + g.below(5);  // n <= 6
    const VerblunskyData data = cmv::random_verblunsky(g, n, 0.9);
    const auto sys = cmv::szego_forward(data);
    const DenseUnitary c = cmv::assemble(data);
    for (std::size_t k = 1; k < n; ++k) {
      DenseUnitary block;
      block.order = k;
      block.entries.resize(k * k);
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) block.at(i, j) = c.at(i, j);
      }
      for (std::size_t s = 0; s <= k; ++s) {
        const Complex z =
            std::polar(2.0, cmv::kTwoPi * static_cast<double>(s) / (k + 1.0) + 0.3);
        const Complex det = cmv::dense_char_poly_at(block, z);
        CHECK(std::abs(sys.phi[k](z) - det) <= 1e-8 * std::abs(det));
      }
    }
  }
}

TEST_CASE("inverse recurrence closed forms") {
  const auto lin = cmv::szego_inverse(cmv::Polynomial::monomial(1));
  REQUIRE(lin.alpha.size() == 1);
  CHECK(lin.alpha[0] == Complex{});

  for (std::size_t n : {3u, 6u}) {
    const auto free = cmv::szego_inverse(cmv::Polynomial::monomial(n - 1));
    REQUIRE(free.alpha.size() == n - 1);
    for (const Complex& a : free.alpha) CHECK(a == Complex{});
  }
}

TEST_CASE("inverse recurrence undoes the forward recurrence") {
  cmv::SplitMix64 g(26);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + g.below(12);
    const VerblunskyData data = cmv::random_verblunsky(g, n, 0.9);
    const auto sys = cmv::szego_forward(data);
    const auto rec = cmv::szego_inverse(sys.phi.back());
    REQUIRE(rec.alpha.size() == data.alpha.size());
    for (std::size_t j = 0; j < rec.alpha.size(); ++j) {
      CHECK(std::abs(rec.alpha[j] - data.alpha[j]) < 1e-10);
    }
    // The recovered chain reproduces the forward one.
    for (std::size_t k = 0; k < n; ++k) {
      CHECK(testutil::max_coeff_diff(rec.phi[k], sys.phi[k]) < 1e-10);
    }
  }
}

TEST_CASE("inverse recurrence rejects bad inputs") {
  CHECK_THROWS_AS(cmv::szego_inverse(cmv::Polynomial::monomial(2, Complex{2.0, 0.0})),
                  cmv::NonMonic);
  // Root on the circle: alpha_0 would have modulus 1.
  const cmv::Polynomial edge = cmv::from_roots({Complex{1.0, 0.0}});
  CHECK_THROWS_AS(cmv::szego_inverse(edge), cmv::NumericalDegeneracy);
}

TEST_CASE("boundary parameter from the paraorthogonal roots") {
  for (std::size_t n : {1u, 2u, 5u, 6u}) {
    std::vector<Complex> roots;
    for (std::size_t j = 0; j < n; ++j) {
      roots.push_back(std::polar(1.0, cmv::kTwoPi * j / static_cast<double>(n)));
    }
    CHECK(std::abs(cmv::beta_from_spectrum(roots) - Complex{1.0, 0.0}) < 1e-12);
  }
  const Complex xi = std::polar(1.0, 1.234);
  CHECK(std::abs(cmv::beta_from_spectrum({xi}) - std::conj(xi)) < 1e-15);
  CHECK_THROWS_AS(cmv::beta_from_spectrum({Complex{1.1, 0.0}}), cmv::RootOffCircle);
}
