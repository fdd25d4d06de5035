#include "cmvkit/verblunsky.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "cmvkit/errors.hpp"

namespace cmv {

namespace {
constexpr double kAlphaMargin = 1e-12;   // |alpha| must stay below 1 - margin
constexpr double kUnimodularTol = 1e-12;
}  // namespace

VerblunskyData VerblunskyData::make(std::vector<Complex> alpha, Complex beta) {
  VerblunskyData d;
  d.n = alpha.size() + 1;
  d.alpha = std::move(alpha);
  d.beta = beta;
  validate(d);
  return d;
}

void validate(const VerblunskyData& data) {
  if (data.n == 0) throw LengthMismatch("matrix order must be positive");
  if (data.n != data.alpha.size() + 1) {
    throw LengthMismatch("order " + std::to_string(data.n) +
                         " inconsistent with " + std::to_string(data.alpha.size()) +
                         " Verblunsky coefficients");
  }
  for (std::size_t j = 0; j < data.alpha.size(); ++j) {
    require_finite(data.alpha[j], "alpha");
    if (std::abs(data.alpha[j]) >= 1.0 - kAlphaMargin) {
      throw AlphaOutOfDisk("|alpha_" + std::to_string(j) + "| = " +
                           std::to_string(std::abs(data.alpha[j])) +
                           " not strictly inside the unit disk");
    }
  }
  require_finite(data.beta, "beta");
  if (std::abs(std::abs(data.beta) - 1.0) >= kUnimodularTol) {
    throw BetaNotUnimodular("|beta| = " + std::to_string(std::abs(data.beta)));
  }
}

double rho(Complex alpha) { return std::sqrt(1.0 - std::norm(alpha)); }

DenseUnitary identity_matrix(std::size_t n) {
  DenseUnitary m;
  m.order = n;
  m.entries.assign(n * n, Complex{});
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Complex{1.0, 0.0};
  return m;
}

DenseUnitary multiply(const DenseUnitary& a, const DenseUnitary& b) {
  const std::size_t n = a.order;
  DenseUnitary c;
  c.order = n;
  c.entries.assign(n * n, Complex{});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a.at(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) c.at(i, j) += aik * b.at(k, j);
    }
  }
  return c;
}

double unitarity_defect(const DenseUnitary& c) {
  const std::size_t n = c.order;
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Complex s{};
      for (std::size_t k = 0; k < n; ++k) s += c.at(i, k) * std::conj(c.at(j, k));
      if (i == j) s -= 1.0;
      worst = std::max(worst, std::abs(s));
    }
  }
  return worst;
}

std::size_t pattern_violations(const DenseUnitary& c) {
  const std::size_t n = c.order;
  std::size_t bad = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t dist = i > j ? i - j : j - i;
      bool must_vanish = dist > 2;
      if (dist == 2) {
        if (j == i + 2 && i % 2 == 1) must_vanish = true;   // upper, odd row
        if (i == j + 2 && j % 2 == 0) must_vanish = true;   // lower, even col
      }
      if (must_vanish && c.at(i, j) != Complex{}) ++bad;
    }
  }
  return bad;
}

std::array<Complex, 4> theta_block(Complex alpha) {
  require_finite(alpha, "alpha");
  if (std::abs(alpha) >= 1.0 - kAlphaMargin) {
    throw AlphaOutOfDisk("theta block needs |alpha| < 1");
  }
  const double r = rho(alpha);
  return {std::conj(alpha), Complex{r, 0.0}, Complex{r, 0.0}, -alpha};
}

DenseUnitary assemble(const VerblunskyData& data) {
  validate(data);
  const std::size_t n = data.n;
  DenseUnitary l = identity_matrix(n);
  DenseUnitary m = identity_matrix(n);
  for (std::size_t j = 0; j + 1 < n; ++j) {
    const auto th = theta_block(data.alpha[j]);
    DenseUnitary& f = (j % 2 == 0) ? l : m;
    f.at(j, j) = th[0];
    f.at(j, j + 1) = th[1];
    f.at(j + 1, j) = th[2];
    f.at(j + 1, j + 1) = th[3];
  }
  // conj(beta) terminates whichever factor did not receive the last block.
  DenseUnitary& tail = (n % 2 == 1) ? l : m;
  tail.at(n - 1, n - 1) = std::conj(data.beta);
  return multiply(l, m);
}

SzegoSystem szego_forward(const VerblunskyData& data) {
  validate(data);
  SzegoSystem sys;
  sys.phi.reserve(data.n);
  sys.phi.push_back(Polynomial::constant(Complex{1.0, 0.0}));
  for (std::size_t k = 1; k < data.n; ++k) {
    const Polynomial& prev = sys.phi.back();
    sys.phi.push_back(z_times(prev) -
                      std::conj(data.alpha[k - 1]) * reversed(prev, k - 1));
  }
  const Polynomial& last = sys.phi.back();
  sys.phi_tilde = z_times(last) - std::conj(data.beta) * reversed(last, data.n - 1);
  return sys;
}

InverseSzegoResult szego_inverse(const Polynomial& phi_last) {
  if (!is_monic(phi_last)) {
    throw NonMonic("inverse recurrence needs a monic input polynomial");
  }
  const std::size_t n = phi_last.degree() + 1;
  InverseSzegoResult res;
  res.phi.assign(n, Polynomial{});
  res.phi[n - 1] = phi_last;
  res.alpha.assign(n - 1, Complex{});
  for (std::size_t j = n - 1; j-- > 0;) {
    const Polynomial& cur = res.phi[j + 1];  // monic, degree j + 1
    const Complex a = -std::conj(cur.coeff(0));
    if (std::abs(a) >= 1.0 - kAlphaMargin) {
      throw NumericalDegeneracy(
          "inverse recurrence produced |alpha_" + std::to_string(j) + "| = " +
          std::to_string(std::abs(a)) + "; roots at or outside the circle");
    }
    res.alpha[j] = a;
    const double r2 = 1.0 - std::norm(a);
    const Polynomial num = cur + std::conj(a) * reversed(cur, j + 1);
    // The constant term of num cancels exactly when cur sits on a genuine
    // Szego chain; a visible remainder flags an invalid input.
    if (std::abs(num.coeff(0)) > 1e-9) {
      throw NumericalDegeneracy("division remainder " +
                                std::to_string(std::abs(num.coeff(0))) +
                                " in inverse recurrence at step " + std::to_string(j));
    }
    std::vector<Complex> down(j + 1);
    for (std::size_t k = 0; k <= j; ++k) down[k] = num.coeff(k + 1) / r2;
    down[j] = Complex{1.0, 0.0};  // leading coefficient is rho^2 / rho^2
    res.phi[j] = Polynomial(std::move(down));
  }
  return res;
}

Complex beta_from_spectrum(const std::vector<Complex>& roots) {
  Complex prod{1.0, 0.0};
  for (Complex z : roots) {
    require_finite(z, "spectrum point");
    if (std::abs(std::abs(z) - 1.0) > 1e-8) {
      throw RootOffCircle("spectrum point has modulus " + std::to_string(std::abs(z)));
    }
    prod *= std::conj(z);
  }
  Complex beta = (roots.size() % 2 == 0) ? -prod : prod;  // (-1)^(n+1)
  return beta / std::abs(beta);
}

}  // namespace cmv
