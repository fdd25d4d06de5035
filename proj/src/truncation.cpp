#include "cmvkit/truncation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "cmvkit/errors.hpp"
#include "cmvkit/spectral.hpp"

namespace cmv {

namespace {

constexpr double kAlphaMargin = 1e-12;

void check_bc(Complex alpha_last, Complex beta1, Complex beta2) {
  require_finite(alpha_last, "alpha");
  require_finite(beta1, "beta1");
  require_finite(beta2, "beta2");
  if (std::abs(alpha_last) >= 1.0 - kAlphaMargin) {
    throw AlphaOutOfDisk("pivot formulas need |alpha| < 1");
  }
  if (std::abs(std::abs(beta1) - 1.0) >= 1e-12 ||
      std::abs(std::abs(beta2) - 1.0) >= 1e-12) {
    throw BetaNotUnimodular("pivot formulas need unimodular boundary parameters");
  }
}

}  // namespace

Complex compute_B(Complex alpha_last, Complex beta1, Complex beta2) {
  check_bc(alpha_last, beta1, beta2);
  return std::conj(beta1) * beta2 * (1.0 - std::conj(beta2) * alpha_last) /
         (1.0 - beta2 * std::conj(alpha_last));
}

Complex compute_A(Complex alpha_last, Complex beta1, Complex beta2) {
  check_bc(alpha_last, beta1, beta2);
  return std::conj(beta1) * (1.0 - std::norm(alpha_last)) /
         (std::conj(beta2) - std::conj(alpha_last));
}

Complex blaschke_factor(Complex alpha, Complex z) {
  return (z - alpha) / (1.0 - std::conj(alpha) * z);
}

Complex solve_beta2_for_pivot(Complex alpha_last, Complex beta1, Complex pivot) {
  // compute_B(alpha, beta1, b) = conj(beta1) * blaschke_factor(alpha, b), so
  // b is the Moebius preimage of beta1 * pivot.
  const Complex w = beta1 * pivot;
  Complex beta2 = (w + alpha_last) / (1.0 + std::conj(alpha_last) * w);
  return beta2 / std::abs(beta2);
}

TruncationReport truncate_direct(const VerblunskyData& data1, Complex beta2) {
  validate(data1);
  if (data1.n < 2) throw SizeMismatch("truncation needs order >= 2");
  require_finite(beta2, "beta2");
  if (std::abs(std::abs(beta2) - 1.0) >= 1e-12) {
    throw BetaNotUnimodular("|beta2| = " + std::to_string(std::abs(beta2)));
  }
  const std::size_t n = data1.n;
  const Complex alpha_last = data1.alpha.back();
  std::vector<Complex> prefix(data1.alpha.begin(), data1.alpha.end() - 1);
  const VerblunskyData data2 = VerblunskyData::make(std::move(prefix), beta2);

  TruncationReport rep;
  rep.B = compute_B(alpha_last, data1.beta, beta2);
  rep.A = compute_A(alpha_last, data1.beta, beta2);
  rep.spectrum_full = CircularSet{eigenvalues(data1)};
  rep.spectrum_trunc = CircularSet{eigenvalues(data2)};

  // Residue identity (z - B) Phi_{n-1} = Phi~_n - A Phi~_{n-1}, checked at
  // three off-circle points before any classification is trusted.
  const SzegoSystem sys1 = szego_forward(data1);
  const SzegoSystem sys2 = szego_forward(data2);
  for (int s = 0; s < 3; ++s) {
    const Complex z = std::polar(2.0, kPi * (2.0 * s + 1.0) / 7.0);
    const Complex lhs = (z - rep.B) * sys1.phi.back()(z);
    const Complex rhs = sys1.phi_tilde(z) - rep.A * sys2.phi_tilde(z);
    const double scale = std::max(std::abs(lhs), 1.0);
    if (std::abs(lhs - rhs) > 1e-8 * scale) {
      throw DichotomyViolation("residue identity defect " +
                               std::to_string(std::abs(lhs - rhs) / scale));
    }
  }

  // Classification: nearest cross pair below eps = 1e-8 * n means singular,
  // with a x10 guard band so ambiguous inputs are refused.
  const double eps_match = 1e-8 * static_cast<double>(n);
  double best = std::numeric_limits<double>::infinity();
  double second = std::numeric_limits<double>::infinity();
  std::size_t best_i = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j + 1 < n; ++j) {
      const double d = chordal(rep.spectrum_full.points[i], rep.spectrum_trunc.points[j]);
      if (d < best) {
        second = best;
        best = d;
        best_i = i;
      } else if (d < second) {
        second = d;
      }
    }
  }
  if (best < eps_match) {
    if (second <= 10.0 * eps_match) {
      throw DichotomyViolation("two cross pairs below the matching guard band");
    }
    rep.classification = TruncationClass::Singular;
    rep.shared_point = rep.spectrum_full.points[best_i];
    if (chordal(rep.shared_point->value, rep.B) >= 1e-8) {
      throw DichotomyViolation("shared eigenvalue differs from the pivot B by " +
                               std::to_string(chordal(rep.shared_point->value, rep.B)));
    }
    std::vector<UnitPoint> reduced;
    reduced.reserve(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
      if (i != best_i) reduced.push_back(rep.spectrum_full.points[i]);
    }
    rep.interlace_witness =
        interlaces(sort_circular(std::move(reduced)), rep.spectrum_trunc);
  } else {
    rep.classification = TruncationClass::Regular;
    std::vector<UnitPoint> adjoined = rep.spectrum_trunc.points;
    adjoined.push_back(UnitPoint::from_value(rep.B));
    try {
      rep.interlace_witness =
          interlaces(rep.spectrum_full, sort_circular(std::move(adjoined)));
    } catch (const DuplicatePoints&) {
      // Pivot collides with a truncated eigenvalue although the spectra
      // stayed outside the singular matching threshold.
      throw DichotomyViolation("pivot indistinguishable from a truncated "
                               "eigenvalue in a regular classification");
    }
  }
  if (!rep.interlace_witness) {
    throw DichotomyViolation("spectra fail the interlacing part of the dichotomy");
  }
  return rep;
}

std::vector<double> masses_from_truncation(const TruncationReport& report,
                                           const Polynomial& phi_tilde_n,
                                           const Polynomial& phi_tilde_nm1) {
  const Polynomial dn = derivative(phi_tilde_n);
  const Polynomial dnm1 = derivative(phi_tilde_nm1);
  const std::size_t n = report.spectrum_full.size();
  std::vector<double> masses(n);
  double sum = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const UnitPoint& zeta = report.spectrum_full.points[k];
    Complex mu;
    if (report.shared_point &&
        chordal(zeta, *report.shared_point) < 1e-12) {
      mu = 1.0 - report.A * dnm1(report.B) / dn(report.B);
    } else {
      mu = -report.A * phi_tilde_nm1(zeta.value) /
           ((zeta.value - report.B) * dn(zeta.value));
    }
    if (std::abs(mu.imag()) >= 1e-8) {
      throw VerificationError("truncation mass has imaginary part " +
                              std::to_string(mu.imag()));
    }
    if (mu.real() <= 1e-12) {
      throw NonPositiveMass("truncation mass " + std::to_string(mu.real()));
    }
    masses[k] = mu.real();
    sum += masses[k];
  }
  if (std::abs(sum - 1.0) >= 1e-8) {
    throw VerificationError("truncation masses sum to " + std::to_string(sum));
  }
  return masses;
}

}  // namespace cmv
