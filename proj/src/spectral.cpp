#include "cmvkit/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "cmvkit/errors.hpp"

namespace cmv {

namespace {

constexpr double kMaxPhaseStep = 0.5 * kPi;  // refine above this increment
constexpr double kMinInterval = 1e-13;       // refinement floor (radians)

struct PhaseSample {
  double theta;
  Complex b;
  double phase;     // unwrapped
  double root_gap;  // |Phi(z)| / |Phi'(z)|: how close a zero of Phi can be
};

// Boundary value of the Blaschke product z Phi(z) / Phi*(z).
class BlaschkeBoundary {
 public:
  BlaschkeBoundary(const Polynomial& phi, const Polynomial& phi_star)
      : phi_(phi), phi_star_(phi_star), dphi_(derivative(phi)) {}

  Complex operator()(double theta) const {
    const Complex z = std::polar(1.0, theta);
    // Phi has no zeros on the circle, so Phi* does not vanish here either.
    return z * phi_(z) / phi_star_(z);
  }

  PhaseSample sample(double theta) const {
    const Complex z = std::polar(1.0, theta);
    const Complex p = phi_(z);
    const Complex b = z * p / phi_star_(z);
    const double gap = std::abs(p) / std::max(std::abs(dphi_(z)), 1e-30);
    return {theta, b, 0.0, gap};
  }

 private:
  const Polynomial& phi_;
  const Polynomial& phi_star_;
  Polynomial dphi_;
};

// Appends samples over (a, b] so that consecutive unwrapped phases differ by
// at most pi/2. The true phase is strictly increasing, so a measured negative
// increment means an unresolved wrap and forces a split. A zero of Phi just
// inside the circle concentrates a full 2*pi of phase in a window of the
// width of its distance to the circle; an interval short enough to hide one
// (by the Newton bound |Phi|/|Phi'| at both ends) is split as well, until
// its width drops below that distance.
// `left` is taken by value: pushing into `out` invalidates references.
void refine_interval(const BlaschkeBoundary& bval, PhaseSample left,
                     PhaseSample right, std::vector<PhaseSample>& out) {
  const double delta = std::arg(right.b / left.b);
  const double width = right.theta - left.theta;
  const bool may_hide_zero = std::min(left.root_gap, right.root_gap) < 4.0 * width;
  const bool resolved =
      delta >= -1e-12 && delta <= kMaxPhaseStep && !may_hide_zero;
  if (resolved || width < kMinInterval) {
    if (delta < -1e-6) {
      throw PhaseMonotonicityViolated(
          "phase decreased by " + std::to_string(-delta) + " near theta = " +
          std::to_string(left.theta) + "; parameters too close to the disk edge");
    }
    right.phase = left.phase + std::max(delta, 0.0);
    out.push_back(right);
    return;
  }
  const PhaseSample mid = bval.sample(0.5 * (left.theta + right.theta));
  refine_interval(bval, left, mid, out);
  refine_interval(bval, out.back(), right, out);
}

}  // namespace

void validate(const SpectralMeasure& m) {
  const std::size_t n = m.points.size();
  if (n == 0) throw SizeMismatch("measure must carry at least one point");
  if (m.masses.size() != n) {
    throw SizeMismatch("measure has " + std::to_string(n) + " points but " +
                       std::to_string(m.masses.size()) + " masses");
  }
  double sum = 0.0;
  for (double mu : m.masses) {
    if (!(mu > 0.0)) throw NonPositiveMass("measure mass " + std::to_string(mu));
    sum += mu;
  }
  if (std::abs(sum - 1.0) > 1e-10) {
    throw ValidationError("measure masses sum to " + std::to_string(sum));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0 && !(m.points[i - 1].angle < m.points[i].angle)) {
      throw ValidationError("measure points must have strictly increasing angles");
    }
    const double gap = chordal(m.points[i], m.points[(i + 1) % n]);
    if (n > 1 && gap <= 1e-10) {
      throw DuplicatePoints("measure points closer than 1e-10 chordally");
    }
  }
}

std::vector<UnitPoint> eigenvalues(const VerblunskyData& data, double tol_angle) {
  validate(data);
  if (!(tol_angle > 0.0 && tol_angle <= 1e-6)) {
    throw ValidationError("tol_angle must lie in (0, 1e-6]");
  }
  const std::size_t n = data.n;
  const SzegoSystem sys = szego_forward(data);
  const Polynomial& phi = sys.phi.back();
  const Polynomial phi_star = reversed(phi, n - 1);
  const Polynomial phi_tilde_deriv = derivative(sys.phi_tilde);
  const BlaschkeBoundary bval(phi, phi_star);

  // Phase walk over one period, adaptively refined.
  const std::size_t grid = 16 * n;
  const double cell = kTwoPi / static_cast<double>(grid);
  std::vector<PhaseSample> samples;
  samples.reserve(grid + 16);
  PhaseSample first = bval.sample(0.0);
  first.phase = std::arg(first.b);
  samples.push_back(first);
  for (std::size_t k = 1; k <= grid; ++k) {
    refine_interval(bval, samples.back(),
                    bval.sample(static_cast<double>(k) * cell), samples);
  }
  const double total = samples.back().phase - samples.front().phase;
  // A missed wrap shows up as a deficit of a full 2*pi; anything below 1e-3
  // is accumulation noise from coefficients at the very edge of the disk.
  if (std::abs(total - kTwoPi * static_cast<double>(n)) > 1e-3) {
    throw PhaseMonotonicityViolated("accumulated phase " + std::to_string(total) +
                                    " differs from 2*pi*n");
  }
  // Extend one initial cell past 2*pi so the last target is always bracketed.
  const std::size_t base = samples.size();
  for (std::size_t i = 1; i < base; ++i) {
    if (samples[i].theta > cell * 1.5) break;
    samples.push_back({samples[i].theta + kTwoPi, samples[i].b,
                       samples[i].phase + total, samples[i].root_gap});
  }

  const double f0 = samples.front().phase;
  const double offset = normalize_angle(std::arg(std::conj(data.beta)) - f0);
  std::vector<double> angles;
  angles.reserve(n);
  std::size_t cursor = 0;
  for (std::size_t m = 0; m < n; ++m) {
    const double target = f0 + offset + kTwoPi * static_cast<double>(m);
    while (cursor + 1 < samples.size() && samples[cursor + 1].phase < target) {
      ++cursor;
    }
    if (cursor + 1 >= samples.size()) {
      throw RootCountMismatch("lost bracket for eigenvalue " + std::to_string(m));
    }
    // Bisect inside [cursor, cursor+1]; the phase gain across the bracket is
    // at most pi/2 so principal arguments unwrap unambiguously.
    double lo = samples[cursor].theta;
    double hi = samples[cursor + 1].theta;
    Complex b_lo = samples[cursor].b;
    double f_lo = samples[cursor].phase;
    while (hi - lo > tol_angle) {
      const double mid = 0.5 * (lo + hi);
      const Complex bm = bval(mid);
      const double fm = f_lo + std::arg(bm / b_lo);
      if (fm < target) {
        lo = mid;
        b_lo = bm;
        f_lo = fm;
      } else {
        hi = mid;
      }
    }
    double root = 0.5 * (lo + hi);
    // One Newton step on the paraorthogonal polynomial along the circle.
    const Complex z = std::polar(1.0, root);
    const Complex deriv = phi_tilde_deriv(z);
    if (deriv != Complex{}) {
      const Complex step = sys.phi_tilde(z) / (Complex{0.0, 1.0} * z * deriv);
      root -= step.real();
    }
    angles.push_back(normalize_angle(root));
  }
  if (angles.size() != n) {
    throw RootCountMismatch("found " + std::to_string(angles.size()) +
                            " eigenvalues, expected " + std::to_string(n));
  }
  std::sort(angles.begin(), angles.end());
  std::vector<UnitPoint> out;
  out.reserve(n);
  for (double a : angles) out.push_back(UnitPoint::from_angle(a));
  return out;
}

Complex weyl_eval(const VerblunskyData& data, Complex z) {
  validate(data);
  require_finite(z, "evaluation point");
  const SzegoSystem sys = szego_forward(data);
  const Complex denom = sys.phi_tilde(z);
  // All poles sit on the circle, so |Phi~_n(z)| > 1e-10 * (|z|+1)^{n-1}
  // certifies that z is farther than 1e-10 from every one of them. Only
  // when that cheap bound fails are the eigenvalues actually computed.
  const double certified =
      1e-10 * std::pow(std::abs(z) + 1.0, static_cast<double>(data.n - 1));
  if (std::abs(denom) <= certified) {
    for (const UnitPoint& zeta : eigenvalues(data)) {
      if (chordal(z, zeta.value) <= 1e-10) {
        throw PoleProximity("evaluation point within 1e-10 of an eigenvalue");
      }
    }
  }
  return sys.phi.back()(z) / denom;
}

SpectralMeasure spectral_measure(const VerblunskyData& data) {
  const std::vector<UnitPoint> points = eigenvalues(data);
  const SzegoSystem sys = szego_forward(data);
  const Polynomial dtilde = derivative(sys.phi_tilde);
  const Polynomial& phi = sys.phi.back();

  std::vector<double> masses;
  masses.reserve(points.size());
  double sum = 0.0;
  for (const UnitPoint& zeta : points) {
    const Complex mu = phi(zeta.value) / dtilde(zeta.value);
    if (std::abs(mu.imag()) >= 1e-8) {
      throw VerificationError("residue mass has imaginary part " +
                              std::to_string(mu.imag()));
    }
    if (mu.real() <= 1e-12) {
      throw NonPositiveMass("residue mass " + std::to_string(mu.real()) +
                            "; eigenvalues cluster beyond tolerance");
    }
    masses.push_back(mu.real());
    sum += mu.real();
  }
  if (std::abs(sum - 1.0) >= 1e-8) {
    throw VerificationError("mass normalization defect " +
                            std::to_string(std::abs(sum - 1.0)));
  }
  for (double& mu : masses) mu /= sum;
  return SpectralMeasure{points, std::move(masses)};
}

VerblunskyData rotate(const VerblunskyData& data, Complex tau) {
  validate(data);
  require_finite(tau, "tau");
  if (std::abs(std::abs(tau) - 1.0) >= 1e-12) {
    throw TauNotUnimodular("|tau| = " + std::to_string(std::abs(tau)));
  }
  std::vector<Complex> alpha(data.alpha.size());
  Complex power = tau;
  for (std::size_t k = 0; k < alpha.size(); ++k) {
    alpha[k] = data.alpha[k] * power;
    power *= tau;
  }
  // power now equals tau^n.
  return VerblunskyData::make(std::move(alpha), data.beta * power);
}

}  // namespace cmv
