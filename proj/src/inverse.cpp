#include "cmvkit/inverse.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "cmvkit/errors.hpp"
#include "cmvkit/poly.hpp"
#include "cmvkit/truncation.hpp"

namespace cmv {

namespace {

std::vector<Complex> values_of(const std::vector<UnitPoint>& pts) {
  std::vector<Complex> out;
  out.reserve(pts.size());
  for (const UnitPoint& p : pts) out.push_back(p.value);
  return out;
}

void verify_spectrum(const VerblunskyData& data, const std::vector<UnitPoint>& expected,
                     double tol, const char* what) {
  const std::vector<UnitPoint> got = eigenvalues(data);
  if (!match_points(expected, got, tol)) {
    throw VerificationError(std::string(what) +
                            ": reconstructed spectrum misses the input set");
  }
}

// Index rotation that places the cut right after position `last`, so the
// relabeled sequence starts at last + 1 and ends at last.
std::vector<std::size_t> rotated_order(std::size_t size, std::size_t last) {
  std::vector<std::size_t> order(size);
  for (std::size_t k = 0; k < size; ++k) order[k] = (last + 1 + k) % size;
  return order;
}

}  // namespace

void validate(const CMVPair& pair) {
  validate(pair.data1);
  validate(pair.data2);
  if (pair.same_order) {
    if (pair.data1.n != pair.data2.n || pair.data1.alpha != pair.data2.alpha) {
      throw LengthMismatch("equal-order pair must share all coefficients");
    }
    return;
  }
  if (pair.data1.n != pair.data2.n + 1) {
    throw LengthMismatch("truncation pair must have orders n and n-1");
  }
  for (std::size_t j = 0; j < pair.data2.alpha.size(); ++j) {
    if (pair.data1.alpha[j] != pair.data2.alpha[j]) {
      throw LengthMismatch("truncation pair must share the coefficient prefix");
    }
  }
}

VerblunskyData from_measure(const SpectralMeasure& measure) {
  validate(measure);
  const std::size_t n = measure.points.size();
  const std::vector<Complex> nodes = values_of(measure.points);
  const Polynomial pn = from_roots(nodes);

  // P_{n-1} = sum_j nu_j * P_n / (z - xi_j); monic because the masses sum
  // to 1, which make_monic only has to confirm.
  Polynomial pnm1;
  for (std::size_t j = 0; j < n; ++j) {
    pnm1 += measure.masses[j] * synthetic_divide(pn, nodes[j]);
  }
  double defect = 0.0;
  pnm1 = make_monic(pnm1, &defect);
  if (defect > 1e-10) {
    throw VerificationError("monic defect " + std::to_string(defect) +
                            " in the weighted node polynomial");
  }

  InverseSzegoResult rec;
  try {
    rec = szego_inverse(pnm1);
  } catch (const NumericalDegeneracy& e) {
    throw RootsLeakDisk(std::string("weighted node polynomial has a root at or "
                                    "outside the unit circle: ") +
                        e.what());
  }
  const Complex beta = beta_from_spectrum(nodes);
  const VerblunskyData data = VerblunskyData::make(std::move(rec.alpha), beta);

  const SpectralMeasure back = spectral_measure(data);
  const auto match = match_points(measure.points, back.points, 1e-8);
  if (!match) {
    throw VerificationError("measure round trip: points drift beyond 1e-8");
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (std::abs(measure.masses[j] - back.masses[match->perm[j]]) > 1e-8) {
      throw VerificationError("measure round trip: masses drift beyond 1e-8");
    }
  }
  return data;
}

CMVPair from_two_spectra(const CircularSet& s1, const CircularSet& s2) {
  const std::size_t n = s1.size();
  if (n == 0 || s2.size() != n) {
    throw SizeMismatch("two-spectra problem needs equal nonempty sets");
  }
  if (match_points(s1.points, s2.points, 1e-10)) {
    throw DegenerateP("the two spectra coincide");
  }
  if (!interlaces(s1, s2)) {
    throw NotInterlacing("input spectra do not interlace");
  }
  const Complex beta1 = beta_from_spectrum(values_of(s1.points));
  const Complex beta2 = beta_from_spectrum(values_of(s2.points));

  // P = P_{n,1} - P_{n,2} has no zeros in the closed disk for interlacing
  // inputs; Phi_{n-1} = P* / conj(P(0)).
  const Polynomial p = from_roots(values_of(s1.points)) -
                       from_roots(values_of(s2.points));
  const Complex p0 = p.coeff(0);
  if (std::abs(p0) < 1e-14) {
    throw NumericalDegeneracy("boundary parameters nearly coincide; P(0) ~ 0");
  }
  Polynomial phi = reversed(p, n - 1) * (1.0 / std::conj(p0));
  double defect = 0.0;
  phi = make_monic(phi, &defect);

  InverseSzegoResult rec;
  try {
    rec = szego_inverse(phi);
  } catch (const NumericalDegeneracy& e) {
    throw PZeroInDisk(std::string("difference polynomial has a zero reaching "
                                  "the closed unit disk: ") +
                      e.what());
  }
  CMVPair pair;
  pair.data1 = VerblunskyData::make(rec.alpha, beta1);
  pair.data2 = VerblunskyData::make(std::move(rec.alpha), beta2);
  pair.same_order = true;

  verify_spectrum(pair.data1, s1.points, 1e-8, "two-spectra");
  verify_spectrum(pair.data2, s2.points, 1e-8, "two-spectra");
  return pair;
}

CMVPair truncation_regular(const CircularSet& z1, const CircularSet& z2,
                           const UnitPoint& zeta) {
  const std::size_t n = z1.size();
  if (n < 2 || z2.size() + 1 != n) {
    throw SizeMismatch("regular inverse needs |Z1| = n >= 2 and |Z2| = n - 1");
  }
  for (const UnitPoint& a : z1.points) {
    for (const UnitPoint& b : z2.points) {
      if (chordal(a, b) <= 1e-10) {
        throw CommonPointPresent("spectra share a point; this is the singular case");
      }
    }
  }
  // Z2 must fill every circular gap of Z1 except exactly one, which is the
  // admissible arc for zeta.
  std::vector<std::size_t> gap_count(n, 0);
  for (const UnitPoint& b : z2.points) {
    for (std::size_t i = 0; i < n; ++i) {
      const double lo = z1.points[i].angle;
      const double width = arc_from_to(lo, z1.points[(i + 1) % n].angle);
      const double off = arc_from_to(lo, b.angle);
      if (off > 0.0 && off < width) {
        ++gap_count[i];
        break;
      }
    }
  }
  std::size_t free_arc = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (gap_count[i] == 0) {
      if (free_arc != n) {
        throw MixedSigns("Z2 leaves more than one gap of Z1 empty");
      }
      free_arc = i;
    } else if (gap_count[i] > 1) {
      throw MixedSigns("a gap of Z1 contains several points of Z2");
    }
  }
  if (free_arc == n) throw MixedSigns("Z2 leaves no free arc for the pivot");
  {
    const double lo = z1.points[free_arc].angle;
    const double width = arc_from_to(lo, z1.points[(free_arc + 1) % n].angle);
    const double off = arc_from_to(lo, zeta.angle);
    if (!(off > 0.0 && off < width)) {
      throw ZetaOffArc("pivot does not lie strictly inside the free arc");
    }
  }

  const Polynomial p1 = from_roots(values_of(z1.points));
  const Polynomial p2 = from_roots(values_of(z2.points));
  const Polynomial dp1 = derivative(p1);
  std::vector<Complex> a(n);
  Complex total{};
  for (std::size_t k = 0; k < n; ++k) {
    const Complex zk = z1.points[k].value;
    a[k] = p2(zk) / ((zk - zeta.value) * dp1(zk));
    total += a[k];
  }
  if (std::abs(total) < 1e-14) {
    throw MixedSigns("weights cancel; inputs are not realizable");
  }
  // All a_k share one argument, so a single normalizer makes them a
  // probability vector; positivity is asserted rather than assumed.
  const Complex v = 1.0 / total;
  SpectralMeasure measure;
  measure.points = z1.points;
  measure.masses.resize(n);
  double mass_sum = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const Complex nu = v * a[k];
    if (std::abs(nu.imag()) > 1e-8 || nu.real() <= 1e-14) {
      throw MixedSigns("weights do not share a common argument");
    }
    measure.masses[k] = nu.real();
    mass_sum += nu.real();
  }
  for (double& m : measure.masses) m /= mass_sum;

  CMVPair pair;
  pair.data1 = from_measure(measure);
  const Complex alpha_last = pair.data1.alpha.back();
  const Complex beta2 =
      solve_beta2_for_pivot(alpha_last, pair.data1.beta, zeta.value);
  std::vector<Complex> prefix(pair.data1.alpha.begin(), pair.data1.alpha.end() - 1);
  pair.data2 = VerblunskyData::make(std::move(prefix), beta2);
  pair.same_order = false;

  verify_spectrum(pair.data2, z2.points, 1e-8, "regular truncation inverse");
  const Complex b_check = compute_B(alpha_last, pair.data1.beta, beta2);
  if (std::abs(b_check - zeta.value) > 1e-9) {
    throw VerificationError("pivot of the reconstruction differs from zeta by " +
                            std::to_string(std::abs(b_check - zeta.value)));
  }
  return pair;
}

CMVPair truncation_singular(const CircularSet& z1, const CircularSet& z2,
                            double t) {
  const std::size_t n = z1.size();
  if (n < 2 || z2.size() + 1 != n) {
    throw SizeMismatch("singular inverse needs |Z1| = n >= 2 and |Z2| = n - 1");
  }
  if (!(t > 0.0 && t < 1.0)) {
    throw TOutOfRange("t = " + std::to_string(t) + " outside (0, 1)");
  }
  // Exactly one shared point, with the same guard policy as the direct
  // problem.
  const double eps_shared = 1e-8 * static_cast<double>(n);
  std::size_t shared_full = n, shared_trunc = n;
  std::size_t matches = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j + 1 < n; ++j) {
      if (chordal(z1.points[i], z2.points[j]) < eps_shared) {
        ++matches;
        shared_full = i;
        shared_trunc = j;
      }
    }
  }
  if (matches != 1) {
    throw NotSingularPattern("expected exactly one shared point, found " +
                             std::to_string(matches));
  }
  // Relabel both sets so the shared point comes last. Measured from the
  // shared point, the n-1 remaining Z1 points and the n-2 remaining Z2
  // points must alternate strictly, starting and ending with Z1.
  const std::vector<std::size_t> order1 = rotated_order(n, shared_full);
  const std::vector<std::size_t> order2 = rotated_order(n - 1, shared_trunc);
  const double origin = z1.points[shared_full].angle;
  std::vector<double> x1(n - 1), x2(n - 2);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    x1[k] = arc_from_to(origin, z1.points[order1[k]].angle);
  }
  for (std::size_t k = 0; k + 2 < n; ++k) {
    x2[k] = arc_from_to(origin, z2.points[order2[k]].angle);
  }
  for (std::size_t k = 0; k + 2 < n; ++k) {
    if (!(x1[k] < x2[k] && x2[k] < x1[k + 1])) {
      throw NotSingularPattern("points do not alternate in the singular layout");
    }
  }

  const Polynomial p1 = from_roots(values_of(z1.points));
  const Polynomial p2 = from_roots(values_of(z2.points));
  const Polynomial dp1 = derivative(p1);
  const Polynomial dp2 = derivative(p2);
  const Complex shared = z1.points[shared_full].value;

  std::vector<Complex> a(n);
  double max_abs = 0.0;
  Complex total{};
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const Complex zk = z1.points[order1[k]].value;
    a[k] = p2(zk) / ((zk - shared) * dp1(zk));
    max_abs = std::max(max_abs, std::abs(a[k]));
    total += a[k];
  }
  a[n - 1] = dp2(shared) / dp1(shared);
  max_abs = std::max(max_abs, std::abs(a[n - 1]));
  total += a[n - 1];
  if (std::abs(total) > 1e-9 * max_abs) {
    throw SumNotZero("weights sum to " + std::to_string(std::abs(total)) +
                     " relative to scale " + std::to_string(max_abs));
  }

  // v = t / (-a_n) puts mass t on the off-pivot nodes and 1 - t on the
  // shared point; the sum telescopes to 1 because the weights cancel.
  const Complex v = t / (-a[n - 1]);
  std::vector<std::pair<double, double>> angle_mass;  // (angle, mass)
  angle_mass.reserve(n);
  double mass_sum = 0.0;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const Complex mu = v * a[k];
    if (std::abs(mu.imag()) > 1e-8 || mu.real() <= 1e-14) {
      throw VerificationError("singular weights lost positivity");
    }
    angle_mass.emplace_back(z1.points[order1[k]].angle, mu.real());
    mass_sum += mu.real();
  }
  angle_mass.emplace_back(z1.points[shared_full].angle, 1.0 - t);
  mass_sum += 1.0 - t;
  std::sort(angle_mass.begin(), angle_mass.end());

  SpectralMeasure measure;
  measure.points.reserve(n);
  measure.masses.reserve(n);
  for (auto& [angle, mass] : angle_mass) {
    measure.points.push_back(UnitPoint::from_angle(angle));
    measure.masses.push_back(mass / mass_sum);
  }

  CMVPair pair;
  pair.data1 = from_measure(measure);
  const Complex alpha_last = pair.data1.alpha.back();
  const Complex beta2 = solve_beta2_for_pivot(alpha_last, pair.data1.beta, shared);
  std::vector<Complex> prefix(pair.data1.alpha.begin(), pair.data1.alpha.end() - 1);
  pair.data2 = VerblunskyData::make(std::move(prefix), beta2);
  pair.same_order = false;

  verify_spectrum(pair.data1, z1.points, 1e-8, "singular truncation inverse");
  verify_spectrum(pair.data2, z2.points, 1e-8, "singular truncation inverse");
  return pair;
}

bool uniqueness_audit(const CMVPair& pair1, const CMVPair& pair2, double tol) {
  validate(pair1);
  validate(pair2);
  if (pair1.data1.n != pair2.data1.n || pair1.data2.n != pair2.data2.n) {
    throw SpectraMismatch("pairs have different orders");
  }
  if (pair1.data1.n < 2) {
    throw ValidationError("audit needs order >= 2");
  }
  // Both pairs must solve the same spectral problem.
  const auto e1 = eigenvalues(pair1.data1);
  const auto e2 = eigenvalues(pair2.data1);
  if (!match_points(e1, e2, tol)) {
    throw SpectraMismatch("full spectra of the two pairs disagree");
  }
  const auto f1 = eigenvalues(pair1.data2);
  const auto f2 = eigenvalues(pair2.data2);
  if (!match_points(f1, f2, tol)) {
    throw SpectraMismatch("truncated spectra of the two pairs disagree");
  }

  const Complex a1 = pair1.data1.alpha.back();
  const Complex a2 = pair2.data1.alpha.back();
  if (std::abs(a1 - a2) >= tol) return true;  // premise vacuous

  double worst = std::abs(pair1.data1.beta - pair2.data1.beta);
  worst = std::max(worst, std::abs(pair1.data2.beta - pair2.data2.beta));
  for (std::size_t j = 0; j < pair1.data1.alpha.size(); ++j) {
    worst = std::max(worst, std::abs(pair1.data1.alpha[j] - pair2.data1.alpha[j]));
  }
  return worst < 10.0 * tol;
}

}  // namespace cmv
