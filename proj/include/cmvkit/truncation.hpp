#pragma once

#include <optional>
#include <vector>

#include "cmvkit/interlace.hpp"
#include "cmvkit/poly.hpp"
#include "cmvkit/types.hpp"
#include "cmvkit/unit_circle.hpp"
#include "cmvkit/verblunsky.hpp"

namespace cmv {

enum class TruncationClass { Regular, Singular };

// Outcome of the direct problem for (C_1, C_2): the pivot B, the coefficient
// A linking the two paraorthogonal polynomials, the dichotomy class, both
// spectra and the interlacing witness. In the singular class shared_point is
// the unique common eigenvalue (equal to B).
struct TruncationReport {
  Complex B{};
  Complex A{};
  TruncationClass classification{TruncationClass::Regular};
  CircularSet spectrum_full;    // n points
  CircularSet spectrum_trunc;   // n - 1 points
  std::optional<UnitPoint> shared_point;
  bool interlace_witness{false};
};

// Pivot conj(beta1) * beta2 * (1 - conj(beta2) alpha) / (1 - beta2 conj(alpha));
// unimodular for |alpha| < 1, |beta_l| = 1.
Complex compute_B(Complex alpha_last, Complex beta1, Complex beta2);

// conj(beta1) * (1 - |alpha|^2) / (conj(beta2) - conj(alpha)); never zero.
Complex compute_A(Complex alpha_last, Complex beta1, Complex beta2);

// The degree-1 disk automorphism (z - alpha) / (1 - conj(alpha) z).
Complex blaschke_factor(Complex alpha, Complex z);

// The unique unimodular beta2 with compute_B(alpha_last, beta1, beta2) = pivot,
// by inverting the Moebius map in closed form.
Complex solve_beta2_for_pivot(Complex alpha_last, Complex beta1, Complex pivot);

// Direct problem: drops alpha_{n-2}, substitutes beta2, computes both
// spectra, classifies regular/singular by the chordal matching threshold
// 1e-8 * n (with a x10 guard band on the second-nearest pair), and verifies
// the residue identity (z - B) Phi_{n-1} = Phi~_n - A Phi~_{n-1} together
// with the interlacing facts of the dichotomy. Requires order n >= 2.
TruncationReport truncate_direct(const VerblunskyData& data1, Complex beta2);

// Masses of the n-th spectral measure of C_1 from the truncation data:
// - off the pivot: -A Phi~_{n-1}(zeta) / ((zeta - B) Phi~_n'(zeta)),
// - at a shared pivot: 1 - A Phi~_{n-1}'(B) / Phi~_n'(B).
// Output aligned with report.spectrum_full; positive, summing to 1 within
// 1e-8.
std::vector<double> masses_from_truncation(const TruncationReport& report,
                                           const Polynomial& phi_tilde_n,
                                           const Polynomial& phi_tilde_nm1);

}  // namespace cmv
