#pragma once

#include <vector>

#include "cmvkit/types.hpp"
#include "cmvkit/unit_circle.hpp"
#include "cmvkit/verblunsky.hpp"

namespace cmv {

// Discrete probability measure on the circle: n distinct points with
// strictly increasing angles and positive masses summing to 1.
struct SpectralMeasure {
  std::vector<UnitPoint> points;
  std::vector<double> masses;
};

// Throws on non-positive masses, mass-sum defects beyond 1e-10, unsorted or
// near-coincident points (chordal gap <= 1e-10).
void validate(const SpectralMeasure& m);

// The n roots of the paraorthogonal polynomial, all on the unit circle,
// sorted by angle. Solves b(e^{i theta}) = conj(beta) where b(z) =
// z Phi_{n-1}(z) / Phi*_{n-1}(z) is a degree-n Blaschke product whose
// boundary phase increases strictly by 2*pi*n per revolution: the phase is
// accumulated along an adaptively refined grid, each target level is
// bracketed and bisected to tol_angle, then polished by one Newton step on
// the paraorthogonal polynomial constrained to the circle.
std::vector<UnitPoint> eigenvalues(const VerblunskyData& data,
                                   double tol_angle = 1e-12);

// Phi_{n-1}(z) / Phi~_n(z). Throws PoleProximity when z lies within 1e-10
// (chordal) of an eigenvalue.
Complex weyl_eval(const VerblunskyData& data, Complex z);

// Eigenvalues plus the residue masses Phi_{n-1}(zeta_j) / Phi~_n'(zeta_j),
// renormalized to sum exactly to 1 (pre-normalization defect must be below
// 1e-8).
SpectralMeasure spectral_measure(const VerblunskyData& data);

// (alpha_0 tau, alpha_1 tau^2, ..., alpha_{n-2} tau^{n-1}; beta tau^n);
// rotates the spectrum by conj(tau).
VerblunskyData rotate(const VerblunskyData& data, Complex tau);

}  // namespace cmv
