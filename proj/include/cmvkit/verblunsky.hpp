#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "cmvkit/poly.hpp"
#include "cmvkit/types.hpp"

namespace cmv {

// Parameters (alpha_0, ..., alpha_{n-2}; beta) of a finite CMV matrix of
// order n: |alpha_j| < 1 strictly, |beta| = 1. The order is carried
// explicitly so that documents with an inconsistent "n" can be rejected.
struct VerblunskyData {
  std::vector<Complex> alpha;
  Complex beta{1.0, 0.0};
  std::size_t n{1};

  static VerblunskyData make(std::vector<Complex> alpha, Complex beta);
};

// Throws AlphaOutOfDisk, BetaNotUnimodular or LengthMismatch.
void validate(const VerblunskyData& data);

// +sqrt(1 - |alpha|^2), always the positive branch.
double rho(Complex alpha);

struct DenseUnitary {
  std::size_t order{0};
  std::vector<Complex> entries;  // row-major, order x order

  Complex& at(std::size_t i, std::size_t j) { return entries[i * order + j]; }
  Complex at(std::size_t i, std::size_t j) const { return entries[i * order + j]; }
};

DenseUnitary identity_matrix(std::size_t n);
DenseUnitary multiply(const DenseUnitary& a, const DenseUnitary& b);

// max |(C C^H - I)_{ij}|
double unitarity_defect(const DenseUnitary& c);

// Number of entries violating the "barely five-diagonal" zero pattern:
// entries with |i-j| > 2 must vanish exactly, as must (i, i+2) for odd i and
// (j+2, j) for even j. (0-based indices.)
std::size_t pattern_violations(const DenseUnitary& c);

// Row-major 2x2 block [[conj(alpha), rho], [rho, -alpha]].
std::array<Complex, 4> theta_block(Complex alpha);

// Assembles the finite CMV matrix as the product of the parity-dependent
// block-diagonal factors L and M; for n = 1 this is the 1x1 matrix
// (conj(beta)).
DenseUnitary assemble(const VerblunskyData& data);

// Monic chain Phi_0, ..., Phi_{n-1} plus the degree-n paraorthogonal
// polynomial; Phi_k is the characteristic polynomial of the leading k x k
// block, the paraorthogonal one that of the full matrix.
struct SzegoSystem {
  std::vector<Polynomial> phi;
  Polynomial phi_tilde;
};

// Phi_0 = 1, Phi_k = z Phi_{k-1} - conj(alpha_{k-1}) Phi*_{k-1},
// Phi~_n = z Phi_{n-1} - conj(beta) Phi*_{n-1}.
SzegoSystem szego_forward(const VerblunskyData& data);

struct InverseSzegoResult {
  std::vector<Complex> alpha;      // alpha_0, ..., alpha_{n-2}
  std::vector<Polynomial> phi;     // Phi_0, ..., Phi_{n-1}
};

// Descends from Phi_{n-1} via z Phi_j = rho_j^{-2} (Phi_{j+1} +
// conj(alpha_j) Phi*_{j+1}) with alpha_j = -conj(Phi_{j+1}(0)). Throws
// NonMonic for a non-monic input and NumericalDegeneracy when a computed
// |alpha_j| reaches 1 - 1e-12 (roots at or outside the circle).
InverseSzegoResult szego_inverse(const Polynomial& phi_last);

// beta = (-1)^(n+1) * prod conj(zeta_j) from the paraorthogonal roots; the
// result is renormalized onto the circle. Throws RootOffCircle when an input
// is farther than 1e-8 from the circle.
Complex beta_from_spectrum(const std::vector<Complex>& roots);

}  // namespace cmv
