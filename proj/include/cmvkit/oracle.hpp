#pragma once

#include <cstddef>
#include <vector>

#include "cmvkit/poly.hpp"
#include "cmvkit/types.hpp"
#include "cmvkit/unit_circle.hpp"
#include "cmvkit/verblunsky.hpp"

namespace cmv {

// Brute-force verifiers, deliberately independent of the recurrence-based
// primary paths they cross-check.
struct OracleConfig {
  std::size_t grid_size = 4096;     // keep >= 16 * matrix order
  std::size_t inv_iter_steps = 50;
  double tol = 1e-10;
};

// det(zI - C) by partially pivoted elimination; a singular matrix yields 0.
Complex dense_char_poly_at(const DenseUnitary& c, Complex z);

// Solves (zI - C) x = e_n densely and returns the last component of x.
// Throws SolveFailed when a pivot falls below 1e-14.
Complex resolvent_entry(const DenseUnitary& c, Complex z);

// |(h_j, e_n)|^2 via shifted inverse iteration from a deterministic start.
// Residual |C h - zeta h| must reach cfg.tol * 10, else IterationStalled.
std::vector<double> eigvec_masses(const DenseUnitary& c,
                                  const std::vector<UnitPoint>& eigs,
                                  const OracleConfig& cfg = {});

// Unit-circle roots of a self-inversive (up to a unimodular factor) monic
// polynomial, located by scanning a real-valued alignment of p along the
// circle for sign changes and bisecting the brackets.
std::vector<UnitPoint> grid_root_scan(const Polynomial& p,
                                      const OracleConfig& cfg = {});

}  // namespace cmv
