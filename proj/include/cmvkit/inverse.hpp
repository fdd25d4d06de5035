#pragma once

#include <vector>

#include "cmvkit/interlace.hpp"
#include "cmvkit/spectral.hpp"
#include "cmvkit/types.hpp"
#include "cmvkit/unit_circle.hpp"
#include "cmvkit/verblunsky.hpp"

namespace cmv {

// A matrix of order n together with one of order n-1 whose Verblunsky
// coefficients form a shared prefix, or -- for the two-spectra problem --
// two matrices of equal order with identical coefficients and distinct
// boundary parameters (same_order = true).
struct CMVPair {
  VerblunskyData data1;
  VerblunskyData data2;
  bool same_order{false};

  std::vector<Complex> shared_alpha() const { return data2.alpha; }
};

// Throws when the prefix (or, for same_order, the whole coefficient
// sequence) of the two members disagrees.
void validate(const CMVPair& pair);

// Unique matrix whose n-th spectral measure is the given one: the monic
// node polynomial is deflated at every node, the mass-weighted quotients
// sum to the next Szego polynomial, and the inverse recurrence plus the
// root product recover the parameters. The round trip through
// spectral_measure is verified to 1e-8 before returning.
VerblunskyData from_measure(const SpectralMeasure& measure);

// Unique equal-order pair with the prescribed spectra. Requires the two
// n-point sets to interlace. Rejects identical sets as DegenerateP; a
// degeneracy inside the inverse recurrence is reported as PZeroInDisk.
CMVPair from_two_spectra(const CircularSet& s1, const CircularSet& s2);

// Regular truncation inverse: |Z1| = n, |Z2| = n - 1 disjoint, with Z2
// filling all gaps of Z1 except one, and zeta strictly inside the free arc.
// Returns the unique pair whose spectra are Z1, Z2 and whose pivot equals
// zeta.
CMVPair truncation_regular(const CircularSet& z1, const CircularSet& z2,
                           const UnitPoint& zeta);

// Singular truncation inverse: Z1 and Z2 share exactly one point and the
// remaining points alternate. The solution family is parameterized by
// t in (0, 1), the mass removed from the shared point (the shared point
// keeps mass 1 - t); every t yields a valid pair.
CMVPair truncation_singular(const CircularSet& z1, const CircularSet& z2,
                            double t);

// Audit of the singular-case rigidity: two solution pairs for the same
// spectra that agree in the last coefficient alpha_{n-2} (within tol) must
// agree in all data (within 10 * tol). Returns false only when that premise
// holds and the conclusion fails; spectra are re-verified first.
bool uniqueness_audit(const CMVPair& pair1, const CMVPair& pair2, double tol);

}  // namespace cmv
