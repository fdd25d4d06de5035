#pragma once

#include <cstddef>
#include <vector>

#include "cmvkit/types.hpp"

namespace cmv {

// Dense polynomial over C, coefficients stored low-to-high. Degrees in this
// library stay small, so there is no sparse or FFT machinery; exactness of
// the degree bookkeeping is what matters. The zero polynomial is the single
// coefficient 0; exact trailing zeros are trimmed on construction.
class Polynomial {
 public:
  Polynomial() : coeffs_{Complex{}} {}
  explicit Polynomial(std::vector<Complex> coeffs);

  static Polynomial constant(Complex c) { return Polynomial({c}); }
  // c * z^k
  static Polynomial monomial(std::size_t k, Complex c = Complex{1.0, 0.0});

  const std::vector<Complex>& coeffs() const { return coeffs_; }
  std::size_t degree() const { return coeffs_.size() - 1; }
  Complex coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Complex{};
  }
  Complex leading() const { return coeffs_.back(); }
  bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == Complex{}; }

  // Horner evaluation.
  Complex operator()(Complex z) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(Complex s);

 private:
  void trim();

  std::vector<Complex> coeffs_;
};

Polynomial operator+(Polynomial lhs, const Polynomial& rhs);
Polynomial operator-(Polynomial lhs, const Polynomial& rhs);
Polynomial operator*(Complex s, Polynomial p);
Polynomial operator*(Polynomial p, Complex s);
Polynomial operator*(const Polynomial& a, const Polynomial& b);

// z * p
Polynomial z_times(const Polynomial& p);

// Reversal with respect to degree k: coefficient j of the result is the
// conjugate of coefficient k-j of p. Requires degree(p) <= k.
Polynomial reversed(const Polynomial& p, std::size_t k);

// Monic polynomial with the given roots, built by multiplying the linear
// factors in input order.
Polynomial from_roots(const std::vector<Complex>& roots);

// Formal derivative.
Polynomial derivative(const Polynomial& p);

// Quotient of p by (z - root). The remainder p(root) is written through
// `remainder` when non-null.
Polynomial synthetic_divide(const Polynomial& p, Complex root,
                            Complex* remainder = nullptr);

// Leading coefficient within tol of 1 in both modulus and argument.
bool is_monic(const Polynomial& p, double tol = 1e-12);

// Divides by the leading coefficient; `defect` receives |leading - 1|.
// Throws NonMonic when the leading coefficient is numerically zero.
Polynomial make_monic(const Polynomial& p, double* defect = nullptr);

}  // namespace cmv
