#include "cmvkit/poly.hpp"

#include <cmath>
#include <utility>

#include "cmvkit/errors.hpp"

namespace cmv {

Polynomial::Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.assign(1, Complex{});
  for (const Complex& c : coeffs_) require_finite(c, "polynomial coefficient");
  trim();
}

void Polynomial::trim() {
  while (coeffs_.size() > 1 && coeffs_.back() == Complex{}) coeffs_.pop_back();
}

Polynomial Polynomial::monomial(std::size_t k, Complex c) {
  std::vector<Complex> cs(k + 1, Complex{});
  cs[k] = c;
  return Polynomial(std::move(cs));
}

Complex Polynomial::operator()(Complex z) const {
  Complex acc{};
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * z + coeffs_[i];
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(Complex s) {
  require_finite(s, "scalar factor");
  for (Complex& c : coeffs_) c *= s;
  trim();
  return *this;
}

Polynomial operator+(Polynomial lhs, const Polynomial& rhs) {
  lhs += rhs;
  return lhs;
}

Polynomial operator-(Polynomial lhs, const Polynomial& rhs) {
  lhs -= rhs;
  return lhs;
}

Polynomial operator*(Complex s, Polynomial p) {
  p *= s;
  return p;
}

Polynomial operator*(Polynomial p, Complex s) {
  p *= s;
  return p;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial{};
  std::vector<Complex> out(a.degree() + b.degree() + 1, Complex{});
  for (std::size_t i = 0; i <= a.degree(); ++i) {
    for (std::size_t j = 0; j <= b.degree(); ++j) {
      out[i + j] += a.coeff(i) * b.coeff(j);
    }
  }
  return Polynomial(std::move(out));
}

Polynomial z_times(const Polynomial& p) {
  if (p.is_zero()) return p;
  std::vector<Complex> out(p.coeffs().size() + 1, Complex{});
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) out[i + 1] = p.coeffs()[i];
  return Polynomial(std::move(out));
}

Polynomial reversed(const Polynomial& p, std::size_t k) {
  if (p.degree() > k) {
    throw DegreeMismatch("reversal degree " + std::to_string(k) +
                         " below polynomial degree " + std::to_string(p.degree()));
  }
  std::vector<Complex> out(k + 1);
  for (std::size_t j = 0; j <= k; ++j) out[j] = std::conj(p.coeff(k - j));
  return Polynomial(std::move(out));
}

Polynomial from_roots(const std::vector<Complex>& roots) {
  std::vector<Complex> c{Complex{1.0, 0.0}};
  for (Complex r : roots) {
    require_finite(r, "root");
    c.push_back(Complex{});
    for (std::size_t i = c.size() - 1; i-- > 0;) {
      c[i + 1] += c[i];
      c[i] *= -r;
    }
  }
  return Polynomial(std::move(c));
}

Polynomial derivative(const Polynomial& p) {
  if (p.degree() == 0) return Polynomial{};
  std::vector<Complex> out(p.degree());
  for (std::size_t k = 1; k <= p.degree(); ++k) {
    out[k - 1] = static_cast<double>(k) * p.coeff(k);
  }
  return Polynomial(std::move(out));
}

Polynomial synthetic_divide(const Polynomial& p, Complex root, Complex* remainder) {
  const auto& a = p.coeffs();
  if (a.size() == 1) {
    if (remainder) *remainder = a[0];
    return Polynomial{};
  }
  std::vector<Complex> q(a.size() - 1);
  Complex carry = a.back();
  for (std::size_t k = a.size() - 1; k-- > 0;) {
    q[k] = carry;
    carry = a[k] + root * carry;
  }
  if (remainder) *remainder = carry;
  return Polynomial(std::move(q));
}

bool is_monic(const Polynomial& p, double tol) {
  const Complex lead = p.leading();
  if (lead == Complex{}) return false;
  return std::abs(std::abs(lead) - 1.0) < tol && std::abs(std::arg(lead)) < tol;
}

Polynomial make_monic(const Polynomial& p, double* defect) {
  const Complex lead = p.leading();
  if (std::abs(lead) < 1e-14) {
    throw NonMonic("cannot normalize: leading coefficient is numerically zero");
  }
  if (defect) *defect = std::abs(lead - Complex{1.0, 0.0});
  std::vector<Complex> out = p.coeffs();
  for (Complex& c : out) c /= lead;
  out.back() = Complex{1.0, 0.0};
  return Polynomial(std::move(out));
}

}  // namespace cmv
