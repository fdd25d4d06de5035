#include "cmvkit/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>

#include "cmvkit/errors.hpp"

namespace cmv {

namespace {

std::vector<Complex> shifted_matrix(const DenseUnitary& c, Complex z) {
  const std::size_t n = c.order;
  std::vector<Complex> a(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      a[i * n + j] = (i == j ? z : Complex{}) - c.at(i, j);
    }
  }
  return a;
}

struct LuData {
  std::vector<Complex> lu;
  std::vector<std::size_t> perm;
  int sign{1};            // permutation parity; 0 on an exactly zero pivot
  double min_pivot{0.0};
};

// Partial-pivot LU with the unit lower triangle stored below the diagonal.
LuData lu_factor(std::vector<Complex> a, std::size_t n) {
  LuData out;
  out.perm.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.perm[i] = i;
  out.min_pivot = std::numeric_limits<double>::infinity();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    double best = std::abs(a[col * n + col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      const double v = std::abs(a[r * n + col]);
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[col * n + j], a[piv * n + j]);
      std::swap(out.perm[col], out.perm[piv]);
      out.sign = -out.sign;
    }
    const Complex pivot = a[col * n + col];
    out.min_pivot = std::min(out.min_pivot, std::abs(pivot));
    if (pivot == Complex{}) {
      out.sign = 0;
      break;
    }
    for (std::size_t r = col + 1; r < n; ++r) {
      const Complex f = a[r * n + col] / pivot;
      a[r * n + col] = f;
      for (std::size_t j = col + 1; j < n; ++j) a[r * n + j] -= f * a[col * n + j];
    }
  }
  out.lu = std::move(a);
  return out;
}

std::vector<Complex> lu_solve(const LuData& f, std::size_t n,
                              const std::vector<Complex>& rhs) {
  std::vector<Complex> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = rhs[f.perm[i]];
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) x[i] -= f.lu[i * n + j] * x[j];
  }
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = i + 1; j < n; ++j) x[i] -= f.lu[i * n + j] * x[j];
    x[i] /= f.lu[i * n + i];
  }
  return x;
}

// SplitMix64 step, used only to seed deterministic iteration starts.
std::uint64_t mix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t x = state;
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ULL;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBULL;
  x ^= x >> 31;
  return x;
}

double unit01(std::uint64_t v) { return static_cast<double>(v >> 11) * 0x1.0p-53; }

}  // namespace

Complex dense_char_poly_at(const DenseUnitary& c, Complex z) {
  require_finite(z, "evaluation point");
  const std::size_t n = c.order;
  const LuData f = lu_factor(shifted_matrix(c, z), n);
  if (f.sign == 0) return Complex{};
  Complex det{static_cast<double>(f.sign), 0.0};
  for (std::size_t i = 0; i < n; ++i) det *= f.lu[i * n + i];
  return det;
}

Complex resolvent_entry(const DenseUnitary& c, Complex z) {
  require_finite(z, "evaluation point");
  const std::size_t n = c.order;
  const LuData f = lu_factor(shifted_matrix(c, z), n);
  if (f.min_pivot < 1e-14) {
    throw SolveFailed("resolvent pivot " + std::to_string(f.min_pivot) +
                      " below threshold");
  }
  std::vector<Complex> rhs(n, Complex{});
  rhs[n - 1] = Complex{1.0, 0.0};
  return lu_solve(f, n, rhs)[n - 1];
}

std::vector<double> eigvec_masses(const DenseUnitary& c,
                                  const std::vector<UnitPoint>& eigs,
                                  const OracleConfig& cfg) {
  const std::size_t n = c.order;
  std::vector<double> masses;
  masses.reserve(eigs.size());
  for (std::size_t j = 0; j < eigs.size(); ++j) {
    // Radial shift keeps the solve nonsingular; eigenvalues are simple so
    // the iteration contracts geometrically.
    const Complex shift = eigs[j].value * (1.0 + 1e-8);
    const LuData f = lu_factor(shifted_matrix(c, shift), n);
    if (f.min_pivot < 1e-14) {
      throw SolveFailed("inverse-iteration pivot below threshold");
    }
    std::uint64_t state = 0x6F7261636C65ULL + j;  // fixed seed per eigenvalue
    std::vector<Complex> v(n);
    double norm2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      v[i] = Complex{2.0 * unit01(mix64(state)) - 1.0,
                     2.0 * unit01(mix64(state)) - 1.0};
      norm2 += std::norm(v[i]);
    }
    for (auto& e : v) e /= std::sqrt(norm2);

    double residual = std::numeric_limits<double>::infinity();
    for (std::size_t step = 0; step < cfg.inv_iter_steps; ++step) {
      std::vector<Complex> y = lu_solve(f, n, v);
      double yn = 0.0;
      for (const auto& e : y) yn += std::norm(e);
      yn = std::sqrt(yn);
      for (auto& e : y) e /= yn;
      v = std::move(y);

      residual = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        Complex r = -eigs[j].value * v[i];
        for (std::size_t k = 0; k < n; ++k) r += c.at(i, k) * v[k];
        residual += std::norm(r);
      }
      residual = std::sqrt(residual);
      if (residual < cfg.tol * 0.1) break;
    }
    if (residual >= cfg.tol * 10.0) {
      throw IterationStalled("inverse iteration residual " +
                             std::to_string(residual) + " for eigenvalue " +
                             std::to_string(j));
    }
    masses.push_back(std::norm(v[n - 1]));
  }
  return masses;
}

std::vector<UnitPoint> grid_root_scan(const Polynomial& p, const OracleConfig& cfg) {
  if (!is_monic(p, 1e-9)) {
    throw ValidationError("grid scan expects a monic polynomial");
  }
  const std::size_t d = p.degree();
  if (d == 0) return {};
  if (cfg.grid_size < 16 * d) {
    throw ValidationError("grid_size must be at least 16x the degree");
  }
  const Complex a0 = p.coeff(0);
  if (std::abs(std::abs(a0) - 1.0) > 1e-4) {
    throw ValidationError("grid scan expects all roots near the unit circle");
  }
  // Self-inversive alignment: p*(z) = c' p(z) with c' = conj(a0)/|a0|, so
  // c = sqrt(-c') turns e^{-i d theta / 2} p(e^{i theta}) c purely imaginary.
  const Complex cprime = std::conj(a0) / std::abs(a0);
  const Complex align = std::sqrt(-cprime);
  double coeff_scale = 0.0;
  for (const auto& ck : p.coeffs()) coeff_scale += std::abs(ck);

  const auto wvalue = [&](double theta) -> Complex {
    const Complex z = std::polar(1.0, theta);
    return std::polar(1.0, -0.5 * static_cast<double>(d) * theta) * p(z) * align;
  };
  const auto svalue = [&](double theta) -> double {
    const Complex w = wvalue(theta);
    if (std::abs(w.real()) > 1e-12 * std::max(1.0, coeff_scale)) {
      throw VerificationError("scan function has real residual " +
                              std::to_string(std::abs(w.real())));
    }
    return w.imag();
  };

  const Polynomial dp = derivative(p);
  std::vector<UnitPoint> roots;
  for (std::size_t grid = cfg.grid_size, attempt = 0; attempt < 4;
       grid *= 2, ++attempt) {
    roots.clear();
    const double step = kTwoPi / static_cast<double>(grid);
    std::vector<double> s(grid);
    std::vector<double> theta(grid);
    for (std::size_t k = 0; k < grid; ++k) {
      // Half-step offset dodges roots sitting exactly on the lattice.
      theta[k] = (static_cast<double>(k) + 0.5) * step;
      s[k] = svalue(theta[k]);
    }
    std::vector<std::pair<double, double>> brackets;
    for (std::size_t k = 0; k < grid; ++k) {
      if (s[k] == 0.0) {
        roots.push_back(UnitPoint::from_angle(theta[k]));
        continue;
      }
      const std::size_t k1 = (k + 1) % grid;
      // For odd degree the scanned function is 2*pi-antiperiodic.
      const double flip = (k1 == 0 && d % 2 == 1) ? -1.0 : 1.0;
      const double s_next = flip * s[k1];
      if (s_next != 0.0 && std::signbit(s[k]) != std::signbit(s_next)) {
        brackets.emplace_back(theta[k], theta[k] + step);
      }
    }
    if (brackets.size() + roots.size() != d) {
      if (attempt + 1 < 4) continue;  // refine the grid
      throw BracketCountMismatch("found " +
                                 std::to_string(brackets.size() + roots.size()) +
                                 " unit-circle brackets, expected " +
                                 std::to_string(d));
    }
    for (auto [a, b] : brackets) {
      double sa = svalue(a);
      while (b - a > cfg.tol) {
        const double m = 0.5 * (a + b);
        const double sm = svalue(m);
        if (sm == 0.0) {
          a = b = m;
          break;
        }
        if (std::signbit(sm) == std::signbit(sa)) {
          a = m;
          sa = sm;
        } else {
          b = m;
        }
      }
      double root = 0.5 * (a + b);
      // One Newton step along the circle sharpens the bisection output.
      const Complex z = std::polar(1.0, root);
      const Complex deriv = dp(z);
      if (deriv != Complex{}) {
        const Complex stepc = p(z) / (Complex{0.0, 1.0} * z * deriv);
        root -= stepc.real();
      }
      roots.push_back(UnitPoint::from_angle(root));
    }
    break;
  }
  std::sort(roots.begin(), roots.end(),
            [](const UnitPoint& x, const UnitPoint& y) { return x.angle < y.angle; });
  return roots;
}

}  // namespace cmv
