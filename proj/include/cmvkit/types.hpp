#pragma once

#include <complex>

namespace cmv {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kTwoPi = 2.0 * kPi;

bool is_finite(Complex z);

// Throws ValidationError when z has a NaN or infinite component.
void require_finite(Complex z, const char* what);

}  // namespace cmv
