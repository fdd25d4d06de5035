#include "cmvkit/types.hpp"

#include <cmath>

#include "cmvkit/errors.hpp"

namespace cmv {

bool is_finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

void require_finite(Complex z, const char* what) {
  if (!is_finite(z)) {
    throw ValidationError(std::string(what) + " must have finite components");
  }
}

}  // namespace cmv
