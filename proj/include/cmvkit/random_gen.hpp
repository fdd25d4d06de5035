#pragma once

#include <cstdint>
#include <utility>

#include "cmvkit/types.hpp"
#include "cmvkit/verblunsky.hpp"

namespace cmv {

// SplitMix64. Reports and round-trip trials depend on the exact sequence, so
// the update is spelled out here instead of delegated to <random>:
//   state += 0x9E3779B97F4A7C15
//   x = state; x ^= x >> 30; x *= 0xBF58476D1CE4E5B9
//   x ^= x >> 27; x *= 0x94D049BB133111EB; x ^= x >> 31; return x
// uniform01() maps the top 53 bits of an output onto [0, 1).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  double uniform01();
  // Uniform in {0, ..., bound - 1} by modulo reduction (bound << 2^64).
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

// Uniform on the disk of the given radius: modulus radius * sqrt(u1),
// argument 2 * pi * u2, in that draw order.
Complex random_in_disk(SplitMix64& g, double radius);

// e^{2 * pi * i * u}, one draw.
Complex random_unimodular(SplitMix64& g);

// Order-n data with the n - 1 coefficients drawn first (in index order) and
// beta last.
VerblunskyData random_verblunsky(SplitMix64& g, std::size_t n,
                                 double alpha_radius = 0.9);

// Trial k derives its generator from the k-th output of a SplitMix64 seeded
// with the run seed, so a trial's data does not depend on the trial count.
std::uint64_t trial_seed(std::uint64_t run_seed, std::size_t trial_index);

// Order-n instance (data1, beta2) whose truncation is singular: the prefix,
// the last coefficient and beta2 are drawn, one eigenvalue of the truncated
// matrix is picked as the pivot, and beta1 is back-solved so the pivot lands
// in the full spectrum as well.
std::pair<VerblunskyData, Complex> random_singular_instance(
    SplitMix64& g, std::size_t n, double alpha_radius = 0.9);

}  // namespace cmv
