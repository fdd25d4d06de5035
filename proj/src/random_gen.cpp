#include "cmvkit/random_gen.hpp"

#include <cmath>

#include "cmvkit/errors.hpp"
#include "cmvkit/spectral.hpp"
#include "cmvkit/truncation.hpp"

namespace cmv {

std::uint64_t SplitMix64::next() {
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t x = state_;
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ULL;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBULL;
  x ^= x >> 31;
  return x;
}

double SplitMix64::uniform01() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

std::uint64_t SplitMix64::below(std::uint64_t bound) { return next() % bound; }

Complex random_in_disk(SplitMix64& g, double radius) {
  const double r = radius * std::sqrt(g.uniform01());
  const double phi = kTwoPi * g.uniform01();
  return std::polar(r, phi);
}

Complex random_unimodular(SplitMix64& g) {
  return std::polar(1.0, kTwoPi * g.uniform01());
}

VerblunskyData random_verblunsky(SplitMix64& g, std::size_t n, double alpha_radius) {
  if (n == 0) throw ValidationError("matrix order must be positive");
  std::vector<Complex> alpha;
  alpha.reserve(n - 1);
  for (std::size_t j = 0; j + 1 < n; ++j) alpha.push_back(random_in_disk(g, alpha_radius));
  return VerblunskyData::make(std::move(alpha), random_unimodular(g));
}

std::uint64_t trial_seed(std::uint64_t run_seed, std::size_t trial_index) {
  SplitMix64 g(run_seed);
  std::uint64_t s = 0;
  for (std::size_t k = 0; k <= trial_index; ++k) s = g.next();
  return s;
}

std::pair<VerblunskyData, Complex> random_singular_instance(SplitMix64& g,
                                                            std::size_t n,
                                                            double alpha_radius) {
  if (n < 2) throw ValidationError("singular instances need order >= 2");
  std::vector<Complex> alpha;
  alpha.reserve(n - 1);
  for (std::size_t j = 0; j + 2 < n; ++j) alpha.push_back(random_in_disk(g, alpha_radius));
  const Complex alpha_last = random_in_disk(g, alpha_radius);
  const Complex beta2 = random_unimodular(g);

  const VerblunskyData data2 = VerblunskyData::make(alpha, beta2);
  const std::vector<UnitPoint> spec2 = eigenvalues(data2);
  const Complex pivot = spec2[g.below(spec2.size())].value;

  // compute_B(alpha_last, beta1, beta2) = conj(beta1) * m with the Moebius
  // image m of beta2; choosing beta1 = conj(pivot) * m puts the pivot into
  // the truncated spectrum and, through the residue identity, into the full
  // spectrum as well.
  const Complex m = blaschke_factor(alpha_last, beta2);
  Complex beta1 = std::conj(pivot) * m;
  beta1 /= std::abs(beta1);

  alpha.push_back(alpha_last);
  return {VerblunskyData::make(std::move(alpha), beta1), beta2};
}

}  // namespace cmv
