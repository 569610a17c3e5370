#pragma once

#include <cstdint>
#include <random>

#include "gib/field.hpp"

// Seeded field synthesis for the randomized probes. Doubles are derived from
// raw generator words rather than std distributions, so a given seed yields
// the same fields on every platform.

namespace gib {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }
  // Uniform in [-1, 1).
  double uniform_pm() { return 2.0 * uniform() - 1.0; }

 private:
  std::mt19937_64 gen_;
};

// Random low-mode field (modes up to k_cut_fraction of Nyquist), scaled to
// the given sup-norm. The Gaussian envelope keeps samples below ~1e-13 at the
// box edge, matching the decay the solver assumes of every field.
Field random_band_limited(const GridPtr& grid, Rng& rng,
                          double amplitude = 1.0,
                          double k_cut_fraction = 0.25,
                          bool localized = true);

// Square of a band-limited field: smooth, nonnegative, localized.
Field random_nonnegative(const GridPtr& grid, Rng& rng,
                         double amplitude = 1.0);

}  // namespace gib
