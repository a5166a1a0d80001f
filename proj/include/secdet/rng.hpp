#pragma once

#include <random>

#include "secdet/field.hpp"

namespace secdet {

// Seeded PRNG handle. Passed explicitly wherever randomness is used; no
// hidden global state. Draws avoid std::uniform_int_distribution so the
// stream is identical across standard library implementations.
class Rng {
 public:
  explicit Rng(uint64_t seed) : g_(seed), seed_(seed) {}

  uint64_t seed() const { return seed_; }
  uint64_t next() { return g_(); }
  uint64_t below(uint64_t n) { return g_() % n; }

  // Uniform field element; rationals are sampled as bounded-height integers.
  Scalar scalar(const FieldSpec& f, int64_t height = 8) {
    if (f.is_prime_field())
      return Scalar::from_int(static_cast<int64_t>(below(uint64_t(f.characteristic))), f);
    return Scalar::from_int(static_cast<int64_t>(below(uint64_t(2 * height + 1))) - height, f);
  }

  Scalar nonzero_scalar(const FieldSpec& f, int64_t height = 8) {
    for (;;) {
      Scalar s = scalar(f, height);
      if (!s.is_zero()) return s;
    }
  }

  Rng fork() { return Rng(g_()); }

 private:
  std::mt19937_64 g_;
  uint64_t seed_;
};

}  // namespace secdet
