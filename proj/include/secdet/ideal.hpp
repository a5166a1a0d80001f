#pragma once

#include <optional>

#include "secdet/poly.hpp"

namespace secdet {

struct GBOptions {
  // Budget in top-reduction steps for one Groebner basis computation.
  uint64_t max_steps = 2'000'000;
};

// Raised when a computation exceeds its step budget: the instance is past
// desk scale and the caller must treat the result as unavailable.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(uint64_t budget)
      : std::runtime_error("Groebner budget of " + std::to_string(budget) +
                           " reduction steps exceeded") {}
};

struct HilbertData {
  int dimension = 0;    // Krull dimension of S/I
  int codimension = 0;  // #vars - dimension
  mpz_class degree = 0;
  std::vector<mpz_class> numerator;  // coeff of t^i over (1-t)^{#vars}

  std::string numerator_str() const;
};

// Finitely generated ideal with cached reduced Groebner basis and Hilbert
// data. Immutable after construction; copies share nothing mutable.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Poly> gens);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Poly>& gens() const { return gens_; }

  // Reduced, auto-reduced, monic Groebner basis under the ring order.
  const std::vector<Poly>& groebner(const GBOptions& opt = {}) const;
  bool has_groebner() const { return gb_.has_value(); }

  Poly normal_form(const Poly& p, const GBOptions& opt = {}) const;
  bool contains(const Poly& p, const GBOptions& opt = {}) const;

  const HilbertData& hilbert(const GBOptions& opt = {}) const;

  static bool equal(const Ideal& a, const Ideal& b, const GBOptions& opt = {});

 private:
  RingPtr ring_;
  std::vector<Poly> gens_;
  mutable std::optional<std::vector<Poly>> gb_;
  mutable std::optional<HilbertData> hilb_;
};

bool ideal_membership(const Poly& p, const Ideal& I, const GBOptions& opt = {});
bool ideal_equal(const Ideal& a, const Ideal& b, const GBOptions& opt = {});

// Intersection with the subring omitting `drop`. Requires the ring order to
// be a block order whose leading block is exactly the drop set; the result
// lives in a fresh degrevlex ring on the remaining variables.
Ideal eliminate(const Ideal& I, const std::vector<size_t>& drop, const GBOptions& opt = {});

// Dimension, codimension, degree and Hilbert-series numerator of a
// homogeneous ideal, from its leading-term ideal.
const HilbertData& hilbert_data(const Ideal& I, const GBOptions& opt = {});

// Internals reused by tests: numerator of a monomial ideal and the
// independent-set dimension.
std::vector<mpz_class> monomial_hilbert_numerator(const std::vector<Monomial>& gens, size_t nvars);
int monomial_dimension(const std::vector<Monomial>& gens, size_t nvars);

}  // namespace secdet
