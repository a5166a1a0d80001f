#pragma once

#include "secdet/variety.hpp"

namespace secdet {

struct SecantProfile {
  int q = 1;
  int dim_secant = 0;
  int e = 0;  // codimension of S^q(X)
  int64_t minimal_degree_target = 0;  // C(e+q, q)
  std::optional<mpz_class> measured_degree;
};

// C(e+q, q), the sharp lower bound for deg S^q(X).
int64_t min_degree(int e, int q);

Point sample_secant_point(const ParamVariety& V, int q, Rng& rng);

// Terracini dimension estimate: span of tangent spaces at q general points,
// maximized over `trials` draws.
SecantProfile terracini(const ParamVariety& V, int q, Rng& rng, int trials = 5);

// Linear matrix of the multiplication pairing: entry (i,j) is the ambient
// linear form pulling back to s1[i] * s2[j] * u.
LinearMatrix matrix_from_multiplication(const ParamVariety& V, const std::vector<Poly>& s1,
                                        const std::vector<Poly>& s2,
                                        const std::optional<Poly>& u = std::nullopt);
// Same, using the variety's stored family decomposition.
LinearMatrix family_presentation(const ParamVariety& V);

enum class CheckStatus { Pass, Fail, Evidence, Skipped };
std::string status_str(CheckStatus s);

struct NamedCheck {
  std::string name;
  CheckStatus status;
  std::string note;
};

enum class PresentationKind { Scroll, Veronese, NotCertified };

struct PresentationVerdict {
  PresentationKind kind = PresentationKind::NotCertified;
  std::vector<NamedCheck> checks;
  std::optional<HilbertData> hilbert;
  std::string failing;  // first failing check, when not certified

  bool all_pass() const;
};

struct CertifyOptions {
  int secant_trials = 200;
  GBOptions gb;
  bool run_hilbert = true;
};

// The five-step certification battery: 1-genericity, symbolic 2-minor
// vanishing on X, size check against e, sampled (q+1)-minor vanishing on
// secant points, and exact Hilbert data of I_{q+1}(M).
PresentationVerdict certify_presentation(const LinearMatrix& M, const ParamVariety& V, int q,
                                         const SecantProfile& profile, Rng& rng,
                                         const CertifyOptions& opt = {});

// rank M(w) <= q at sampled q-secant points.
bool rank_bound_check(const LinearMatrix& M, const ParamVariety& V, int q, int trials, Rng& rng);

struct SectionFactorization {
  std::vector<Poly> s, t;  // parameter-ring section vectors
  Poly u;                  // base section (monic)
  std::optional<Scalar> alpha;  // symmetric case: s_i = alpha * t_i
};

// Lemma-style factorization M_{i,j} (pulled back) = s_i * t_j * u.
SectionFactorization factor_presentation(const LinearMatrix& M, const ParamVariety& V);

// Exact graded pieces of the secant ideal on tiny instances: sampling
// kernel plus symbolic certification on the q-fold parametrization.
Ideal secant_ideal_tiny(const ParamVariety& V, int q, int D, Rng& rng);

// Symbolic q-secant parametrization map: ambient variable k pulls back to
// sum_i lambda_i * section_k(t^(i)) in a fresh ring.
struct SecantParametrization {
  RingPtr ring;
  std::vector<Poly> map;  // length r+1
};
SecantParametrization secant_parametrization(const ParamVariety& V, int q);

}  // namespace secdet
