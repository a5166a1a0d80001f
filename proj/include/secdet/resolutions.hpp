#pragma once

#include "secdet/linmat.hpp"

namespace secdet {

struct BettiRow {
  int index;   // homological index i
  int twist;   // generation degree d_i
  mpz_class rank;
};

using BettiTable = std::vector<BettiRow>;

// Eagon-Northcott ranks for the maximal minors of a (q+1) x (e+q) matrix,
// including the index-0 free module.
BettiTable en_betti(int q, int e);

// sum_i (-1)^i beta_i t^{d_i}
std::vector<mpz_class> hilbert_numerator_from_betti(const BettiTable& B);
std::string betti_numerator_str(const std::vector<mpz_class>& numerator);

// Scroll case: the Groebner Hilbert numerator of I_{q+1}(M) must equal the
// Eagon-Northcott numerator. Veronese case: codimension 3, degree C(q+3,3),
// and the numerator supported at 0 and degrees >= q+1.
bool resolution_consistency(const LinearMatrix& M, int q, int e, const GBOptions& opt = {});

}  // namespace secdet
