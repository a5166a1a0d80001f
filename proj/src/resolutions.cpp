#include "secdet/resolutions.hpp"

#include <sstream>

namespace secdet {

BettiTable en_betti(int q, int e) {
  if (q < 1 || e < 1) throw std::invalid_argument("en_betti: q, e >= 1 required");
  const int a = q + 1, b = e + q;
  BettiTable table;
  table.push_back({0, 0, 1});
  for (int i = 1; i <= e; i++) {
    // wedge^{a+i-1} k^b tensor Sym_{i-1}(k^a)^*
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(b),
                 static_cast<unsigned long>(a + i - 1));
    mpz_class s;
    mpz_bin_uiui(s.get_mpz_t(), static_cast<unsigned long>(a + i - 2),
                 static_cast<unsigned long>(i - 1));
    table.push_back({i, q + i, r * s});
  }
  return table;
}

std::vector<mpz_class> hilbert_numerator_from_betti(const BettiTable& B) {
  int maxd = 0;
  for (const auto& row : B) maxd = std::max(maxd, row.twist);
  std::vector<mpz_class> num(maxd + 1, 0);
  for (const auto& row : B) {
    if (row.rank < 1) throw std::invalid_argument("Betti ranks must be positive");
    if (row.index % 2 == 0)
      num[row.twist] += row.rank;
    else
      num[row.twist] -= row.rank;
  }
  while (num.size() > 1 && num.back() == 0) num.pop_back();
  return num;
}

std::string betti_numerator_str(const std::vector<mpz_class>& numerator) {
  HilbertData h;
  h.numerator = numerator;
  return h.numerator_str();
}

bool resolution_consistency(const LinearMatrix& M, int q, int e, const GBOptions& opt) {
  Ideal I(M.ring(), minors(M, size_t(q) + 1));
  const HilbertData& h = I.hilbert(opt);
  const bool veronese = M.symmetric() && M.rows() == size_t(q) + 2;
  if (veronese) {
    if (h.codimension != 3) return false;
    if (h.degree != binomial_i64(q + 3, 3)) return false;
    // linear weight q+1: nothing between the constant term and t^{q+1}
    for (size_t k = 1; k < h.numerator.size() && k <= size_t(q); k++)
      if (h.numerator[k] != 0) return false;
    return true;
  }
  return h.numerator == hilbert_numerator_from_betti(en_betti(q, e));
}

}  // namespace secdet
