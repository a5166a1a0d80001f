#include "secdet/ideal.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace secdet {

namespace {

struct ReduceCtx {
  uint64_t steps = 0;
  uint64_t budget;
  explicit ReduceCtx(uint64_t b) : budget(b) {}
  void tick() {
    if (++steps > budget) throw BudgetExceeded(budget);
  }
};

// Full normal form of p modulo basis; deterministic divisor choice.
Poly reduce_full(const Poly& p, const std::vector<Poly>& basis, ReduceCtx& ctx,
                 int* sugar = nullptr, const std::vector<int>* basis_sugar = nullptr) {
  const RingPtr& ring = p.ring();
  Poly work = p, rem(ring);
  while (!work.is_zero()) {
    bool reduced = false;
    for (size_t k = 0; k < basis.size(); k++) {
      const Poly& g = basis[k];
      if (g.is_zero() || !g.lt().m.divides(work.lt().m)) continue;
      ctx.tick();
      Monomial m = work.lt().m.divide(g.lt().m);
      Scalar c = work.lt().c / g.lt().c;
      work = work - g.term_mul(m, c);
      if (sugar && basis_sugar)
        *sugar = std::max(*sugar, (*basis_sugar)[k] + int(m.deg));
      reduced = true;
      break;
    }
    if (!reduced) {
      rem = rem + Poly::term(ring, work.lt().m, work.lt().c);
      work = work - Poly::term(ring, work.lt().m, work.lt().c);
    }
  }
  return rem;
}

struct SPair {
  size_t i, j;
  Monomial lcm;
  int sugar;
};

struct SPairLess {
  const PolyRing* ring;
  bool operator()(const SPair& a, const SPair& b) const {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    int c = ring->cmp(a.lcm, b.lcm);
    if (c) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

std::vector<Poly> buchberger(const RingPtr& ring, const std::vector<Poly>& gens,
                             const GBOptions& opt) {
  ReduceCtx ctx(opt.max_steps);
  std::vector<Poly> basis;
  std::vector<int> sugar;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    basis.push_back(g);
    sugar.push_back(g.degree());
  }

  SPairLess less{ring.get()};
  std::multiset<SPair, SPairLess> pairs(less);
  std::set<std::pair<size_t, size_t>> pending;
  auto push_pair = [&](size_t i, size_t j) {
    const Monomial &mi = basis[i].lt().m, &mj = basis[j].lt().m;
    if (mi.coprime(mj)) return;  // product criterion
    Monomial L = Monomial::lcm(mi, mj);
    int s = std::max(sugar[i] + int(L.deg) - int(mi.deg), sugar[j] + int(L.deg) - int(mj.deg));
    pairs.insert({i, j, L, s});
    pending.insert({i, j});
  };
  for (size_t i = 0; i < basis.size(); i++)
    for (size_t j = i + 1; j < basis.size(); j++) push_pair(i, j);

  while (!pairs.empty()) {
    SPair p = *pairs.begin();
    pairs.erase(pairs.begin());
    pending.erase({p.i, p.j});

    // chain criterion
    bool skip = false;
    for (size_t k = 0; k < basis.size() && !skip; k++) {
      if (k == p.i || k == p.j) continue;
      if (!basis[k].lt().m.divides(p.lcm)) continue;
      auto key = [&](size_t a, size_t b) {
        return std::make_pair(std::min(a, b), std::max(a, b));
      };
      if (!pending.count(key(p.i, k)) && !pending.count(key(p.j, k))) skip = true;
    }
    if (skip) continue;

    const Poly &f = basis[p.i], &g = basis[p.j];
    Poly s = f.term_mul(p.lcm.divide(f.lt().m), Scalar::one(ring->field())) -
             g.term_mul(p.lcm.divide(g.lt().m), f.lt().c / g.lt().c);
    int hsugar = p.sugar;
    Poly h = reduce_full(s, basis, ctx, &hsugar, &sugar);
    if (h.is_zero()) continue;
    basis.push_back(h);
    sugar.push_back(hsugar);
    size_t newi = basis.size() - 1;
    for (size_t i = 0; i < newi; i++) push_pair(i, newi);
  }

  // minimalize
  std::vector<Poly> minimal;
  for (size_t i = 0; i < basis.size(); i++) {
    bool redundant = false;
    for (size_t j = 0; j < basis.size() && !redundant; j++) {
      if (i == j) continue;
      if (basis[j].lt().m.divides(basis[i].lt().m)) {
        if (!(basis[i].lt().m == basis[j].lt().m) || j < i) redundant = true;
      }
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  // tail-reduce each element against the others, make monic
  std::vector<Poly> reduced;
  for (size_t i = 0; i < minimal.size(); i++) {
    std::vector<Poly> others;
    for (size_t j = 0; j < minimal.size(); j++)
      if (j != i) others.push_back(minimal[j]);
    reduced.push_back(reduce_full(minimal[i], others, ctx).monic());
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Poly& a, const Poly& b) {
    return ring->cmp(a.lt().m, b.lt().m) < 0;
  });
  return reduced;
}

}  // namespace

Ideal::Ideal(RingPtr ring, std::vector<Poly> gens) : ring_(std::move(ring)), gens_(std::move(gens)) {
  for (const auto& g : gens_)
    if (g.ring().get() != ring_.get()) throw std::domain_error("generator ring mismatch");
}

const std::vector<Poly>& Ideal::groebner(const GBOptions& opt) const {
  if (!gb_) gb_ = buchberger(ring_, gens_, opt);
  return *gb_;
}

Poly Ideal::normal_form(const Poly& p, const GBOptions& opt) const {
  if (p.ring().get() != ring_.get()) throw std::domain_error("ring mismatch");
  ReduceCtx ctx(opt.max_steps);
  return reduce_full(p, groebner(opt), ctx);
}

bool Ideal::contains(const Poly& p, const GBOptions& opt) const {
  return normal_form(p, opt).is_zero();
}

bool Ideal::equal(const Ideal& a, const Ideal& b, const GBOptions& opt) {
  if (a.ring().get() != b.ring().get()) throw std::domain_error("ring mismatch");
  for (const auto& g : a.gens_)
    if (!b.contains(g, opt)) return false;
  for (const auto& g : b.gens_)
    if (!a.contains(g, opt)) return false;
  return true;
}

bool ideal_membership(const Poly& p, const Ideal& I, const GBOptions& opt) {
  return I.contains(p, opt);
}

bool ideal_equal(const Ideal& a, const Ideal& b, const GBOptions& opt) {
  return Ideal::equal(a, b, opt);
}

Ideal eliminate(const Ideal& I, const std::vector<size_t>& drop, const GBOptions& opt) {
  const RingPtr& ring = I.ring();
  if (drop.empty()) return I;
  const MonomialOrder& ord = ring->order();
  std::set<size_t> dropset(drop.begin(), drop.end());
  if (ord.kind != OrderKind::Block || ord.block != dropset.size())
    throw std::invalid_argument(
        "eliminate: ring order must be a block order whose leading block is the drop set");
  for (size_t i = 0; i < ord.block; i++)
    if (!dropset.count(i))
      throw std::invalid_argument("eliminate: drop variables must form the leading block");

  const auto& gb = I.groebner(opt);
  std::vector<std::string> keep_names;
  std::vector<size_t> var_map(ring->nvars(), size_t(-1));
  for (size_t i = ord.block; i < ring->nvars(); i++) {
    var_map[i] = keep_names.size();
    keep_names.push_back(ring->var(i));
  }
  RingPtr sub = PolyRing::make(keep_names, ring->field(), MonomialOrder::degrevlex());
  std::vector<Poly> kept;
  for (const auto& g : gb) {
    bool pure = true;
    for (const auto& t : g.terms())
      for (size_t i = 0; i < ord.block && pure; i++)
        if (t.m.e[i]) pure = false;
    if (!pure) continue;
    std::vector<Term> ts;
    for (const auto& t : g.terms()) {
      Monomial m = Monomial::one(sub->nvars());
      for (size_t i = ord.block; i < ring->nvars(); i++) m.e[var_map[i]] = t.m.e[i];
      m.deg = t.m.deg;
      ts.push_back({m, t.c});
    }
    kept.push_back(Poly::from_terms(sub, std::move(ts)));
  }
  return Ideal(sub, std::move(kept));
}

// ---------- Hilbert series of monomial ideals ----------

namespace {

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::vector<Monomial> out;
  for (size_t i = 0; i < gens.size(); i++) {
    bool redundant = false;
    for (size_t j = 0; j < gens.size() && !redundant; j++) {
      if (i == j) continue;
      if (gens[j].divides(gens[i]) && (!(gens[i] == gens[j]) || j < i)) redundant = true;
    }
    if (!redundant) out.push_back(gens[i]);
  }
  return out;
}

void poly_add_shifted(std::vector<mpz_class>& a, const std::vector<mpz_class>& b, size_t shift) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
  for (size_t i = 0; i < b.size(); i++) a[i + shift] += b[i];
}

// multiply in place by (1 - t^d)
void poly_mul_one_minus(std::vector<mpz_class>& a, size_t d) {
  std::vector<mpz_class> r(a.size() + d, 0);
  for (size_t i = 0; i < a.size(); i++) {
    r[i] += a[i];
    r[i + d] -= a[i];
  }
  a = std::move(r);
}

void poly_trim(std::vector<mpz_class>& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  if (a.empty()) a.push_back(0);
}

std::vector<mpz_class> numerator_rec(std::vector<Monomial> gens) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return {1};
  if (gens.size() == 1 && gens[0].is_one()) return {0};  // unit ideal

  bool pairwise_coprime = true;
  for (size_t i = 0; i < gens.size() && pairwise_coprime; i++)
    for (size_t j = i + 1; j < gens.size() && pairwise_coprime; j++)
      if (!gens[i].coprime(gens[j])) pairwise_coprime = false;
  if (pairwise_coprime) {
    std::vector<mpz_class> r = {1};
    for (const auto& m : gens) poly_mul_one_minus(r, m.deg);
    poly_trim(r);
    return r;
  }

  // pivot: variable occurring in the most generators
  const size_t n = gens[0].n;
  size_t best = 0, best_count = 0;
  for (size_t v = 0; v < n; v++) {
    size_t cnt = 0;
    for (const auto& m : gens)
      if (m.e[v]) cnt++;
    if (cnt > best_count) best_count = cnt, best = v;
  }
  // I + (x): generators not involving x, plus x itself
  std::vector<Monomial> plus{Monomial::var(n, best)};
  for (const auto& m : gens)
    if (!m.e[best]) plus.push_back(m);
  // I : x
  std::vector<Monomial> colon;
  for (auto m : gens) {
    if (m.e[best]) {
      m.e[best]--;
      m.deg--;
    }
    colon.push_back(m);
  }
  std::vector<mpz_class> r = numerator_rec(std::move(plus));
  poly_add_shifted(r, numerator_rec(std::move(colon)), 1);
  poly_trim(r);
  return r;
}

}  // namespace

std::vector<mpz_class> monomial_hilbert_numerator(const std::vector<Monomial>& gens, size_t) {
  return numerator_rec(gens);
}

int monomial_dimension(const std::vector<Monomial>& gens, size_t nvars) {
  for (const auto& m : gens)
    if (m.is_one()) return -1;  // unit ideal
  // supports as bitmasks
  std::vector<uint32_t> supp;
  for (const auto& m : gens) {
    uint32_t s = 0;
    for (size_t i = 0; i < nvars; i++)
      if (m.e[i]) s |= uint32_t(1) << i;
    supp.push_back(s);
  }
  int best = 0;
  // DFS over variable subsets, pruned by the best found so far
  std::function<void(size_t, uint32_t, int)> rec = [&](size_t v, uint32_t mask, int size) {
    if (size + int(nvars - v) <= best) return;
    if (v == nvars) {
      best = std::max(best, size);
      return;
    }
    uint32_t with = mask | (uint32_t(1) << v);
    bool ok = true;
    for (uint32_t s : supp)
      if ((s & ~with) == 0) {
        ok = false;
        break;
      }
    if (ok) rec(v + 1, with, size + 1);
    rec(v + 1, mask, size);
  };
  rec(0, 0, 0);
  return best;
}

std::string HilbertData::numerator_str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < numerator.size(); i++) {
    if (numerator[i] == 0) continue;
    mpz_class c = numerator[i];
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    mpz_class a = abs(c);
    if (a != 1 || i == 0) os << a.get_str();
    if (i >= 1) {
      if (a != 1) os << "*";
      os << "t";
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

const HilbertData& Ideal::hilbert(const GBOptions& opt) const {
  if (hilb_) return *hilb_;
  for (const auto& g : gens_)
    if (!g.is_homogeneous()) throw std::invalid_argument("hilbert_data: non-homogeneous ideal");
  const auto& gb = groebner(opt);
  std::vector<Monomial> lts;
  for (const auto& g : gb) lts.push_back(g.lt().m);
  const size_t n = ring_->nvars();

  HilbertData h;
  h.numerator = monomial_hilbert_numerator(lts, n);
  h.dimension = monomial_dimension(lts, n);
  h.codimension = int(n) - h.dimension;
  if (h.dimension < 0) {
    h.degree = 0;
  } else {
    // divide the numerator by (1-t)^codim; each division is a prefix sum
    std::vector<mpz_class> q = h.numerator;
    for (int k = 0; k < h.codimension; k++) {
      mpz_class run = 0;
      for (auto& c : q) {
        run += c;
        c = run;
      }
      if (q.back() != 0)
        throw std::logic_error("hilbert: numerator not divisible by (1-t)^codim");
      q.pop_back();
      if (q.empty()) q.push_back(0);
    }
    mpz_class deg = 0;
    for (const auto& c : q) deg += c;
    h.degree = deg;
  }
  hilb_ = std::move(h);
  return *hilb_;
}

const HilbertData& hilbert_data(const Ideal& I, const GBOptions& opt) { return I.hilbert(opt); }

}  // namespace secdet
