#include <algorithm>

#include "secdet/linmat.hpp"

namespace secdet {

namespace {

// ---------- univariate root enumeration over the base field ----------

std::vector<Scalar> univariate_roots(const Poly& g, size_t v) {
  const FieldSpec f = g.ring()->field();
  std::vector<Scalar> roots;
  if (g.is_zero()) return roots;
  int d = 0;
  for (const auto& t : g.terms()) d = std::max(d, int(t.m.e[v]));
  std::vector<Scalar> coeff(d + 1, Scalar::zero(f));
  for (const auto& t : g.terms()) coeff[t.m.e[v]] = t.c;

  auto eval_at = [&](const Scalar& x) {
    Scalar acc = Scalar::zero(f);
    for (int k = d; k >= 0; k--) acc = acc * x + coeff[k];
    return acc;
  };

  if (f.is_prime_field()) {
    if (f.characteristic > (1 << 20)) return roots;  // enumeration impractical
    for (int64_t x = 0; x < f.characteristic; x++) {
      Scalar s = Scalar::from_int(x, f);
      if (eval_at(s).is_zero()) roots.push_back(s);
      if (int(roots.size()) == d) break;
    }
    return roots;
  }

  // rational root candidates p/q with p | a0, q | ad (integer-cleared form)
  mpz_class lcm_den = 1;
  std::vector<mpq_class> qc;
  for (int k = 0; k <= d; k++) {
    mpq_class q(coeff[k].str());
    q.canonicalize();
    qc.push_back(q);
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), q.get_den().get_mpz_t());
  }
  std::vector<mpz_class> ic;
  for (auto& q : qc) ic.push_back(mpz_class(q * lcm_den));
  int lo = 0;
  while (lo <= d && ic[lo] == 0) lo++;
  if (lo > 0 && lo <= d) roots.push_back(Scalar::zero(f));
  if (lo > d) return roots;
  auto divisors = [](mpz_class n) {
    n = abs(n);
    std::vector<mpz_class> ds;
    for (mpz_class i = 1; i * i <= n && ds.size() < 512; i++) {
      if (n % i == 0) {
        ds.push_back(i);
        if (i * i != n) ds.push_back(n / i);
      }
    }
    return ds;
  };
  for (const auto& p : divisors(ic[lo]))
    for (const auto& q : divisors(ic[d])) {
      for (int sign : {1, -1}) {
        Scalar cand = Scalar::from_mpz(sign * p, q, f);
        if (eval_at(cand).is_zero() &&
            std::find(roots.begin(), roots.end(), cand) == roots.end())
          roots.push_back(cand);
      }
    }
  return roots;
}

std::optional<std::vector<Scalar>> search_point(const RingPtr& ring, std::vector<Poly> gens,
                                                std::vector<std::optional<Scalar>> assign,
                                                Rng& rng, const GBOptions& opt, int& budget) {
  if (budget-- <= 0) return std::nullopt;
  const FieldSpec f = ring->field();
  Ideal I(ring, gens);
  const auto& gb = I.groebner(opt);
  if (gb.size() == 1 && gb[0].degree() == 0) return std::nullopt;  // inconsistent

  // next unassigned variable, highest index first
  int next = -1;
  for (int v = int(ring->nvars()) - 1; v >= 0; v--)
    if (!assign[v]) {
      next = v;
      break;
    }
  if (next < 0 || gb.empty()) {
    std::vector<Scalar> pt;
    for (auto& a : assign) pt.push_back(a ? *a : Scalar::zero(f));
    // confirm
    for (const auto& g : gens)
      if (!g.eval(pt).is_zero()) return std::nullopt;
    return pt;
  }

  // prefer a variable with a univariate generator
  int uni_var = -1;
  const Poly* uni_gen = nullptr;
  for (int v = int(ring->nvars()) - 1; v >= 0 && !uni_gen; v--) {
    if (assign[v]) continue;
    for (const auto& g : gb) {
      bool univ = !g.is_zero();
      for (const auto& t : g.terms())
        for (size_t i = 0; i < ring->nvars() && univ; i++)
          if (t.m.e[i] && int(i) != v) univ = false;
      if (univ && g.degree() > 0) {
        uni_var = v;
        uni_gen = &g;
        break;
      }
    }
  }

  std::vector<Scalar> candidates;
  size_t var = 0;
  if (uni_gen) {
    var = size_t(uni_var);
    candidates = univariate_roots(*uni_gen, var);
    if (candidates.empty()) return std::nullopt;  // no rational root on this branch
  } else {
    var = size_t(next);
    candidates = {Scalar::zero(f), Scalar::one(f), -Scalar::one(f)};
    for (int k = 0; k < 5; k++) candidates.push_back(rng.scalar(f));
  }

  for (const auto& c : candidates) {
    std::vector<Poly> map;
    for (size_t i = 0; i < ring->nvars(); i++)
      map.push_back(i == var ? Poly::constant(ring, c) : Poly::variable(ring, i));
    std::vector<Poly> sub;
    for (const auto& g : gb) sub.push_back(pullback(g, map, ring));
    auto a2 = assign;
    a2[var] = c;
    if (auto r = search_point(ring, std::move(sub), std::move(a2), rng, opt, budget)) return r;
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<Scalar>> find_rational_point(const Ideal& I, Rng& rng,
                                                       const GBOptions& opt, int depth_budget) {
  std::vector<std::optional<Scalar>> assign(I.ring()->nvars());
  int budget = depth_budget;
  return search_point(I.ring(), I.gens(), std::move(assign), rng, opt, budget);
}

// ---------- 1-genericity ----------

OneGenericResult is_one_generic(const LinearMatrix& M, const GBOptions& opt) {
  if (M.is_zero()) throw std::invalid_argument("is_one_generic: zero matrix");
  const RingPtr& ring = M.ring();
  const FieldSpec f = ring->field();
  const size_t a = M.rows(), b = M.cols(), n = ring->nvars();

  // coefficient slices: ck[k](s,t) = coeff of ring var k in M_{s,t}
  std::vector<ScalMat> ck(n, ScalMat(a, b, f));
  for (size_t s = 0; s < a; s++)
    for (size_t t = 0; t < b; t++)
      for (size_t k = 0; k < n; k++) ck[k].at(s, t) = M.at(s, t).linear_coeff(k);

  Rng rng(0x1eadbeef);
  for (size_t ci = 0; ci < a; ci++) {
    for (size_t cj = 0; cj < b; cj++) {
      // unknowns: v_s (s != ci), w_t (t != cj); v_ci = w_cj = 1
      std::vector<std::string> names;
      std::vector<int> vidx(a, -1), widx(b, -1);
      for (size_t s = 0; s < a; s++)
        if (s != ci) {
          vidx[s] = int(names.size());
          names.push_back("v" + std::to_string(s));
        }
      for (size_t t = 0; t < b; t++)
        if (t != cj) {
          widx[t] = int(names.size());
          names.push_back("w" + std::to_string(t));
        }

      bool consistent;
      std::optional<std::vector<Scalar>> point;
      if (names.empty()) {
        // 1x1 matrix: v^T M w = entry
        consistent = M.at(ci, cj).is_zero();
      } else {
        RingPtr sys = PolyRing::make(names, f);
        std::vector<Poly> eqs;
        for (size_t k = 0; k < n; k++) {
          Poly e(sys);
          for (size_t s = 0; s < a; s++)
            for (size_t t = 0; t < b; t++) {
              const Scalar& c = ck[k].at(s, t);
              if (c.is_zero()) continue;
              Poly term = Poly::constant(sys, c);
              if (vidx[s] >= 0) term = term * Poly::variable(sys, size_t(vidx[s]));
              if (widx[t] >= 0) term = term * Poly::variable(sys, size_t(widx[t]));
              e = e + term;
            }
          if (!e.is_zero()) eqs.push_back(e);
        }
        Ideal I(sys, eqs);
        const auto& gb = I.groebner(opt);
        consistent = !(gb.size() == 1 && gb[0].degree() == 0);
        if (consistent) point = find_rational_point(I, rng, opt);
      }
      if (!consistent) continue;

      OneGenericResult res;
      res.one_generic = false;
      if (names.empty()) {
        std::vector<Scalar> v(a, Scalar::zero(f)), w(b, Scalar::zero(f));
        v[ci] = Scalar::one(f);
        w[cj] = Scalar::one(f);
        res.witness = {v, w};
        return res;
      }
      if (point) {
        std::vector<Scalar> v(a, Scalar::zero(f)), w(b, Scalar::zero(f));
        v[ci] = Scalar::one(f);
        w[cj] = Scalar::one(f);
        for (size_t s = 0; s < a; s++)
          if (vidx[s] >= 0) v[s] = (*point)[size_t(vidx[s])];
        for (size_t t = 0; t < b; t++)
          if (widx[t] >= 0) w[t] = (*point)[size_t(widx[t])];
        // verify v^T M w == 0 as a form
        Poly form(M.ring());
        for (size_t s = 0; s < a; s++)
          for (size_t t = 0; t < b; t++) form = form + M.at(s, t).scaled(v[s] * w[t]);
        if (form.is_zero()) {
          res.witness = {v, w};
          return res;
        }
      }
      res.chart = {ci, cj};
      return res;
    }
  }
  return OneGenericResult{true, std::nullopt, std::nullopt};
}

// ---------- GL equivalence ----------

namespace {

struct SolutionSpace {
  // A(x) and C(x) entries as linear forms over the parameter ring
  std::vector<std::vector<Scalar>> basis;  // kernel basis, each of length a*a + b*b
  size_t a, b;
  FieldSpec f;

  ScalMat eval_A(std::span<const Scalar> x) const {
    ScalMat A(a, a, f);
    for (size_t k = 0; k < basis.size(); k++)
      for (size_t i = 0; i < a * a; i++)
        if (!basis[k][i].is_zero()) A.at(i / a, i % a) += basis[k][i] * x[k];
    return A;
  }
  ScalMat eval_C(std::span<const Scalar> x) const {
    ScalMat C(b, b, f);
    for (size_t k = 0; k < basis.size(); k++)
      for (size_t i = 0; i < b * b; i++)
        if (!basis[k][a * a + i].is_zero()) C.at(i / b, i % b) += basis[k][a * a + i] * x[k];
    return C;
  }
};

SolutionSpace solve_intertwiner_space(const LinearMatrix& M, const LinearMatrix& Mp) {
  const RingPtr& ring = M.ring();
  const FieldSpec f = ring->field();
  const size_t a = M.rows(), b = M.cols(), n = ring->nvars();
  // unknowns: A (a*a, row-major), then C (b*b)
  ScalMat sys(a * b * n, a * a + b * b, f);
  size_t row = 0;
  for (size_t i = 0; i < a; i++)
    for (size_t j = 0; j < b; j++)
      for (size_t k = 0; k < n; k++, row++) {
        for (size_t s = 0; s < a; s++) sys.at(row, i * a + s) = M.at(s, j).linear_coeff(k);
        for (size_t t = 0; t < b; t++)
          sys.at(row, a * a + t * b + j) -= Mp.at(i, t).linear_coeff(k);
      }
  SolutionSpace sp;
  sp.basis = sys.kernel();
  sp.a = a;
  sp.b = b;
  sp.f = f;
  return sp;
}

std::optional<GLWitness> witness_from(const ScalMat& A, const ScalMat& C,
                                      const LinearMatrix& M, const LinearMatrix& Mp,
                                      bool congruence) {
  auto Ainv = A.inverse();
  auto Cinv = C.inverse();
  if (!Ainv || !Cinv) return std::nullopt;
  if (congruence) {
    // need C^T A = c I with c a square; rescale to get B = A
    ScalMat S = C.transpose() * A;
    const FieldSpec f = A.field();
    Scalar c = S.at(0, 0);
    if (c.is_zero()) return std::nullopt;
    ScalMat cI = ScalMat::identity(A.rows(), f).scaled(c);
    if (!(S == cI)) return std::nullopt;
    Scalar root;
    if (!c.inv().sqrt(&root)) return std::nullopt;
    ScalMat W = A.scaled(root);
    if (!(M.apply(W, W) == Mp)) return std::nullopt;
    return GLWitness{W, W};
  }
  ScalMat B = Cinv->transpose();
  if (!(M.apply(A, B) == Mp)) return std::nullopt;
  return GLWitness{A, B};
}

// symbolic det of A(x) as a polynomial over the parameter ring
Poly symbolic_det(const SolutionSpace& sp, bool which_A, const RingPtr& xring) {
  const size_t m = which_A ? sp.a : sp.b;
  LinearMatrix L(xring, m, m);
  for (size_t i = 0; i < m; i++)
    for (size_t j = 0; j < m; j++) {
      Poly e(xring);
      for (size_t k = 0; k < sp.basis.size(); k++) {
        const Scalar& c = which_A ? sp.basis[k][i * m + j] : sp.basis[k][sp.a * sp.a + i * m + j];
        if (!c.is_zero()) e = e + Poly::variable(xring, k).scaled(c);
      }
      L.set(i, j, e);
    }
  return det_linmat(L);
}

}  // namespace

std::optional<GLWitness> gl_equivalent(const LinearMatrix& M, const LinearMatrix& Mp, Rng& rng,
                                       const GLEquivalenceOptions& opt) {
  if (M.rows() != Mp.rows() || M.cols() != Mp.cols())
    throw std::invalid_argument("gl_equivalent: size mismatch");
  if (M.ring().get() != Mp.ring().get()) throw std::domain_error("ring mismatch");
  if (opt.congruence && (!M.symmetric() || !Mp.symmetric()))
    throw std::invalid_argument("congruence equivalence needs symmetric matrices");
  const FieldSpec f = M.ring()->field();

  if (M == Mp) {
    ScalMat I_a = ScalMat::identity(M.rows(), f), I_b = ScalMat::identity(M.cols(), f);
    return GLWitness{I_a, opt.congruence ? I_a : I_b};
  }

  SolutionSpace sp = solve_intertwiner_space(M, Mp);
  const size_t d = sp.basis.size();
  if (d == 0) return std::nullopt;

  for (size_t trial = 0; trial < opt.samples; trial++) {
    std::vector<Scalar> x;
    for (size_t k = 0; k < d; k++) x.push_back(rng.scalar(f));
    if (auto w = witness_from(sp.eval_A(x), sp.eval_C(x), M, Mp, opt.congruence)) return w;
  }

  if (opt.congruence) {
    // solve C(x)^T A(x) = c I exactly on the parameter space
    std::vector<std::string> names;
    for (size_t k = 0; k < d; k++) names.push_back("x" + std::to_string(k));
    names.push_back("c");
    if (names.size() > kMaxVars) return std::nullopt;
    RingPtr xr = PolyRing::make(names, f);
    const size_t a = sp.a;
    std::vector<Poly> eqs;
    for (size_t i = 0; i < a; i++)
      for (size_t j = 0; j < a; j++) {
        Poly e(xr);
        // (C^T A)_{ij} = sum_s C(x)_{s i} A(x)_{s j}
        for (size_t k1 = 0; k1 < d; k1++)
          for (size_t k2 = 0; k2 < d; k2++) {
            Scalar coef = Scalar::zero(f);
            for (size_t s = 0; s < a; s++)
              coef += sp.basis[k1][a * a + s * a + i] * sp.basis[k2][s * a + j];
            if (!coef.is_zero())
              e = e + (Poly::variable(xr, k1) * Poly::variable(xr, k2)).scaled(coef);
          }
        if (i == j) e = e - Poly::variable(xr, d);
        if (!e.is_zero()) eqs.push_back(e);
      }
    Ideal I(xr, eqs);
    for (int attempt = 0; attempt < 4; attempt++) {
      Rng sub = rng.fork();
      auto pt = find_rational_point(I, sub, opt.gb);
      if (!pt) break;
      std::vector<Scalar> x(pt->begin(), pt->begin() + d);
      if (auto w = witness_from(sp.eval_A(x), sp.eval_C(x), M, Mp, true)) return w;
    }
    return std::nullopt;
  }

  // exact emptiness check of the invertible stratum, then a last sampling pass
  std::vector<std::string> names;
  for (size_t k = 0; k < d; k++) names.push_back("x" + std::to_string(k));
  names.push_back("u");
  names.push_back("v");
  if (names.size() > kMaxVars) return std::nullopt;
  RingPtr xr0 = PolyRing::make(std::vector<std::string>(names.begin(), names.begin() + d), f);
  RingPtr xr = PolyRing::make(names, f);
  std::vector<size_t> vm;
  for (size_t k = 0; k < d; k++) vm.push_back(k);
  Poly detA = transport(symbolic_det(sp, true, xr0), xr, vm);
  Poly detC = transport(symbolic_det(sp, false, xr0), xr, vm);
  Poly one = Poly::constant(xr, Scalar::one(f));
  std::vector<Poly> eqs = {detA * Poly::variable(xr, d) - one,
                           detC * Poly::variable(xr, d + 1) - one};
  Ideal I(xr, eqs);
  const auto& gb = I.groebner(opt.gb);
  if (gb.size() == 1 && gb[0].degree() == 0) return std::nullopt;  // no invertible solution
  for (int attempt = 0; attempt < 4; attempt++) {
    Rng sub = rng.fork();
    auto pt = find_rational_point(I, sub, opt.gb);
    if (!pt) break;
    std::vector<Scalar> x(pt->begin(), pt->begin() + d);
    if (auto w = witness_from(sp.eval_A(x), sp.eval_C(x), M, Mp, false)) return w;
  }
  for (size_t trial = 0; trial < 16 * opt.samples; trial++) {
    std::vector<Scalar> x;
    for (size_t k = 0; k < d; k++) x.push_back(rng.scalar(f));
    if (auto w = witness_from(sp.eval_A(x), sp.eval_C(x), M, Mp, opt.congruence)) return w;
  }
  return std::nullopt;
}

}  // namespace secdet
