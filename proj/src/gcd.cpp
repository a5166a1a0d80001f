#include "secdet/poly.hpp"

namespace secdet {

Poly exact_div(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  const RingPtr& ring = a.ring();
  Poly r = a, q(ring);
  while (!r.is_zero()) {
    if (!b.lt().m.divides(r.lt().m))
      throw std::domain_error("exact_div: not divisible");
    Monomial m = r.lt().m.divide(b.lt().m);
    Scalar c = r.lt().c / b.lt().c;
    q = q + Poly::term(ring, m, c);
    r = r - b.term_mul(m, c);
  }
  return q;
}

namespace {

int deg_in(const Poly& p, size_t v) {
  int d = -1;
  for (const auto& t : p.terms()) d = std::max(d, int(t.m.e[v]));
  return d;
}

// coefficient of v^k, with v stripped out of the monomials
Poly coeff_in(const Poly& p, size_t v, int k) {
  std::vector<Term> ts;
  for (const auto& t : p.terms()) {
    if (t.m.e[v] != k) continue;
    Monomial m = t.m;
    m.deg = static_cast<uint16_t>(m.deg - m.e[v]);
    m.e[v] = 0;
    ts.push_back({m, t.c});
  }
  return Poly::from_terms(p.ring(), std::move(ts));
}

Poly var_pow(const RingPtr& ring, size_t v, int k) {
  return Poly::term(ring, Monomial::var(ring->nvars(), v, static_cast<uint8_t>(k)),
                    Scalar::one(ring->field()));
}

Poly gcd_rec(Poly a, Poly b);

Poly content_in(const Poly& p, size_t v) {
  Poly c(p.ring());
  for (int k = 0; k <= deg_in(p, v); k++) {
    Poly ck = coeff_in(p, v, k);
    if (!ck.is_zero()) c = c.is_zero() ? ck : gcd_rec(c, ck);
  }
  return c;
}

// pseudo-remainder of f by g with respect to v
Poly prem(Poly f, const Poly& g, size_t v) {
  const int dg = deg_in(g, v);
  Poly lcg = coeff_in(g, v, dg);
  while (!f.is_zero()) {
    int df = deg_in(f, v);
    if (df < dg) break;
    Poly lcf = coeff_in(f, v, df);
    f = f * lcg - g * lcf * var_pow(f.ring(), v, df - dg);
  }
  return f;
}

Poly gcd_rec(Poly a, Poly b) {
  const RingPtr ring = a.ring();
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;

  // split off the monomial content
  auto mono_content = [](const Poly& p) {
    Monomial g = p.lt().m;
    for (const auto& t : p.terms()) g = Monomial::gcd(g, t.m);
    return g;
  };
  Monomial ma = mono_content(a), mb = mono_content(b);
  Monomial mg = Monomial::gcd(ma, mb);
  const Scalar one = Scalar::one(ring->field());
  a = exact_div(a, Poly::term(ring, ma, one));
  b = exact_div(b, Poly::term(ring, mb, one));
  Poly mono = Poly::term(ring, mg, one);

  // main variable: highest-index variable appearing in either part
  int main_var = -1;
  for (const auto& p : {a, b})
    for (const auto& t : p.terms())
      for (size_t i = 0; i < ring->nvars(); i++)
        if (t.m.e[i]) main_var = std::max(main_var, int(i));
  if (main_var < 0) return mono;  // both constants
  const size_t v = static_cast<size_t>(main_var);
  if (deg_in(a, v) < 0 || deg_in(b, v) < 0) {
    // one side does not involve v: gcd divides its content in v
    if (deg_in(a, v) < 0) return mono * gcd_rec(a, content_in(b, v));
    return mono * gcd_rec(content_in(a, v), b);
  }

  Poly ca = content_in(a, v), cb = content_in(b, v);
  Poly cg = gcd_rec(ca, cb);
  Poly f = exact_div(a, ca), g = exact_div(b, cb);
  if (deg_in(f, v) < deg_in(g, v)) std::swap(f, g);
  while (true) {
    Poly r = prem(f, g, v);
    if (r.is_zero()) break;
    if (deg_in(r, v) == 0) {
      // coprime in v
      g = Poly::constant(ring, one);
      break;
    }
    f = g;
    g = exact_div(r, content_in(r, v));
  }
  Poly pp = deg_in(g, v) > 0 ? g : Poly::constant(ring, one);
  return mono * cg * pp;
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
  if (a.ring().get() != b.ring().get()) throw std::domain_error("ring mismatch");
  Poly g = gcd_rec(a, b);
  return g.monic();
}

}  // namespace secdet
