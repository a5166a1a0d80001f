#include "secdet/variety.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace secdet {

namespace {

// coefficient matrix of polys over the parameter monomials appearing in them
ScalMat coeff_matrix(const std::vector<Poly>& polys, const RingPtr& ring) {
  std::map<std::string, size_t> col;  // keyed by printable monomial for determinism
  std::vector<Monomial> mons;
  for (const auto& p : polys)
    for (const auto& t : p.terms()) {
      std::string key(reinterpret_cast<const char*>(t.m.e.data()), t.m.n);
      if (!col.count(key)) {
        col[key] = mons.size();
        mons.push_back(t.m);
      }
    }
  ScalMat m(polys.size(), mons.size() ? mons.size() : 1, ring->field());
  for (size_t i = 0; i < polys.size(); i++)
    for (const auto& t : polys[i].terms()) {
      std::string key(reinterpret_cast<const char*>(t.m.e.data()), t.m.n);
      m.at(i, col[key]) = t.c;
    }
  return m;
}

int probe_dim(const RingPtr& param_ring, const std::vector<Poly>& sections) {
  Rng rng(17);
  const FieldSpec f = param_ring->field();
  size_t best = 0;
  for (int trial = 0; trial < 4; trial++) {
    std::vector<Scalar> p;
    for (size_t i = 0; i < param_ring->nvars(); i++) p.push_back(rng.nonzero_scalar(f));
    std::vector<std::vector<Scalar>> rows;
    for (size_t v = 0; v < param_ring->nvars(); v++) {
      std::vector<Scalar> row;
      for (const auto& s : sections) row.push_back(s.derivative(v).eval(p));
      rows.push_back(std::move(row));
    }
    std::vector<Scalar> pt;
    for (const auto& s : sections) pt.push_back(s.eval(p));
    rows.push_back(std::move(pt));
    best = std::max(best, ScalMat::from_rows(rows, f).rank());
  }
  return int(best) - 1;
}

}  // namespace

ParamVariety::ParamVariety(RingPtr param_ring, std::vector<Poly> sections, std::string tag,
                           int dim)
    : param_ring_(std::move(param_ring)), sections_(std::move(sections)), tag_(std::move(tag)),
      dim_(dim) {
  if (sections_.size() < 2) throw std::invalid_argument("need at least 2 sections");
  for (const auto& s : sections_)
    if (s.ring().get() != param_ring_.get()) throw std::domain_error("section ring mismatch");
  if (coeff_matrix(sections_, param_ring_).rank() != sections_.size())
    throw std::invalid_argument("sections must be linearly independent");
  ambient_ring_ = PolyRing::make_indexed("x", sections_.size(), param_ring_->field());
  if (dim_ < 0) dim_ = probe_dim(param_ring_, sections_);
}

Poly ParamVariety::pull(const Poly& ambient) const {
  if (ambient.ring().get() != ambient_ring_.get())
    throw std::domain_error("expected a polynomial over the ambient ring");
  return pullback(ambient, sections_, param_ring_);
}

ParamVariety make_scroll(const std::vector<int>& a, const FieldSpec& f, int q_hint) {
  const size_t n = a.size();
  if (n == 0) throw std::invalid_argument("scroll needs at least one block");
  int total = 0;
  for (int ai : a) {
    if (ai < 0) throw std::invalid_argument("scroll degrees must be nonnegative");
    total += ai;
  }
  if (total == 0) throw std::invalid_argument("scroll degrees must not be all zero");

  std::vector<std::string> names;
  if (n > 1)
    for (size_t i = 1; i <= n; i++) names.push_back("l" + std::to_string(i));
  names.push_back("s");
  names.push_back("t");
  RingPtr R = PolyRing::make(names, f);
  const size_t si = R->nvars() - 2, ti = R->nvars() - 1;

  auto st = [&](int se, int te) {
    Monomial m = Monomial::one(R->nvars());
    m.e[si] = uint8_t(se);
    m.e[ti] = uint8_t(te);
    m.deg = uint16_t(se + te);
    return m;
  };
  std::vector<Poly> sections;
  for (size_t i = 0; i < n; i++) {
    for (int j = 0; j <= a[i]; j++) {
      Monomial m = st(a[i] - j, j);
      if (n > 1) {
        m.e[i] = 1;
        m.deg++;
      }
      sections.push_back(Poly::term(R, m, Scalar::one(f)));
    }
  }
  std::ostringstream tag;
  tag << "scroll(";
  for (size_t i = 0; i < n; i++) tag << (i ? "," : "") << a[i];
  tag << ")";
  ParamVariety V(R, std::move(sections), tag.str(), int(n));

  // multiplication-map decomposition at level q: rows qF, columns H - qF
  const int q = q_hint;
  std::vector<Poly> s1, s2;
  for (int j = 0; j <= q; j++) s1.push_back(Poly::term(R, st(q - j, j), Scalar::one(f)));
  for (size_t i = 0; i < n; i++) {
    if (a[i] < q) continue;
    for (int k = 0; k + q <= a[i]; k++) {
      Monomial m = st(a[i] - q - k, k);
      if (n > 1) {
        m.e[i] = 1;
        m.deg++;
      }
      s2.push_back(Poly::term(R, m, Scalar::one(f)));
    }
  }
  if (!s2.empty())
    V.set_decomposition({s1, s2, Poly::constant(R, Scalar::one(f)), false});
  return V;
}

ParamVariety make_veronese(int n, int d, const FieldSpec& f) {
  if (n < 1 || d < 1) throw std::invalid_argument("veronese needs n, d >= 1");
  RingPtr R = PolyRing::make_indexed("t", size_t(n) + 1, f);
  std::vector<Poly> sections;
  for (const auto& m : monomials_of_degree(R, d))
    sections.push_back(Poly::term(R, m, Scalar::one(f)));
  ParamVariety V(R, std::move(sections),
                 "veronese(" + std::to_string(n) + "," + std::to_string(d) + ")", n);
  std::vector<Poly> lin;
  for (int i = 0; i <= n; i++) lin.push_back(Poly::variable(R, size_t(i)));
  if (d == 2) {
    V.set_decomposition({lin, lin, Poly::constant(R, Scalar::one(f)), true});
  } else {
    std::vector<Poly> lower;
    for (const auto& m : monomials_of_degree(R, d - 1))
      lower.push_back(Poly::term(R, m, Scalar::one(f)));
    V.set_decomposition({lin, lower, Poly::constant(R, Scalar::one(f)), false});
  }
  return V;
}

ParamVariety make_segre(int a, int b, const FieldSpec& f) {
  if (a < 1 || b < 1) throw std::invalid_argument("segre needs a, b >= 1");
  std::vector<std::string> names;
  for (int i = 0; i <= a; i++) names.push_back("s" + std::to_string(i));
  for (int j = 0; j <= b; j++) names.push_back("t" + std::to_string(j));
  RingPtr R = PolyRing::make(names, f);
  std::vector<Poly> sections, s1, s2;
  for (int i = 0; i <= a; i++) s1.push_back(Poly::variable(R, size_t(i)));
  for (int j = 0; j <= b; j++) s2.push_back(Poly::variable(R, size_t(a + 1 + j)));
  for (int i = 0; i <= a; i++)
    for (int j = 0; j <= b; j++) sections.push_back(s1[i] * s2[j]);
  ParamVariety V(R, std::move(sections),
                 "segre(" + std::to_string(a) + "," + std::to_string(b) + ")", a + b);
  V.set_decomposition({s1, s2, Poly::constant(R, Scalar::one(f)), false});
  return V;
}

ParamVariety make_p1p1_22(const FieldSpec& f) {
  RingPtr R = PolyRing::make({"s", "t", "u", "v"}, f);
  Poly s = Poly::variable(R, 0), t = Poly::variable(R, 1);
  Poly u = Poly::variable(R, 2), v = Poly::variable(R, 3);
  auto pw = [&](const Poly& p, int e) {
    Poly r = Poly::constant(R, Scalar::one(f));
    for (int k = 0; k < e; k++) r = r * p;
    return r;
  };
  std::vector<Poly> sections;
  for (int i = 0; i <= 2; i++)
    for (int j = 0; j <= 2; j++)
      sections.push_back(pw(s, 2 - i) * pw(t, i) * pw(u, 2 - j) * pw(v, j));
  ParamVariety V(R, std::move(sections), "p1p1_22", 2);
  std::vector<Poly> bil = {s * u, s * v, t * u, t * v};
  V.set_decomposition({bil, bil, Poly::constant(R, Scalar::one(f)), true});
  return V;
}

ParamVariety make_delpezzo_blowup(const std::vector<std::vector<Scalar>>& pts,
                                  const FieldSpec& f) {
  const size_t s = pts.size();
  if (s > 6) throw std::invalid_argument("del Pezzo blowup supports at most 6 points");
  RingPtr R = PolyRing::make_indexed("t", 3, f);
  for (const auto& p : pts)
    if (p.size() != 3) throw std::invalid_argument("plane points need 3 coordinates");

  // general position: pairwise distinct, no 3 collinear, no 6 on a conic
  for (size_t i = 0; i < s; i++)
    for (size_t j = i + 1; j < s; j++) {
      ScalMat m = ScalMat::from_rows({pts[i], pts[j]}, f);
      if (m.rank() < 2) throw std::invalid_argument("points must be pairwise distinct");
    }
  for (size_t i = 0; i < s; i++)
    for (size_t j = i + 1; j < s; j++)
      for (size_t k = j + 1; k < s; k++) {
        ScalMat m = ScalMat::from_rows({pts[i], pts[j], pts[k]}, f);
        if (m.rank() < 3) throw std::invalid_argument("three of the points are collinear");
      }
  auto eval_monomials = [&](int d) {
    std::vector<std::vector<Scalar>> rows;
    for (const auto& p : pts) {
      std::vector<Scalar> row;
      for (const auto& m : monomials_of_degree(R, d))
        row.push_back(Poly::term(R, m, Scalar::one(f)).eval(p));
      rows.push_back(std::move(row));
    }
    return rows;
  };
  if (s == 6) {
    ScalMat conic = ScalMat::from_rows(eval_monomials(2), f);
    if (conic.rank() < 6) throw std::invalid_argument("the six points lie on a conic");
  }

  auto basis_through = [&](int d) {
    std::vector<Poly> out;
    auto mons = monomials_of_degree(R, d);
    if (s == 0) {
      for (const auto& m : mons) out.push_back(Poly::term(R, m, Scalar::one(f)));
      return out;
    }
    ScalMat ev = ScalMat::from_rows(eval_monomials(d), f);
    for (const auto& v : ev.kernel()) {
      Poly g(R);
      for (size_t k = 0; k < mons.size(); k++)
        if (!v[k].is_zero()) g = g + Poly::term(R, mons[k], v[k]);
      out.push_back(g);
    }
    return out;
  };

  std::vector<Poly> cubics = basis_through(3);
  ParamVariety V(R, cubics, "delpezzo(" + std::to_string(s) + ")", 2);
  std::vector<Poly> lin;
  for (int i = 0; i < 3; i++) lin.push_back(Poly::variable(R, size_t(i)));
  std::vector<Poly> conics = basis_through(2);
  if (!conics.empty())
    V.set_decomposition({lin, conics, Poly::constant(R, Scalar::one(f)), false});
  return V;
}

Point sample_point(const ParamVariety& V, Rng& rng) {
  const RingPtr& R = V.param_ring();
  const FieldSpec f = R->field();
  const bool scroll_charts = V.tag().rfind("scroll", 0) == 0;
  for (int attempt = 0; attempt < 32; attempt++) {
    std::vector<Scalar> p;
    for (size_t i = 0; i < R->nvars(); i++) p.push_back(rng.scalar(f));
    if (scroll_charts) {
      // affine charts (.., s, 1) and (.., 1, t)
      if (attempt % 2 == 0)
        p[R->nvars() - 1] = Scalar::one(f);
      else
        p[R->nvars() - 2] = Scalar::one(f);
    }
    std::vector<Scalar> coords;
    bool nonzero = false;
    for (const auto& sec : V.sections()) {
      coords.push_back(sec.eval(p));
      if (!coords.back().is_zero()) nonzero = true;
    }
    if (nonzero) return Point{std::move(coords), std::move(p)};
  }
  throw std::runtime_error("sample_point: retry limit exceeded");
}

std::vector<Point> sample_points(const ParamVariety& V, size_t m, Rng& rng) {
  std::vector<Point> pts;
  for (int attempt = 0; attempt < 32 && pts.size() < m; attempt++) {
    Point p = sample_point(V, rng);
    bool fresh = true;
    for (const auto& q : pts) {
      ScalMat two = ScalMat::from_rows({q.coords, p.coords}, V.param_ring()->field());
      if (two.rank() < 2) fresh = false;
    }
    if (fresh) {
      pts.push_back(std::move(p));
      attempt = -1;
    }
  }
  if (pts.size() < m) throw std::runtime_error("sample_points: retry limit exceeded");
  return pts;
}

TangentSpace tangent_space(const ParamVariety& V, std::span<const Scalar> param_point) {
  const RingPtr& R = V.param_ring();
  const FieldSpec f = R->field();
  std::vector<std::vector<Scalar>> rows;
  for (size_t v = 0; v < R->nvars(); v++) {
    std::vector<Scalar> row;
    for (const auto& s : V.sections()) row.push_back(s.derivative(v).eval(param_point));
    rows.push_back(std::move(row));
  }
  std::vector<Scalar> coords;
  for (const auto& s : V.sections()) coords.push_back(s.eval(param_point));
  rows.push_back(coords);

  ScalMat J = ScalMat::from_rows(rows, f);
  ScalMat E = J;
  E.rref();
  size_t rank = 0;
  std::vector<std::vector<Scalar>> span_rows;
  for (size_t i = 0; i < E.rows(); i++) {
    bool nz = false;
    for (size_t j = 0; j < E.cols(); j++)
      if (!E.at(i, j).is_zero()) nz = true;
    if (nz) {
      span_rows.push_back(E.row(i));
      rank++;
    }
  }
  if (int(rank) != V.dim() + 1)
    throw std::runtime_error("tangent_space: Jacobian rank deficient at this parameter point");
  ScalMat spanning = ScalMat::from_rows(span_rows, f);
  ScalMat cutting = ScalMat::from_rows(spanning.kernel(), f);
  std::vector<Scalar> pp(param_point.begin(), param_point.end());
  return TangentSpace{Point{coords, pp}, spanning, cutting};
}

Ideal implicitize(const ParamVariety& V, int D) {
  if (D < 1) throw std::invalid_argument("implicitize: D >= 1 required");
  const RingPtr& amb = V.ambient_ring();
  const FieldSpec f = amb->field();
  std::vector<Poly> gens;
  for (int d = 1; d <= D; d++) {
    auto mons = monomials_of_degree(amb, d);
    std::vector<Poly> pulled;
    for (const auto& m : mons) pulled.push_back(V.pull(Poly::term(amb, m, Scalar::one(f))));
    ScalMat coeffs = coeff_matrix(pulled, V.param_ring());
    for (const auto& v : coeffs.transpose().kernel()) {
      Poly g(amb);
      for (size_t k = 0; k < mons.size(); k++)
        if (!v[k].is_zero()) g = g + Poly::term(amb, mons[k], v[k]);
      gens.push_back(g);
    }
  }
  return Ideal(amb, std::move(gens));
}

// ---------- projections ----------

Poly ProjectionWitness::lift_form(const Poly& target_linear) const {
  if (target_linear.ring().get() != target_ring.get())
    throw std::domain_error("lift_form: wrong ring");
  int d;
  if (!target_linear.is_homogeneous(&d) || d > 1)
    throw std::invalid_argument("lift_form: expected a linear form");
  Poly out(source_ring);
  for (size_t i = 0; i < F.rows(); i++) {
    Scalar c = target_linear.linear_coeff(i);
    if (c.is_zero()) continue;
    for (size_t j = 0; j < F.cols(); j++)
      if (!F.at(i, j).is_zero())
        out = out + Poly::variable(source_ring, j).scaled(c * F.at(i, j));
  }
  return out;
}

std::optional<Poly> ProjectionWitness::project_form(const Poly& source_linear) const {
  if (source_linear.ring().get() != source_ring.get())
    throw std::domain_error("project_form: wrong ring");
  std::vector<Scalar> rhs;
  for (size_t j = 0; j < F.cols(); j++) rhs.push_back(source_linear.linear_coeff(j));
  auto sol = F.transpose().solve(rhs);
  if (!sol) return std::nullopt;
  Poly out(target_ring);
  for (size_t i = 0; i < F.rows(); i++)
    if (!(*sol)[i].is_zero()) out = out + Poly::variable(target_ring, i).scaled((*sol)[i]);
  return out;
}

std::optional<Point> ProjectionWitness::project_point(const Point& p) const {
  std::vector<Scalar> y = F.apply(p.coords);
  bool nz = false;
  for (const auto& c : y)
    if (!c.is_zero()) nz = true;
  if (!nz) return std::nullopt;
  return Point{std::move(y), p.param};
}

std::pair<ParamVariety, ProjectionWitness> projection_from_span(const ParamVariety& V,
                                                                const ScalMat& center_rows) {
  const FieldSpec f = V.param_ring()->field();
  ScalMat F = ScalMat::from_rows(center_rows.kernel(), f);
  if (F.rows() + center_rows.rank() != center_rows.cols())
    throw std::invalid_argument("projection center is not of full rank");
  std::vector<Poly> secs;
  for (size_t i = 0; i < F.rows(); i++) {
    Poly s(V.param_ring());
    for (size_t j = 0; j < F.cols(); j++)
      if (!F.at(i, j).is_zero()) s = s + V.sections()[j].scaled(F.at(i, j));
    secs.push_back(std::move(s));
  }
  if (coeff_matrix(secs, V.param_ring()).rank() != secs.size())
    throw std::runtime_error("degenerate projection: projected sections are dependent");
  ParamVariety W(V.param_ring(), std::move(secs), "projection-of(" + V.tag() + ")", -1);
  ProjectionWitness pw{center_rows, F, V.ambient_ring(), W.ambient_ring()};
  return {std::move(W), std::move(pw)};
}

std::pair<ParamVariety, ProjectionWitness> inner_projection(const ParamVariety& V,
                                                            const Point& z) {
  if (z.param) {
    std::vector<Scalar> check;
    for (const auto& s : V.sections()) check.push_back(s.eval(*z.param));
    ScalMat two = ScalMat::from_rows({check, z.coords}, V.param_ring()->field());
    if (two.rank() != 1)
      throw std::invalid_argument("inner_projection: point does not lie on the variety");
  }
  return projection_from_span(V, ScalMat::from_rows({z.coords}, V.param_ring()->field()));
}

std::pair<ParamVariety, ProjectionWitness> tangential_projection(const ParamVariety& V,
                                                                 const TangentSpace& T) {
  return projection_from_span(V, T.spanning_rows);
}

// ---------- variety spec files ----------

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else
      cur += c;
  }
  out.push_back(trim(cur));
  return out;
}

}  // namespace

ParamVariety parse_variety_file(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    size_t eq = line.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("bad variety line: " + line);
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  FieldSpec f = kv.count("field") ? FieldSpec::parse(kv["field"]) : FieldSpec::gf(32003);
  const std::string family = kv.count("family") ? kv["family"] : "";
  auto ints = [&](const std::string& key) {
    std::vector<int> out;
    for (const auto& part : split(kv.at(key), ','))
      if (!part.empty()) out.push_back(std::stoi(part));
    return out;
  };
  if (family == "scroll") {
    int q = kv.count("q") ? std::stoi(kv["q"]) : 1;
    return make_scroll(ints("a"), f, q);
  }
  if (family == "veronese") return make_veronese(std::stoi(kv.at("n")), std::stoi(kv.at("d")), f);
  if (family == "segre") return make_segre(std::stoi(kv.at("a")), std::stoi(kv.at("b")), f);
  if (family == "p1p1_22") return make_p1p1_22(f);
  if (family == "delpezzo") {
    std::vector<std::vector<Scalar>> pts;
    if (kv.count("points") && !kv["points"].empty()) {
      for (const auto& ps : split(kv["points"], ';')) {
        std::vector<Scalar> p;
        for (const auto& c : split(ps, ':')) p.push_back(Scalar::from_mpz(mpz_class(c), 1, f));
        pts.push_back(std::move(p));
      }
    }
    return make_delpezzo_blowup(pts, f);
  }
  if (family == "custom") {
    std::vector<std::string> params = split(kv.at("params"), ',');
    RingPtr R = PolyRing::make(params, f);
    std::string secs = kv.at("sections");
    size_t lb = secs.find('['), rb = secs.rfind(']');
    if (lb == std::string::npos || rb == std::string::npos)
      throw std::invalid_argument("sections must be a [..] list");
    std::vector<Poly> sections;
    for (const auto& s : split(secs.substr(lb + 1, rb - lb - 1), ','))
      sections.push_back(parse_poly(s, R));
    return ParamVariety(R, std::move(sections), "custom", -1);
  }
  throw std::invalid_argument("unknown family: " + family);
}

std::string variety_file_text(const std::string& family, const std::vector<std::string>& params,
                              const FieldSpec& f, uint64_t seed) {
  std::ostringstream os;
  os << "family = " << family << "\n";
  for (const auto& p : params) os << p << "\n";
  os << "field = " << f.str() << "\n";
  os << "seed = " << seed << "\n";
  return os.str();
}

}  // namespace secdet
