#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "secdet/acceptance.hpp"

namespace py = pybind11;
using namespace secdet;

namespace {

struct PyRing {
  RingPtr r;
};

struct PyPoly {
  Poly p;
};

struct PyMatrix {
  LinearMatrix M;
};

struct PyVariety {
  std::shared_ptr<ParamVariety> V;
};

struct PyIdeal {
  std::shared_ptr<Ideal> I;
};

FieldSpec field_of(const std::string& s) { return FieldSpec::parse(s); }

py::dict hilbert_dict(const HilbertData& h) {
  py::dict d;
  d["dimension"] = h.dimension;
  d["codimension"] = h.codimension;
  d["degree"] = h.degree.get_str();
  d["numerator"] = h.numerator_str();
  return d;
}

std::vector<Poly> polys_of(const std::vector<PyPoly>& ps) {
  std::vector<Poly> out;
  for (const auto& p : ps) out.push_back(p.p);
  return out;
}

}  // namespace

PYBIND11_MODULE(_secdet, m) {
  m.doc() = "exact determinantal presentations of higher secant varieties";
  m.attr("__version__") = kToolVersion;

  py::class_<PyRing>(m, "Ring")
      .def(py::init([](std::vector<std::string> vars, const std::string& field) {
             return PyRing{PolyRing::make(std::move(vars), field_of(field))};
           }),
           py::arg("vars"), py::arg("field") = "gf:32003")
      .def_property_readonly("vars", [](const PyRing& r) { return r.r->vars(); })
      .def_property_readonly("field", [](const PyRing& r) { return r.r->field().str(); })
      .def("__repr__", [](const PyRing& r) {
        std::string s = "Ring(";
        for (size_t i = 0; i < r.r->nvars(); i++) s += (i ? ", " : "") + r.r->var(i);
        return s + "; " + r.r->field().str() + ")";
      });

  py::class_<PyPoly>(m, "Poly")
      .def("__str__", [](const PyPoly& p) { return p.p.str(); })
      .def("__repr__", [](const PyPoly& p) { return "Poly(" + p.p.str() + ")"; })
      .def("__eq__", [](const PyPoly& a, const PyPoly& b) { return a.p == b.p; })
      .def_property_readonly("degree", [](const PyPoly& p) { return p.p.degree(); })
      .def("is_zero", [](const PyPoly& p) { return p.p.is_zero(); });

  m.def(
      "parse",
      [](const std::string& text, const PyRing& r) { return PyPoly{parse_poly(text, r.r)}; },
      py::arg("text"), py::arg("ring"), "parse a polynomial in the text grammar");

  py::class_<PyIdeal>(m, "Ideal")
      .def(py::init([](const PyRing& r, const std::vector<std::string>& gens) {
             std::vector<Poly> ps;
             for (const auto& g : gens) ps.push_back(parse_poly(g, r.r));
             return PyIdeal{std::make_shared<Ideal>(r.r, std::move(ps))};
           }),
           py::arg("ring"), py::arg("generators"))
      .def("groebner",
           [](const PyIdeal& I) {
             std::vector<std::string> out;
             for (const auto& g : I.I->groebner()) out.push_back(g.str());
             return out;
           })
      .def("contains",
           [](const PyIdeal& I, const std::string& p) {
             return I.I->contains(parse_poly(p, I.I->ring()));
           })
      .def("hilbert", [](const PyIdeal& I) { return hilbert_dict(I.I->hilbert()); });

  py::class_<PyMatrix>(m, "Matrix")
      .def_property_readonly("rows", [](const PyMatrix& M) { return M.M.rows(); })
      .def_property_readonly("cols", [](const PyMatrix& M) { return M.M.cols(); })
      .def_property_readonly("symmetric", [](const PyMatrix& M) { return M.M.symmetric(); })
      .def("entry", [](const PyMatrix& M, size_t i, size_t j) { return PyPoly{M.M.at(i, j)}; })
      .def("to_text", [](const PyMatrix& M) { return M.M.to_text(); })
      .def("__repr__", [](const PyMatrix& M) {
        return "Matrix(" + std::to_string(M.M.rows()) + "x" + std::to_string(M.M.cols()) +
               (M.M.symmetric() ? ", symmetric)" : ")");
      });

  py::class_<PyVariety>(m, "Variety")
      .def_property_readonly("ambient_dim",
                             [](const PyVariety& V) { return V.V->ambient_dim(); })
      .def_property_readonly("dim", [](const PyVariety& V) { return V.V->dim(); })
      .def_property_readonly("tag", [](const PyVariety& V) { return V.V->tag(); })
      .def_property_readonly("sections",
                             [](const PyVariety& V) {
                               std::vector<std::string> out;
                               for (const auto& s : V.V->sections()) out.push_back(s.str());
                               return out;
                             })
      .def("__repr__", [](const PyVariety& V) {
        return "Variety(" + V.V->tag() + " in P^" + std::to_string(V.V->ambient_dim()) + ")";
      });

  m.def(
      "make_scroll",
      [](std::vector<int> a, const std::string& field, int q) {
        return PyVariety{std::make_shared<ParamVariety>(make_scroll(a, field_of(field), q))};
      },
      py::arg("a"), py::arg("field") = "gf:32003", py::arg("q") = 1);
  m.def(
      "make_veronese",
      [](int n, int d, const std::string& field) {
        return PyVariety{std::make_shared<ParamVariety>(make_veronese(n, d, field_of(field)))};
      },
      py::arg("n"), py::arg("d"), py::arg("field") = "gf:32003");
  m.def(
      "make_segre",
      [](int a, int b, const std::string& field) {
        return PyVariety{std::make_shared<ParamVariety>(make_segre(a, b, field_of(field)))};
      },
      py::arg("a"), py::arg("b"), py::arg("field") = "gf:32003");
  m.def(
      "make_p1p1_22",
      [](const std::string& field) {
        return PyVariety{std::make_shared<ParamVariety>(make_p1p1_22(field_of(field)))};
      },
      py::arg("field") = "gf:32003");
  m.def(
      "make_delpezzo",
      [](const std::vector<std::vector<int64_t>>& pts, const std::string& field) {
        FieldSpec f = field_of(field);
        std::vector<std::vector<Scalar>> ps;
        for (const auto& p : pts) {
          std::vector<Scalar> row;
          for (int64_t c : p) row.push_back(Scalar::from_int(c, f));
          ps.push_back(std::move(row));
        }
        return PyVariety{std::make_shared<ParamVariety>(make_delpezzo_blowup(ps, f))};
      },
      py::arg("points"), py::arg("field") = "gf:32003");

  m.def("family_presentation",
        [](const PyVariety& V) { return PyMatrix{family_presentation(*V.V)}; });
  m.def(
      "rnc_veronese_matrix",
      [](const PyVariety& V, int q) { return PyMatrix{rnc_veronese_matrix(*V.V, q)}; },
      py::arg("variety"), py::arg("q"));
  m.def(
      "parse_matrix",
      [](const std::string& text, const PyVariety& V) {
        return PyMatrix{parse_linmat(text, V.V->ambient_ring())};
      },
      py::arg("text"), py::arg("variety"));
  m.def(
      "parse_matrix_over",
      [](const std::string& text, const PyRing& R) {
        return PyMatrix{parse_linmat(text, R.r)};
      },
      py::arg("text"), py::arg("ring"));

  m.def(
      "minors",
      [](const PyMatrix& M, size_t s) {
        std::vector<std::string> out;
        for (const auto& p : minors(M.M, s)) out.push_back(p.str());
        return out;
      },
      py::arg("matrix"), py::arg("s"));
  m.def("minors_ideal", [](const PyMatrix& M, size_t s) {
    return PyIdeal{std::make_shared<Ideal>(M.M.ring(), minors(M.M, s))};
  });
  m.def("implicitize", [](const PyVariety& V, int D) {
    return PyIdeal{std::make_shared<Ideal>(implicitize(*V.V, D))};
  });

  m.def("is_one_generic", [](const PyMatrix& M) {
    OneGenericResult r = is_one_generic(M.M);
    py::dict d;
    d["one_generic"] = r.one_generic;
    if (r.witness) {
      std::vector<std::string> v, w;
      for (const auto& c : r.witness->first) v.push_back(c.str());
      for (const auto& c : r.witness->second) w.push_back(c.str());
      d["witness"] = py::make_tuple(v, w);
    }
    return d;
  });

  m.def("min_degree", &min_degree, py::arg("e"), py::arg("q"));

  m.def(
      "terracini",
      [](const PyVariety& V, int q, uint64_t seed, int trials) {
        Rng rng(seed);
        SecantProfile p = terracini(*V.V, q, rng, trials);
        py::dict d;
        d["dim_secant"] = p.dim_secant;
        d["e"] = p.e;
        d["minimal_degree_target"] = p.minimal_degree_target;
        return d;
      },
      py::arg("variety"), py::arg("q"), py::arg("seed") = kDefaultSeed, py::arg("trials") = 5);

  m.def(
      "certify",
      [](const PyVariety& V, const PyMatrix& M, int q, uint64_t seed, int trials) {
        Rng rng(seed);
        RunConfig cfg;
        cfg.seed = seed;
        cfg.trials = trials;
        cfg.field = V.V->param_ring()->field();
        ClassifyResult res = classify(*V.V, M.M, q, cfg, rng);
        py::dict d;
        d["verdict"] = res.verdict;
        d["e"] = res.profile.e;
        py::dict checks;
        for (const auto& c : res.cert.checks) checks[c.name.c_str()] = status_str(c.status);
        d["checks"] = checks;
        if (res.cert.hilbert) d["hilbert"] = hilbert_dict(*res.cert.hilbert);
        return d;
      },
      py::arg("variety"), py::arg("matrix"), py::arg("q"), py::arg("seed") = kDefaultSeed,
      py::arg("trials") = 100);

  m.def(
      "factor_presentation",
      [](const PyVariety& V, const PyMatrix& M) {
        SectionFactorization sf = factor_presentation(M.M, *V.V);
        py::dict d;
        d["u"] = sf.u.str();
        std::vector<std::string> s, t;
        for (const auto& p : sf.s) s.push_back(p.str());
        for (const auto& p : sf.t) t.push_back(p.str());
        d["s"] = s;
        d["t"] = t;
        if (sf.alpha) d["alpha"] = sf.alpha->str();
        return d;
      },
      py::arg("variety"), py::arg("matrix"));

  m.def(
      "glue_roundtrip",
      [](const PyVariety& V, const PyMatrix& M, int q, const std::string& mode, uint64_t seed) {
        GlueMode gm;
        if (mode == "scroll1")
          gm = GlueMode::ScrollI;
        else if (mode == "scroll2")
          gm = GlueMode::ScrollII;
        else if (mode == "veronese")
          gm = GlueMode::Veronese;
        else
          throw std::invalid_argument("mode must be scroll1, scroll2 or veronese");
        Rng rng(seed);
        GlueRoundTrip rt = run_glue_roundtrip(*V.V, M.M, q, gm, rng);
        return rt.ok;
      },
      py::arg("variety"), py::arg("matrix"), py::arg("q"), py::arg("mode"),
      py::arg("seed") = kDefaultSeed);

  m.def(
      "en_betti",
      [](int q, int e) {
        std::vector<py::dict> rows;
        for (const auto& r : en_betti(q, e)) {
          py::dict d;
          d["index"] = r.index;
          d["twist"] = r.twist;
          d["rank"] = r.rank.get_str();
          rows.push_back(d);
        }
        return rows;
      },
      py::arg("q"), py::arg("e"));
  m.def(
      "en_numerator",
      [](int q, int e) { return betti_numerator_str(hilbert_numerator_from_betti(en_betti(q, e))); },
      py::arg("q"), py::arg("e"));

  m.def(
      "secant_ideal_tiny",
      [](const PyVariety& V, int q, int D, uint64_t seed) {
        Rng rng(seed);
        return PyIdeal{std::make_shared<Ideal>(secant_ideal_tiny(*V.V, q, D, rng))};
      },
      py::arg("variety"), py::arg("q"), py::arg("D"), py::arg("seed") = kDefaultSeed);

  m.def(
      "acceptance_json",
      [](const std::string& field, uint64_t seed) {
        RunConfig cfg;
        cfg.field = field_of(field);
        cfg.seed = seed;
        return run_acceptance(cfg).str();
      },
      py::arg("field") = "gf:32003", py::arg("seed") = kDefaultSeed,
      "run the acceptance suite and return the JSON report");
}
