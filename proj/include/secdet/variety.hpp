#pragma once

#include "secdet/linmat.hpp"

namespace secdet {

// Homogeneous ambient point, optionally with a parameter preimage.
struct Point {
  std::vector<Scalar> coords;
  std::optional<std::vector<Scalar>> param;
};

struct TangentSpace {
  Point base;
  ScalMat spanning_rows;   // basis of the affine-cone tangent space, (dim+1) x (r+1)
  ScalMat cutting_forms;   // complementary functionals, (r - dim) x (r+1)
};

// Ready-made section-pair decomposition of the embedding for
// matrix_from_multiplication (rows S1, columns S2, base section u).
struct MultDecomposition {
  std::vector<Poly> s1, s2;
  Poly u;
  bool symmetric = false;
};

// Polynomial parametrization of a nondegenerate X in P^r: r+1 sections of a
// common multidegree over the parameter ring.
class ParamVariety {
 public:
  ParamVariety(RingPtr param_ring, std::vector<Poly> sections, std::string tag, int dim);

  const RingPtr& param_ring() const { return param_ring_; }
  const RingPtr& ambient_ring() const { return ambient_ring_; }
  const std::vector<Poly>& sections() const { return sections_; }
  size_t ambient_dim() const { return sections_.size() - 1; }  // r
  int dim() const { return dim_; }
  const std::string& tag() const { return tag_; }

  const std::optional<MultDecomposition>& decomposition() const { return decomposition_; }
  void set_decomposition(MultDecomposition d) { decomposition_ = std::move(d); }

  // Pull an ambient polynomial back through the parametrization.
  Poly pull(const Poly& ambient) const;
  bool vanishes_on(const Poly& ambient) const { return pull(ambient).is_zero(); }

 private:
  RingPtr param_ring_;
  RingPtr ambient_ring_;
  std::vector<Poly> sections_;
  std::string tag_;
  int dim_;
  std::optional<MultDecomposition> decomposition_;
};

ParamVariety make_scroll(const std::vector<int>& a, const FieldSpec& f, int q_hint = 1);
ParamVariety make_veronese(int n, int d, const FieldSpec& f);
ParamVariety make_segre(int a, int b, const FieldSpec& f);
ParamVariety make_p1p1_22(const FieldSpec& f);
// Blowup of s <= 6 general-position points of P^2, embedded by cubics
// through them. `pts` are parameter-plane points (length-3 coordinates).
ParamVariety make_delpezzo_blowup(const std::vector<std::vector<Scalar>>& pts, const FieldSpec& f);

Point sample_point(const ParamVariety& V, Rng& rng);
std::vector<Point> sample_points(const ParamVariety& V, size_t m, Rng& rng);

TangentSpace tangent_space(const ParamVariety& V, std::span<const Scalar> param_point);

// Graded pieces of I_X up to degree D (the generated-in-degrees-<=D
// truncation; no completeness claim beyond D).
Ideal implicitize(const ParamVariety& V, int D);

// Linear projection data: target coordinates are y = F x for the recorded
// functional rows F, which vanish on the center.
struct ProjectionWitness {
  ScalMat center_rows;  // rows spanning the center
  ScalMat F;            // (r+1-c) x (r+1)
  RingPtr source_ring;
  RingPtr target_ring;

  Poly lift_form(const Poly& target_linear) const;
  std::optional<Poly> project_form(const Poly& source_linear) const;
  std::optional<Point> project_point(const Point& p) const;
};

std::pair<ParamVariety, ProjectionWitness> inner_projection(const ParamVariety& V, const Point& z);
std::pair<ParamVariety, ProjectionWitness> tangential_projection(const ParamVariety& V,
                                                                 const TangentSpace& T);
// Projection from the span of the given rows (used for <z,w> and
// <T_z, T_w> centers).
std::pair<ParamVariety, ProjectionWitness> projection_from_span(const ParamVariety& V,
                                                                const ScalMat& center_rows);

// Variety spec file (key = value lines); see the CLI documentation.
ParamVariety parse_variety_file(const std::string& text);
std::string variety_file_text(const std::string& family, const std::vector<std::string>& params,
                              const FieldSpec& f, uint64_t seed);

}  // namespace secdet
