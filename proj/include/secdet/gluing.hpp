#pragma once

#include "secdet/secant.hpp"

namespace secdet {

// A named gluing condition failed; callers resample the point configuration.
class GlueError : public std::runtime_error {
 public:
  GlueError(std::string cond, const std::string& what)
      : std::runtime_error(cond + ": " + what), condition(std::move(cond)) {}
  std::string condition;
};

// A linear-matrix class on a projection X_Lambda, kept in two charts: the
// ambient lift (entries vanish on the center) and the projected-coordinate
// representative.
struct MatrixClass {
  LinearMatrix amb;   // ambient-form representative
  ScalMat center;     // rows spanning Lambda; zero rows for the ambient class
  LinearMatrix rep;   // the same matrix over the projected coordinates
  ScalMat F;          // projected coordinate functionals (rows)
  std::vector<Point> gamma;  // ambient points of Gamma off the center
};

MatrixClass ambient_class(const LinearMatrix& M, std::vector<Point> gamma);

// Class with an explicit center; entries of M must vanish on it.
MatrixClass make_matrix_class(const LinearMatrix& amb, const ScalMat& center,
                              const std::vector<Point>& gamma);

struct GlueContext {
  const ParamVariety* V;
  Point z, w;
  std::vector<Point> gamma;  // gamma[0] = z, gamma[1] = w
  TangentSpace Tz, Tw;
  // standard projection witnesses (consistency: all lifts factor through the
  // ambient coordinates); the tangential ones exist only when the spans are
  // proper subspaces
  ProjectionWitness Xz, Xw, Xzw;
  std::optional<ProjectionWitness> XTz, XTw, XTzTw;
};

GlueContext make_glue_context(const ParamVariety& V, size_t gamma_size, Rng& rng,
                              bool with_tangent_witnesses = true);
// Same, with a caller-chosen configuration; gamma[0], gamma[1] become z, w.
GlueContext make_glue_context_at(const ParamVariety& V, std::vector<Point> gamma,
                                 bool with_tangent_witnesses = true);

// pi_z / partial_z on classes, with regularity of the image re-verified.
MatrixClass induce_inner(const MatrixClass& c, const GlueContext& ctx, const Point& z,
                         Rng& rng);
// transpose variant pi^T_z (the Veronese-to-scroll edge of the diagram)
MatrixClass induce_inner_pi_t(const MatrixClass& c, const GlueContext& ctx, const Point& z,
                              Rng& rng);
MatrixClass induce_tangential(const MatrixClass& c, const GlueContext& ctx, const Point& z,
                              const TangentSpace& T, Rng& rng);

MatrixClass glue_scroll_i(const MatrixClass& Mz, const MatrixClass& Mw, const GlueContext& ctx,
                          Rng& rng);
MatrixClass glue_scroll_ii(const MatrixClass& Mz, const MatrixClass& Mw, const MatrixClass& MTz,
                           const MatrixClass& MTw, const GlueContext& ctx, Rng& rng);
MatrixClass d_map(const MatrixClass& MTz, const MatrixClass& Mw, const GlueContext& ctx,
                  Rng& rng);
MatrixClass glue_veronese(const MatrixClass& Mz, const MatrixClass& Mw, const MatrixClass& MTz,
                          const MatrixClass& MTw, const GlueContext& ctx, Rng& rng);

enum class GlueMode { ScrollI, ScrollII, Veronese };

struct GlueRoundTrip {
  bool ok = false;
  std::optional<LinearMatrix> glued;
  std::vector<NamedCheck> conditions;
  int resamples = 0;
};

// Projects the known presentation M of X along a sampled configuration,
// re-glues it, and compares the result with M up to the natural action.
GlueRoundTrip run_glue_roundtrip(const ParamVariety& V, const LinearMatrix& M, int q,
                                 GlueMode mode, Rng& rng, int resample_limit = 8);

// Derives the presentation twice through independent routes and tests
// GL-equivalence.
bool uniqueness_check(const ParamVariety& V, int q, PresentationKind kind, Rng& rng);

}  // namespace secdet
