#pragma once

#include <functional>

#include "secdet/gluing.hpp"
#include "secdet/report.hpp"
#include "secdet/resolutions.hpp"

namespace secdet {

struct AcceptanceInstance {
  std::string name;
  int q;
  int codim;
  int64_t degree;
  bool veronese;
  bool in_table;  // member of the degree/codimension table
  std::optional<GlueMode> glue;
  std::function<ParamVariety(const FieldSpec&)> variety;
  std::function<LinearMatrix(const ParamVariety&)> matrix;
};

const std::vector<AcceptanceInstance>& acceptance_table();

// The symmetric multiplication-map presentation of the rational normal
// curve of degree 2q+2.
LinearMatrix rnc_veronese_matrix(const ParamVariety& V, int q);

// Presentation classification for arbitrary (V, M, q): certify, and when the
// size test rules both shapes out, decide "neither" through the minimality
// of a general (q-1)-tangential projection.
struct ClassifyResult {
  std::string verdict;  // scroll | veronese | neither | not-certified
  SecantProfile profile;
  PresentationVerdict cert;
  nlohmann::ordered_json data;
};
ClassifyResult classify(const ParamVariety& V, const LinearMatrix& M, int q,
                        const RunConfig& cfg, Rng& rng);

// Runs the acceptance criteria and returns the report.
Report run_acceptance(const RunConfig& cfg);

}  // namespace secdet
