#pragma once

#include <string>
#include <vector>

#include "secdet/field.hpp"
#include "secdet/secant.hpp"

#include "json.hpp"

namespace secdet {

inline constexpr uint64_t kDefaultSeed = 0x5ECDE701ull;
inline constexpr const char* kToolName = "secdet";
inline constexpr const char* kToolVersion = "0.1.0";

struct RunConfig {
  uint64_t seed = kDefaultSeed;
  FieldSpec field = FieldSpec::gf(32003);
  uint64_t budget = 2'000'000;
  int trials = 200;
  bool timings = false;  // off by default so reports are byte-stable
  int glue_seeds = 5;

  GBOptions gb() const { return GBOptions{budget}; }
};

// Provenance labels attached to numerical claims.
inline constexpr const char* kExact = "exact";
inline constexpr const char* kCharP = "char-p evidence";
inline constexpr const char* kSampled = "sampled evidence";

class Report {
 public:
  explicit Report(const RunConfig& cfg);

  void add(const std::string& name, CheckStatus status,
           nlohmann::ordered_json data = nlohmann::ordered_json::object(), int64_t ms = 0);

  bool any_fail() const;
  bool any_skip() const;
  std::string overall() const;  // pass | fail | evidence
  int exit_code() const;        // 0 pass, 2 fail, 3 skipped-without-fail

  nlohmann::ordered_json to_json() const;
  std::string str() const { return to_json().dump(2) + "\n"; }

  const RunConfig& config() const { return cfg_; }

 private:
  RunConfig cfg_;
  struct Rec {
    std::string name;
    CheckStatus status;
    nlohmann::ordered_json data;
    int64_t ms;
  };
  std::vector<Rec> recs_;
};

// Wall-clock helper; returns 0 when timings are disabled.
class Stopwatch {
 public:
  explicit Stopwatch(bool enabled);
  int64_t ms() const;

 private:
  bool enabled_;
  int64_t start_;
};

}  // namespace secdet
