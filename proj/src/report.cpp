#include "secdet/report.hpp"

#include <algorithm>
#include <chrono>

namespace secdet {

Report::Report(const RunConfig& cfg) : cfg_(cfg) {}

void Report::add(const std::string& name, CheckStatus status, nlohmann::ordered_json data,
                 int64_t ms) {
  recs_.push_back({name, status, std::move(data), cfg_.timings ? ms : 0});
}

bool Report::any_fail() const {
  return std::any_of(recs_.begin(), recs_.end(),
                     [](const Rec& r) { return r.status == CheckStatus::Fail; });
}

bool Report::any_skip() const {
  return std::any_of(recs_.begin(), recs_.end(),
                     [](const Rec& r) { return r.status == CheckStatus::Skipped; });
}

std::string Report::overall() const {
  if (any_fail()) return "fail";
  if (any_skip()) return "evidence";
  return "pass";
}

int Report::exit_code() const {
  if (any_fail()) return 2;
  if (any_skip()) return 3;
  return 0;
}

nlohmann::ordered_json Report::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
  j["config"] = {{"seed", cfg_.seed},
                 {"field", cfg_.field.str()},
                 {"budget", cfg_.budget},
                 {"trials", cfg_.trials},
                 {"glue_seeds", cfg_.glue_seeds},
                 {"timings", cfg_.timings}};
  // deterministic order: sorted by check name, not completion order
  std::vector<const Rec*> sorted;
  for (const auto& r : recs_) sorted.push_back(&r);
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const Rec* a, const Rec* b) { return a->name < b->name; });
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const Rec* r : sorted) {
    nlohmann::ordered_json c;
    c["name"] = r->name;
    c["status"] = status_str(r->status);
    c["data"] = r->data;
    c["timing_ms"] = r->ms;
    checks.push_back(std::move(c));
  }
  j["checks"] = std::move(checks);
  j["overall"] = overall();
  return j;
}

Stopwatch::Stopwatch(bool enabled) : enabled_(enabled), start_(0) {
  if (enabled_)
    start_ = std::chrono::duration_cast<std::chrono::milliseconds>(
                 std::chrono::steady_clock::now().time_since_epoch())
                 .count();
}

int64_t Stopwatch::ms() const {
  if (!enabled_) return 0;
  int64_t now = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now().time_since_epoch())
                    .count();
  return now - start_;
}

}  // namespace secdet
