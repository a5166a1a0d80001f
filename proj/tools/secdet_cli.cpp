#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "secdet/acceptance.hpp"

using namespace secdet;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

struct CommonOpts {
  std::string field = "gf:32003";
  uint64_t seed = kDefaultSeed;
  uint64_t budget = 2'000'000;
  int trials = 200;
  bool timings = false;
  std::string json_path;

  RunConfig config() const {
    RunConfig c;
    c.field = FieldSpec::parse(field);
    c.seed = seed;
    c.budget = budget;
    c.trials = trials;
    c.timings = timings;
    return c;
  }
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--field", o.field, "coefficient field: q or gf:<prime>");
  cmd->add_option("--seed", o.seed, "PRNG seed");
  cmd->add_option("--budget", o.budget, "Groebner reduction-step budget");
  cmd->add_option("--trials", o.trials, "sampling trial count");
  cmd->add_flag("--timings", o.timings, "record wall-clock timings in reports");
  cmd->add_option("--json", o.json_path, "write the JSON report to this path");
}

int emit(const Report& rep, const CommonOpts& o, bool print_lines) {
  if (print_lines) {
    auto j = rep.to_json();
    for (const auto& c : j["checks"])
      std::cout << c["name"].get<std::string>() << ": " << c["status"].get<std::string>()
                << "\n";
    std::cout << "overall: " << rep.overall() << "\n";
  }
  if (!o.json_path.empty())
    spit(o.json_path, rep.str());
  else if (!print_lines)
    std::cout << rep.str();
  return rep.exit_code();
}

LinearMatrix load_matrix(const std::string& path, const ParamVariety& V) {
  return parse_linmat(slurp(path), V.ambient_ring());
}

int cmd_example(const std::vector<std::string>& args, int q, bool veronese_rnc,
                const CommonOpts& o, const std::string& out_prefix) {
  RunConfig cfg = o.config();
  if (args.empty()) throw CLI::ValidationError("example", "missing family name");
  const std::string family = args[0];
  std::vector<std::string> kv;
  std::optional<ParamVariety> V;
  if (family == "scroll") {
    std::vector<int> a;
    std::string joined;
    for (size_t i = 1; i < args.size(); i++) {
      a.push_back(std::stoi(args[i]));
      joined += (joined.empty() ? "" : ",") + args[i];
    }
    V.emplace(make_scroll(a, cfg.field, q));
    kv = {"a = " + joined, "q = " + std::to_string(q)};
  } else if (family == "veronese") {
    V.emplace(make_veronese(std::stoi(args.at(1)), std::stoi(args.at(2)), cfg.field));
    kv = {"n = " + args[1], "d = " + args[2]};
  } else if (family == "segre") {
    V.emplace(make_segre(std::stoi(args.at(1)), std::stoi(args.at(2)), cfg.field));
    kv = {"a = " + args[1], "b = " + args[2]};
  } else if (family == "p1p1") {
    V.emplace(make_p1p1_22(cfg.field));
  } else if (family == "delpezzo") {
    int s = args.size() > 1 ? std::stoi(args[1]) : 1;
    Rng rng(cfg.seed);
    std::vector<std::vector<Scalar>> pts;
    for (int attempt = 0; attempt < 32 && int(pts.size()) < s; attempt++) {
      std::vector<Scalar> p;
      for (int k = 0; k < 3; k++) p.push_back(rng.scalar(cfg.field));
      auto trial = pts;
      trial.push_back(p);
      try {
        make_delpezzo_blowup(trial, cfg.field);
        pts = trial;
      } catch (const std::invalid_argument&) {
      }
    }
    if (int(pts.size()) < s) throw std::runtime_error("could not sample general points");
    std::string joined;
    for (const auto& p : pts)
      joined += (joined.empty() ? "" : " ; ") + p[0].str() + ":" + p[1].str() + ":" + p[2].str();
    V.emplace(make_delpezzo_blowup(pts, cfg.field));
    kv = {"points = " + joined};
  } else {
    throw CLI::ValidationError("example", "unknown family " + family);
  }
  LinearMatrix M = veronese_rnc ? rnc_veronese_matrix(*V, q) : family_presentation(*V);
  std::string prefix = out_prefix.empty() ? family : out_prefix;
  spit(prefix + ".variety", variety_file_text(family == "p1p1" ? "p1p1_22" : family, kv,
                                              cfg.field, cfg.seed));
  spit(prefix + ".matrix", M.to_text());
  std::cout << "wrote " << prefix << ".variety and " << prefix << ".matrix ("
            << M.rows() << "x" << M.cols() << (M.symmetric() ? " symmetric" : "") << ")\n";
  return 0;
}

int cmd_check(const std::string& vfile, const std::string& mfile, int q, const CommonOpts& o) {
  RunConfig cfg = o.config();
  ParamVariety V = parse_variety_file(slurp(vfile));
  LinearMatrix M = load_matrix(mfile, V);
  Rng rng(cfg.seed);
  Report rep(cfg);
  Stopwatch sw(cfg.timings);
  ClassifyResult res = classify(V, M, q, cfg, rng);
  nlohmann::ordered_json data = res.data;
  data["verdict"] = res.verdict;
  for (const auto& c : res.cert.checks)
    data["checks"][c.name] = status_str(c.status) + (c.note.empty() ? "" : " (" + c.note + ")");
  if (res.cert.hilbert)
    data["hilbert"] = {{"codim", res.cert.hilbert->codimension},
                       {"degree", res.cert.hilbert->degree.get_str()},
                       {"provenance", cfg.field.is_prime_field() ? kCharP : kExact}};
  bool pass = res.verdict == "scroll" || res.verdict == "veronese" || res.verdict == "neither";
  rep.add("check.classification", pass ? CheckStatus::Pass : CheckStatus::Fail, data, sw.ms());
  if (res.verdict == "scroll" || res.verdict == "veronese") {
    Stopwatch sw2(cfg.timings);
    try {
      bool rc = resolution_consistency(M, q, res.profile.e, cfg.gb());
      rep.add("check.resolution_consistency", rc ? CheckStatus::Pass : CheckStatus::Fail,
              {{"provenance", kCharP}}, sw2.ms());
    } catch (const BudgetExceeded& e) {
      rep.add("check.resolution_consistency", CheckStatus::Skipped, {{"error", e.what()}},
              sw2.ms());
    }
    Stopwatch sw3(cfg.timings);
    try {
      SectionFactorization sf = factor_presentation(M, V);
      nlohmann::ordered_json fd{{"u", sf.u.str()}};
      if (sf.alpha) fd["alpha"] = sf.alpha->str();
      rep.add("check.factorization", CheckStatus::Pass, fd, sw3.ms());
    } catch (const std::exception& e) {
      rep.add("check.factorization", CheckStatus::Fail, {{"error", e.what()}}, sw3.ms());
    }
  }
  return emit(rep, o, true);
}

int cmd_glue(const std::string& vfile, int q, const std::string& mode_s,
             const std::string& mfile, const CommonOpts& o) {
  RunConfig cfg = o.config();
  ParamVariety V = parse_variety_file(slurp(vfile));
  LinearMatrix M = mfile.empty() ? family_presentation(V) : load_matrix(mfile, V);
  GlueMode mode;
  if (mode_s == "scroll1")
    mode = GlueMode::ScrollI;
  else if (mode_s == "scroll2")
    mode = GlueMode::ScrollII;
  else if (mode_s == "veronese")
    mode = GlueMode::Veronese;
  else
    throw CLI::ValidationError("glue", "mode must be scroll1, scroll2 or veronese");
  Report rep(cfg);
  Rng rng(cfg.seed);
  Stopwatch sw(cfg.timings);
  GlueRoundTrip rt = run_glue_roundtrip(V, M, q, mode, rng);
  nlohmann::ordered_json data{{"mode", mode_s}, {"resamples", rt.resamples}};
  nlohmann::ordered_json conds = nlohmann::ordered_json::array();
  for (const auto& c : rt.conditions) conds.push_back(c.name + ": " + status_str(c.status));
  data["conditions"] = conds;
  rep.add("glue.roundtrip", rt.ok ? CheckStatus::Pass : CheckStatus::Fail, data, sw.ms());
  return emit(rep, o, true);
}

int cmd_factor(const std::string& vfile, const std::string& mfile, const CommonOpts& o) {
  RunConfig cfg = o.config();
  ParamVariety V = parse_variety_file(slurp(vfile));
  LinearMatrix M = load_matrix(mfile, V);
  Report rep(cfg);
  Stopwatch sw(cfg.timings);
  try {
    SectionFactorization sf = factor_presentation(M, V);
    nlohmann::ordered_json data;
    data["u"] = sf.u.str();
    nlohmann::ordered_json sj = nlohmann::ordered_json::array(),
                           tj = nlohmann::ordered_json::array();
    for (const auto& p : sf.s) sj.push_back(p.str());
    for (const auto& p : sf.t) tj.push_back(p.str());
    data["s"] = sj;
    data["t"] = tj;
    if (sf.alpha) data["alpha"] = sf.alpha->str();
    rep.add("factor", CheckStatus::Pass, data, sw.ms());
  } catch (const std::exception& e) {
    rep.add("factor", CheckStatus::Fail, {{"error", e.what()}}, sw.ms());
  }
  return emit(rep, o, true);
}

int cmd_report(const std::string& path) {
  auto j = nlohmann::ordered_json::parse(slurp(path));
  std::cout << j["tool"]["name"].get<std::string>() << " "
            << j["tool"]["version"].get<std::string>() << ", field "
            << j["config"]["field"].get<std::string>() << ", seed "
            << j["config"]["seed"].dump() << "\n";
  for (const auto& c : j["checks"])
    std::cout << "  " << c["name"].get<std::string>() << ": "
              << c["status"].get<std::string>() << "\n";
  std::cout << "overall: " << j["overall"].get<std::string>() << "\n";
  return j["overall"] == "pass" ? 0 : (j["overall"] == "fail" ? 2 : 3);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"determinantal presentations of higher secant varieties of minimal degree"};
  app.require_subcommand(1);

  CommonOpts o;

  auto* ex = app.add_subcommand("example", "write variety and presentation files for a family");
  std::vector<std::string> ex_args;
  int ex_q = 1;
  bool ex_veronese = false;
  std::string ex_out;
  ex->add_option("family", ex_args, "family and parameters, e.g. scroll 3 4")->required();
  ex->add_option("--q", ex_q, "secant level for the presentation");
  ex->add_flag("--veronese-rnc", ex_veronese,
               "use the symmetric presentation of a degree-(2q+2) rational normal curve");
  ex->add_option("--out", ex_out, "output file prefix");
  add_common(ex, o);

  auto* ck = app.add_subcommand("check", "certify a presentation matrix against a variety");
  std::string ck_v, ck_m;
  int ck_q = 1;
  ck->add_option("variety", ck_v)->required();
  ck->add_option("matrix", ck_m)->required();
  ck->add_option("--q", ck_q, "secant level");
  add_common(ck, o);

  auto* gl = app.add_subcommand("glue", "project a presentation and re-glue it");
  std::string gl_v, gl_mode = "scroll1", gl_m;
  int gl_q = 1;
  gl->add_option("variety", gl_v)->required();
  gl->add_option("--q", gl_q, "secant level");
  gl->add_option("--mode", gl_mode, "scroll1 | scroll2 | veronese");
  gl->add_option("--matrix", gl_m, "presentation file (default: the family presentation)");
  add_common(gl, o);

  auto* fa = app.add_subcommand("factor", "factor a presentation through the parametrization");
  std::string fa_v, fa_m;
  fa->add_option("variety", fa_v)->required();
  fa->add_option("matrix", fa_m)->required();
  add_common(fa, o);

  auto* ac = app.add_subcommand("acceptance", "run the acceptance suite");
  add_common(ac, o);

  auto* rp = app.add_subcommand("report", "summarize a JSON report");
  std::string rp_path;
  rp->add_option("path", rp_path)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (ex->parsed()) return cmd_example(ex_args, ex_q, ex_veronese, o, ex_out);
    if (ck->parsed()) return cmd_check(ck_v, ck_m, ck_q, o);
    if (gl->parsed()) return cmd_glue(gl_v, gl_q, gl_mode, gl_m, o);
    if (fa->parsed()) return cmd_factor(fa_v, fa_m, o);
    if (ac->parsed()) return emit(run_acceptance(o.config()), o, true);
    if (rp->parsed()) return cmd_report(rp_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
