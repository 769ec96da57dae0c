#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <type_traits>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "spectra/constants.hpp"
#include "spectra/ensemble.hpp"
#include "spectra/error.hpp"
#include "spectra/gallery.hpp"
#include "spectra/io.hpp"
#include "spectra/jacobi.hpp"

namespace spectra::cli {

namespace {

using nlohmann::json;

struct RunConfig {
  std::optional<std::uint64_t> seed;
  std::vector<int> dims{8};
  std::vector<double> ps;
  std::vector<double> kappas;
  std::vector<int> ds;
  int trials = 100;
  std::optional<double> tol_rel;
  std::optional<double> tol_abs;
  std::string out;
  std::string format = "csv";
  std::string checker;
  std::string kind;
  std::string family = "random";
  std::string gallery_case;
  std::string spec_path;
  std::optional<double> x;
  std::optional<int> n;
  bool all = false;
  bool chain = false;
  int n_angles = kDefaultAngles;
  double eps = 0.5;
};

// Ties a flag to a JSON config key; a config value applies only when the flag was not given.
struct Binding {
  CLI::Option* option = nullptr;
  std::function<void(const json&)> assign;
};

using Bindings = std::map<std::string, Binding>;

template <typename T>
T json_as(const json& j, const std::string& key) {
  try {
    return j.get<T>();
  } catch (const json::exception&) {
    throw ConfigError("config field '" + key + "' has the wrong type");
  }
}

template <typename T>
void bind_option(CLI::App* sub, Bindings& b, const std::string& key, T& target, const std::string& desc) {
  std::string flag = "--" + key;
  std::replace(flag.begin() + 2, flag.end(), '_', '-');
  CLI::Option* opt = sub->add_option(flag, target, desc);
  b[key] = {opt, [&target, key](const json& j) {
              if constexpr (!std::is_same_v<T, std::string> && requires { target.push_back(target.front()); }) {
                using V = typename T::value_type;
                target.clear();
                if (j.is_array()) {
                  for (const auto& e : j) target.push_back(json_as<V>(e, key));
                } else {
                  target.push_back(json_as<V>(j, key));
                }
              } else {
                target = json_as<T>(j, key);
              }
            }};
}

template <typename T>
void bind_option(CLI::App* sub, Bindings& b, const std::string& key, std::optional<T>& target, const std::string& desc) {
  std::string flag = "--" + key;
  std::replace(flag.begin() + 2, flag.end(), '_', '-');
  CLI::Option* opt = sub->add_option(flag, target, desc);
  b[key] = {opt, [&target, key](const json& j) { target = json_as<T>(j, key); }};
}

void bind_flag(CLI::App* sub, Bindings& b, const std::string& key, bool& target, const std::string& desc) {
  CLI::Option* opt = sub->add_flag("--" + key, target, desc);
  b[key] = {opt, [&target, key](const json& j) { target = json_as<bool>(j, key); }};
}

void apply_config(const std::string& path, const Bindings& b) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("config file '" + path + "' is not valid JSON: " + e.what());
  }
  if (!j.is_object()) throw ConfigError("config file must hold a JSON object");
  for (const auto& [key, value] : j.items()) {
    const auto it = b.find(key);
    if (it == b.end()) throw ConfigError("unknown config field '" + key + "'");
    if (it->second.option->count() == 0) it->second.assign(value);
  }
}

std::uint64_t resolve_seed(const RunConfig& cfg) {
  if (cfg.seed) return *cfg.seed;
  const char* env = std::getenv("SPECTRA_SEED");
  if (!env || !*env) throw ConfigError("a seed is required: pass --seed or set SPECTRA_SEED");
  std::uint64_t v = 0;
  const char* end = env + std::char_traits<char>::length(env);
  const auto [ptr, ec] = std::from_chars(env, end, v);
  if (ec != std::errc{} || ptr != end) throw ConfigError("SPECTRA_SEED is not an unsigned 64-bit integer");
  return v;
}

void emit(const RunConfig& cfg, const std::string& content, std::ostream& out) {
  if (cfg.out.empty()) {
    out << content;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw ConfigError("cannot write '" + cfg.out + "'");
  f << content;
}

void require_format(const RunConfig& cfg) {
  if (cfg.format != "csv" && cfg.format != "json") throw ConfigError("--format must be csv or json");
}

json summary_json(const EnsembleSummary& s) {
  json j = {{"checker", to_string(s.checker)},
            {"kind", to_string(s.spec.kind)},
            {"family", to_string(s.spec.family)},
            {"dim", s.spec.dim},
            {"p", s.spec.p},
            {"seed", s.spec.seed},
            {"trials", s.trials},
            {"passes", s.passes},
            {"fails", s.fails},
            {"expected_violations", s.expected_violations},
            {"worst_ratio", s.worst_ratio},
            {"worst_trial", s.worst_trial}};
  return j;
}

double default_p(Checker c) {
  switch (c) {
    case Checker::Thm3:
      return 0.5;
    case Checker::Bouldin:
      return 2.0;
    default:
      return 1.0;
  }
}

int cmd_verify(RunConfig cfg, std::ostream& out, std::ostream& err) {
  require_format(cfg);
  if (cfg.checker.empty()) throw ConfigError("verify requires --checker");
  const Checker checker = parse_checker(cfg.checker);
  const Family family = parse_family(cfg.family);
  const EnsembleKind kind = cfg.kind.empty() ? default_kind(checker) : parse_kind(cfg.kind);
  const std::uint64_t seed = resolve_seed(cfg);
  if (cfg.ps.empty()) cfg.ps = {default_p(checker)};

  std::vector<EnsembleSummary> runs;
  for (int dim : cfg.dims) {
    for (double p : cfg.ps) {
      EnsembleSpec spec;
      spec.kind = kind;
      spec.family = family;
      spec.dim = dim;
      spec.p = p;
      spec.trials = cfg.trials;
      spec.seed = seed;
      spec.options.n_angles = cfg.n_angles;
      if (cfg.tol_rel) spec.options.slack.rel = *cfg.tol_rel;
      if (cfg.tol_abs) spec.options.slack.abs = *cfg.tol_abs;
      validate(spec, checker);
      runs.push_back(run_ensemble(spec, checker));
    }
  }

  int code = kExitOk;
  json failures = json::array();
  for (const auto& s : runs) {
    if (s.fails > 0) {
      code = kExitRegression;
      err << "FAIL: " << to_string(checker) << " dim=" << s.spec.dim << " p=" << format_double(s.spec.p) << ": "
          << s.fails << " of " << s.trials << " trials failed\n";
    }
    if (s.worst_fail) failures.push_back(to_json(*s.worst_fail));
    // The sharpness family must exceed ratio 1 when the exponent is below 1.
    if (family == Family::Prop2 && checker == Checker::Kato && s.spec.p < 1.0 && !(s.worst_ratio > 1.0)) {
      code = kExitRegression;
      err << "FAIL: expected a violation (ratio > 1) at p=" << format_double(s.spec.p) << ", worst ratio "
          << format_double(s.worst_ratio) << "\n";
    }
  }

  std::string content;
  if (cfg.format == "csv") {
    content = ensemble_csv_header();
    for (const auto& s : runs) content += ensemble_csv_row(s);
  } else {
    json j = {{"command", "verify"}, {"runs", json::array()}};
    for (const auto& s : runs) j["runs"].push_back(summary_json(s));
    content = j.dump(2) + "\n";
  }
  emit(cfg, content, out);

  if (!failures.empty()) {
    const std::string dump = failures.dump(2) + "\n";
    if (cfg.out.empty()) {
      err << dump;
    } else {
      std::ofstream f(cfg.out + ".failures.json", std::ios::binary);
      f << dump;
    }
  }
  return code;
}

std::vector<GalleryCase> gallery_all() {
  std::vector<GalleryCase> cases;
  for (const auto& [x, p] : std::vector<std::pair<double, double>>{{1.0, 2.0}, {0.25, 2.0}, {4.0, 1.0}}) {
    cases.push_back(example1(x, p));
  }
  for (int n : {2, 4, 8, 25}) cases.push_back(example2_max_case(n, 0.5));
  cases.push_back(remark_new_demo(3, 1.0));
  for (int n : {2, 4, 9}) cases.push_back(prop2_case(n, 0.5));
  return cases;
}

GalleryCase gallery_one(const RunConfig& cfg) {
  const double p = cfg.ps.empty() ? (cfg.gallery_case == "example1" ? 2.0 : cfg.gallery_case == "remark-new" ? 1.0 : 0.5)
                                  : cfg.ps.front();
  const int n = cfg.n.value_or(4);
  if (cfg.gallery_case == "example1") return example1(cfg.x.value_or(0.25), p);
  if (cfg.gallery_case == "example2") {
    return example2(n, cfg.x.value_or(example2_maximum(n, p).x_star_closed), p);
  }
  if (cfg.gallery_case == "example2-max") return example2_max_case(n, p);
  if (cfg.gallery_case == "remark-new") return remark_new_demo(cfg.n.value_or(3), p);
  if (cfg.gallery_case == "prop2") return prop2_case(n, p, cfg.x.value_or(-1.0));
  throw ConfigError("unknown gallery case '" + cfg.gallery_case +
                    "' (example1, example2, example2-max, remark-new, prop2)");
}

int cmd_gallery(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  require_format(cfg);
  if (cfg.all == !cfg.gallery_case.empty()) throw ConfigError("gallery takes exactly one of --all and --case");
  std::vector<GalleryCase> cases = cfg.all ? gallery_all() : std::vector<GalleryCase>{gallery_one(cfg)};
  int code = kExitOk;
  for (auto& g : cases) {
    if (cfg.tol_rel) g.rel_tol = *cfg.tol_rel;
    if (cfg.tol_abs) g.abs_tol = *cfg.tol_abs;
    if (!g.matches()) {
      code = kExitRegression;
      err << "regression: " << g.name << " closed form " << format_double(g.closed_form) << " computed "
          << format_double(g.computed) << "\n";
    }
  }
  std::string content;
  if (cfg.format == "csv") {
    content = gallery_csv_header();
    for (const auto& g : cases) content += gallery_csv_row(g);
  } else {
    json rows = json::array();
    for (const auto& g : cases) {
      json params = json::object();
      for (const auto& [k, v] : g.params) params[k] = v;
      json extras = json::object();
      for (const auto& [k, v] : g.extras) extras[k] = v;
      rows.push_back({{"case", g.name},
                      {"params", params},
                      {"closed_form", g.closed_form},
                      {"computed", g.computed},
                      {"abs_error", g.abs_error()},
                      {"match", g.matches()},
                      {"extras", extras}});
    }
    content = json{{"command", "gallery"}, {"cases", rows}}.dump(2) + "\n";
  }
  emit(cfg, content, out);
  return code;
}

int cmd_jacobi(RunConfig cfg, std::ostream& out, std::ostream& err) {
  require_format(cfg);
  if (cfg.spec_path.empty()) throw ConfigError("jacobi requires --spec");
  std::ifstream in(cfg.spec_path);
  if (!in) throw ConfigError("cannot open spec file '" + cfg.spec_path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("spec file is not valid JSON: ") + e.what());
  }
  const JacobiSpec spec = jacobi_spec_from_json(j);
  if (cfg.ps.empty()) cfg.ps = {1.0};
  SlackPolicy slack;
  if (cfg.tol_rel) slack.rel = *cfg.tol_rel;
  if (cfg.tol_abs) slack.abs = *cfg.tol_abs;

  std::vector<IneqReport> reports;
  json weights = json::array();
  std::string weight_csv = csv_line({"p", "eps", "lambda_re", "lambda_im", "w_new", "w_borichev", "w_hk09"});
  const auto trunc = build_truncation(spec);
  const double filter = default_filter_threshold(trunc.trunc - spec.support);
  const auto eig = eigenvalues(trunc.j);
  for (double p : cfg.ps) {
    reports.push_back(check_bound15(spec, p, slack));
    if (p >= 1.0) {
      auto lt = lt_sum_nonselfadjoint(spec, p, slack);
      reports.push_back(lt.main);
      reports.push_back(lt.tight);
      for (const cplx& l : eig) {
        if (segment_distance(l) <= filter) continue;
        const auto w = weight_comparison(l, p, cfg.eps);
        weights.push_back({{"p", p}, {"eps", cfg.eps}, {"lambda", {l.real(), l.imag()}},
                           {"w_new", w.w_new}, {"w_borichev", w.w_borichev}, {"w_hk09", w.w_hk09}});
        weight_csv += csv_line({format_double(p), format_double(cfg.eps), format_double(l.real()),
                                format_double(l.imag()), format_double(w.w_new), format_double(w.w_borichev),
                                format_double(w.w_hk09)});
      }
    }
    if (spec.is_selfadjoint()) {
      auto lt = lt_sum_selfadjoint(spec, p, slack);
      reports.push_back(lt.main);
      reports.push_back(lt.tight);
    }
  }
  const int m = trunc.trunc - spec.support;
  const std::vector<int> schedule{trunc.trunc, spec.support + 2 * m, spec.support + 4 * m};
  const auto stability = truncation_stability(spec, cfg.ps.front(), schedule);

  int code = kExitOk;
  for (const auto& r : reports) {
    if (r.verdict == Verdict::Fail) {
      code = kExitRegression;
      err << "FAIL: " << r.name << " p=" << format_double(r.p) << " lhs " << format_double(r.lhs) << " rhs "
          << format_double(r.rhs) << "\n";
    }
  }

  std::string content;
  if (cfg.format == "csv") {
    content = report_csv_header();
    for (const auto& r : reports) content += report_csv_row(r);
    content += "\n" + weight_csv + "\n" + stability_csv_header();
    for (const auto& s : stability) content += stability_csv_row(s);
  } else {
    json rj = json::array();
    for (const auto& r : reports) rj.push_back(to_json(r));
    json sj = json::array();
    for (const auto& s : stability) {
      sj.push_back({{"trunc", s.trunc}, {"lhs", s.lhs}, {"counted", s.counted}, {"drift", s.drift},
                    {"spurious", s.spurious}});
    }
    content = json{{"command", "jacobi"}, {"reports", rj}, {"weights", weights}, {"stability", sj}}.dump(2) + "\n";
  }
  emit(cfg, content, out);
  return code;
}

int cmd_constants(RunConfig cfg, std::ostream& out, std::ostream& err) {
  require_format(cfg);
  struct Point {
    int d;
    double p;
    double kappa;
  };
  std::vector<Point> grid;
  if (cfg.all) {
    for (int d : {1, 2, 3}) {
      for (double dp : {0.25, 1.0}) {
        for (double kappa : {0.5, 1.0, 2.5}) grid.push_back({d, std::max(1.0, 0.5 * d + dp), kappa});
      }
    }
  } else {
    if (cfg.ds.empty()) cfg.ds = {1};
    if (cfg.ps.empty()) cfg.ps = {1.0};
    if (cfg.kappas.empty()) cfg.kappas = {0.5};
    for (int d : cfg.ds) {
      for (double p : cfg.ps) {
        for (double kappa : cfg.kappas) grid.push_back({d, p, kappa});
      }
    }
  }
  const double tol = cfg.tol_rel.value_or(1e-10);

  int code = kExitOk;
  std::string content = cfg.format == "csv" ? constants_csv_header() : "";
  json rows = json::array();
  std::string chain_csv = csv_line({"d", "p", "kappa", "lambda_re", "lambda_im", "i28", "i29", "substitution_rel_err",
                                    "i30", "ratio_29_30", "weight"});
  json chains = json::array();
  for (const auto& [d, p, kappa] : grid) {
    const DualEval v0 = c0(d, p);
    const DualEval v1 = c1(d, p, kappa);
    for (const auto* v : {&v0, &v1}) {
      if (!(v->rel_error() <= tol)) {
        code = kExitRegression;
        err << "regression: d=" << d << " p=" << format_double(p) << " kappa=" << format_double(kappa)
            << " quadrature/closed-form rel error " << format_double(v->rel_error()) << "\n";
      }
    }
    content += cfg.format == "csv" ? constants_csv_row(d, p, kappa, v0, v1) : "";
    rows.push_back({{"d", d},
                    {"p", p},
                    {"kappa", kappa},
                    {"c0", {{"quadrature", v0.quadrature}, {"closed_form", v0.closed_form}, {"rel_err", v0.rel_error()}}},
                    {"c1", {{"quadrature", v1.quadrature}, {"closed_form", v1.closed_form}, {"rel_err", v1.rel_error()}}}});
    if (!cfg.chain) continue;
    for (const cplx l : {cplx(0, 4), cplx(0, 0.25), cplx(-1, 1), cplx(1, -0.5), cplx(-3, 0.2)}) {
      const auto r = thm6_chain_check(l, d, p, kappa);
      if (!(r.substitution_rel_err <= 1e-8) || !r.lower_bound_holds) {
        code = kExitRegression;
        err << "regression: integral chain at lambda=" << format_double(l.real()) << "+" << format_double(l.imag())
            << "i\n";
      }
      chain_csv += csv_line({std::to_string(d), format_double(p), format_double(kappa), format_double(l.real()),
                             format_double(l.imag()), format_double(r.i28), format_double(r.i29),
                             format_double(r.substitution_rel_err), format_double(r.i30),
                             format_double(r.ratio_29_30), format_double(r.weight)});
      chains.push_back({{"d", d}, {"p", p}, {"kappa", kappa}, {"lambda", {l.real(), l.imag()}}, {"i28", r.i28},
                        {"i29", r.i29}, {"substitution_rel_err", r.substitution_rel_err}, {"i30", r.i30},
                        {"ratio_29_30", r.ratio_29_30}, {"weight", r.weight}});
    }
  }
  if (cfg.format == "csv") {
    if (cfg.chain) content += "\n" + chain_csv;
  } else {
    json j = {{"command", "constants"}, {"rows", rows}};
    if (cfg.chain) j["chain"] = chains;
    content = j.dump(2) + "\n";
  }
  emit(cfg, content, out);
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Eigenvalue perturbation bounds: ensembles, closed-form gallery, Jacobi sums, constants", "spectra"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string config_path;

  auto common = [&](CLI::App* sub, Bindings& b) {
    bind_option(sub, b, "p", cfg.ps, "Exponent(s) p");
    bind_option(sub, b, "tol_rel", cfg.tol_rel, "Relative tolerance override");
    bind_option(sub, b, "tol_abs", cfg.tol_abs, "Absolute tolerance override");
    bind_option(sub, b, "out", cfg.out, "Output file (default: stdout)");
    bind_option(sub, b, "format", cfg.format, "Output format: csv or json");
    sub->add_option("--config", config_path, "JSON config file; flags take precedence");
  };

  Bindings verify_b, gallery_b, jacobi_b, constants_b;
  CLI::App* verify = app.add_subcommand("verify", "Run a seeded ensemble through an inequality checker");
  common(verify, verify_b);
  bind_option(verify, verify_b, "checker", cfg.checker, "thm2|cor1|thm3|lemma45|kato|bouldin|sp_variational|thm4|heat");
  bind_option(verify, verify_b, "kind", cfg.kind, "ginibre|gue|hermitian_pair|normal_pair|low_rank_perturbation");
  bind_option(verify, verify_b, "family", cfg.family, "random|prop2");
  bind_option(verify, verify_b, "dim", cfg.dims, "Matrix dimension(s)");
  bind_option(verify, verify_b, "trials", cfg.trials, "Trials per (dim, p)");
  bind_option(verify, verify_b, "seed", cfg.seed, "64-bit seed (fallback: SPECTRA_SEED)");
  bind_option(verify, verify_b, "n_angles", cfg.n_angles, "Numerical-range bracket resolution");

  CLI::App* gallery = app.add_subcommand("gallery", "Closed-form regression table");
  common(gallery, gallery_b);
  bind_option(gallery, gallery_b, "case", cfg.gallery_case, "example1|example2|example2-max|remark-new|prop2");
  bind_option(gallery, gallery_b, "x", cfg.x, "Perturbation size");
  bind_option(gallery, gallery_b, "n", cfg.n, "Dimension");
  bind_flag(gallery, gallery_b, "all", cfg.all, "Every case of the regression table");

  CLI::App* jacobi = app.add_subcommand("jacobi", "Jacobi perturbation bounds and eigenvalue sums");
  common(jacobi, jacobi_b);
  bind_option(jacobi, jacobi_b, "spec", cfg.spec_path, "Jacobi spec JSON file");
  bind_option(jacobi, jacobi_b, "eps", cfg.eps, "Exponent offset for the weight comparison");

  CLI::App* constants = app.add_subcommand("constants", "Quadrature vs closed-form constants");
  common(constants, constants_b);
  bind_option(constants, constants_b, "d", cfg.ds, "Dimension(s)");
  bind_option(constants, constants_b, "kappa", cfg.kappas, "kappa value(s)");
  bind_flag(constants, constants_b, "all", cfg.all, "Built-in 18-point parameter grid");
  bind_flag(constants, constants_b, "chain", cfg.chain, "Also check the integral chain at sample points");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (verify->parsed()) {
      if (!config_path.empty()) apply_config(config_path, verify_b);
      return cmd_verify(cfg, out, err);
    }
    if (gallery->parsed()) {
      if (!config_path.empty()) apply_config(config_path, gallery_b);
      return cmd_gallery(cfg, out, err);
    }
    if (jacobi->parsed()) {
      if (!config_path.empty()) apply_config(config_path, jacobi_b);
      return cmd_jacobi(cfg, out, err);
    }
    if (!config_path.empty()) apply_config(config_path, constants_b);
    return cmd_constants(cfg, out, err);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kExitRegression;
  }
}

}  // namespace spectra::cli
