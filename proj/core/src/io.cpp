#include "spectra/io.hpp"

#include <cmath>
#include <cstdio>
#include <set>

#include "spectra/error.hpp"

namespace spectra {

namespace {

using nlohmann::json;

json complex_to_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx complex_from_json(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ConfigError(std::string(what) + ": expected [re, im] pair");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

std::vector<cplx> complex_list(const json& j, const char* what) {
  if (!j.is_array()) throw ConfigError(std::string(what) + ": expected a list of [re, im] pairs");
  std::vector<cplx> out;
  for (const auto& e : j) out.push_back(complex_from_json(e, what));
  return out;
}

std::string params_field(const std::vector<std::pair<std::string, double>>& params) {
  std::string s;
  for (const auto& [k, v] : params) {
    if (!s.empty()) s += ';';
    s += k + '=' + format_double(v);
  }
  return s;
}

}  // namespace

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

json matrix_to_json(const CMatrix& m) {
  json data = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index k = 0; k < m.cols(); ++k) data.push_back(complex_to_json(m(i, k)));
  }
  return {{"dim", m.rows()}, {"data", data}};
}

CMatrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("data")) throw ConfigError("matrix: expected {dim, data}");
  const auto n = j.at("dim").get<long>();
  const auto entries = complex_list(j.at("data"), "matrix data");
  if (n < 1 || entries.size() != static_cast<std::size_t>(n * n)) throw ConfigError("matrix: data length != dim^2");
  CMatrix m(n, n);
  for (long i = 0; i < n; ++i) {
    for (long k = 0; k < n; ++k) m(i, k) = entries[static_cast<std::size_t>(i * n + k)];
  }
  return m;
}

json to_json(const IneqReport& r) {
  json extras = json::object();
  for (const auto& [k, v] : r.extras) extras[k] = v;
  return {{"name", r.name},   {"lhs", r.lhs}, {"rhs", r.rhs},
          {"ratio", r.ratio}, {"p", r.p},     {"slack", {{"rel", r.slack.rel}, {"abs", r.slack.abs}}},
          {"verdict", std::string(to_string(r.verdict))}, {"extras", extras}};
}

json to_json(const FailInstance& f) {
  return {{"checker", f.checker}, {"seed", f.seed},   {"trial", f.trial},
          {"dim", f.dim},         {"p", f.p},         {"param", f.param},
          {"ratio", f.ratio},     {"A", matrix_to_json(f.a)}, {"B", matrix_to_json(f.b)}};
}

json jacobi_spec_to_json(const JacobiSpec& spec) {
  auto list = [](const std::vector<cplx>& v) {
    json out = json::array();
    for (const cplx& z : v) out.push_back(complex_to_json(z));
    return out;
  };
  json j = {{"support", spec.support}, {"a", list(spec.a)}, {"b", list(spec.b)}, {"c", list(spec.c)}};
  if (spec.trunc > 0) j["trunc"] = spec.trunc;
  return j;
}

JacobiSpec jacobi_spec_from_json(const json& j) {
  if (!j.is_object()) throw ConfigError("Jacobi spec: expected a JSON object");
  static const std::set<std::string> known{"support", "a", "b", "c", "trunc"};
  for (const auto& [k, _] : j.items()) {
    if (!known.count(k)) throw ConfigError("Jacobi spec: unknown field '" + k + "'");
  }
  if (!j.contains("support") || !j.at("support").is_number_integer()) {
    throw ConfigError("Jacobi spec: integer field 'support' is required");
  }
  JacobiSpec spec = free_spec(j.at("support").get<int>());
  if (j.contains("a")) spec.a = complex_list(j.at("a"), "Jacobi a");
  if (j.contains("b")) spec.b = complex_list(j.at("b"), "Jacobi b");
  if (j.contains("c")) spec.c = complex_list(j.at("c"), "Jacobi c");
  if (j.contains("trunc")) {
    if (!j.at("trunc").is_number_integer()) throw ConfigError("Jacobi spec: 'trunc' must be an integer");
    spec.trunc = j.at("trunc").get<int>();
  }
  validate(spec);
  return spec;
}

std::string csv_line(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    const std::string& f = fields[i];
    if (f.find_first_of(",\"\n") == std::string::npos) {
      out += f;
    } else {
      out += '"';
      for (char c : f) {
        if (c == '"') out += '"';
        out += c;
      }
      out += '"';
    }
  }
  return out + '\n';
}

std::string gallery_csv_header() { return csv_line({"case", "params", "closed_form", "computed", "abs_error", "match"}); }

std::string gallery_csv_row(const GalleryCase& g) {
  return csv_line({g.name, params_field(g.params), format_double(g.closed_form), format_double(g.computed),
                   format_double(g.abs_error()), g.matches() ? "1" : "0"});
}

std::string report_csv_header() { return csv_line({"name", "p", "lhs", "rhs", "ratio", "verdict", "extras"}); }

std::string report_csv_row(const IneqReport& r) {
  return csv_line({r.name, format_double(r.p), format_double(r.lhs), format_double(r.rhs), format_double(r.ratio),
                   std::string(to_string(r.verdict)), params_field(r.extras)});
}

std::string ensemble_csv_header() {
  return csv_line({"checker", "kind", "family", "dim", "p", "seed", "trials", "passes", "fails",
                   "expected_violations", "worst_ratio", "worst_trial"});
}

std::string ensemble_csv_row(const EnsembleSummary& s) {
  return csv_line({std::string(to_string(s.checker)), std::string(to_string(s.spec.kind)),
                   std::string(to_string(s.spec.family)), std::to_string(s.spec.dim), format_double(s.spec.p),
                   std::to_string(s.spec.seed), std::to_string(s.trials), std::to_string(s.passes),
                   std::to_string(s.fails), std::to_string(s.expected_violations), format_double(s.worst_ratio),
                   std::to_string(s.worst_trial)});
}

std::string constants_csv_header() {
  return csv_line({"d", "p", "kappa", "c0_quad", "c0_closed", "c0_rel_err", "c1_quad", "c1_closed", "c1_rel_err"});
}

std::string constants_csv_row(int d, double p, double kappa, const DualEval& c0v, const DualEval& c1v) {
  return csv_line({std::to_string(d), format_double(p), format_double(kappa), format_double(c0v.quadrature),
                   format_double(c0v.closed_form), format_double(c0v.rel_error()), format_double(c1v.quadrature),
                   format_double(c1v.closed_form), format_double(c1v.rel_error())});
}

std::string stability_csv_header() { return csv_line({"trunc", "lhs", "counted", "drift", "spurious"}); }

std::string stability_csv_row(const StabilityRow& r) {
  return csv_line({std::to_string(r.trunc), format_double(r.lhs), std::to_string(r.counted), format_double(r.drift),
                   std::to_string(r.spurious)});
}

}  // namespace spectra
