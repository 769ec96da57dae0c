#include "spectra/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "spectra/assignment.hpp"
#include "spectra/error.hpp"

namespace spectra {

namespace {

cplx coeff_at(const std::vector<cplx>& v, int support, int k, cplx free_value) {
  if (k < -support || k > support) return free_value;
  return v[static_cast<std::size_t>(k + support)];
}

std::vector<cplx> truncation_eigenvalues(const JacobiSpec& spec, int trunc) {
  JacobiSpec s = spec;
  s.trunc = trunc;
  const auto t = build_truncation(s);
  if (spec.is_selfadjoint()) {
    const RVector ev = hermitian_eigenvalues(t.j);
    return {ev.data(), ev.data() + ev.size()};
  }
  return eigenvalues(t.j);
}

double lt_lhs(const std::vector<cplx>& eig, double p, double filter, int* counted, int* spurious) {
  double lhs = 0.0;
  int n = 0;
  int s = 0;
  for (const cplx& l : eig) {
    const double d = segment_distance(l);
    if (d > filter) {
      lhs += std::pow(d, p);
      ++n;
    } else if (d > 0.0) {
      ++s;
    }
  }
  if (counted) *counted = n;
  if (spurious) *spurious = s;
  return lhs;
}

LtReports lt_sum(const char* name, const JacobiSpec& spec, double p, const SlackPolicy& slack, double filter) {
  validate(spec);
  const auto t = build_truncation(spec);
  if (filter < 0.0) filter = default_filter_threshold(t.trunc - spec.support);

  std::vector<cplx> eig;
  if (spec.is_selfadjoint()) {
    const RVector ev = hermitian_eigenvalues(t.j);
    eig.assign(ev.data(), ev.data() + ev.size());
  } else {
    eig = eigenvalues(t.j);
  }
  LtReports out;
  out.filter_threshold = filter;
  const double lhs = lt_lhs(eig, p, filter, &out.counted, nullptr);
  const double d_pow = dseq(spec).lp_pow(p);
  out.main = make_report(name, lhs, std::pow(3.0, p) * d_pow, p, slack);
  out.tight = make_report(std::string(name) + "-tight", lhs, schatten_pow(t.j - t.j0, p), p, slack);
  for (IneqReport* r : {&out.main, &out.tight}) {
    r->extras = {{"filter_threshold", filter}, {"counted", out.counted}, {"trunc", t.trunc}};
  }
  return out;
}

}  // namespace

cplx JacobiSpec::a_at(int k) const { return coeff_at(a, support, k, 1.0); }
cplx JacobiSpec::b_at(int k) const { return coeff_at(b, support, k, 0.0); }
cplx JacobiSpec::c_at(int k) const { return coeff_at(c, support, k, 1.0); }

int JacobiSpec::resolved_trunc() const { return trunc > 0 ? trunc : support + kDefaultJacobiMargin; }

bool JacobiSpec::is_selfadjoint(double tol) const {
  for (int k = -support; k <= support; ++k) {
    if (std::abs(c_at(k) - std::conj(a_at(k))) > tol) return false;
    if (std::abs(b_at(k).imag()) > tol) return false;
  }
  return true;
}

JacobiSpec free_spec(int support, int trunc) {
  if (support < 0) throw ConfigError("Jacobi support must be non-negative");
  JacobiSpec s;
  s.support = support;
  const auto len = static_cast<std::size_t>(2 * support + 1);
  s.a.assign(len, 1.0);
  s.b.assign(len, 0.0);
  s.c.assign(len, 1.0);
  s.trunc = trunc;
  return s;
}

void validate(const JacobiSpec& spec) {
  if (spec.support < 0) throw ConfigError("Jacobi support must be non-negative");
  const auto len = static_cast<std::size_t>(2 * spec.support + 1);
  if (spec.a.size() != len || spec.b.size() != len || spec.c.size() != len) {
    throw ConfigError("Jacobi coefficients a, b, c must each have 2*support+1 entries");
  }
  for (const auto* v : {&spec.a, &spec.b, &spec.c}) {
    for (const cplx& z : *v) {
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw ConfigError("Jacobi coefficients must be finite");
    }
  }
  if (spec.resolved_trunc() < spec.support + kMinJacobiMargin) {
    throw ConfigError("Jacobi truncation must exceed support by at least " + std::to_string(kMinJacobiMargin));
  }
}

JacobiSpec random_spec(Rng& rng, int support, bool selfadjoint, double scale) {
  JacobiSpec s = free_spec(support);
  const auto len = static_cast<std::size_t>(2 * support + 1);
  for (std::size_t i = 0; i < len; ++i) {
    s.a[i] += scale * complex_normal(rng);
    s.b[i] += scale * complex_normal(rng);
    s.c[i] += scale * complex_normal(rng);
    if (selfadjoint) {
      s.b[i] = s.b[i].real();
      s.c[i] = std::conj(s.a[i]);
    }
  }
  return s;
}

JacobiTruncation build_truncation(const JacobiSpec& spec) {
  validate(spec);
  const int n = spec.resolved_trunc();
  const int dim = 2 * n + 1;
  JacobiTruncation t;
  t.trunc = n;
  t.j = CMatrix::Zero(dim, dim);
  t.j0 = CMatrix::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) {
    const int k = i - n;
    t.j(i, i) = spec.b_at(k);
    if (i > 0) {
      t.j(i, i - 1) = spec.a_at(k - 1);
      t.j0(i, i - 1) = 1.0;
    }
    if (i + 1 < dim) {
      t.j(i, i + 1) = spec.c_at(k);
      t.j0(i, i + 1) = 1.0;
    }
  }
  return t;
}

double DSeq::lp_pow(double p) const {
  if (!(p > 0.0)) throw DomainError("l^p exponent must be positive");
  double s = 0.0;
  for (double x : d) {
    if (x > 0.0) s += std::pow(x, p);
  }
  return s;
}

double DSeq::lp_norm(double p) const { return std::pow(lp_pow(p), 1.0 / p); }

DSeq dseq(const JacobiSpec& spec) {
  validate(spec);
  DSeq out;
  out.first = -spec.support - 1;
  for (int k = out.first; k <= spec.support + 1; ++k) {
    const double v = std::max({std::abs(spec.a_at(k - 1) - 1.0), std::abs(spec.a_at(k) - 1.0), std::abs(spec.b_at(k)),
                               std::abs(spec.c_at(k - 1) - 1.0), std::abs(spec.c_at(k) - 1.0)});
    out.d.push_back(v);
  }
  return out;
}

double segment_distance(cplx lambda) {
  const double x = std::clamp(lambda.real(), -2.0, 2.0);
  return std::abs(lambda - cplx(x, 0.0));
}

IneqReport check_bound15(const JacobiSpec& spec, double p, const SlackPolicy& slack) {
  if (!(p > 0.0)) throw DomainError("check_bound15 requires p > 0");
  const auto t = build_truncation(spec);
  // J − J0 vanishes outside sites [−S−1, S+1]; the block carries every nonzero singular value.
  const int lo = std::max(0, t.trunc - spec.support - 1);
  const int len = std::min(static_cast<int>(t.j.rows()) - lo, 2 * spec.support + 3);
  const CMatrix diff = (t.j - t.j0).block(lo, lo, len, len);
  const double lhs = schatten_norm(diff, p);
  const double rhs = 3.0 * dseq(spec).lp_norm(p);
  return make_report("bound15", lhs, rhs, p, slack);
}

double default_filter_threshold(int margin) { return 10.0 * std::pow(2.0, -0.5 * margin); }

LtReports lt_sum_nonselfadjoint(const JacobiSpec& spec, double p, const SlackPolicy& slack, double filter) {
  if (!(p >= 1.0)) throw DomainError("lt_sum_nonselfadjoint requires p >= 1");
  return lt_sum("lt-nonselfadjoint", spec, p, slack, filter);
}

LtReports lt_sum_selfadjoint(const JacobiSpec& spec, double p, const SlackPolicy& slack, double filter) {
  if (!(p > 0.0)) throw DomainError("lt_sum_selfadjoint requires p > 0");
  validate(spec);
  if (!spec.is_selfadjoint()) throw DomainError("lt_sum_selfadjoint requires c_k = conj(a_k) and real b_k");
  return lt_sum("lt-selfadjoint", spec, p, slack, filter);
}

WeightTriple weight_comparison(cplx lambda, double p, double eps) {
  if (!(p >= 1.0)) throw DomainError("weight_comparison requires p >= 1");
  if (!(eps > 0.0 && eps < 1.0)) throw DomainError("weight_comparison requires eps in (0, 1)");
  const double d = segment_distance(lambda);
  if (!(d > 0.0)) throw DomainError("weight_comparison requires lambda off [-2, 2]");
  const double q = std::abs(lambda * lambda - 4.0);
  return {std::pow(d, p), std::pow(d, p + 1.0 + eps) / q, std::pow(d, p + eps) / std::sqrt(q)};
}

WeightSample weight_comparison_sample(const std::vector<cplx>& lambdas, double p, double eps) {
  WeightSample s;
  s.c_borichev = std::numeric_limits<double>::infinity();
  s.c_hk09 = std::numeric_limits<double>::infinity();
  std::vector<WeightTriple> w;
  for (const cplx& l : lambdas) {
    w.push_back(weight_comparison(l, p, eps));
    s.c_borichev = std::min(s.c_borichev, w.back().w_new / w.back().w_borichev);
    s.c_hk09 = std::min(s.c_hk09, w.back().w_new / w.back().w_hk09);
  }
  for (const auto& t : w) {
    if (t.w_new < s.c_borichev * t.w_borichev * (1.0 - 1e-12)) s.holds = false;
  }
  return s;
}

std::vector<StabilityRow> truncation_stability(const JacobiSpec& spec, double p, const std::vector<int>& schedule,
                                               double stable_dist, double filter) {
  if (!(p > 0.0)) throw DomainError("truncation_stability requires p > 0");
  for (std::size_t i = 1; i < schedule.size(); ++i) {
    if (schedule[i] <= schedule[i - 1]) throw ConfigError("truncation schedule must be increasing");
  }
  std::vector<StabilityRow> rows;
  std::vector<cplx> prev_stable;
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    const int n = schedule[i];
    const auto eig = truncation_eigenvalues(spec, n);
    const double f = filter < 0.0 ? default_filter_threshold(n - spec.support) : filter;

    StabilityRow row;
    row.trunc = n;
    row.lhs = lt_lhs(eig, p, f, &row.counted, &row.spurious);

    std::vector<cplx> stable;
    for (const cplx& l : eig) {
      if (segment_distance(l) >= stable_dist) stable.push_back(l);
    }
    if (i > 0) {
      if (stable.size() != prev_stable.size()) {
        row.drift = std::numeric_limits<double>::infinity();
      } else if (!stable.empty()) {
        const auto m = stable.size();
        Eigen::MatrixXd cost(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
        for (std::size_t r = 0; r < m; ++r) {
          for (std::size_t c = 0; c < m; ++c) {
            cost(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = std::abs(prev_stable[r] - stable[c]);
          }
        }
        const auto match = solve_assignment(cost);
        for (std::size_t r = 0; r < m; ++r) {
          row.drift = std::max(row.drift, cost(static_cast<Eigen::Index>(r), match.row_to_col[r]));
        }
      }
    }
    prev_stable = std::move(stable);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace spectra
