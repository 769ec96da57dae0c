#include "spectra/ensemble.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include <Eigen/QR>

#include "spectra/error.hpp"
#include "spectra/gallery.hpp"
#include "spectra/random.hpp"

namespace spectra {

namespace {

constexpr std::array<std::pair<EnsembleKind, std::string_view>, 5> kKinds{{
    {EnsembleKind::Ginibre, "ginibre"},
    {EnsembleKind::Gue, "gue"},
    {EnsembleKind::HermitianPair, "hermitian_pair"},
    {EnsembleKind::NormalPair, "normal_pair"},
    {EnsembleKind::LowRankPerturbation, "low_rank_perturbation"},
}};

constexpr std::array<std::pair<Checker, std::string_view>, 9> kCheckers{{
    {Checker::Thm2, "thm2"},
    {Checker::Cor1, "cor1"},
    {Checker::Thm3, "thm3"},
    {Checker::Lemma45, "lemma45"},
    {Checker::Kato, "kato"},
    {Checker::Bouldin, "bouldin"},
    {Checker::SpVariational, "sp_variational"},
    {Checker::Thm4, "thm4"},
    {Checker::Heat, "heat"},
}};

constexpr int kMaxPerturbationRank = 4;
constexpr double kMaxPerturbationSigma = 3.0;
constexpr int kVariationalFrames = 16;

bool hermitian_kind(EnsembleKind k) { return k == EnsembleKind::Gue || k == EnsembleKind::HermitianPair; }

EnsembleKind effective_kind(const EnsembleSpec& spec) {
  return spec.family == Family::Prop2 ? EnsembleKind::HermitianPair : spec.kind;
}

int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

template <std::size_t N>
double pick(Rng& rng, const std::array<double, N>& values) {
  return values[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(N) - 1))];
}

std::pair<CMatrix, CMatrix> base_pair(const EnsembleSpec& spec, Rng& rng, double* param) {
  const int n = spec.dim;
  if (spec.family == Family::Prop2) {
    std::vector<double> alpha(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) alpha[static_cast<std::size_t>(k)] = k;
    const double x = std::pow(10.0, -std::uniform_real_distribution<double>(3.0, 6.0)(rng));
    *param = x;
    return prop2_pair(alpha, x);
  }
  switch (spec.kind) {
    case EnsembleKind::Ginibre: {
      CMatrix a = ginibre(rng, n);
      return {a, ginibre(rng, n)};
    }
    case EnsembleKind::Gue: {
      CMatrix a = gue(rng, n);
      return {a, gue(rng, n)};
    }
    case EnsembleKind::LowRankPerturbation: {
      CMatrix a = ginibre(rng, n);
      const int rank = uniform_int(rng, 1, kMaxPerturbationRank);
      return {a, a + random_low_rank(rng, n, rank, kMaxPerturbationSigma)};
    }
    case EnsembleKind::HermitianPair: {
      CMatrix a = gue(rng, n);
      const int rank = uniform_int(rng, 1, kMaxPerturbationRank);
      return {a, a + random_hermitian_low_rank(rng, n, rank, kMaxPerturbationSigma)};
    }
    case EnsembleKind::NormalPair: {
      // A = U diag(z) U*, B = V diag(z + 0.3 w) V* with V = U·Q, Q unitary near I.
      const CMatrix u = haar_unitary(rng, n);
      CVector z(n), w(n);
      for (int i = 0; i < n; ++i) z(i) = complex_normal(rng);
      for (int i = 0; i < n; ++i) w(i) = complex_normal(rng);
      const CMatrix near_id = CMatrix::Identity(n, n) + 0.1 * ginibre(rng, n);
      Eigen::HouseholderQR<CMatrix> qr(near_id);
      const CMatrix v = u * CMatrix(qr.householderQ());
      const CMatrix a = u * z.asDiagonal() * u.adjoint();
      const CVector zb = z + 0.3 * w;
      return {a, v * zb.asDiagonal() * v.adjoint()};
    }
  }
  throw ConfigError("unknown ensemble kind");
}

}  // namespace

std::string_view to_string(EnsembleKind k) {
  for (const auto& [v, s] : kKinds) {
    if (v == k) return s;
  }
  return "?";
}

std::string_view to_string(Family f) { return f == Family::Prop2 ? "prop2" : "random"; }

std::string_view to_string(Checker c) {
  for (const auto& [v, s] : kCheckers) {
    if (v == c) return s;
  }
  return "?";
}

EnsembleKind parse_kind(std::string_view s) {
  for (const auto& [v, name] : kKinds) {
    if (name == s) return v;
  }
  throw ConfigError("unknown ensemble kind '" + std::string(s) + "'");
}

Family parse_family(std::string_view s) {
  if (s == "random") return Family::Random;
  if (s == "prop2") return Family::Prop2;
  throw ConfigError("unknown family '" + std::string(s) + "'");
}

Checker parse_checker(std::string_view s) {
  for (const auto& [v, name] : kCheckers) {
    if (name == s) return v;
  }
  throw ConfigError("unknown checker '" + std::string(s) + "'");
}

EnsembleKind default_kind(Checker c) {
  switch (c) {
    case Checker::Thm2:
    case Checker::SpVariational:
      return EnsembleKind::LowRankPerturbation;
    case Checker::Bouldin:
      return EnsembleKind::NormalPair;
    default:
      return EnsembleKind::HermitianPair;
  }
}

void validate(const EnsembleSpec& spec, Checker checker) {
  if (spec.trials < 1) throw ConfigError("trials must be >= 1");
  if (spec.dim < 2) throw ConfigError("dim must be >= 2");
  if (!std::isfinite(spec.p) || !(spec.p > 0.0)) throw ConfigError("p must be positive");
  const EnsembleKind k = effective_kind(spec);
  bool ok = true;
  switch (checker) {
    case Checker::Thm2:
    case Checker::SpVariational:
      break;
    case Checker::Bouldin:
      ok = k == EnsembleKind::NormalPair || hermitian_kind(k);
      break;
    default:
      ok = hermitian_kind(k);
  }
  if (!ok) {
    throw ConfigError("checker '" + std::string(to_string(checker)) + "' does not accept ensemble kind '" +
                      std::string(to_string(k)) + "'");
  }
}

EnsembleInstance make_instance(const EnsembleSpec& spec, Checker checker, std::uint64_t trial) {
  Rng rng = derive_rng(spec.seed, trial);
  EnsembleInstance inst;
  auto [a, b] = base_pair(spec, rng, &inst.param);
  const int n = spec.dim;
  if (checker == Checker::Thm4 || checker == Checker::Heat) {
    const double shift = hermitian_eigenvalues(a).minCoeff();
    const CMatrix h0 = a - shift * CMatrix::Identity(n, n);
    if (checker == Checker::Thm4) {
      const int rank = uniform_int(rng, 1, 2);
      inst.b = h0 + cplx(0.0, 1.0) * random_hermitian_low_rank(rng, n, rank, kMaxPerturbationSigma, true);
      inst.param = pick(rng, std::array<double, 3>{0.5, 1.0, 2.0});
    } else {
      inst.b = h0 + (b - a);
      inst.param = pick(rng, std::array<double, 3>{0.5, 1.0, 2.0});
    }
    inst.a = h0;
    return inst;
  }
  inst.a = std::move(a);
  inst.b = std::move(b);
  return inst;
}

std::vector<IneqReport> evaluate(const EnsembleSpec& spec, Checker checker, const EnsembleInstance& inst,
                                 std::uint64_t trial) {
  const auto& opt = spec.options;
  switch (checker) {
    case Checker::Thm2:
      return {check_thm2(inst.a, inst.b, spec.p, opt)};
    case Checker::Cor1:
      return {check_cor1(inst.a, inst.b, spec.p, opt)};
    case Checker::Thm3:
      return {check_thm3(inst.a, inst.b, spec.p, opt)};
    case Checker::Lemma45:
      return check_lemma45(inst.a, inst.b, opt);
    case Checker::Kato:
      return {check_kato_matching(inst.a, inst.b, spec.p, opt)};
    case Checker::Bouldin:
      return {check_bouldin(inst.a, inst.b, spec.p, opt)};
    case Checker::SpVariational: {
      const std::uint64_t frame_seed = spec.seed * 0x9E3779B97F4A7C15ull + trial;
      return {check_sp_variational(inst.b - inst.a, spec.p, kVariationalFrames, frame_seed, opt)};
    }
    case Checker::Thm4:
      return {check_thm4_matrix(inst.a, inst.b, inst.param, spec.p, opt)};
    case Checker::Heat: {
      auto [r7, r8] = check_heat(inst.a, inst.b, inst.param, spec.p, opt);
      return {r7, r8};
    }
  }
  throw ConfigError("unknown checker");
}

EnsembleSummary run_ensemble(const EnsembleSpec& spec, Checker checker) {
  validate(spec, checker);
  EnsembleSummary s;
  s.spec = spec;
  s.checker = checker;
  s.trials = spec.trials;
  for (int t = 0; t < spec.trials; ++t) {
    const auto trial = static_cast<std::uint64_t>(t);
    const auto inst = make_instance(spec, checker, trial);
    const auto reports = evaluate(spec, checker, inst, trial);
    bool failed = false;
    bool expected = false;
    double ratio = 0.0;
    for (const auto& r : reports) {
      failed = failed || r.verdict == Verdict::Fail;
      expected = expected || r.verdict == Verdict::ViolationExpected;
      ratio = std::max(ratio, r.ratio);
    }
    if (failed) {
      ++s.fails;
      if (!s.worst_fail || ratio > s.worst_fail->ratio) {
        s.worst_fail = FailInstance{std::string(to_string(checker)), spec.seed, trial, spec.dim, spec.p,
                                    inst.param, ratio, inst.a, inst.b};
      }
    } else if (expected) {
      ++s.expected_violations;
    } else {
      ++s.passes;
    }
    if (t == 0 || ratio > s.worst_ratio) {
      s.worst_ratio = ratio;
      s.worst_trial = trial;
    }
  }
  return s;
}

}  // namespace spectra
