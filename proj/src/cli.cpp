#include "grassmann/cli.hpp"

#include <ostream>

#include <CLI11.hpp>

#include "grassmann/verification.hpp"

namespace grassmann::cli {

namespace {

constexpr int kMaxCliRank = 8;
constexpr int kRecommendedRank = 5;

struct CommandName {
  std::string_view text;
  Command command;
};

constexpr CommandName kCommands[] = {
    {"eigenpairs", Command::Eigenpairs},     {"check-ch", Command::CheckCh},
    {"check-quasi-inverse", Command::CheckQuasiInverse}, {"check-prech", Command::CheckPrech},
    {"check-leibniz", Command::CheckLeibniz}, {"demo", Command::Demo},
};

std::string pairs_to_string(const std::vector<PairScalar>& pairs) {
  std::string out = "[";
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i) out += ", ";
    out += pairs[i].to_string();
  }
  return out + "]";
}

std::string scalars_to_string(const std::vector<Scalar>& scalars) {
  std::string out = "[";
  for (std::size_t i = 0; i < scalars.size(); ++i) {
    if (i) out += ", ";
    out += scalars[i].to_string();
  }
  return out + "]";
}

// "b3" or "(b0 + b1)".
std::string factor_string(const MultiVector& x) {
  const std::string s = x.to_string();
  return x.terms().size() > 1 ? "(" + s + ")" : s;
}

TrialResult eigenpairs_report(const Endomorphism& f, int trunc, std::uint64_t seed, Json instance) {
  const EigenData data = eigen_data(f);
  const PrechehResult pre = check_precheh(data);
  MultiVector residual(f.rank(), f.kind());
  residual.add_term(Word::top(f.rank()), pre.sum);
  instance["endomorphism"] = endomorphism_to_json(f);

  std::string summary = "e = " + pairs_to_string(data.e) + "\nh = " + pairs_to_string(data.h);
  Json report = {{"theorem", "eigenpairs"}, {"instance", std::move(instance)}, {"holds", pre.holds},
                 {"residual", multivector_to_json(residual)}, {"trunc", trunc}, {"seed", seed}};
  report["eigen"] = eigen_data_to_json(data);
  if (ScalarDomain(f.kind()).has_negation()) {
    const std::vector<Scalar> net = net_eigen_coefficients(data);
    summary += "\ne - e' = " + scalars_to_string(net) + "  (coefficients of det(lambda I - f), highest power first)";
    Json j = Json::array();
    for (const Scalar& s : net) j.push_back(scalar_to_json(s));
    report["net"] = std::move(j);
  }
  summary += "\nsum e_i h_{n-i} = " + pre.sum.to_string() + (pre.holds ? " (quasi-zero)" : " (NOT a quasi-zero)");
  return {pre.holds, std::move(summary), std::move(report)};
}

TrialResult demo_report(const Endomorphism& f, bool is_shift, int trunc, std::uint64_t seed, std::ostream& out,
                        bool json) {
  const int n = f.rank();
  const DomainKind kind = f.kind();
  HasseSchmidt d(f);
  const MultiVector b1 = MultiVector::basis_vector(n, kind, 1);
  const MultiVector b2 = MultiVector::basis_vector(n, kind, 2);
  const MultiVector u = wedge(b1, b2);
  const MultiVector d2 = d.coefficient(2, u);

  bool holds = true;
  std::string verdict;
  if (n >= 5) {
    const MultiVector b1b4 = wedge(b1, MultiVector::basis_vector(n, kind, 4));
    holds = mv_surpasses(b1b4, d2);
    verdict = "D_2(b1^b2) surpasses b1^b4: " + std::string(holds ? "yes" : "no");
  }

  if (!json) {
    out << (is_shift ? "f(b_i) = b_{i+1}" : "f = given matrix") << " on V_" << n << " over " << domain_name(kind)
        << "\n";
    out << "D_2(b1^b2) = f^2(b1)^b2 + f(b1)^f(b2) + b1^f^2(b2)\n";
    std::string raw;
    const auto terms = compositions(2, 2);
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
      const MultiVector& left = d.power_image((*it)[0], 1);
      const MultiVector& right = d.power_image((*it)[1], 2);
      if (left.is_zero() || right.is_zero()) continue;
      if (!raw.empty()) raw += " + ";
      raw += factor_string(left) + "^" + factor_string(right);
    }
    out << "           = " << (raw.empty() ? "0" : raw) << "\n";
    out << "           = " << d2.to_string() << "\n";
    if (!verdict.empty()) out << verdict << "\n";
  }
  Json instance = {{"endomorphism", endomorphism_to_json(f)}, {"u", multivector_to_json(u)}, {"order", 2}};
  Json report = {{"theorem", "demo"}, {"instance", std::move(instance)}, {"holds", holds},
                 {"residual", multivector_to_json(d2)}, {"trunc", trunc}, {"seed", seed}};
  return {holds, verdict, std::move(report)};
}

}  // namespace

int emit(const std::vector<TrialResult>& results, bool json, std::ostream& out) {
  std::size_t held = 0;
  for (const TrialResult& r : results) {
    if (r.holds) ++held;
    if (json) {
      out << r.report.dump() << "\n";
    } else {
      out << r.summary << "\n";
      if (!r.holds) out << "  falsifying instance: " << r.report.dump() << "\n";
    }
  }
  if (!json) out << held << " of " << results.size() << " instances hold\n";
  return held == results.size() ? kExitHolds : kExitViolation;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    std::optional<Endomorphism> f;
    if (config.matrix) f = parse_matrix(*config.matrix, ScalarDomain(config.domain), config.n.value_or(0));
    const int n = f ? f->rank() : config.n.value_or(config.command == Command::Demo ? 5 : 3);
    if (n < 2 || n > kMaxCliRank) {
      err << "error: n must be in [2, " << kMaxCliRank << "], got " << n << "\n";
      return kExitUsage;
    }
    if (n > kRecommendedRank) err << "warning: n = " << n << " above " << kRecommendedRank << " may be slow\n";
    const int trunc = config.trunc.value_or(2 * n);
    if (trunc < n) {
      err << "error: --trunc must be >= n (" << n << "), got " << trunc << "\n";
      return kExitUsage;
    }
    if (config.trials < 1) {
      err << "error: --trials must be >= 1\n";
      return kExitUsage;
    }
    const auto count = static_cast<std::size_t>(config.trials);

    switch (config.command) {
      case Command::Demo: {
        const bool is_shift = !f;
        const Endomorphism g = f ? *f : Endomorphism::shift(n, config.domain);
        if (n < 3) {
          err << "error: demo needs n >= 3\n";
          return kExitUsage;
        }
        const TrialResult demo = demo_report(g, is_shift, trunc, config.seed, out, config.json);
        const TrialResult ch = verify_cayley_hamilton(g, trunc, config.seed);
        if (config.json) {
          out << demo.report.dump() << "\n" << ch.report.dump() << "\n";
        } else {
          out << eigenpairs_report(g, trunc, config.seed, Json::object()).summary << "\n" << ch.summary << "\n";
        }
        return demo.holds && ch.holds ? kExitHolds : kExitViolation;
      }
      case Command::Eigenpairs: {
        std::vector<TrialResult> results;
        if (f) {
          results.push_back(eigenpairs_report(*f, trunc, config.seed, Json::object()));
        } else {
          results = run_trials(
              count, config.seed,
              [&](std::size_t i, std::uint64_t s) {
                InstanceGenerator gen(config.domain, s);
                return eigenpairs_report(gen.endomorphism(n), trunc, config.seed, {{"trial", i}, {"trial_seed", s}});
              },
              config.execution);
        }
        if (config.json) return emit(results, true, out);
        bool all = true;
        for (const TrialResult& r : results) {
          if (results.size() > 1) out << "trial " << r.report["instance"]["trial"].dump() << ":\n";
          out << r.summary << "\n";
          all = all && r.holds;
        }
        return all ? kExitHolds : kExitViolation;
      }
      default: break;
    }

    Theorem theorem = Theorem::CayleyHamilton;
    switch (config.command) {
      case Command::CheckCh: theorem = Theorem::CayleyHamilton; break;
      case Command::CheckQuasiInverse: theorem = Theorem::QuasiInverse; break;
      case Command::CheckPrech: theorem = Theorem::Prech; break;
      case Command::CheckLeibniz: theorem = Theorem::Leibniz; break;
      default: break;
    }
    if (theorem == Theorem::Prech && n < 3) {
      err << "error: check-prech needs n >= 3\n";
      return kExitUsage;
    }
    const std::vector<TrialResult> results =
        f ? fixed_matrix_suite(theorem, *f, trunc, config.seed)
          : run_trials(
                count, config.seed,
                [&](std::size_t i, std::uint64_t s) { return random_trial(theorem, config.domain, n, trunc, config.seed, i, s); },
                config.execution);
    return emit(results, config.json, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const AlgebraError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Grassmann semialgebras: Hasse-Schmidt derivations, quasi-inverses and Cayley-Hamilton checks"};
  std::string command;
  std::string semiring = "int";
  std::string matrix;
  int n = 0;
  int trunc = 0;
  std::uint64_t seed = 1;
  int trials = 100;
  bool json = false;
  bool serial = false;

  std::vector<std::string> names;
  for (const auto& c : kCommands) names.emplace_back(c.text);
  app.add_option("command", command, "eigenpairs | check-ch | check-quasi-inverse | check-prech | check-leibniz | demo")
      ->required()
      ->check(CLI::IsMember(names));
  app.add_option("--semiring", semiring, "int | rat | nat | bool | maxplus")->capture_default_str();
  auto* matrix_opt = app.add_option("--matrix", matrix, "matrix file (JSON or CSV) or inline JSON");
  auto* n_opt = app.add_option("--n", n, "rank of V (2..8)");
  auto* trunc_opt = app.add_option("--trunc", trunc, "truncation order of z-series (default 2n)");
  app.add_option("--seed", seed, "run seed")->envname("GRASSMANN_SEED")->capture_default_str();
  app.add_option("--trials", trials, "random instances per run")->capture_default_str();
  app.add_flag("--json", json, "one JSON report per line");
  app.add_flag("--serial", serial, "run trials on the calling thread only");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitHolds : kExitUsage;
  }

  RunConfig config;
  for (const auto& c : kCommands) {
    if (c.text == command) config.command = c.command;
  }
  try {
    config.domain = ScalarDomain::from_name(semiring).kind();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (*matrix_opt) config.matrix = matrix;
  if (*n_opt) config.n = n;
  if (*trunc_opt) config.trunc = trunc;
  config.seed = seed;
  config.trials = trials;
  config.json = json;
  config.execution = serial ? Execution::Serial : Execution::Parallel;
  return run(config, out, err);
}

}  // namespace grassmann::cli
