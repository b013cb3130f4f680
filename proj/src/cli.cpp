// SPDX-License-Identifier: Apache-2.0
#include "urequiv/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "urequiv/reconstruction.hpp"

namespace urequiv {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

const char* command_name(RunConfig::Command c) {
  switch (c) {
    case RunConfig::Command::check: return "check";
    case RunConfig::Command::region: return "region";
    case RunConfig::Command::minimize: return "minimize";
    case RunConfig::Command::convert: return "convert";
    case RunConfig::Command::reconstruct: return "reconstruct";
  }
  return "?";
}

void json_header(std::ostream& out, const RunConfig& config) {
  out << "{\"tool_version\":\"" << kToolVersion << "\",\"seed\":" << config.seed
      << ",\"command\":\"" << command_name(config.command) << "\"";
}

std::string resolved_format(const RunConfig& config) {
  if (!config.format.empty()) return config.format;
  return config.command == RunConfig::Command::region ? "csv" : "json";
}

void write_output(const RunConfig& config, const std::function<void(std::ostream&)>& writer) {
  if (config.output_path.empty()) {
    writer(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream file(config.output_path, std::ios::binary);
  if (!file) fail(ErrorCode::io_error, "cannot open " + config.output_path);
  writer(file);
  file.flush();
  if (!file) fail(ErrorCode::io_error, "write failed for " + config.output_path);
}

double max_abs_diff_sorted(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end(), std::greater<>());
  std::sort(b.begin(), b.end(), std::greater<>());
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

double prob_error(const ProbDist& got, const ProbDist& want) {
  std::vector<double> g, w;
  for (int i = 0; i < got.size(); ++i) {
    g.push_back(got[i]);
    w.push_back(want[i]);
  }
  if (got.size() == 2) return max_abs_diff_sorted(g, w);  // pairwise order is a convention at N=2
  double worst = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) worst = std::max(worst, std::abs(g[i] - w[i]));
  return worst;
}

int run_check(const RunConfig& config) {
  RelationRegistry reg = RelationRegistry::standard();
  if (config.alphas_set) {
    RelationRegistry wrapped;
    double a = config.alpha, b = config.beta, g = config.gamma;
    for (const std::string& id : reg.ids()) {
      RelationEntry e = reg.get(id);
      auto base = e.sample;
      e.sample = [base, a, b, g](std::uint64_t s) {
        RelationContext ctx = base(s);
        ctx.alphas = {a, b, g};
        return ctx;
      };
      wrapped.add(std::move(e));
    }
    reg = std::move(wrapped);
  }

  std::vector<std::string> ids = config.relations;
  if (ids.empty() || (ids.size() == 1 && ids.front() == "all")) {
    ids = reg.ids();
  } else {
    for (const std::string& id : ids)
      if (!reg.contains(id)) fail(ErrorCode::unknown_relation, id);
  }

  auto t0 = std::chrono::steady_clock::now();
  ScanSummary summary = scan_violations(reg, ids, config.n, config.seed);
  auto wall =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
  // Wall time goes to stderr only: report files must be byte-identical for
  // identical seeds.
  std::cerr << "check: " << ids.size() << " relations, n=" << config.n
            << ", wall_ms=" << wall.count() << "\n";

  write_output(config, [&](std::ostream& out) { emit_scan_report(summary, config, out); });
  for (const ScanEntry& e : summary.entries)
    if (e.violations > 0) return 1;
  return 0;
}

int run_region(const RunConfig& config) {
  double theta = config.theta_deg * kPi / 180.0;
  Observable a = pauli_observable({0.0, 0.0, 1.0});
  Observable b = pauli_observable({std::sin(theta), 0.0, std::cos(theta)});
  RegionSample region = map_region(a, b, config.n, config.seed, config.alpha);
  write_output(config, [&](std::ostream& out) { emit_region_report(region, config, out); });
  return region.violations > 0 ? 1 : 0;
}

int run_minimize(const RunConfig& config) {
  std::function<double(const StateVector&)> objective;
  std::string name;
  if (config.dim == 3) {
    Observable jx = spin_operator(2, {1.0, 0.0, 0.0});
    Observable jz = spin_operator(2, {0.0, 0.0, 1.0});
    objective = [jx, jz](const StateVector& psi) {
      return variance(psi, jx) + variance(psi, jz);
    };
    name = "V(Jx)+V(Jz)";
  } else if (config.dim == 2) {
    double theta = config.theta_deg * kPi / 180.0;
    Observable a = pauli_observable({0.0, 0.0, 1.0});
    Observable b = pauli_observable({std::sin(theta), 0.0, std::cos(theta)});
    objective = [a, b](const StateVector& psi) {
      return renyi_entropy(born_probabilities(psi, a), 1.0) +
             renyi_entropy(born_probabilities(psi, b), 1.0);
    };
    name = "H1(A)+H1(B)";
  } else {
    fail(ErrorCode::argument_out_of_range, "minimize supports --dim 2 or 3");
  }
  OptimizationResult result = minimize_over_pure(objective, config.dim,
                                                 static_cast<int>(config.n), config.seed);
  write_output(config,
               [&](std::ostream& out) { emit_minimize_report(result, name, config, out); });
  return 0;
}

int run_convert(const RunConfig& config) {
  double out_value;
  if (config.direction == "v2h")
    out_value = qubit_entropy_from_variance(config.value, config.alpha);
  else if (config.direction == "h2v")
    out_value = qubit_variance_from_entropy(config.value, config.alpha);
  else
    fail(ErrorCode::argument_out_of_range, "--direction must be v2h or h2v");
  write_output(config, [&](std::ostream& out) { out << format_double(out_value) << "\n"; });
  return 0;
}

int run_reconstruct(const RunConfig& config) {
  if (config.dim < 2 || config.dim > 8)
    fail(ErrorCode::argument_out_of_range, "reconstruct supports --dim 2..8");
  std::vector<ReconstructRow> rows;
  double worst = 0.0;
  for (long i = 0; i < config.n; ++i) {
    SplitMix64 rng(config.seed + static_cast<std::uint64_t>(i));
    DensityMatrix rho = random_mixed(config.dim, rng);
    ComplexMatrix h = random_hermitian(config.dim, rng);
    Observable obs(h);
    while (!obs.nondegenerate()) obs = Observable(random_hermitian(config.dim, rng));

    ProbDist born = born_probabilities(rho, obs);
    CommutativeSet cs = build_commutative_set(obs);
    std::vector<double> dvec = member_variances(cs, rho);
    ReconstructedDist thm = pair_products_to_probs(variances_to_pair_products(cs, dvec),
                                                   config.dim);
    ProbDist cov = probs_from_covariances(rho, obs);

    ReconstructRow row;
    row.index = i;
    row.err_theorem = prob_error(thm.probs, born);
    row.err_covariance = prob_error(cov, born);
    worst = std::max({worst, row.err_theorem, row.err_covariance});
    rows.push_back(row);
  }
  write_output(config, [&](std::ostream& out) { emit_reconstruct_report(rows, config, out); });
  return worst <= 1e-7 ? 0 : 1;
}

}  // namespace

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void emit_scan_report(const ScanSummary& summary, const RunConfig& config, std::ostream& out) {
  if (resolved_format(config) == "csv") {
    out << "id,n,worst_slack,violations\n";
    for (const ScanEntry& e : summary.entries)
      out << e.id << ',' << e.n << ',' << format_double(e.worst_slack) << ',' << e.violations
          << '\n';
    return;
  }
  json_header(out, config);
  out << ",\"relations\":[";
  for (std::size_t i = 0; i < summary.entries.size(); ++i) {
    const ScanEntry& e = summary.entries[i];
    if (i) out << ',';
    out << "{\"id\":\"" << json_escape(e.id) << "\",\"n\":" << e.n << ",\"worst_slack\":"
        << format_double(e.worst_slack) << ",\"violations\":" << e.violations << '}';
  }
  out << "]}\n";
}

void emit_region_report(const RegionSample& region, const RunConfig& config, std::ostream& out) {
  if (resolved_format(config) == "csv") {
    out << "h_a,h_b,purity\n";
    for (const RegionPoint& p : region.points)
      out << format_double(p.h_a) << ',' << format_double(p.h_b) << ','
          << format_double(p.purity) << '\n';
    return;
  }
  json_header(out, config);
  out << ",\"theta_deg\":" << format_double(region.theta_ab_deg)
      << ",\"alpha\":" << format_double(config.alpha)
      << ",\"violations\":" << region.violations << ",\"points\":[";
  for (std::size_t i = 0; i < region.points.size(); ++i) {
    const RegionPoint& p = region.points[i];
    if (i) out << ',';
    out << '[' << format_double(p.h_a) << ',' << format_double(p.h_b) << ','
        << format_double(p.purity) << ']';
  }
  out << "]}\n";
}

void emit_minimize_report(const OptimizationResult& result, const std::string& objective,
                          const RunConfig& config, std::ostream& out) {
  if (resolved_format(config) == "csv") {
    out << "best_value,restarts,evaluations,converged\n";
    out << format_double(result.best_value) << ',' << result.restarts << ','
        << result.evaluations << ',' << (result.converged ? 1 : 0) << '\n';
    return;
  }
  json_header(out, config);
  out << ",\"objective\":\"" << json_escape(objective) << "\",\"best_value\":"
      << format_double(result.best_value) << ",\"best_params\":[";
  for (std::size_t i = 0; i < result.best_params.size(); ++i) {
    if (i) out << ',';
    out << format_double(result.best_params[i]);
  }
  out << "],\"restarts\":" << result.restarts << ",\"evaluations\":" << result.evaluations
      << ",\"converged\":" << (result.converged ? "true" : "false") << "}\n";
}

void emit_reconstruct_report(const std::vector<ReconstructRow>& rows,
                             const RunConfig& config, std::ostream& out) {
  if (resolved_format(config) == "csv") {
    out << "index,err_theorem,err_covariance\n";
    for (const ReconstructRow& r : rows)
      out << r.index << ',' << format_double(r.err_theorem) << ','
          << format_double(r.err_covariance) << '\n';
    return;
  }
  json_header(out, config);
  out << ",\"dim\":" << config.dim << ",\"states\":[";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const ReconstructRow& r = rows[i];
    if (i) out << ',';
    out << "{\"index\":" << r.index << ",\"err_theorem\":" << format_double(r.err_theorem)
        << ",\"err_covariance\":" << format_double(r.err_covariance) << '}';
  }
  out << "]}\n";
}

int run(const RunConfig& config) {
  if (config.n < 0) fail(ErrorCode::argument_out_of_range, "--n must be >= 0");
  std::string fmt = resolved_format(config);
  if (fmt != "csv" && fmt != "json")
    fail(ErrorCode::argument_out_of_range, "--format must be csv or json");
  switch (config.command) {
    case RunConfig::Command::check: return run_check(config);
    case RunConfig::Command::region: return run_region(config);
    case RunConfig::Command::minimize: return run_minimize(config);
    case RunConfig::Command::convert: return run_convert(config);
    case RunConfig::Command::reconstruct: return run_reconstruct(config);
  }
  fail(ErrorCode::argument_out_of_range, "unknown command");
}

int main_with_args(int argc, const char* const* argv) {
  CLI::App app{"variance/entropy uncertainty-relation toolkit"};
  app.require_subcommand(1);

  RunConfig config;
  std::string relations_arg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", config.seed, "base seed for all sampling");
    sub->add_option("--out", config.output_path, "output file (default stdout)");
    sub->add_option("--format", config.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
  };

  CLI::App* check = app.add_subcommand("check", "sample states and tally relation violations");
  check->add_option("--relations", relations_arg,
                    "comma-separated relation ids, or 'all' (default)");
  check->add_option("--n", config.n, "states per relation")->check(CLI::NonNegativeNumber);
  auto* oa = check->add_option("--alpha", config.alpha, "force Renyi index alpha");
  auto* ob = check->add_option("--beta", config.beta, "force Renyi index beta");
  auto* og = check->add_option("--gamma", config.gamma, "force Renyi index gamma");
  add_common(check);

  CLI::App* region = app.add_subcommand("region", "map the allowed (H_A, H_B) region");
  region->add_option("--theta", config.theta_deg, "angle between axes, degrees");
  region->add_option("--n", config.n, "number of Haar samples")->check(CLI::NonNegativeNumber);
  region->add_option("--alpha", config.alpha, "Renyi index for recorded entropies");
  add_common(region);

  CLI::App* minimize = app.add_subcommand(
      "minimize", "minimize V(Jx)+V(Jz) (dim 3) or H(A)+H(B) (dim 2) over pure states");
  minimize->add_option("--dim", config.dim, "2 or 3");
  minimize->add_option("--theta", config.theta_deg, "axis angle for dim 2, degrees");
  minimize->add_option("--n", config.n, "restart count")->check(CLI::PositiveNumber);
  add_common(minimize);

  CLI::App* convert = app.add_subcommand("convert", "convert variance <-> entropy for a qubit");
  convert->add_option("--direction", config.direction, "v2h or h2v")
      ->required()
      ->check(CLI::IsMember({"v2h", "h2v"}));
  convert->add_option("--alpha", config.alpha, "Renyi index");
  convert->add_option("--value", config.value, "input value")->required();
  add_common(convert);

  CLI::App* reconstruct = app.add_subcommand(
      "reconstruct", "rebuild Born distributions from variances and covariances");
  reconstruct->add_option("--dim", config.dim, "Hilbert space dimension (2..8)");
  reconstruct->add_option("--n", config.n, "number of random states")
      ->check(CLI::NonNegativeNumber);
  add_common(reconstruct);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (check->parsed()) {
    config.command = RunConfig::Command::check;
    config.alphas_set = oa->count() > 0 || ob->count() > 0 || og->count() > 0;
    if (!relations_arg.empty()) {
      std::size_t pos = 0;
      while (pos <= relations_arg.size()) {
        std::size_t comma = relations_arg.find(',', pos);
        if (comma == std::string::npos) comma = relations_arg.size();
        if (comma > pos) config.relations.push_back(relations_arg.substr(pos, comma - pos));
        pos = comma + 1;
      }
    }
  } else if (region->parsed()) {
    config.command = RunConfig::Command::region;
  } else if (minimize->parsed()) {
    config.command = RunConfig::Command::minimize;
    if (minimize->count("--n") == 0) config.n = 64;
    if (minimize->count("--seed") == 0) config.seed = 7;
  } else if (convert->parsed()) {
    config.command = RunConfig::Command::convert;
  } else {
    config.command = RunConfig::Command::reconstruct;
    if (reconstruct->count("--n") == 0) config.n = 100;
  }

  try {
    return run(config);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace urequiv
