#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qrf/json_io.hpp"
#include "qrf/suite.hpp"

namespace {

void emit(const qrf::Json& doc, const std::string& out_path) {
  if (out_path.empty())
    std::cout << doc.dump(2) << "\n";
  else
    qrf::write_json_file(out_path, doc);
}

void log_report(const qrf::SuiteReport& report, double elapsed_s) {
  for (const qrf::CheckVerdict& v : report.checks)
    std::fprintf(stderr, "[%s] %-24s max_deviation=%.3e%s%s\n",
                 v.pass ? "pass" : "FAIL", v.id.c_str(), v.max_deviation,
                 v.details.empty() ? "" : "  ", v.details.c_str());
  std::fprintf(stderr, "%s in %.2fs (%zu checks, group %s)\n",
               report.overall_pass ? "all checks passed" : "CHECKS FAILED", elapsed_s,
               report.checks.size(), report.group_name.c_str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum reference frames on finite homogeneous spaces"};
  app.require_subcommand(1);

  if (const char* cap = std::getenv("QRF_DIM_CAP")) {
    try {
      qrf::set_dimension_cap(std::stoi(cap));
    } catch (const std::exception&) {
      std::cerr << "error: QRF_DIM_CAP must be a positive integer\n";
      return 2;
    }
  }

  std::string group_file, out_path;
  auto* cmd_group = app.add_subcommand("group", "group-table tools");
  auto* cmd_build = cmd_group->add_subcommand("build", "close a generator file");
  cmd_build->add_option("file", group_file, "group spec JSON")->required();
  cmd_build->add_option("--out", out_path, "write the result here");

  qrf::SuiteConfig config;
  std::string rep_kind;
  int factor_dim = 2;
  std::string verify_out;
  auto* cmd_verify = app.add_subcommand("verify", "run the verification suite");
  cmd_verify->add_option("--group", config.group_spec, "builtin name or spec file")
      ->required();
  cmd_verify->add_option("--base", config.base_point, "base point (default 0)");
  cmd_verify->add_option("--checks", config.checks, "subset of check ids")
      ->delimiter(',');
  cmd_verify->add_option("--seed", config.seed, "PRNG seed");
  cmd_verify->add_option("--tol", config.tolerance, "tolerance (default 1e-9)");
  cmd_verify->add_option("--samples", config.samples, "samples per check");
  cmd_verify->add_option("--rep", rep_kind,
                         "system representation kind "
                         "(permutation|regular|tensor_factor)");
  cmd_verify->add_option("--factor-dim", factor_dim, "tensor factor dimension");
  cmd_verify->add_option("--out", verify_out, "report file (default stdout)");

  std::string dist_group, dist_state, dist_out;
  int dist_base = 0;
  auto* cmd_dist = app.add_subcommand("distribution", "Born distributions");
  cmd_dist->add_option("--group", dist_group, "builtin name or spec file")->required();
  cmd_dist->add_option("--base", dist_base, "base point (default 0)");
  cmd_dist
      ->add_option("--state", dist_state,
                   "localized:<x> | invariant-pure | maximally-mixed | file")
      ->required();
  cmd_dist->add_option("--out", dist_out, "report file (default stdout)");

  int sn_n = 3, sn_dim = 2, sn_samples = 16;
  std::uint64_t sn_seed = 0;
  std::string sn_out;
  auto* cmd_sn = app.add_subcommand("example-sn", "symmetric-group tensor example");
  cmd_sn->add_option("--n", sn_n, "number of symbols (default 3)");
  cmd_sn->add_option("--dim", sn_dim, "tensor factor dimension (default 2)");
  cmd_sn->add_option("--samples", sn_samples, "samples per check");
  cmd_sn->add_option("--seed", sn_seed, "PRNG seed");
  cmd_sn->add_option("--out", sn_out, "report file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const auto start = std::chrono::steady_clock::now();
    auto elapsed = [&] {
      return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
    };

    if (cmd_build->parsed()) {
      qrf::GroupSpecFile spec =
          qrf::parse_group_spec(qrf::load_json_file(group_file));
      qrf::BuiltGroup built = qrf::build_group_from_generators(spec.generators);
      emit(qrf::group_to_json(built, spec.symbols), out_path);
      std::fprintf(stderr, "closed to order %d in %.2fs\n", built.group->order(),
                   elapsed());
      return 0;
    }
    if (cmd_verify->parsed()) {
      if (!rep_kind.empty()) {
        config.system_rep_spec.kind = rep_kind;
        config.system_rep_spec.factor_dim = factor_dim;
      }
      qrf::SuiteReport report = qrf::run_suite(config);
      emit(report.to_json(), verify_out);
      log_report(report, elapsed());
      return report.overall_pass ? 0 : 1;
    }
    if (cmd_dist->parsed()) {
      emit(qrf::distribution_report(dist_group, dist_base, dist_state), dist_out);
      return 0;
    }
    if (cmd_sn->parsed()) {
      qrf::SuiteReport report = qrf::example_sn(sn_n, sn_dim, sn_samples, sn_seed);
      emit(report.to_json(), sn_out);
      log_report(report, elapsed());
      return report.overall_pass ? 0 : 1;
    }
  } catch (const qrf::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
