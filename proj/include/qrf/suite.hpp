#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qrf/json_io.hpp"
#include "qrf/observable.hpp"
#include "qrf/relativisation.hpp"

namespace qrf {

/// How to build the system representation U_S. An empty kind selects the
/// per-group default (a faithful 2-dimensional representation for z4,
/// tensor factors for the builtin permutation groups, the permutation
/// representation for groups loaded from files).
struct RepSpec {
  std::string kind;  // "permutation" | "regular" | "tensor_factor" | "explicit"
  int factor_dim = 2;
  std::vector<Operator> generator_matrices;
};

struct SuiteConfig {
  std::string group_spec;  // builtin name (z4, s3, s4, d4) or file path
  int base_point = 0;
  RepSpec system_rep_spec;
  std::vector<std::string> checks;  // empty = every registered check
  double tolerance = kDefaultTolerance;
  int samples = 16;
  std::uint64_t seed = 0;
};

struct CheckVerdict {
  std::string id;
  std::string anchor;
  int samples = 0;
  double max_deviation = 0.0;
  bool pass = false;
  std::string details;  // optional; omitted from JSON when empty
};

struct SuiteReport {
  std::string group_name;
  int base_point = 0;
  std::string rep_kind;
  std::uint64_t seed = 0;
  double tolerance = kDefaultTolerance;
  int samples = 0;
  std::vector<std::string> requested_checks;
  std::string config_hash;
  std::vector<CheckVerdict> checks;
  bool overall_pass = false;

  Json to_json() const;  // schema "qrf-report/1"
};

/// Check identifiers in canonical report order.
const std::vector<std::string>& check_registry();

bool is_builtin_group(const std::string& name);

/// Builtin name or JSON file path -> closed group with its defining action.
BuiltGroup load_group(const std::string& group_spec);

RepSpec default_rep_spec(const std::string& group_spec);

UnitaryRep build_system_rep(const RepSpec& spec, const BuiltGroup& built);

/// Runs the requested checks against one group/base/representation choice.
/// Deterministic for a fixed config; every check draws from its own stream
/// seeded by (config seed, check id).
SuiteReport run_suite(const SuiteConfig& config);

/// The symmetric-group showcase: S_n permuting n tensor factors of C^d,
/// frame on the n symbols, base point n-1.
SuiteReport example_sn(int n, int factor_dim, int samples = 16,
                       std::uint64_t seed = 0, double tol = kDefaultTolerance);

/// Born distributions of one state over the point space and over the
/// pulled-back group outcomes, as a "qrf-distribution/1" document.
/// State specs: localized:<x> | invariant-pure | maximally-mixed | file path.
Json distribution_report(const std::string& group_spec, int base_point,
                         const std::string& state_spec);

}  // namespace qrf
