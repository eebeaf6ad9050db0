#include "qrf/suite.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <utility>

#include "qrf/random.hpp"

namespace qrf {
namespace {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string hash_hex(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// every check draws from its own stream so that subsetting checks does not
// shift the numbers of the others
std::uint64_t derive_seed(std::uint64_t seed, std::string_view id) {
  std::uint64_t h = fnv1a(id);
  h ^= seed + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

struct BuiltinDef {
  const char* name;
  int symbols;
  std::vector<Perm> gens;
};

const std::vector<BuiltinDef>& builtins() {
  static const std::vector<BuiltinDef> defs = {
      {"z4", 4, {{1, 2, 3, 0}}},
      {"s3", 3, {{1, 0, 2}, {1, 2, 0}}},
      {"s4", 4, {{1, 0, 2, 3}, {1, 2, 3, 0}}},
      {"d4", 4, {{1, 2, 3, 0}, {0, 3, 2, 1}}},
  };
  return defs;
}

DensityState point_state(int n, int x) {
  Vector e = Vector::Zero(n);
  e(x) = 1.0;
  return DensityState::pure(e);
}

DensityState uniform_pure_state(int n) {
  return DensityState::pure(Vector::Constant(n, 1.0 / std::sqrt(double(n))));
}

std::string join(const std::vector<std::string>& parts, char sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

CheckVerdict check_group_laws(const BuiltGroup& built, int base,
                              std::uint64_t seed) {
  const GroupPtr& g = built.group;
  const int n = g->order();
  long violations = 0;
  int sampled = 0;
  auto assoc = [&](int a, int b, int c) {
    return g->mul(g->mul(a, b), c) == g->mul(a, g->mul(b, c));
  };
  if (n <= 64) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (!assoc(a, b, c)) ++violations;
  } else {
    Prng prng(derive_seed(seed, "group-laws"));
    sampled = 20000;
    for (int trial = 0; trial < sampled; ++trial)
      if (!assoc(prng.uniform_int(n), prng.uniform_int(n), prng.uniform_int(n)))
        ++violations;
  }
  for (int a = 0; a < n; ++a)
    if (g->mul(a, g->inv(a)) != 0 || g->mul(g->inv(a), a) != 0) ++violations;

  const GroupAction& action = built.defining_action;
  Subgroup h = stabiliser(action, base);
  if (n % h.order() != 0) ++violations;
  if (static_cast<int>(orbit(action, base).size()) * h.order() != n) ++violations;
  CosetDecomposition cosets = left_cosets(g, h);
  std::vector<int> coset_size(cosets.count(), 0);
  for (int a = 0; a < n; ++a) {
    int c = cosets.coset_of(a);
    ++coset_size[c];
    if (a < cosets.representatives()[c]) ++violations;  // rep must be the lowest
  }
  for (int c = 0; c < cosets.count(); ++c)
    if (coset_size[c] != h.order()) ++violations;

  CheckVerdict v;
  v.id = "group-laws";
  v.anchor = "(gh)k = g(hk), g g⁻¹ = e, |orbit(x)|·|G_x| = |G|";
  v.samples = sampled;
  v.max_deviation = static_cast<double>(violations);
  v.pass = violations == 0;
  return v;
}

CheckVerdict check_covariance(const CovariantFrame& frame,
                              const CovariantFrame& pulled, double tol) {
  double dev = 0.0;
  for (const CovariantFrame* f : {&frame, &pulled}) {
    const Observable& obs = f->observable();
    const int order = f->rep().group()->order();
    for (int g = 0; g < order; ++g)
      for (int x = 0; x < obs.n_outcomes(); ++x) {
        Operator lhs = f->rep().op(g) * obs.effect(x) * f->rep().op(g).adjoint();
        dev = std::max(dev, operator_norm(
                                lhs - obs.effect(f->outcome_action().apply(g, x))));
      }
  }
  CheckVerdict v;
  v.id = "covariance";
  v.anchor = "U_R(g) E(x) U_R(g)* = E(g·x)";
  v.samples = 0;
  v.max_deviation = dev;
  v.pass = dev <= tol;
  return v;
}

CheckVerdict check_invariant_dimension(const CovariantFrame& frame, double tol) {
  const int n = frame.rep().dim();
  InvariantSubspaceReport inv = invariant_vectors(frame.rep());
  double dev = std::abs(inv.fixed_dim - 1);
  if (inv.fixed_dim == 1) {
    Operator p_one = Operator::Constant(n, n, 1.0 / double(n));
    dev = std::max(dev, max_abs_diff(inv.projector, p_one));
  }
  CheckVerdict v;
  v.id = "invariant-dimension";
  v.anchor = "L²(X)^G = ℂ·𝟙";
  v.samples = 0;
  v.max_deviation = dev;
  v.pass = dev <= tol;
  v.details = "fixed_dim=" + std::to_string(inv.fixed_dim);
  return v;
}

CheckVerdict check_uniform_distribution(const CovariantFrame& frame, double tol) {
  const int n = frame.observable().n_outcomes();
  std::vector<double> from_pure = born_distribution(frame, uniform_pure_state(n));
  std::vector<double> from_mixed =
      born_distribution(frame, DensityState::maximally_mixed(n));
  double dev = 0.0;
  for (int x = 0; x < n; ++x) {
    dev = std::max(dev, std::abs(from_pure[x] - 1.0 / double(n)));
    dev = std::max(dev, std::abs(from_mixed[x] - 1.0 / double(n)));
    dev = std::max(dev, std::abs(from_pure[x] - from_mixed[x]));
  }
  CheckVerdict v;
  v.id = "uniform-distribution";
  v.anchor = "p^P_{P_𝟙} = p^P_{(1/n)𝟙} = 1/n";
  v.samples = 0;
  v.max_deviation = dev;
  v.pass = dev <= tol;
  return v;
}

CheckVerdict check_norm1_equivalence(const CovariantFrame& frame,
                                     const CovariantFrame& pulled, double tol) {
  int inspected = 0;
  long disagreements = 0;
  double residual = 0.0;
  for (const CovariantFrame* f : {&frame, &pulled}) {
    const Observable& obs = f->observable();
    for (int x = 0; x < obs.n_outcomes(); ++x) {
      const double norm = operator_norm(obs.effect(x));
      if (norm <= tol) continue;  // zero effects are outside the quantification
      ++inspected;
      const bool norm_one = std::abs(norm - 1.0) <= tol;
      auto state = localising_state(obs, x, tol);
      const bool exists = state.has_value();
      bool pure_attains = false;
      if (exists) {
        const double purity = (state->op() * state->op()).trace().real();
        const double attained = born_probability(obs.effect(x), *state, false);
        pure_attains = std::abs(purity - 1.0) <= tol && std::abs(attained - 1.0) <= tol;
        residual = std::max(residual, std::abs(purity - 1.0));
        if (norm_one) residual = std::max(residual, std::abs(attained - 1.0));
      }
      if (norm_one != exists || exists != pure_attains) ++disagreements;
    }
  }
  CheckVerdict v;
  v.id = "norm1-equivalence";
  v.anchor = "‖E(x)‖ = 1 ⇔ ∃ρ: tr[E(x)ρ] = 1 ⇔ ∃ρ pure: tr[E(x)ρ] = 1";
  v.samples = inspected;
  v.max_deviation = disagreements ? static_cast<double>(disagreements) : residual;
  v.pass = disagreements == 0;
  return v;
}

CheckVerdict check_prop_3_1(const RelativisationContext& ctx, int samples,
                            std::uint64_t seed, double tol) {
  const int ds = ctx.system_dim();
  const int joint = ds * ctx.frame_dim();
  double dev = 0.0;

  RelativeObservableResult unit = yen_x(ctx, Operator::Identity(ds, ds));
  dev = std::max(dev, operator_norm(unit.op - Operator::Identity(joint, joint)));

  Prng prng(derive_seed(seed, "prop3.1"));
  for (int s = 0; s < samples; ++s) {
    Operator a = h_twirl(ctx.system_rep(), ctx.stabiliser(), prng.gaussian_hermitian(ds));
    Operator b = h_twirl(ctx.system_rep(), ctx.stabiliser(), prng.gaussian_hermitian(ds));
    Operator m = a + Cplx(0, 1) * b;

    RelativeObservableResult ra = yen_x(ctx, a);
    RelativeObservableResult rb = yen_x(ctx, b);
    RelativeObservableResult rm = yen_x(ctx, m);
    Operator rab = yen_x_with_transversal(ctx, a * b, ctx.cosets().representatives());
    Operator rms = yen_x_with_transversal(ctx, m.adjoint(), ctx.cosets().representatives());

    dev = std::max({dev, operator_norm(rab - ra.op * rb.op),
                    operator_norm(rms - rm.op.adjoint()),
                    std::abs(operator_norm(ra.op) - operator_norm(a)),
                    ra.invariance_residual, rb.invariance_residual,
                    rm.invariance_residual, ra.representative_residual,
                    rb.representative_residual, rm.representative_residual});
  }

  CheckVerdict v;
  v.id = "prop3.1";
  v.anchor = "¥_x(AB) = ¥_x(A)¥_x(B), ¥_x(A*) = ¥_x(A)*, ¥_x(𝟙) = 𝟙⊗𝟙, ‖¥_x(A)‖ = ‖A‖";
  v.samples = samples;
  v.max_deviation = dev;
  v.pass = dev <= tol;
  return v;
}

CheckVerdict check_prop_3_3(const RelativisationContext& ctx, int samples,
                            std::uint64_t seed, double tol) {
  double dev = 0.0;
  Prng prng(derive_seed(seed, "prop3.3"));
  for (int s = 0; s < samples; ++s) {
    Operator a = prng.gaussian_matrix(ctx.system_dim());
    Operator lhs = yen_E_on_G(ctx, a);
    Operator averaged = h_twirl(ctx.system_rep(), ctx.stabiliser(), a);
    Operator rhs =
        yen_x_with_transversal(ctx, averaged, ctx.cosets().representatives());
    dev = std::max(dev, operator_norm(lhs - rhs));
  }
  CheckVerdict v;
  v.id = "prop3.3";
  v.anchor = "¥^E = ¥_x ∘ av_H";
  v.samples = samples;
  v.max_deviation = dev;
  v.pass = dev <= tol;
  return v;
}

CheckVerdict check_prop_3_4(const GroupAction& action, int base, double tol) {
  SixWayVerdict six = six_way_equivalence(action, base, tol);
  CheckVerdict v;
  v.id = "prop3.4";
  v.anchor = "H = {e} ⇔ sharp ⇔ norm-1 ⇔ localisable ⇔ ideal ⇔ complete";
  v.samples = 0;
  v.max_deviation = six.all_agree ? 0.0 : 1.0;
  v.pass = six.all_agree;
  auto flag = [](bool b) { return b ? "true" : "false"; };
  v.details = std::string("h_trivial=") + flag(six.h_trivial) +
              " sharp=" + flag(six.sharp) + " norm_one=" + flag(six.norm_one) +
              " localisable=" + flag(six.localisable) + " ideal=" + flag(six.ideal) +
              " complete=" + flag(six.complete) +
              " effect_norm=" + format_double(six.effect_norm) +
              " stabiliser_order=" + std::to_string(six.stabiliser_order);
  return v;
}

CheckVerdict check_resolution_of_identity(const CovariantFrame& frame, int base,
                                          double tol) {
  CoherentSystem sys = coherent_system(frame, base);
  const int n = frame.rep().dim();
  Operator sum = Operator::Zero(n, n);
  for (const Vector& v : sys.vectors) sum += v * v.adjoint();
  const double order = static_cast<double>(sys.stabiliser_of_base.order());
  double dev = operator_norm(sum - order * Operator::Identity(n, n));
  dev = std::max(dev, sys.factorisation_residual);

  CheckVerdict v;
  v.id = "resolution-of-identity";
  v.anchor = "Σ_{g∈G} |gH⟩⟨gH| = |H|·𝟙";
  v.samples = 0;
  v.max_deviation = dev;
  v.pass = dev <= tol;
  v.details = "stabiliser_order=" + std::to_string(sys.stabiliser_of_base.order());
  return v;
}

}  // namespace

const std::vector<std::string>& check_registry() {
  static const std::vector<std::string> ids = {
      "group-laws",      "covariance",      "invariant-dimension",
      "uniform-distribution", "norm1-equivalence", "prop3.1",
      "prop2.2-item1",   "prop2.2-item2",   "prop2.2-item3",
      "prop2.2-item4",   "prop3.3",         "prop3.4",
      "resolution-of-identity",
  };
  return ids;
}

bool is_builtin_group(const std::string& name) {
  for (const BuiltinDef& def : builtins())
    if (name == def.name) return true;
  return false;
}

BuiltGroup load_group(const std::string& group_spec) {
  for (const BuiltinDef& def : builtins())
    if (group_spec == def.name) return build_group_from_generators(def.gens);
  GroupSpecFile file = parse_group_spec(load_json_file(group_spec));
  return build_group_from_generators(file.generators);
}

RepSpec default_rep_spec(const std::string& group_spec) {
  RepSpec spec;
  if (group_spec == "z4") {
    spec.kind = "explicit";
    Operator m = Operator::Zero(2, 2);
    m(0, 0) = 1.0;
    m(1, 1) = Cplx(0, 1);
    spec.generator_matrices = {std::move(m)};
  } else if (is_builtin_group(group_spec)) {
    spec.kind = "tensor_factor";
    spec.factor_dim = 2;
  } else {
    spec.kind = "permutation";
  }
  return spec;
}

UnitaryRep build_system_rep(const RepSpec& spec, const BuiltGroup& built) {
  if (spec.kind == "permutation")
    return permutation_representation(built.defining_action);
  if (spec.kind == "regular") return regular_representation(built.group);
  if (spec.kind == "tensor_factor")
    return tensor_factor_representation(built.defining_action, spec.factor_dim);
  if (spec.kind == "explicit") {
    if (spec.generator_matrices.empty())
      throw ConfigError("explicit representation needs generator matrices");
    return explicit_representation(built.group, spec.generator_matrices);
  }
  throw ConfigError("unknown representation kind \"" + spec.kind + "\"");
}

SuiteReport run_suite(const SuiteConfig& config) {
  if (config.tolerance <= 0) throw ConfigError("tolerance must be positive");
  if (config.samples < 1) throw ConfigError("samples must be at least 1");

  std::set<std::string> requested(config.checks.begin(), config.checks.end());
  for (const std::string& id : requested)
    if (std::find(check_registry().begin(), check_registry().end(), id) ==
        check_registry().end())
      throw ConfigError("unknown check \"" + id + "\"");
  std::vector<std::string> ordered;
  for (const std::string& id : check_registry())
    if (requested.empty() || requested.count(id)) ordered.push_back(id);
  auto wants = [&](const std::string& id) {
    return std::find(ordered.begin(), ordered.end(), id) != ordered.end();
  };

  BuiltGroup built = load_group(config.group_spec);
  const GroupAction& action = built.defining_action;
  if (config.base_point < 0 || config.base_point >= action.n_points())
    throw ConfigError("base_point " + std::to_string(config.base_point) +
                      " out of range for " + std::to_string(action.n_points()) +
                      " points");

  RepSpec rep_spec = config.system_rep_spec.kind.empty()
                         ? default_rep_spec(config.group_spec)
                         : config.system_rep_spec;
  UnitaryRep system_rep = build_system_rep(rep_spec, built);
  CovariantFrame frame = canonical_pvm(action);
  CovariantFrame pulled = pullback_povm(frame, config.base_point);
  RelativisationContext ctx = RelativisationContext::make(
      system_rep, frame, config.base_point, config.tolerance);

  SuiteReport report;
  report.group_name = config.group_spec;
  report.base_point = config.base_point;
  report.rep_kind = rep_spec.kind + (rep_spec.kind == "tensor_factor"
                                         ? ":" + std::to_string(rep_spec.factor_dim)
                                         : "");
  report.seed = config.seed;
  report.tolerance = config.tolerance;
  report.samples = config.samples;
  report.requested_checks = ordered;

  std::string canon = "group=" + config.group_spec +
                      ";base=" + std::to_string(config.base_point) +
                      ";rep=" + report.rep_kind + ";checks=" + join(ordered, ',') +
                      ";tol=" + format_double(config.tolerance) +
                      ";samples=" + std::to_string(config.samples) +
                      ";seed=" + std::to_string(config.seed);
  for (const Operator& m : rep_spec.generator_matrices)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j)
        canon += ";" + format_double(m(i, j).real()) + "," +
                 format_double(m(i, j).imag());
  report.config_hash = hash_hex(fnv1a(canon));

  if (wants("group-laws"))
    report.checks.push_back(check_group_laws(built, config.base_point, config.seed));
  if (wants("covariance"))
    report.checks.push_back(check_covariance(frame, pulled, config.tolerance));
  if (wants("invariant-dimension"))
    report.checks.push_back(check_invariant_dimension(frame, config.tolerance));
  if (wants("uniform-distribution"))
    report.checks.push_back(check_uniform_distribution(frame, config.tolerance));
  if (wants("norm1-equivalence"))
    report.checks.push_back(check_norm1_equivalence(frame, pulled, config.tolerance));
  if (wants("prop3.1"))
    report.checks.push_back(
        check_prop_3_1(ctx, config.samples, config.seed, config.tolerance));
  if (wants("prop2.2-item1") || wants("prop2.2-item2") || wants("prop2.2-item3") ||
      wants("prop2.2-item4")) {
    std::vector<IdentityVerdict> items =
        verify_prop_2_2(ctx, config.samples, derive_seed(config.seed, "prop2.2"));
    for (const IdentityVerdict& item : items) {
      if (!wants(item.id)) continue;
      CheckVerdict v;
      v.id = item.id;
      v.anchor = item.anchor;
      v.samples = item.samples;
      v.max_deviation = item.max_deviation;
      v.pass = item.pass;
      report.checks.push_back(std::move(v));
    }
  }
  if (wants("prop3.3"))
    report.checks.push_back(
        check_prop_3_3(ctx, config.samples, config.seed, config.tolerance));
  if (wants("prop3.4"))
    report.checks.push_back(
        check_prop_3_4(action, config.base_point, config.tolerance));
  if (wants("resolution-of-identity"))
    report.checks.push_back(
        check_resolution_of_identity(frame, config.base_point, config.tolerance));

  report.overall_pass =
      std::all_of(report.checks.begin(), report.checks.end(),
                  [](const CheckVerdict& v) { return v.pass; });
  return report;
}

SuiteReport example_sn(int n, int factor_dim, int samples, std::uint64_t seed,
                       double tol) {
  if (n < 2) throw ConfigError("n must be at least 2");
  if (factor_dim < 1) throw ConfigError("factor dimension must be at least 1");
  if (samples < 1) throw ConfigError("samples must be at least 1");
  long long joint = n;
  for (int i = 0; i < n; ++i) {
    joint *= factor_dim;
    if (joint > dimension_cap())
      throw DimensionOverflow("joint dimension d^n·n exceeds the cap " +
                              std::to_string(dimension_cap()));
  }

  Perm transposition(n), cycle(n);
  for (int i = 0; i < n; ++i) {
    transposition[i] = i;
    cycle[i] = (i + 1) % n;
  }
  std::swap(transposition[0], transposition[1]);
  BuiltGroup built = build_group_from_generators({transposition, cycle});
  const GroupAction& action = built.defining_action;
  const int base = n - 1;

  UnitaryRep us = tensor_factor_representation(action, factor_dim);
  CovariantFrame frame = canonical_pvm(action);
  std::vector<RelativisationContext> at_point;
  at_point.reserve(n);
  for (int y = 0; y < n; ++y)
    at_point.push_back(RelativisationContext::make(us, frame, y, tol));
  const RelativisationContext& ctx = at_point[base];
  const int ds = us.dim();

  SuiteReport report;
  report.group_name = "s" + std::to_string(n);
  report.base_point = base;
  report.rep_kind = "tensor_factor:" + std::to_string(factor_dim);
  report.seed = seed;
  report.tolerance = tol;
  report.samples = samples;

  {
    long long expected = 1;
    for (int k = 2; k < n; ++k) expected *= k;
    CheckVerdict v;
    v.id = "stabiliser-order";
    v.anchor = "G_n ≅ S_{n−1}, |G_n| = (n−1)!";
    v.samples = 0;
    v.max_deviation = std::abs(double(ctx.stabiliser().order()) - double(expected));
    v.pass = ctx.stabiliser().order() == expected;
    v.details = "order=" + std::to_string(ctx.stabiliser().order());
    report.checks.push_back(std::move(v));
  }

  report.checks.push_back(check_invariant_dimension(frame, tol));

  {
    // factors B,...,B,C are exactly H-invariant; restriction to each point
    // must reproduce the straight tensor product with C moved to that slot
    Prng prng(derive_seed(seed, "gamma-yen-permuted-tensor"));
    double dev = 0.0;
    for (int s = 0; s < samples; ++s) {
      Operator b = prng.gaussian_matrix(factor_dim);
      Operator c = prng.gaussian_matrix(factor_dim);
      Operator a;
      for (int slot = 0; slot < n; ++slot) {
        const Operator& f = (slot == n - 1) ? c : b;
        a = (slot == 0) ? f : tensor(a, f);
      }
      Operator t = yen_x_with_transversal(ctx, a, ctx.cosets().representatives());
      for (int i = 0; i < n; ++i) {
        Operator expected;
        for (int slot = 0; slot < n; ++slot) {
          const Operator& f = (slot == i) ? c : b;
          expected = (slot == 0) ? f : tensor(expected, f);
        }
        dev = std::max(dev,
                       max_abs_diff(gamma_restrict(point_state(n, i), t), expected));
      }
    }
    CheckVerdict v;
    v.id = "gamma-yen-permuted-tensor";
    v.anchor = "(Γ_{P_i} ∘ ¥_n)(A₁⊗…⊗Aₙ) = A_{σ⁻¹(1)}⊗…⊗A_{σ⁻¹(n)}, σ·n = i";
    v.samples = samples;
    v.max_deviation = dev;
    v.pass = dev <= tol;
    report.checks.push_back(std::move(v));
  }

  {
    Prng prng(derive_seed(seed, "isomorphism-round-trip"));
    double dev = 0.0;
    for (int s = 0; s < samples; ++s) {
      const int pair = s % (n * n);
      const int i = pair / n;
      const int j = pair % n;
      Operator a = h_twirl(us, at_point[j].stabiliser(), prng.gaussian_hermitian(ds));
      Operator out = gamma_restrict(
          point_state(n, i),
          yen_x_with_transversal(at_point[j], a, at_point[j].cosets().representatives()));
      Verdict moved = restricted_invariance_check(us, at_point[i].stabiliser(), out, tol);
      Operator back = gamma_restrict(
          point_state(n, j),
          yen_x_with_transversal(at_point[i], out,
                                 at_point[i].cosets().representatives()));
      dev = std::max({dev, operator_norm(back - a),
                      std::abs(operator_norm(out) - operator_norm(a)),
                      moved.max_deviation});
    }
    CheckVerdict v;
    v.id = "isomorphism-round-trip";
    v.anchor = "Γ_{P_i} ∘ ¥_j : B(H_S)^{G_j} ≅ B(H_S)^{G_i}";
    v.samples = samples;
    v.max_deviation = dev;
    v.pass = dev <= tol;
    report.checks.push_back(std::move(v));
  }

  {
    CheckVerdict v;
    v.id = "non-invariant-rejected";
    v.anchor = "dom ¥_x = B(H_S)^{G_x}";
    v.samples = 0;
    if (n < 3 || factor_dim < 2) {
      v.max_deviation = 0.0;
      v.pass = true;
      v.details = "no non-invariant operator exists here; nothing to reject";
    } else {
      Operator e00 = Operator::Zero(factor_dim, factor_dim);
      e00(0, 0) = 1.0;
      Operator a = e00;
      for (int slot = 1; slot < n; ++slot)
        a = tensor(a, Operator::Identity(factor_dim, factor_dim)).eval();
      bool rejected = false;
      try {
        yen_x(ctx, a);
      } catch (const NotStabiliserInvariant&) {
        rejected = true;
      }
      v.max_deviation = rejected ? 0.0 : 1.0;
      v.pass = rejected;
      v.details = rejected ? "NotStabiliserInvariant raised" : "operator was accepted";
    }
    report.checks.push_back(std::move(v));
  }

  report.checks.push_back(check_prop_3_4(action, base, tol));

  report.requested_checks.reserve(report.checks.size());
  for (const CheckVerdict& v : report.checks) report.requested_checks.push_back(v.id);
  std::string canon = "example-sn;n=" + std::to_string(n) +
                      ";d=" + std::to_string(factor_dim) + ";tol=" + format_double(tol) +
                      ";samples=" + std::to_string(samples) +
                      ";seed=" + std::to_string(seed);
  report.config_hash = hash_hex(fnv1a(canon));
  report.overall_pass =
      std::all_of(report.checks.begin(), report.checks.end(),
                  [](const CheckVerdict& v) { return v.pass; });
  return report;
}

namespace {

DensityState parse_state_spec(const std::string& spec, int dim) {
  const std::string localized = "localized:";
  if (spec.rfind(localized, 0) == 0) {
    int x = 0;
    try {
      size_t used = 0;
      x = std::stoi(spec.substr(localized.size()), &used);
      if (used != spec.size() - localized.size()) throw std::invalid_argument(spec);
    } catch (const std::exception&) {
      throw ConfigError("cannot parse point index in \"" + spec + "\"");
    }
    if (x < 0 || x >= dim)
      throw ConfigError("localized point " + std::to_string(x) + " out of range");
    return point_state(dim, x);
  }
  if (spec == "invariant-pure") return uniform_pure_state(dim);
  if (spec == "maximally-mixed") return DensityState::maximally_mixed(dim);
  Json j = load_json_file(spec);
  Operator m = matrix_from_json(j.is_object() && j.contains("matrix") ? j["matrix"] : j);
  if (m.rows() != dim)
    throw NotAState("state file has dimension " + std::to_string(m.rows()) +
                    ", expected " + std::to_string(dim));
  return DensityState::from_operator(m);
}

}  // namespace

Json distribution_report(const std::string& group_spec, int base_point,
                         const std::string& state_spec) {
  BuiltGroup built = load_group(group_spec);
  const GroupAction& action = built.defining_action;
  if (base_point < 0 || base_point >= action.n_points())
    throw ConfigError("base point " + std::to_string(base_point) + " out of range");
  CovariantFrame frame = canonical_pvm(action);
  CovariantFrame pulled = pullback_povm(frame, base_point);
  DensityState state = parse_state_spec(state_spec, action.n_points());

  auto block = [&](const CovariantFrame& f, const char* space, const char* prefix) {
    Json b;
    b["outcome_space"] = space;
    Json labels = Json::array();
    for (int i = 0; i < f.observable().n_outcomes(); ++i)
      labels.push_back(prefix + std::to_string(i));
    b["labels"] = std::move(labels);
    b["probabilities"] = born_distribution(f, state);
    b["state"] = state_spec;
    return b;
  };

  Json j;
  j["schema"] = "qrf-distribution/1";
  j["group"] = group_spec;
  j["base_point"] = base_point;
  j["state"] = state_spec;
  j["distributions"] = Json::array({block(frame, "X", "x"), block(pulled, "G", "g")});
  return j;
}

Json SuiteReport::to_json() const {
  Json j;
  j["schema"] = "qrf-report/1";
  Json tool;
  tool["name"] = "qrf";
  tool["version"] = "0.1.0";
  j["tool"] = std::move(tool);
  Json cfg;
  cfg["group"] = group_name;
  cfg["base_point"] = base_point;
  cfg["system_rep"] = rep_kind;
  cfg["checks"] = requested_checks;
  cfg["tolerance"] = tolerance;
  cfg["samples"] = samples;
  cfg["seed"] = seed;
  cfg["config_hash"] = config_hash;
  j["config"] = std::move(cfg);
  Json arr = Json::array();
  for (const CheckVerdict& v : checks) {
    Json c;
    c["id"] = v.id;
    c["anchor"] = v.anchor;
    c["samples"] = v.samples;
    c["max_deviation"] = v.max_deviation;
    c["pass"] = v.pass;
    if (!v.details.empty()) c["details"] = v.details;
    arr.push_back(std::move(c));
  }
  j["checks"] = std::move(arr);
  j["overall_pass"] = overall_pass;
  return j;
}

}  // namespace qrf
