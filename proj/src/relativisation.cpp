#include "qrf/relativisation.hpp"

#include <algorithm>
#include <utility>

#include "qrf/random.hpp"

namespace qrf {
namespace {

void require_system_operator(const RelativisationContext& ctx, const Operator& a) {
  if (a.rows() != ctx.system_dim() || a.cols() != ctx.system_dim())
    throw DimensionMismatch("operator is " + std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()) + ", system dimension is " +
                            std::to_string(ctx.system_dim()));
}

void require_stabiliser_invariant(const RelativisationContext& ctx, const Operator& a) {
  Verdict inv = restricted_invariance_check(ctx.system_rep(), ctx.stabiliser(), a,
                                            ctx.tolerance());
  if (!inv)
    throw NotStabiliserInvariant("operator moves under the stabiliser (deviation " +
                                 std::to_string(inv.max_deviation) + ")");
}

Operator coset_sum(const RelativisationContext& ctx, const Operator& a,
                   const std::vector<int>& transversal) {
  const GroupAction& action = ctx.frame().outcome_action();
  const int joint = ctx.system_dim() * ctx.frame_dim();
  Operator out = Operator::Zero(joint, joint);
  for (int g : transversal) {
    Operator conj = ctx.system_rep().op(g) * a * ctx.system_rep().op(g).adjoint();
    out += tensor(conj, ctx.frame().observable().effect(action.apply(g, ctx.base_x())));
  }
  return out;
}

double invariance_residual(const RelativisationContext& ctx, const Operator& t) {
  double worst = 0.0;
  for (int g = 0; g < ctx.group()->order(); ++g)
    worst = std::max(worst,
                     operator_norm(ctx.joint_op(g) * t * ctx.joint_op(g).adjoint() - t));
  return worst;
}

}  // namespace

RelativisationContext RelativisationContext::make(UnitaryRep system_rep,
                                                  CovariantFrame frame, int base_x,
                                                  double tol) {
  if (frame.observable().outcome_space() != OutcomeSpace::Points)
    throw ConfigError("relativisation frames live on the point set");
  if (system_rep.group().get() != frame.rep().group().get())
    throw ConfigError("system and frame representations use different groups");
  const GroupAction& action = frame.outcome_action();
  if (!action.transitive())
    throw NotTransitive("relativisation needs a single orbit");
  if (base_x < 0 || base_x >= action.n_points())
    throw PointOutOfRange("base point " + std::to_string(base_x));
  const long long joint = static_cast<long long>(system_rep.dim()) * frame.rep().dim();
  if (joint > dimension_cap())
    throw DimensionOverflow("joint dimension " + std::to_string(joint) +
                            " exceeds the cap " + std::to_string(dimension_cap()));

  RelativisationContext ctx;
  ctx.stabiliser_ = qrf::stabiliser(action, base_x);
  ctx.cosets_ = left_cosets(action.group(), ctx.stabiliser_);
  ctx.joint_ops_.reserve(action.group()->order());
  for (int g = 0; g < action.group()->order(); ++g)
    ctx.joint_ops_.push_back(tensor(system_rep.op(g), frame.rep().op(g)));
  ctx.system_rep_ = std::move(system_rep);
  ctx.frame_ = std::move(frame);
  ctx.base_x_ = base_x;
  ctx.tol_ = tol;
  return ctx;
}

Operator yen_x_with_transversal(const RelativisationContext& ctx, const Operator& a,
                                const std::vector<int>& transversal) {
  require_system_operator(ctx, a);
  require_stabiliser_invariant(ctx, a);
  if (static_cast<int>(transversal.size()) != ctx.cosets().count())
    throw ConfigError("transversal size does not match the coset count");
  std::vector<char> hit(ctx.cosets().count(), 0);
  for (int g : transversal) {
    if (g < 0 || g >= ctx.group()->order())
      throw PointOutOfRange("transversal element " + std::to_string(g));
    hit[ctx.cosets().coset_of(g)] = 1;
  }
  if (!std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; }))
    throw ConfigError("transversal misses a coset");
  return coset_sum(ctx, a, transversal);
}

RelativeObservableResult yen_x(const RelativisationContext& ctx, const Operator& a) {
  if (!ctx.frame().observable().sharp())
    throw ConfigError("yen_x needs a sharp frame; use yen_general instead");
  require_system_operator(ctx, a);
  require_stabiliser_invariant(ctx, a);

  RelativeObservableResult result;
  result.op = coset_sum(ctx, a, ctx.cosets().representatives());

  // same sum over a scrambled transversal; fixed seed, the result is discarded
  Prng prng(0x72616e642d743137ull);
  std::vector<int> scrambled;
  scrambled.reserve(ctx.cosets().count());
  const auto& members = ctx.stabiliser().members();
  for (int rep : ctx.cosets().representatives()) {
    int h = members[prng.uniform_int(static_cast<int>(members.size()))];
    scrambled.push_back(ctx.group()->mul(rep, h));
  }
  result.representative_residual =
      operator_norm(result.op - coset_sum(ctx, a, scrambled));
  result.invariance_residual = invariance_residual(ctx, result.op);
  return result;
}

Operator yen_general(const RelativisationContext& ctx, const Operator& a) {
  require_system_operator(ctx, a);
  require_stabiliser_invariant(ctx, a);
  return coset_sum(ctx, a, ctx.cosets().representatives());
}

Operator yen_E_on_G(const RelativisationContext& ctx, const Operator& a) {
  require_system_operator(ctx, a);
  const GroupAction& action = ctx.frame().outcome_action();
  const double scale = 1.0 / static_cast<double>(ctx.stabiliser().order());
  const int joint = ctx.system_dim() * ctx.frame_dim();
  Operator out = Operator::Zero(joint, joint);
  for (int g = 0; g < ctx.group()->order(); ++g) {
    Operator conj = ctx.system_rep().op(g) * a * ctx.system_rep().op(g).adjoint();
    out += scale * tensor(conj, ctx.frame().observable().effect(
                                     action.apply(g, ctx.base_x())));
  }
  return out;
}

Operator gamma_restrict(const DensityState& omega, const Operator& joint) {
  if (joint.rows() != joint.cols())
    throw DimensionMismatch("joint operator is not square");
  const int nr = omega.dim();
  if (nr == 0 || joint.rows() % nr != 0)
    throw DimensionMismatch("joint dimension " + std::to_string(joint.rows()) +
                            " does not factor through the frame dimension " +
                            std::to_string(nr));
  const int ns = static_cast<int>(joint.rows()) / nr;
  const Operator omega_t = omega.op().transpose();
  Operator out(ns, ns);
  for (int i = 0; i < ns; ++i)
    for (int j = 0; j < ns; ++j)
      out(i, j) = (joint.block(i * nr, j * nr, nr, nr).array() * omega_t.array()).sum();
  return out;
}

Operator g_twirl(const UnitaryRep& rep, const Operator& a) {
  if (a.rows() != rep.dim() || a.cols() != rep.dim())
    throw DimensionMismatch("operator does not match the representation dimension");
  Operator out = Operator::Zero(rep.dim(), rep.dim());
  for (int g = 0; g < rep.group()->order(); ++g)
    out += rep.op(g) * a * rep.op(g).adjoint();
  return out / static_cast<double>(rep.group()->order());
}

Operator h_twirl(const UnitaryRep& rep, const Subgroup& sub, const Operator& a) {
  if (a.rows() != rep.dim() || a.cols() != rep.dim())
    throw DimensionMismatch("operator does not match the representation dimension");
  Operator out = Operator::Zero(rep.dim(), rep.dim());
  for (int h : sub.members()) out += rep.op(h) * a * rep.op(h).adjoint();
  return out / static_cast<double>(sub.order());
}

std::vector<IdentityVerdict> verify_prop_2_2(const RelativisationContext& ctx,
                                             int samples, std::uint64_t seed) {
  if (samples <= 0) throw ConfigError("sample count must be positive");
  const GroupAction& action = ctx.frame().outcome_action();
  const int n = action.n_points();
  const int ds = ctx.system_dim();

  // one context per base point, for the commuting square
  std::vector<RelativisationContext> at_point;
  at_point.reserve(n);
  for (int y = 0; y < n; ++y)
    at_point.push_back(
        RelativisationContext::make(ctx.system_rep(), ctx.frame(), y, ctx.tolerance()));

  std::vector<DensityState> point_state;
  point_state.reserve(n);
  for (int y = 0; y < n; ++y) {
    Vector e = Vector::Zero(n);
    e(y) = 1.0;
    point_state.push_back(DensityState::pure(e));
  }
  const DensityState mixed = DensityState::maximally_mixed(n);
  const DensityState uniform_pure =
      DensityState::pure(Vector::Constant(n, 1.0 / std::sqrt(double(n))));

  std::vector<IdentityVerdict> verdicts{
      {"prop2.2-item1", "Γ_{P_x} ∘ ¥_x = id", samples, 0.0, false},
      {"prop2.2-item2", "Γ_{P_{g·x}} ∘ ¥_x = U_S(g)(·)U_S(g)*", samples, 0.0, false},
      {"prop2.2-item3", "Γ_{P_{g·x}} ∘ ¥_{g·x} ∘ Ad U_S(g) = Γ_{P_{g·x}} ∘ ¥_x",
       samples, 0.0, false},
      {"prop2.2-item4", "Γ_{(1/n)𝟙} ∘ ¥_x = Γ_{P_𝟙} ∘ ¥_x = G-twirl", samples, 0.0,
       false},
  };

  Prng prng(seed);
  for (int s = 0; s < samples; ++s) {
    Operator a = h_twirl(ctx.system_rep(), ctx.stabiliser(), prng.gaussian_hermitian(ds));
    Operator t = yen_x(ctx, a).op;

    verdicts[0].max_deviation =
        std::max(verdicts[0].max_deviation,
                 operator_norm(gamma_restrict(point_state[ctx.base_x()], t) - a));

    for (int g = 0; g < ctx.group()->order(); ++g) {
      const int y = action.apply(g, ctx.base_x());
      Operator moved = ctx.system_rep().op(g) * a * ctx.system_rep().op(g).adjoint();
      Operator restricted = gamma_restrict(point_state[y], t);
      verdicts[1].max_deviation = std::max(verdicts[1].max_deviation,
                                           operator_norm(restricted - moved));
      Operator via_square = gamma_restrict(point_state[y], yen_x(at_point[y], moved).op);
      verdicts[2].max_deviation = std::max(verdicts[2].max_deviation,
                                           operator_norm(via_square - restricted));
    }

    Operator twirled = g_twirl(ctx.system_rep(), a);
    verdicts[3].max_deviation =
        std::max({verdicts[3].max_deviation,
                  operator_norm(gamma_restrict(mixed, t) - twirled),
                  operator_norm(gamma_restrict(uniform_pure, t) - twirled)});
  }

  for (auto& v : verdicts) v.pass = v.max_deviation <= ctx.tolerance();
  return verdicts;
}

}  // namespace qrf
