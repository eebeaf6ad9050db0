#include "qrf/observable.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace qrf {
namespace {

void require_canonical(const CovariantFrame& frame) {
  const Observable& obs = frame.observable();
  if (obs.outcome_space() != OutcomeSpace::Points || !obs.sharp())
    throw ConfigError("expected the canonical projection-valued frame");
  const int n = obs.n_outcomes();
  if (n != frame.outcome_action().n_points())
    throw ConfigError("outcome count does not match the point set");
  for (int x = 0; x < n; ++x) {
    Operator p = Operator::Zero(n, n);
    p(x, x) = 1.0;
    if (max_abs_diff(obs.effect(x), p) > kDefaultTolerance)
      throw ConfigError("effect " + std::to_string(x) +
                        " is not the diagonal point projection");
  }
}

}  // namespace

Observable Observable::make(OutcomeSpace space, std::vector<Operator> effects,
                            bool sharp, double tol) {
  if (effects.empty()) throw ConfigError("observable needs at least one effect");
  const int dim = static_cast<int>(effects[0].rows());
  Operator sum = Operator::Zero(dim, dim);
  for (size_t i = 0; i < effects.size(); ++i) {
    if (effects[i].rows() != dim || effects[i].cols() != dim)
      throw DimensionMismatch("effect " + std::to_string(i) + " has mismatched shape");
    Verdict pos = is_positive(effects[i], tol);
    if (!pos)
      throw NotAnEffect("effect " + std::to_string(i) + " is not positive (deviation " +
                        std::to_string(pos.max_deviation) + ")");
    sum += effects[i];
  }
  if (max_abs_diff(sum, Operator::Identity(dim, dim)) > tol)
    throw NotAnEffect("effects do not sum to the identity");
  if (sharp) {
    for (size_t i = 0; i < effects.size(); ++i) {
      Verdict proj = is_projection(effects[i], tol);
      if (!proj)
        throw NotAProjection("sharp effect " + std::to_string(i) +
                             " is not a projection");
      for (size_t j = i + 1; j < effects.size(); ++j)
        if (max_abs(effects[i] * effects[j]) > tol)
          throw NotAProjection("sharp effects " + std::to_string(i) + " and " +
                               std::to_string(j) + " are not orthogonal");
    }
  }

  Observable obs;
  obs.space_ = space;
  obs.effects_ = std::move(effects);
  obs.sharp_ = sharp;
  obs.dim_ = dim;
  return obs;
}

CovariantFrame CovariantFrame::make(Observable obs, UnitaryRep rep,
                                    GroupAction outcome_action, double tol) {
  if (rep.group().get() != outcome_action.group().get())
    throw ConfigError("representation and outcome action use different groups");
  if (rep.dim() != obs.dim())
    throw DimensionMismatch("effects live on dimension " + std::to_string(obs.dim()) +
                            ", representation on " + std::to_string(rep.dim()));
  if (outcome_action.n_points() != obs.n_outcomes())
    throw DimensionMismatch("outcome action covers " +
                            std::to_string(outcome_action.n_points()) +
                            " points, observable has " +
                            std::to_string(obs.n_outcomes()) + " outcomes");

  double residual = 0.0;
  const int n = rep.group()->order();
  for (int g = 0; g < n; ++g)
    for (int x = 0; x < obs.n_outcomes(); ++x) {
      Operator lhs = rep.op(g) * obs.effect(x) * rep.op(g).adjoint();
      residual = std::max(residual,
                          operator_norm(lhs - obs.effect(outcome_action.apply(g, x))));
    }
  if (residual > tol)
    throw NotAnEffect("covariance fails with residual " + std::to_string(residual));

  CovariantFrame frame;
  frame.obs_ = std::move(obs);
  frame.rep_ = std::move(rep);
  frame.action_ = std::move(outcome_action);
  frame.covariance_residual_ = residual;
  return frame;
}

CovariantFrame canonical_pvm(const GroupAction& action) {
  if (!action.transitive()) throw NotTransitive("the point set is not a single orbit");
  const int n = action.n_points();
  std::vector<Operator> effects(n);
  for (int x = 0; x < n; ++x) {
    effects[x] = Operator::Zero(n, n);
    effects[x](x, x) = 1.0;
  }
  Observable obs = Observable::make(OutcomeSpace::Points, std::move(effects), true);
  return CovariantFrame::make(std::move(obs), permutation_representation(action),
                              action);
}

std::vector<double> born_distribution(const CovariantFrame& frame,
                                      const DensityState& state) {
  const Observable& obs = frame.observable();
  if (state.dim() != obs.dim())
    throw DimensionMismatch("state dimension " + std::to_string(state.dim()) +
                            " vs effect dimension " + std::to_string(obs.dim()));
  std::vector<double> probs(obs.n_outcomes());
  for (int x = 0; x < obs.n_outcomes(); ++x)
    probs[x] = born_probability(obs.effect(x), state, /*validate_effect=*/false);
  return probs;
}

NormOneReport norm_one_check(const Observable& obs, double tol) {
  NormOneReport report;
  report.all_norm_one = true;
  for (int x = 0; x < obs.n_outcomes(); ++x) {
    EffectNorm e;
    e.outcome = x;
    e.norm = operator_norm(obs.effect(x));
    e.zero = e.norm <= tol;
    e.is_one = std::abs(e.norm - 1.0) <= tol;
    if (!e.zero && !e.is_one) report.all_norm_one = false;
    report.effects.push_back(e);
  }
  return report;
}

std::optional<DensityState> localising_state(const Observable& obs, int outcome,
                                             double tol) {
  if (outcome < 0 || outcome >= obs.n_outcomes())
    throw PointOutOfRange("outcome " + std::to_string(outcome));
  const Operator& effect = obs.effect(outcome);
  if (operator_norm(effect) <= tol)
    throw ZeroEffect("effect " + std::to_string(outcome) + " vanishes");
  EigenPair top = top_eigenvector(effect, tol);
  if (std::abs(top.value - 1.0) > tol) return std::nullopt;
  return DensityState::pure(top.vector, tol);
}

CovariantFrame pullback_povm(const CovariantFrame& frame, int base_x) {
  require_canonical(frame);
  const GroupAction& action = frame.outcome_action();
  if (base_x < 0 || base_x >= action.n_points())
    throw PointOutOfRange("base point " + std::to_string(base_x));

  Subgroup h = stabiliser(action, base_x);
  const double scale = 1.0 / static_cast<double>(h.order());
  const int n = action.group()->order();
  std::vector<Operator> effects(n);
  for (int g = 0; g < n; ++g)
    effects[g] = scale * frame.observable().effect(action.apply(g, base_x));

  Observable obs = Observable::make(OutcomeSpace::GroupElements, std::move(effects),
                                    /*sharp=*/false);
  return CovariantFrame::make(std::move(obs), frame.rep(),
                              action_on_itself(action.group()));
}

CoherentSystem coherent_system(const CovariantFrame& frame, int base_x) {
  require_canonical(frame);
  const GroupAction& action = frame.outcome_action();
  if (base_x < 0 || base_x >= action.n_points())
    throw PointOutOfRange("base point " + std::to_string(base_x));

  const int n = action.group()->order();
  const int dim = frame.rep().dim();
  CoherentSystem sys{Vector::Zero(dim), {}, stabiliser(action, base_x), 0.0, true, true};
  sys.base_vector(base_x) = 1.0;
  sys.vectors.reserve(n);
  for (int g = 0; g < n; ++g) sys.vectors.push_back(frame.rep().op(g) * sys.base_vector);

  CovariantFrame pulled = pullback_povm(frame, base_x);
  const double scale = 1.0 / static_cast<double>(sys.stabiliser_of_base.order());
  for (int g = 0; g < n; ++g) {
    Operator factor = scale * (sys.vectors[g] * sys.vectors[g].adjoint());
    sys.factorisation_residual = std::max(
        sys.factorisation_residual,
        operator_norm(pulled.observable().effect(g) - factor));
  }

  for (int g = 0; g < n && sys.ideal; ++g)
    for (int k = g + 1; k < n && sys.ideal; ++k)
      if (std::abs(sys.vectors[g].dot(sys.vectors[k])) > kDefaultTolerance)
        sys.ideal = false;
  for (int g = 0; g < n && sys.complete; ++g)
    for (int h = 1; h < n && sys.complete; ++h)
      if ((frame.rep().op(h) * sys.vectors[g] - sys.vectors[g]).norm() <=
          kDefaultTolerance)
        sys.complete = false;
  return sys;
}

SixWayVerdict six_way_equivalence(const GroupAction& action, int base_x, double tol) {
  CovariantFrame canonical = canonical_pvm(action);
  CovariantFrame pulled = pullback_povm(canonical, base_x);
  CoherentSystem sys = coherent_system(canonical, base_x);
  const Observable& obs = pulled.observable();

  SixWayVerdict v;
  v.stabiliser_order = sys.stabiliser_of_base.order();
  v.h_trivial = sys.stabiliser_of_base.trivial();
  v.effect_norm = operator_norm(obs.effect(action.group()->identity()));

  v.sharp = true;
  for (int g = 0; g < obs.n_outcomes() && v.sharp; ++g) {
    if (!is_projection(obs.effect(g), tol)) v.sharp = false;
    for (int k = g + 1; k < obs.n_outcomes() && v.sharp; ++k)
      if (max_abs(obs.effect(g) * obs.effect(k)) > tol) v.sharp = false;
  }

  v.norm_one = norm_one_check(obs, tol).all_norm_one;

  v.localisable = true;
  for (int g = 0; g < obs.n_outcomes() && v.localisable; ++g)
    if (!localising_state(obs, g, tol).has_value()) v.localisable = false;

  v.ideal = sys.ideal;
  v.complete = sys.complete;
  v.all_agree = v.h_trivial == v.sharp && v.sharp == v.norm_one &&
                v.norm_one == v.localisable && v.localisable == v.ideal &&
                v.ideal == v.complete;
  return v;
}

}  // namespace qrf
