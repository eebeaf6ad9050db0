#pragma once

#include <optional>
#include <vector>

#include "qrf/group.hpp"
#include "qrf/linalg.hpp"
#include "qrf/representation.hpp"

namespace qrf {

/// Outcome labels keep their origin so distributions over the point set and
/// over the group are never conflated.
enum class OutcomeSpace { Points, GroupElements };

/// Finite-outcome POVM. Construction validates positivity of every effect and
/// the effect-sum identity; a sharp observable must consist of mutually
/// orthogonal projections.
class Observable {
public:
  static Observable make(OutcomeSpace space, std::vector<Operator> effects,
                         bool sharp, double tol = kDefaultTolerance);

  OutcomeSpace outcome_space() const { return space_; }
  int n_outcomes() const { return static_cast<int>(effects_.size()); }
  const Operator& effect(int i) const { return effects_[i]; }
  bool sharp() const { return sharp_; }
  int dim() const { return dim_; }

private:
  friend class CovariantFrame;
  Observable() = default;
  OutcomeSpace space_ = OutcomeSpace::Points;
  std::vector<Operator> effects_;
  bool sharp_ = false;
  int dim_ = 0;
};

/// Observable together with the representation it is covariant under:
/// U(g) E(x) U(g)* = E(g.x), with g.x given by the outcome action.
class CovariantFrame {
public:
  static CovariantFrame make(Observable obs, UnitaryRep rep,
                             GroupAction outcome_action,
                             double tol = kDefaultTolerance);

  const Observable& observable() const { return obs_; }
  const UnitaryRep& rep() const { return rep_; }
  const GroupAction& outcome_action() const { return action_; }
  double covariance_residual() const { return covariance_residual_; }

private:
  friend class RelativisationContext;
  CovariantFrame() = default;
  Observable obs_;
  UnitaryRep rep_;
  GroupAction action_;
  double covariance_residual_ = 0.0;
};

struct EffectNorm {
  int outcome = 0;
  double norm = 0.0;
  bool zero = false;
  bool is_one = false;
};

struct NormOneReport {
  std::vector<EffectNorm> effects;
  bool all_norm_one = false;  // conjunction over the nonzero effects
};

struct CoherentSystem {
  Vector base_vector;           // |eH>
  std::vector<Vector> vectors;  // |gH> = U(g)|eH>
  Subgroup stabiliser_of_base;
  double factorisation_residual = 0.0;  // worst |E_g - (1/|H|)|gH><gH||
  bool ideal = false;                   // the |gH> are pairwise orthogonal over G
  bool complete = false;                // every |gH> has trivial stabiliser
};

struct SixWayVerdict {
  bool h_trivial = false;
  bool sharp = false;
  bool norm_one = false;
  bool localisable = false;
  bool ideal = false;
  bool complete = false;
  bool all_agree = false;
  double effect_norm = 0.0;  // common norm of the pulled-back effects
  int stabiliser_order = 0;
};

/// The rank-1 diagonal projections x -> P_x with the permutation
/// representation; requires a transitive action.
CovariantFrame canonical_pvm(const GroupAction& action);

/// Outcome probabilities x -> tr[E(x) rho].
std::vector<double> born_distribution(const CovariantFrame& frame,
                                      const DensityState& state);

/// Per-effect operator norms and whether each nonzero effect reaches norm 1.
NormOneReport norm_one_check(const Observable& obs,
                             double tol = kDefaultTolerance);

/// The pure state attaining tr[E(x) rho] = 1 when the effect's top eigenvalue
/// is 1; absent otherwise. The effect must be nonzero.
std::optional<DensityState> localising_state(const Observable& obs, int outcome,
                                             double tol = kDefaultTolerance);

/// Pulls the canonical PVM back along g -> g.base: E_g = (1/|H|) P_{g.base}
/// with H the stabiliser of the base point. Outcomes are group elements.
CovariantFrame pullback_povm(const CovariantFrame& frame, int base_x);

/// Coherent vectors |gH> = U(g)|eH> for the pulled-back POVM, with the
/// ideal/complete classification.
CoherentSystem coherent_system(const CovariantFrame& frame, int base_x);

/// Evaluates the six equivalent frame properties on one homogeneous space:
/// trivial stabiliser, sharpness, norm-1, localisability, ideality and
/// completeness of the coherent system.
SixWayVerdict six_way_equivalence(const GroupAction& action, int base_x,
                                  double tol = kDefaultTolerance);

}  // namespace qrf
