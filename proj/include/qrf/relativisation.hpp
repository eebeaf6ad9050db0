#pragma once

#include <string>
#include <vector>

#include "qrf/group.hpp"
#include "qrf/linalg.hpp"
#include "qrf/observable.hpp"
#include "qrf/representation.hpp"

namespace qrf {

/// Everything needed to relativise system observables against a frame:
/// the system representation U_S, a covariant frame on the point set, a base
/// point x, its stabiliser H and the left cosets of H. The diagonal action
/// (U_S x U_R)(g) on the joint space is precomputed.
class RelativisationContext {
public:
  static RelativisationContext make(UnitaryRep system_rep, CovariantFrame frame,
                                    int base_x, double tol = kDefaultTolerance);

  const UnitaryRep& system_rep() const { return system_rep_; }
  const CovariantFrame& frame() const { return frame_; }
  int base_x() const { return base_x_; }
  const Subgroup& stabiliser() const { return stabiliser_; }
  const CosetDecomposition& cosets() const { return cosets_; }
  const GroupPtr& group() const { return system_rep_.group(); }
  const Operator& joint_op(int g) const { return joint_ops_[g]; }
  int system_dim() const { return system_rep_.dim(); }
  int frame_dim() const { return frame_.rep().dim(); }
  double tolerance() const { return tol_; }

private:
  RelativisationContext() = default;
  UnitaryRep system_rep_;
  CovariantFrame frame_;
  int base_x_ = 0;
  double tol_ = kDefaultTolerance;
  Subgroup stabiliser_;
  CosetDecomposition cosets_;
  std::vector<Operator> joint_ops_;
};

struct RelativeObservableResult {
  Operator op;
  double invariance_residual = 0.0;      // worst movement under the diagonal action
  double representative_residual = 0.0;  // canonical vs randomised transversal
};

struct IdentityVerdict {
  std::string id;
  std::string anchor;
  int samples = 0;
  double max_deviation = 0.0;
  bool pass = false;
};

/// A -> sum over cosets gH of U_S(g) A U_S(g)* x P_{g.x}. Requires a sharp
/// frame and an H-invariant A; the output is invariant under the diagonal
/// action and does not depend on the chosen coset representatives.
RelativeObservableResult yen_x(const RelativisationContext& ctx, const Operator& a);

/// yen_x evaluated on an explicit transversal (one group element per coset).
Operator yen_x_with_transversal(const RelativisationContext& ctx, const Operator& a,
                                const std::vector<int>& transversal);

/// The same coset sum against an arbitrary covariant POVM on the point set.
/// Still unital, positive and invariant, but no longer a homomorphism.
Operator yen_general(const RelativisationContext& ctx, const Operator& a);

/// A -> sum over all g in G of U_S(g) A U_S(g)* x E_g with E_g the pulled-back
/// POVM (1/|H|) P_{g.x}. Defined on all of B(H_S); factors as
/// yen_x after an H-twirl.
Operator yen_E_on_G(const RelativisationContext& ctx, const Operator& a);

/// Partial contraction of a joint operator against a frame state:
/// A x B -> tr(omega B) A, extended linearly.
Operator gamma_restrict(const DensityState& omega, const Operator& joint);

/// A -> (1/|G|) sum_g U(g) A U(g)*.
Operator g_twirl(const UnitaryRep& rep, const Operator& a);

/// The same average over a subgroup only.
Operator h_twirl(const UnitaryRep& rep, const Subgroup& sub, const Operator& a);

/// Checks the four restriction identities on random H-invariant Hermitian
/// samples: recovery at the base point, recovery at shifted points up to
/// conjugation, the commuting square across base changes, and collapse to the
/// group average under both invariant frame states.
std::vector<IdentityVerdict> verify_prop_2_2(const RelativisationContext& ctx,
                                             int samples, std::uint64_t seed);

}  // namespace qrf
