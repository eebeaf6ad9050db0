#pragma once

#include <vector>

#include "qrf/group.hpp"
#include "qrf/linalg.hpp"

namespace qrf {

/// Unitary representation as one matrix per group element.
/// Construction validates unitarity, U(e) = I and the homomorphism law
/// (exhaustively for order <= 48, sampled above).
class UnitaryRep {
public:
  static UnitaryRep make(GroupPtr group, std::vector<Operator> matrices,
                         double tol = kDefaultTolerance);

  const Operator& op(int g) const { return matrices_[g]; }
  int dim() const { return dim_; }
  const GroupPtr& group() const { return group_; }

private:
  friend class CovariantFrame;
  friend class RelativisationContext;
  UnitaryRep() = default;
  GroupPtr group_;
  int dim_ = 0;
  std::vector<Operator> matrices_;
};

struct InvariantSubspaceReport {
  int fixed_dim = 0;
  std::vector<Vector> fixed_basis;  // orthonormal, phase-fixed
  Operator projector;               // onto the fixed subspace
};

struct PureInvarianceReport {
  bool invariant = false;
  double max_deviation = 0.0;       // max_g |U(g)phi - lambda(g) phi|
  std::vector<Cplx> character;      // lambda(g) = <phi, U(g)phi>
  double character_deviation = 0.0; // modulus-1 and multiplicativity residual
};

/// U(g) delta_x = delta_{g.x}, the matrix form of (g.f)(x) = f(g^-1.x).
UnitaryRep permutation_representation(const GroupAction& action);

/// Left regular representation: the permutation representation of the group
/// acting on itself.
UnitaryRep regular_representation(const GroupPtr& group);

/// Action on (C^d)^{tensor n} by permuting tensor factors: the matrix of g
/// sends e_{i_1} x ... x e_{i_n} to the basis vector whose factor at slot
/// g.s is e_{i_s}. Requires a faithful action; dim = d^n.
UnitaryRep tensor_factor_representation(const GroupAction& action, int factor_dim);

/// Extends matrices given for the group's recorded generators to all
/// elements by word closure along the Cayley table, then validates.
UnitaryRep explicit_representation(const GroupPtr& group,
                                   const std::vector<Operator>& generator_matrices,
                                   double tol = kDefaultTolerance);

/// Fixed subspace of the representation, via the averaging projector
/// (1/|G|) sum_g U(g); rank counted as eigenvalues above 1/2.
InvariantSubspaceReport invariant_vectors(const UnitaryRep& rep);

/// Does phi span a one-dimensional subrepresentation? If so the returned
/// character is multiplicative of modulus one.
PureInvarianceReport check_invariant_pure_state(const UnitaryRep& rep,
                                                const Vector& phi,
                                                double tol = kDefaultTolerance);

/// True iff U(h) A U(h)* = A for every h in the subgroup; deviation is the
/// worst operator norm of the difference.
Verdict restricted_invariance_check(const UnitaryRep& rep, const Subgroup& sub,
                                    const Operator& a,
                                    double tol = kDefaultTolerance);

}  // namespace qrf
