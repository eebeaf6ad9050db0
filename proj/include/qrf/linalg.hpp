#pragma once

#include <complex>
#include <optional>

#include <Eigen/Dense>

#include "qrf/errors.hpp"

namespace qrf {

using Cplx = std::complex<double>;
using Operator = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Global numeric tolerance for idempotency / Hermiticity / positivity /
/// identity checks. Group-theoretic data is exact, so error only accrues
/// through matrix arithmetic and stays orders of magnitude below this.
inline constexpr double kDefaultTolerance = 1e-9;

/// Cap on the dimension of any single operator (tensor products included).
int dimension_cap();
void set_dimension_cap(int cap);

/// Boolean check outcome together with the worst deviation observed.
struct Verdict {
  bool pass = false;
  double max_deviation = 0.0;
  explicit operator bool() const { return pass; }
};

double max_abs(const Operator& a);
double max_abs_diff(const Operator& a, const Operator& b);
double hermiticity_deviation(const Operator& a);
bool entries_finite(const Operator& a);

/// Kronecker product. Block convention: entry ((i*dimB+k), (j*dimB+l)) of
/// the result equals A(i,j)*B(k,l), i.e. the left factor indexes blocks.
Operator tensor(const Operator& a, const Operator& b);

/// Largest singular value; for Hermitian input this is max |eigenvalue|.
double operator_norm(const Operator& a);

Verdict is_projection(const Operator& a, double tol = kDefaultTolerance);
Verdict is_unitary(const Operator& a, double tol = kDefaultTolerance);
Verdict is_positive(const Operator& a, double tol = kDefaultTolerance);
/// Positive and bounded by the identity.
Verdict is_effect(const Operator& a, double tol = kDefaultTolerance);

struct EigenPair {
  double value = 0.0;
  Vector vector;
};

/// Largest eigenvalue and eigenvector of a Hermitian operator. The phase is
/// fixed so that the first component of modulus > 1e-12 is real positive,
/// which makes downstream coherent-state tables deterministic.
EigenPair top_eigenvector(const Operator& a, double tol = kDefaultTolerance);

/// Positive unit-trace operator.
class DensityState {
public:
  static DensityState from_operator(Operator op, double tol = kDefaultTolerance);
  static DensityState pure(const Vector& unit_vector, double tol = kDefaultTolerance);
  static DensityState maximally_mixed(Eigen::Index dim);

  const Operator& op() const { return op_; }
  Eigen::Index dim() const { return op_.rows(); }

private:
  explicit DensityState(Operator op) : op_(std::move(op)) {}
  Operator op_;
};

/// Hermitian idempotent.
class Projection {
public:
  static Projection from_operator(Operator op, double tol = kDefaultTolerance);
  static Projection onto_unit(const Vector& unit_vector, double tol = kDefaultTolerance);
  /// Rank-1 projection onto the x-th basis vector of an n-dimensional space.
  static Projection onto_point(Eigen::Index n, Eigen::Index x);

  const Operator& op() const { return op_; }
  Eigen::Index dim() const { return op_.rows(); }

private:
  explicit Projection(Operator op) : op_(std::move(op)) {}
  Operator op_;
};

/// tr(effect * state), real part, clamped to [0,1]. The effect is validated
/// (positive, <= identity) unless validate_effect is false; observables
/// validate their effects once at construction and skip this in sweeps.
double born_probability(const Operator& effect, const DensityState& state,
                        bool validate_effect = true,
                        double tol = kDefaultTolerance);

}  // namespace qrf
