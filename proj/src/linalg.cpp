#include "qrf/linalg.hpp"

#include <atomic>
#include <cmath>
#include <string>

namespace qrf {

namespace {

std::atomic<int> g_dimension_cap{4096};

void require_square(const Operator& a, const char* what) {
  if (a.rows() != a.cols())
    throw DimensionMismatch(std::string(what) + ": operator is " +
                            std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()));
}

// Eigenvalues of the Hermitian part; callers must have checked Hermiticity.
Eigen::VectorXd hermitian_eigenvalues(const Operator& a) {
  const Operator sym = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<Operator> solver(sym, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

}  // namespace

int dimension_cap() { return g_dimension_cap.load(); }

void set_dimension_cap(int cap) {
  if (cap < 1) throw ConfigError("dimension cap must be positive");
  g_dimension_cap.store(cap);
}

double max_abs(const Operator& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

double max_abs_diff(const Operator& a, const Operator& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch("max_abs_diff: " + std::to_string(a.rows()) +
                            " vs " + std::to_string(b.rows()));
  return max_abs(a - b);
}

double hermiticity_deviation(const Operator& a) {
  require_square(a, "hermiticity_deviation");
  return max_abs(a - a.adjoint());
}

bool entries_finite(const Operator& a) {
  return a.allFinite();
}

Operator tensor(const Operator& a, const Operator& b) {
  const Eigen::Index rows = a.rows() * b.rows();
  const Eigen::Index cols = a.cols() * b.cols();
  if (rows > dimension_cap() || cols > dimension_cap())
    throw DimensionOverflow("tensor product dimension " + std::to_string(rows) +
                            " exceeds cap " + std::to_string(dimension_cap()));
  Operator out(rows, cols);
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

double operator_norm(const Operator& a) {
  if (a.size() == 0) return 0.0;
  // sqrt of the top eigenvalue of A*A; cheaper than a full SVD and exact
  // enough at desk scale.
  const Operator gram = a.adjoint() * a;
  Eigen::SelfAdjointEigenSolver<Operator> solver(gram, Eigen::EigenvaluesOnly);
  const double top = solver.eigenvalues().maxCoeff();
  return top <= 0.0 ? 0.0 : std::sqrt(top);
}

Verdict is_projection(const Operator& a, double tol) {
  require_square(a, "is_projection");
  const double dev =
      std::max(hermiticity_deviation(a), max_abs(a * a - a));
  return {dev <= tol, dev};
}

Verdict is_unitary(const Operator& a, double tol) {
  require_square(a, "is_unitary");
  const Operator gram = a.adjoint() * a;
  const double dev =
      max_abs(gram - Operator::Identity(a.rows(), a.cols()));
  return {dev <= tol, dev};
}

Verdict is_positive(const Operator& a, double tol) {
  require_square(a, "is_positive");
  const double hdev = hermiticity_deviation(a);
  if (hdev > tol) return {false, hdev};
  const double min_eig = hermitian_eigenvalues(a).minCoeff();
  const double dev = std::max(hdev, std::max(0.0, -min_eig));
  return {dev <= tol, dev};
}

Verdict is_effect(const Operator& a, double tol) {
  require_square(a, "is_effect");
  const Verdict pos = is_positive(a, tol);
  if (!pos.pass) return pos;
  const Operator complement =
      Operator::Identity(a.rows(), a.cols()) - a;
  const Verdict below = is_positive(complement, tol);
  return {below.pass, std::max(pos.max_deviation, below.max_deviation)};
}

EigenPair top_eigenvector(const Operator& a, double tol) {
  require_square(a, "top_eigenvector");
  const double hdev = hermiticity_deviation(a);
  if (hdev > tol)
    throw NotHermitian("deviation " + std::to_string(hdev));
  const Operator sym = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<Operator> solver(sym);
  const Eigen::Index last = a.rows() - 1;
  EigenPair pair;
  pair.value = solver.eigenvalues()(last);
  pair.vector = solver.eigenvectors().col(last);
  for (Eigen::Index i = 0; i < pair.vector.size(); ++i) {
    const double mag = std::abs(pair.vector(i));
    if (mag > 1e-12) {
      pair.vector *= std::conj(pair.vector(i)) / mag;
      break;
    }
  }
  return pair;
}

DensityState DensityState::from_operator(Operator op, double tol) {
  require_square(op, "DensityState");
  if (!entries_finite(op)) throw NotAState("non-finite entries");
  const double hdev = hermiticity_deviation(op);
  if (hdev > tol) throw NotAState("hermiticity deviation " + std::to_string(hdev));
  const double min_eig = hermitian_eigenvalues(op).minCoeff();
  if (min_eig < -tol) throw NotAState("negative eigenvalue " + std::to_string(min_eig));
  const double trace_dev = std::abs(op.trace() - Cplx(1.0, 0.0));
  if (trace_dev > tol) throw NotAState("trace deviation " + std::to_string(trace_dev));
  return DensityState(std::move(op));
}

DensityState DensityState::pure(const Vector& unit_vector, double tol) {
  const double norm_dev = std::abs(unit_vector.norm() - 1.0);
  if (norm_dev > tol) throw NotAState("vector norm deviates by " + std::to_string(norm_dev));
  return DensityState(unit_vector * unit_vector.adjoint());
}

DensityState DensityState::maximally_mixed(Eigen::Index dim) {
  if (dim < 1) throw NotAState("dimension must be positive");
  return DensityState(Operator::Identity(dim, dim) / static_cast<double>(dim));
}

Projection Projection::from_operator(Operator op, double tol) {
  const Verdict v = is_projection(op, tol);
  if (!v.pass)
    throw NotAProjection("deviation " + std::to_string(v.max_deviation));
  return Projection(std::move(op));
}

Projection Projection::onto_unit(const Vector& unit_vector, double tol) {
  const double norm_dev = std::abs(unit_vector.norm() - 1.0);
  if (norm_dev > tol)
    throw NotAProjection("vector norm deviates by " + std::to_string(norm_dev));
  return Projection(unit_vector * unit_vector.adjoint());
}

Projection Projection::onto_point(Eigen::Index n, Eigen::Index x) {
  if (x < 0 || x >= n) throw PointOutOfRange(std::to_string(x) + " of " + std::to_string(n));
  Operator op = Operator::Zero(n, n);
  op(x, x) = 1.0;
  return Projection(std::move(op));
}

double born_probability(const Operator& effect, const DensityState& state,
                        bool validate_effect, double tol) {
  if (effect.rows() != state.dim() || effect.cols() != state.dim())
    throw DimensionMismatch("effect dim " + std::to_string(effect.rows()) +
                            " vs state dim " + std::to_string(state.dim()));
  if (validate_effect) {
    const Verdict v = is_effect(effect, tol);
    if (!v.pass)
      throw NotAnEffect("deviation " + std::to_string(v.max_deviation));
  }
  const Cplx raw = (effect * state.op()).trace();
  double p = raw.real();
  if (p < 0.0) p = 0.0;
  if (p > 1.0) p = 1.0;
  return p;
}

}  // namespace qrf
