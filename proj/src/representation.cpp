#include "qrf/representation.hpp"

#include <algorithm>
#include <random>
#include <string>

#include <Eigen/Eigenvalues>

namespace qrf {
namespace {

long long checked_pow(int base, int exp, int cap) {
  long long v = 1;
  for (int i = 0; i < exp; ++i) {
    v *= base;
    if (v > cap)
      throw DimensionOverflow(std::to_string(base) + "^" + std::to_string(exp) +
                              " exceeds the dimension cap " + std::to_string(cap));
  }
  return v;
}

}  // namespace

UnitaryRep UnitaryRep::make(GroupPtr group, std::vector<Operator> matrices,
                            double tol) {
  if (!group) throw ConfigError("representation needs a group");
  const int n = group->order();
  if (static_cast<int>(matrices.size()) != n)
    throw DimensionMismatch("got " + std::to_string(matrices.size()) +
                            " matrices for a group of order " + std::to_string(n));
  const int dim = static_cast<int>(matrices[0].rows());
  if (dim <= 0) throw DimensionMismatch("empty representation matrix");
  for (int g = 0; g < n; ++g) {
    if (matrices[g].rows() != dim || matrices[g].cols() != dim)
      throw DimensionMismatch("matrix of element " + std::to_string(g) +
                              " is not " + std::to_string(dim) + "x" +
                              std::to_string(dim));
    Verdict u = is_unitary(matrices[g], tol);
    if (!u)
      throw NotUnitary("matrix of element " + std::to_string(g) + " (deviation " +
                       std::to_string(u.max_deviation) + ")");
  }
  if (max_abs_diff(matrices[0], Operator::Identity(dim, dim)) > tol)
    throw ConfigError("identity element is not represented by I");

  auto pair_ok = [&](int g, int h) {
    return max_abs_diff(matrices[group->mul(g, h)], matrices[g] * matrices[h]) <= tol;
  };
  if (n <= 48) {
    for (int g = 0; g < n; ++g)
      for (int h = 0; h < n; ++h)
        if (!pair_ok(g, h))
          throw ConfigError("homomorphism law fails at (" + std::to_string(g) + "," +
                            std::to_string(h) + ")");
  } else {
    std::mt19937_64 rng(0x853c49e6748fea9bull);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int trial = 0; trial < 4096; ++trial) {
      int g = pick(rng), h = pick(rng);
      if (!pair_ok(g, h))
        throw ConfigError("homomorphism law fails at (" + std::to_string(g) + "," +
                          std::to_string(h) + ")");
    }
  }

  UnitaryRep rep;
  rep.group_ = std::move(group);
  rep.dim_ = dim;
  rep.matrices_ = std::move(matrices);
  return rep;
}

UnitaryRep permutation_representation(const GroupAction& action) {
  const int n = action.group()->order();
  const int d = action.n_points();
  std::vector<Operator> mats(n);
  for (int g = 0; g < n; ++g) {
    Operator m = Operator::Zero(d, d);
    for (int x = 0; x < d; ++x) m(action.apply(g, x), x) = 1.0;
    mats[g] = std::move(m);
  }
  return UnitaryRep::make(action.group(), std::move(mats));
}

UnitaryRep regular_representation(const GroupPtr& group) {
  return permutation_representation(action_on_itself(group));
}

UnitaryRep tensor_factor_representation(const GroupAction& action, int factor_dim) {
  if (factor_dim <= 0) throw DimensionMismatch("factor dimension must be positive");
  const int n = action.n_points();
  const int order = action.group()->order();
  // faithfulness: distinct elements must act by distinct permutations
  for (int g = 1; g < order; ++g) {
    bool moves = false;
    for (int s = 0; s < n && !moves; ++s) moves = action.apply(g, s) != s;
    if (!moves)
      throw ConfigError("action is not faithful: element " + std::to_string(g) +
                        " fixes every symbol");
  }
  const int dim = static_cast<int>(checked_pow(factor_dim, n, dimension_cap()));

  // digits of a basis index, slot 0 most significant
  std::vector<int> digits(n);
  std::vector<int> out(n);
  std::vector<Operator> mats(order);
  for (int g = 0; g < order; ++g) {
    Operator m = Operator::Zero(dim, dim);
    for (int idx = 0; idx < dim; ++idx) {
      int rest = idx;
      for (int s = n - 1; s >= 0; --s) {
        digits[s] = rest % factor_dim;
        rest /= factor_dim;
      }
      for (int s = 0; s < n; ++s) out[action.apply(g, s)] = digits[s];
      int target = 0;
      for (int s = 0; s < n; ++s) target = target * factor_dim + out[s];
      m(target, idx) = 1.0;
    }
    mats[g] = std::move(m);
  }
  return UnitaryRep::make(action.group(), std::move(mats));
}

UnitaryRep explicit_representation(const GroupPtr& group,
                                   const std::vector<Operator>& generator_matrices,
                                   double tol) {
  if (!group) throw ConfigError("representation needs a group");
  const auto& gen_idx = group->generator_indices();
  if (gen_idx.empty())
    throw ConfigError("group records no generators to extend from");
  if (generator_matrices.size() != gen_idx.size())
    throw DimensionMismatch("got " + std::to_string(generator_matrices.size()) +
                            " generator matrices, group records " +
                            std::to_string(gen_idx.size()) + " generators");
  const int dim = static_cast<int>(generator_matrices[0].rows());
  const int n = group->order();

  std::vector<Operator> mats(n);
  std::vector<char> known(n, 0);
  mats[0] = Operator::Identity(dim, dim);
  known[0] = 1;
  for (size_t j = 0; j < gen_idx.size(); ++j) {
    int g = gen_idx[j];
    if (known[g]) {
      if (max_abs_diff(mats[g], generator_matrices[j]) > tol)
        throw ConfigError("generator " + std::to_string(j) +
                          " conflicts with an earlier assignment");
    } else {
      mats[g] = generator_matrices[j];
      known[g] = 1;
    }
  }

  // grow products a*gen until every element is reached
  bool progressed = true;
  while (progressed) {
    progressed = false;
    for (int a = 0; a < n; ++a) {
      if (!known[a]) continue;
      for (size_t j = 0; j < gen_idx.size(); ++j) {
        int target = group->mul(a, gen_idx[j]);
        if (known[target]) continue;
        mats[target] = mats[a] * generator_matrices[j];
        known[target] = 1;
        progressed = true;
      }
    }
  }
  for (int g = 0; g < n; ++g)
    if (!known[g])
      throw ConfigError("recorded generators do not reach element " + std::to_string(g));

  return UnitaryRep::make(group, std::move(mats), tol);
}

InvariantSubspaceReport invariant_vectors(const UnitaryRep& rep) {
  const int n = rep.group()->order();
  const int d = rep.dim();
  Operator avg = Operator::Zero(d, d);
  for (int g = 0; g < n; ++g) avg += rep.op(g);
  avg /= static_cast<double>(n);

  Operator sym = 0.5 * (avg + avg.adjoint());
  Eigen::SelfAdjointEigenSolver<Operator> solver(sym);
  if (solver.info() != Eigen::Success)
    throw NotHermitian("eigendecomposition of the averaging projector failed");

  InvariantSubspaceReport report;
  report.projector = Operator::Zero(d, d);
  for (int k = 0; k < d; ++k) {
    if (solver.eigenvalues()(k) <= 0.5) continue;
    Vector v = solver.eigenvectors().col(k);
    for (int i = 0; i < d; ++i) {
      double mag = std::abs(v(i));
      if (mag > 1e-12) {
        v *= std::conj(v(i)) / mag;
        break;
      }
    }
    report.projector += v * v.adjoint();
    report.fixed_basis.push_back(std::move(v));
  }
  report.fixed_dim = static_cast<int>(report.fixed_basis.size());
  return report;
}

PureInvarianceReport check_invariant_pure_state(const UnitaryRep& rep,
                                                const Vector& phi, double tol) {
  if (phi.size() != rep.dim())
    throw DimensionMismatch("vector length " + std::to_string(phi.size()) +
                            " vs representation dimension " + std::to_string(rep.dim()));
  if (std::abs(phi.norm() - 1.0) > tol)
    throw NotNormalised("|phi| = " + std::to_string(phi.norm()));

  const int n = rep.group()->order();
  PureInvarianceReport report;
  report.character.resize(n);
  for (int g = 0; g < n; ++g) {
    Vector w = rep.op(g) * phi;
    Cplx lambda = phi.dot(w);
    report.character[g] = lambda;
    report.max_deviation = std::max(report.max_deviation, (w - lambda * phi).norm());
  }
  for (int g = 0; g < n; ++g) {
    report.character_deviation = std::max(report.character_deviation,
                                          std::abs(std::abs(report.character[g]) - 1.0));
    for (int h = 0; h < n; ++h) {
      Cplx lhs = report.character[rep.group()->mul(g, h)];
      report.character_deviation =
          std::max(report.character_deviation,
                   std::abs(lhs - report.character[g] * report.character[h]));
    }
  }
  report.invariant = report.max_deviation <= tol && report.character_deviation <= tol;
  return report;
}

Verdict restricted_invariance_check(const UnitaryRep& rep, const Subgroup& sub,
                                    const Operator& a, double tol) {
  if (a.rows() != rep.dim() || a.cols() != rep.dim())
    throw DimensionMismatch("operator is " + std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()) + ", representation dimension is " +
                            std::to_string(rep.dim()));
  double worst = 0.0;
  for (int h : sub.members()) {
    Operator diff = rep.op(h) * a * rep.op(h).adjoint() - a;
    worst = std::max(worst, operator_norm(diff));
  }
  return Verdict{worst <= tol, worst};
}

}  // namespace qrf
