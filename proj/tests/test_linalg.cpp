#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Eigenvalues>

#include "qrf/linalg.hpp"
#include "qrf/random.hpp"

using namespace qrf;

namespace {

Operator pauli_x() {
  Operator x = Operator::Zero(2, 2);
  x(0, 1) = 1.0;
  x(1, 0) = 1.0;
  return x;
}

Operator random_unitary_2x2() {
  // a fixed rotation-with-phase is enough for conjugation-invariance checks
  Operator u(2, 2);
  const double c = std::cos(0.7), s = std::sin(0.7);
  u << Cplx(c, 0), Cplx(0, -s), Cplx(0, -s), Cplx(c, 0);
  return u;
}

}  // namespace

TEST_CASE("tensor identity blocks") {
  Operator i2 = Operator::Identity(2, 2);
  Operator i3 = Operator::Identity(3, 3);
  CHECK(max_abs_diff(tensor(i2, i3), Operator::Identity(6, 6)) == 0.0);
}

TEST_CASE("tensor of diagonal projections") {
  Operator a = Operator::Zero(2, 2);
  a(0, 0) = 1.0;
  Operator b = Operator::Zero(2, 2);
  b(1, 1) = 1.0;
  Operator expected = Operator::Zero(4, 4);
  expected(1, 1) = 1.0;  // index 0*2+1
  CHECK(max_abs_diff(tensor(a, b), expected) == 0.0);
}

TEST_CASE("tensor block convention") {
  Operator a(2, 2), b(2, 2);
  a << Cplx(1, 0), Cplx(2, 0), Cplx(3, 0), Cplx(4, 0);
  b << Cplx(0, 1), Cplx(5, 0), Cplx(6, 0), Cplx(7, 0);
  Operator t = tensor(a, b);
  REQUIRE(t.rows() == 4);
  // entry ((i*dimB+k),(j*dimB+l)) = a(i,j) * b(k,l)
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          CHECK(t(i * 2 + k, j * 2 + l) == a(i, j) * b(k, l));
}

TEST_CASE("tensor mixed-product and adjoint rules") {
  Prng prng(11);
  Operator a = prng.gaussian_matrix(2), b = prng.gaussian_matrix(2);
  Operator c = prng.gaussian_matrix(2), d = prng.gaussian_matrix(2);
  CHECK(max_abs_diff(tensor(a, b) * tensor(c, d), tensor(a * c, b * d)) < 1e-12);
  CHECK(max_abs_diff(tensor(a, b).adjoint(), tensor(a.adjoint(), b.adjoint())) == 0.0);
}

TEST_CASE("tensor associativity up to index reshuffle") {
  Prng prng(12);
  Operator a = prng.gaussian_matrix(2), b = prng.gaussian_matrix(3);
  Operator c = prng.gaussian_matrix(2);
  CHECK(max_abs_diff(tensor(tensor(a, b), c), tensor(a, tensor(b, c))) < 1e-12);
}

TEST_CASE("tensor respects the dimension cap") {
  const int old_cap = dimension_cap();
  set_dimension_cap(5);
  Operator i3 = Operator::Identity(3, 3);
  CHECK_THROWS_AS(tensor(i3, i3), DimensionOverflow);
  set_dimension_cap(old_cap);
  CHECK_NOTHROW(tensor(i3, i3));
}

TEST_CASE("operator norm basics") {
  CHECK(operator_norm(Operator::Identity(3, 3)) == doctest::Approx(1.0).epsilon(1e-12));
  Operator p = Operator::Zero(2, 2);
  p(0, 0) = 1.0;
  CHECK(operator_norm(0.5 * p) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("operator norm matches the Hermitian eigenvalue oracle") {
  Prng prng(13);
  Operator h = prng.gaussian_hermitian(4);
  Eigen::SelfAdjointEigenSolver<Operator> solver(h);
  const double expected = solver.eigenvalues().cwiseAbs().maxCoeff();
  CHECK(operator_norm(h) == doctest::Approx(expected).epsilon(1e-10));
}

TEST_CASE("operator norm is unitarily invariant") {
  Prng prng(14);
  Operator a = prng.gaussian_matrix(2);
  Operator u = random_unitary_2x2();
  REQUIRE(is_unitary(u).pass);
  CHECK(operator_norm(u * a * u.adjoint()) ==
        doctest::Approx(operator_norm(a)).epsilon(1e-10));
}

TEST_CASE("matrix predicate verdicts") {
  Operator id = Operator::Identity(2, 2);
  CHECK(is_projection(id).pass);
  CHECK(is_unitary(id).pass);
  CHECK(is_positive(id).pass);

  Operator half = 0.5 * id;
  CHECK_FALSE(is_projection(half).pass);
  CHECK(is_projection(half).max_deviation == doctest::Approx(0.25));
  CHECK_FALSE(is_unitary(half).pass);
  CHECK(is_positive(half).pass);

  Operator x = pauli_x();
  CHECK_FALSE(is_projection(x).pass);
  CHECK(is_unitary(x).pass);
  CHECK_FALSE(is_positive(x).pass);
  CHECK(is_positive(x).max_deviation == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("effect verdicts require both bounds") {
  Operator id = Operator::Identity(2, 2);
  CHECK(is_effect(0.5 * id).pass);
  CHECK_FALSE(is_effect(2.0 * id).pass);   // exceeds I
  CHECK_FALSE(is_effect(-0.5 * id).pass);  // not positive
}

TEST_CASE("top eigenvector of diagonal matrices") {
  Operator d = Operator::Zero(2, 2);
  d(0, 0) = 3.0;
  d(1, 1) = 1.0;
  EigenPair top = top_eigenvector(d);
  CHECK(top.value == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(std::abs(top.vector(0)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(top.vector(0).real() > 0.0);  // phase fixed
  CHECK((d * top.vector - top.value * top.vector).norm() < 1e-9);
}

TEST_CASE("top eigenvector of a scaled projection") {
  Operator p = Operator::Zero(3, 3);
  p(1, 1) = 1.0;
  EigenPair top = top_eigenvector(0.5 * p);
  CHECK(top.value == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("top eigenvector of a nonzero projection is 1") {
  Vector v(2);
  v << Cplx(1, 0) / std::sqrt(2.0), Cplx(0, 1) / std::sqrt(2.0);
  Operator p = v * v.adjoint();
  EigenPair top = top_eigenvector(p);
  CHECK(top.value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(std::abs(top.vector.dot(v)) - 1.0) < 1e-9);
}

TEST_CASE("top eigenvector rejects non-Hermitian input") {
  Operator m = Operator::Zero(2, 2);
  m(0, 1) = 1.0;
  CHECK_THROWS_AS(top_eigenvector(m), NotHermitian);
}

TEST_CASE("density state validation") {
  CHECK_THROWS_AS(DensityState::from_operator(Operator::Identity(2, 2)), NotAState);
  Operator neg(2, 2);
  neg << Cplx(1.5, 0), Cplx(0, 0), Cplx(0, 0), Cplx(-0.5, 0);
  CHECK_THROWS_AS(DensityState::from_operator(neg), NotAState);
  Operator skew(2, 2);
  skew << Cplx(0.5, 0), Cplx(0.3, 0), Cplx(0, 0), Cplx(0.5, 0);
  CHECK_THROWS_AS(DensityState::from_operator(skew), NotAState);

  DensityState mixed = DensityState::maximally_mixed(4);
  CHECK(mixed.dim() == 4);
  CHECK(mixed.op().trace().real() == doctest::Approx(1.0).epsilon(1e-12));

  Vector unnorm = Vector::Constant(2, 1.0);
  CHECK_THROWS_AS(DensityState::pure(unnorm), NotAState);
}

TEST_CASE("projection wrapper validation") {
  CHECK_THROWS_AS(Projection::from_operator(0.5 * Operator::Identity(2, 2)),
                  NotAProjection);
  Projection p = Projection::onto_point(3, 1);
  CHECK(p.op()(1, 1) == Cplx(1, 0));
  CHECK(p.op().trace().real() == doctest::Approx(1.0));
}

TEST_CASE("born probability") {
  DensityState at0 = DensityState::pure([] {
    Vector v = Vector::Zero(2);
    v(0) = 1.0;
    return v;
  }());
  Operator p0 = Projection::onto_point(2, 0).op();
  Operator p1 = Projection::onto_point(2, 1).op();

  CHECK(born_probability(Operator::Identity(2, 2), at0) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(born_probability(p0, at0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(born_probability(p1, at0) == doctest::Approx(0.0).epsilon(1e-12));

  CHECK_THROWS_AS(born_probability(2.0 * Operator::Identity(2, 2), at0), NotAnEffect);
  CHECK_NOTHROW(born_probability(2.0 * Operator::Identity(2, 2), at0,
                                 /*validate_effect=*/false));
  CHECK_THROWS_AS(born_probability(Operator::Identity(3, 3), at0), DimensionMismatch);
}

TEST_CASE("born probability is affine in the state") {
  Prng prng(15);
  Operator e = 0.5 * Operator::Identity(2, 2);
  Vector v0 = Vector::Zero(2), v1 = Vector::Zero(2);
  v0(0) = 1.0;
  v1(1) = 1.0;
  DensityState s0 = DensityState::pure(v0), s1 = DensityState::pure(v1);
  DensityState blend = DensityState::from_operator(0.25 * s0.op() + 0.75 * s1.op());
  const double p = born_probability(e, blend);
  CHECK(p == doctest::Approx(0.25 * born_probability(e, s0) +
                             0.75 * born_probability(e, s1))
                 .epsilon(1e-12));
}
