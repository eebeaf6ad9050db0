#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "qrf/group.hpp"

using namespace qrf;

namespace {

// s3 from the transposition (0 1) and the 3-cycle; discovery order fixes
// the element numbering used throughout these tests:
//   0:[0,1,2] 1:[1,0,2] 2:[1,2,0] 3:[0,2,1] 4:[2,1,0] 5:[2,0,1]
BuiltGroup make_s3() { return build_group_from_generators({{1, 0, 2}, {1, 2, 0}}); }

BuiltGroup make_z4() { return build_group_from_generators({{1, 2, 3, 0}}); }

BuiltGroup make_d4() {
  return build_group_from_generators({{1, 2, 3, 0}, {0, 3, 2, 1}});
}

}  // namespace

TEST_CASE("s3 closure, element order and Cayley arithmetic") {
  BuiltGroup s3 = make_s3();
  REQUIRE(s3.group->order() == 6);

  const std::vector<Perm> expected = {{0, 1, 2}, {1, 0, 2}, {1, 2, 0},
                                      {0, 2, 1}, {2, 1, 0}, {2, 0, 1}};
  for (int g = 0; g < 6; ++g)
    for (int x = 0; x < 3; ++x) CHECK(s3.defining_action.apply(g, x) == expected[g][x]);

  CHECK(s3.group->mul(1, 1) == 0);   // transposition squared
  CHECK(s3.group->mul(2, 2) == 5);   // cycle squared
  CHECK(s3.group->mul(2, 5) == 0);   // cycle cubed
  CHECK(s3.group->inv(2) == 5);
  CHECK(s3.group->inv(1) == 1);
  CHECK(s3.group->generator_indices() == std::vector<int>{1, 2});
  CHECK(s3.defining_action.transitive());
}

TEST_CASE("z4 closure is the cyclic table") {
  BuiltGroup z4 = make_z4();
  REQUIRE(z4.group->order() == 4);
  for (int a = 0; a < 4; ++a) {
    CHECK(z4.group->inv(a) == (4 - a) % 4);
    for (int b = 0; b < 4; ++b) CHECK(z4.group->mul(a, b) == (a + b) % 4);
  }
}

TEST_CASE("d4 closure has order 8 with the expected discovery order") {
  BuiltGroup d4 = make_d4();
  REQUIRE(d4.group->order() == 8);
  // element 4 is r applied after s, element 5 is s applied after r
  const Perm rs = {1, 0, 3, 2}, sr = {3, 2, 1, 0};
  for (int x = 0; x < 4; ++x) {
    CHECK(d4.defining_action.apply(4, x) == rs[x]);
    CHECK(d4.defining_action.apply(5, x) == sr[x]);
  }
}

TEST_CASE("s4 closes to order 24") {
  BuiltGroup s4 = build_group_from_generators({{1, 0, 2, 3}, {1, 2, 3, 0}});
  CHECK(s4.group->order() == 24);
}

TEST_CASE("closure rejects bad input") {
  CHECK_THROWS_AS(build_group_from_generators({{0, 0, 1}}), NotAPermutation);
  CHECK_THROWS_AS(build_group_from_generators({{1, 2, 3}}), NotAPermutation);
  CHECK_THROWS_AS(build_group_from_generators({}), NotAPermutation);
  CHECK_THROWS_AS(build_group_from_generators({{1, 0, 2}, {1, 2}}), NotAPermutation);
  CHECK_THROWS_AS(build_group_from_generators({{1, 0, 2, 3}, {1, 2, 3, 0}}, 10),
                  ClosureTooLarge);
}

TEST_CASE("cayley table validation catches broken tables") {
  // valid Z2 table, then tampered copies
  std::vector<std::vector<int>> ok = {{0, 1}, {1, 0}};
  CHECK_NOTHROW(FiniteGroup::from_parts(ok, {1}));
  CHECK_THROWS_AS(FiniteGroup::from_parts({{0, 1}, {1, 1}}, {}), NotAPermutation);
  CHECK_THROWS_AS(FiniteGroup::from_parts({{1, 0}, {0, 1}}, {}), NotAPermutation);
  CHECK_THROWS_AS(FiniteGroup::from_parts({{0, 1}, {0, 1}}, {}), NotAPermutation);
  CHECK_THROWS_AS(FiniteGroup::from_parts(ok, {7}), PointOutOfRange);

  // latin square that is not associative: x*y = rotation table of order 5
  std::vector<std::vector<int>> loop = {{0, 1, 2, 3, 4},
                                        {1, 0, 3, 4, 2},
                                        {2, 4, 0, 1, 3},
                                        {3, 2, 4, 0, 1},
                                        {4, 3, 1, 2, 0}};
  CHECK_THROWS_AS(FiniteGroup::from_parts(loop, {}), NotAPermutation);
}

TEST_CASE("stabilisers in s3") {
  BuiltGroup s3 = make_s3();
  CHECK(stabiliser(s3.defining_action, 2).members() == std::vector<int>{0, 1});
  CHECK(stabiliser(s3.defining_action, 0).members() == std::vector<int>{0, 3});
  CHECK(stabiliser(s3.defining_action, 1).members() == std::vector<int>{0, 4});
  CHECK_THROWS_AS(stabiliser(s3.defining_action, 7), PointOutOfRange);
}

TEST_CASE("conjugating a stabiliser lands on the moved point") {
  BuiltGroup s3 = make_s3();
  Subgroup stab2 = stabiliser(s3.defining_action, 2);
  // element 2 is the 3-cycle sending 2 to 0
  Subgroup conj = conjugate_subgroup(stab2, 2);
  CHECK(conj.members() == stabiliser(s3.defining_action, 0).members());

  for (int g = 0; g < 6; ++g)
    for (int x = 0; x < 3; ++x)
      CHECK(conjugate_subgroup(stabiliser(s3.defining_action, x), g).members() ==
            stabiliser(s3.defining_action, s3.defining_action.apply(g, x)).members());
}

TEST_CASE("subgroup validation") {
  BuiltGroup s3 = make_s3();
  CHECK_NOTHROW(Subgroup::make(s3.group, {0, 2, 5}));  // alternating subgroup
  CHECK_THROWS_AS(Subgroup::make(s3.group, {0, 2}), NotASubgroup);
  CHECK_THROWS_AS(Subgroup::make(s3.group, {2, 5}), NotASubgroup);
  CHECK_THROWS_AS(Subgroup::make(s3.group, {0, 9}), NotASubgroup);
  CHECK_THROWS_AS(Subgroup::make(s3.group, {}), NotASubgroup);
  CHECK(Subgroup::make(s3.group, {0}).trivial());
}

TEST_CASE("left cosets of the point stabiliser in s3") {
  BuiltGroup s3 = make_s3();
  CosetDecomposition dec = left_cosets(s3.group, stabiliser(s3.defining_action, 2));
  REQUIRE(dec.count() == 3);
  CHECK(dec.representatives() == std::vector<int>{0, 2, 3});
  CHECK(dec.coset_of(0) == dec.coset_of(1));
  CHECK(dec.coset_of(2) == dec.coset_of(4));
  CHECK(dec.coset_of(3) == dec.coset_of(5));
  CHECK(dec.coset_of(0) != dec.coset_of(2));
}

TEST_CASE("left cosets of the alternating subgroup in s3") {
  BuiltGroup s3 = make_s3();
  CosetDecomposition dec = left_cosets(s3.group, Subgroup::make(s3.group, {0, 2, 5}));
  REQUIRE(dec.count() == 2);
  CHECK(dec.representatives() == std::vector<int>{0, 1});
  std::set<int> even = {0, 2, 5};
  for (int g = 0; g < 6; ++g) CHECK(dec.coset_of(g) == (even.count(g) ? 0 : 1));
}

TEST_CASE("cosets partition the group") {
  BuiltGroup d4 = make_d4();
  for (int x = 0; x < 4; ++x) {
    Subgroup h = stabiliser(d4.defining_action, x);
    CosetDecomposition dec = left_cosets(d4.group, h);
    std::vector<int> seen(8, 0);
    for (int g = 0; g < 8; ++g) {
      REQUIRE(dec.coset_of(g) >= 0);
      ++seen[g];
      // the representative is the lowest element of its coset
      CHECK(dec.representatives()[dec.coset_of(g)] <= g);
    }
    CHECK(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));
    CHECK(dec.count() * h.order() == 8);
  }
}

TEST_CASE("orbit and orbit-stabiliser") {
  BuiltGroup s3 = make_s3();
  CHECK(orbit(s3.defining_action, 0) == std::vector<int>{0, 1, 2});
  for (int x = 0; x < 3; ++x)
    CHECK(static_cast<int>(orbit(s3.defining_action, x).size()) *
              stabiliser(s3.defining_action, x).order() ==
          6);

  BuiltGroup d4 = make_d4();
  for (int x = 0; x < 4; ++x)
    CHECK(static_cast<int>(orbit(d4.defining_action, x).size()) *
              stabiliser(d4.defining_action, x).order() ==
          8);
}

TEST_CASE("action on itself is transitive left multiplication") {
  BuiltGroup z4 = make_z4();
  GroupAction left = action_on_itself(z4.group);
  CHECK(left.n_points() == 4);
  CHECK(left.transitive());
  for (int g = 0; g < 4; ++g)
    for (int h = 0; h < 4; ++h) CHECK(left.apply(g, h) == z4.group->mul(g, h));
  CHECK(stabiliser(left, 0).trivial());
}

TEST_CASE("action validation") {
  BuiltGroup z4 = make_z4();
  // identity row must fix every point
  std::vector<std::vector<int>> bad = {{1, 0}, {0, 1}, {0, 1}, {0, 1}};
  CHECK_THROWS_AS(GroupAction::make(z4.group, 2, bad), NotAPermutation);
  // wrong number of rows
  CHECK_THROWS_AS(GroupAction::make(z4.group, 2, {{0, 1}, {1, 0}}), PointOutOfRange);
  // compatibility: the generator must act with the right order
  std::vector<std::vector<int>> incompatible = {{0, 1}, {1, 0}, {0, 1}, {0, 1}};
  CHECK_THROWS_AS(GroupAction::make(z4.group, 2, incompatible), NotAPermutation);

  // a legitimate non-transitive action: everything fixes both points
  std::vector<std::vector<int>> trivial = {{0, 1}, {0, 1}, {0, 1}, {0, 1}};
  GroupAction fixed = GroupAction::make(z4.group, 2, trivial);
  CHECK_FALSE(fixed.transitive());
  CHECK(orbit(fixed, 0) == std::vector<int>{0});
}

TEST_CASE("trivial group from the identity generator") {
  BuiltGroup trivial = build_group_from_generators({{0}});
  CHECK(trivial.group->order() == 1);
  CHECK(trivial.defining_action.n_points() == 1);
  CHECK(trivial.defining_action.transitive());
}
