#pragma once

#include <memory>
#include <vector>

#include "qrf/errors.hpp"

namespace qrf {

/// Permutation as an image array: p maps i to p[i].
using Perm = std::vector<int>;

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

inline constexpr int kDefaultClosureCap = 10080;

/// Finite group as a Cayley table over canonical element indices.
/// Index 0 is the identity. Construction validates the identity and inverse
/// laws, that every row and column is a permutation, and associativity
/// (exhaustively for order <= 64, sampled above).
class FiniteGroup {
public:
  static GroupPtr from_parts(std::vector<std::vector<int>> cayley,
                             std::vector<int> generator_indices);

  int order() const { return static_cast<int>(cayley_.size()); }
  int identity() const { return 0; }
  int mul(int a, int b) const { return cayley_[a][b]; }
  int inv(int a) const { return inverse_[a]; }
  /// Indices of the elements the group was generated from (may repeat).
  const std::vector<int>& generator_indices() const { return generator_indices_; }

private:
  FiniteGroup() = default;
  std::vector<std::vector<int>> cayley_;
  std::vector<int> inverse_;
  std::vector<int> generator_indices_;
};

/// Left action of a group on a finite point set: apply(g, x) is g . x.
/// Validated so that the identity fixes every point and apply(gh, x) equals
/// apply(g, apply(h, x)).
class GroupAction {
public:
  static GroupAction make(GroupPtr group, int n_points,
                          std::vector<std::vector<int>> table);

  int apply(int g, int x) const { return table_[g][x]; }
  int n_points() const { return n_points_; }
  const GroupPtr& group() const { return group_; }
  bool transitive() const { return transitive_; }

private:
  friend class CovariantFrame;
  GroupAction() = default;
  GroupPtr group_;
  int n_points_ = 0;
  std::vector<std::vector<int>> table_;
  bool transitive_ = false;
};

class Subgroup {
public:
  /// Validates closure, inverses, identity membership and Lagrange.
  static Subgroup make(GroupPtr parent, std::vector<int> members);

  const std::vector<int>& members() const { return members_; }
  int order() const { return static_cast<int>(members_.size()); }
  bool contains(int g) const;
  const GroupPtr& parent() const { return parent_; }
  bool trivial() const { return members_.size() == 1; }

private:
  friend class CosetDecomposition;
  friend class RelativisationContext;
  Subgroup() = default;
  GroupPtr parent_;
  std::vector<int> members_;  // sorted
};

/// Partition of a group into left cosets gH. Cosets are ordered by their
/// representative, which is the lowest element index in the coset; the coset
/// of the identity therefore always comes first with representative e.
class CosetDecomposition {
public:
  const Subgroup& subgroup() const { return subgroup_; }
  const std::vector<int>& representatives() const { return representatives_; }
  int coset_of(int g) const { return coset_of_[g]; }
  int count() const { return static_cast<int>(representatives_.size()); }

private:
  friend CosetDecomposition left_cosets(const GroupPtr& group, const Subgroup& sub);
  friend class RelativisationContext;
  CosetDecomposition() = default;
  Subgroup subgroup_;
  std::vector<int> representatives_;
  std::vector<int> coset_of_;
};

struct BuiltGroup {
  GroupPtr group;
  GroupAction defining_action;
};

/// Closure of the listed generators under composition, by breadth-first word
/// enumeration: identity first, then candidates current*generator with
/// generators tried in listed order, elements numbered by first discovery.
/// This ordering is part of the group file format contract.
BuiltGroup build_group_from_generators(const std::vector<Perm>& generators,
                                       int closure_cap = kDefaultClosureCap);

/// The left-multiplication action of a group on its own elements.
GroupAction action_on_itself(const GroupPtr& group);

Subgroup stabiliser(const GroupAction& action, int x);

/// {g h g^-1 : h in sub}; for stabilisers this equals stabiliser(g . x).
Subgroup conjugate_subgroup(const Subgroup& sub, int g);

CosetDecomposition left_cosets(const GroupPtr& group, const Subgroup& sub);

/// Sorted orbit of x; equals all points iff the action is transitive.
std::vector<int> orbit(const GroupAction& action, int x);

}  // namespace qrf
