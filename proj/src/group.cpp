#include "qrf/group.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <string>

namespace qrf {
namespace {

void check_permutation(const std::vector<int>& p, int n, const std::string& what) {
  if (static_cast<int>(p.size()) != n)
    throw NotAPermutation(what + " has length " + std::to_string(p.size()) +
                          ", expected " + std::to_string(n));
  std::vector<char> seen(n, 0);
  for (int v : p) {
    if (v < 0 || v >= n || seen[v])
      throw NotAPermutation(what + " is not a bijection on 0.." + std::to_string(n - 1));
    seen[v] = 1;
  }
}

}  // namespace

GroupPtr FiniteGroup::from_parts(std::vector<std::vector<int>> cayley,
                                 std::vector<int> generator_indices) {
  const int n = static_cast<int>(cayley.size());
  if (n == 0) throw NotAPermutation("Cayley table is empty");
  for (int a = 0; a < n; ++a)
    check_permutation(cayley[a], n, "Cayley row " + std::to_string(a));
  // columns must also be permutations (cancellation law)
  for (int b = 0; b < n; ++b) {
    std::vector<char> seen(n, 0);
    for (int a = 0; a < n; ++a) {
      int v = cayley[a][b];
      if (seen[v])
        throw NotAPermutation("Cayley column " + std::to_string(b) + " repeats " +
                              std::to_string(v));
      seen[v] = 1;
    }
  }
  for (int a = 0; a < n; ++a)
    if (cayley[0][a] != a || cayley[a][0] != a)
      throw NotAPermutation("element 0 is not a two-sided identity");

  std::vector<int> inverse(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (cayley[a][b] == 0) {
        if (cayley[b][a] != 0)
          throw NotAPermutation("one-sided inverse for element " + std::to_string(a));
        inverse[a] = b;
        break;
      }
    }
    if (inverse[a] < 0)
      throw NotAPermutation("element " + std::to_string(a) + " has no inverse");
  }

  auto assoc = [&](int a, int b, int c) {
    return cayley[cayley[a][b]][c] == cayley[a][cayley[b][c]];
  };
  if (n <= 64) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (!assoc(a, b, c))
            throw NotAPermutation("associativity fails at (" + std::to_string(a) + "," +
                                  std::to_string(b) + "," + std::to_string(c) + ")");
  } else {
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int trial = 0; trial < 20000; ++trial) {
      int a = pick(rng), b = pick(rng), c = pick(rng);
      if (!assoc(a, b, c))
        throw NotAPermutation("associativity fails at (" + std::to_string(a) + "," +
                              std::to_string(b) + "," + std::to_string(c) + ")");
    }
  }

  for (int g : generator_indices)
    if (g < 0 || g >= n)
      throw PointOutOfRange("generator index " + std::to_string(g));

  auto group = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  group->cayley_ = std::move(cayley);
  group->inverse_ = std::move(inverse);
  group->generator_indices_ = std::move(generator_indices);
  return group;
}

GroupAction GroupAction::make(GroupPtr group, int n_points,
                              std::vector<std::vector<int>> table) {
  if (!group) throw ConfigError("action needs a group");
  if (n_points <= 0) throw PointOutOfRange("action needs at least one point");
  const int n = group->order();
  if (static_cast<int>(table.size()) != n)
    throw PointOutOfRange("action table has " + std::to_string(table.size()) +
                          " rows, group order is " + std::to_string(n));
  for (int g = 0; g < n; ++g)
    check_permutation(table[g], n_points, "action of element " + std::to_string(g));
  for (int x = 0; x < n_points; ++x)
    if (table[0][x] != x)
      throw NotAPermutation("identity moves point " + std::to_string(x));
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      int gh = group->mul(g, h);
      for (int x = 0; x < n_points; ++x)
        if (table[gh][x] != table[g][table[h][x]])
          throw NotAPermutation("action is not compatible with multiplication at g=" +
                                std::to_string(g) + " h=" + std::to_string(h));
    }

  GroupAction action;
  action.group_ = std::move(group);
  action.n_points_ = n_points;
  action.table_ = std::move(table);

  std::vector<char> reached(n_points, 0);
  for (int g = 0; g < n; ++g) reached[action.table_[g][0]] = 1;
  action.transitive_ =
      std::all_of(reached.begin(), reached.end(), [](char c) { return c != 0; });
  return action;
}

Subgroup Subgroup::make(GroupPtr parent, std::vector<int> members) {
  if (!parent) throw ConfigError("subgroup needs a parent group");
  const int n = parent->order();
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.empty()) throw NotASubgroup("subgroup is empty");
  for (int g : members)
    if (g < 0 || g >= n) throw NotASubgroup("member " + std::to_string(g) + " out of range");
  if (!std::binary_search(members.begin(), members.end(), 0))
    throw NotASubgroup("identity missing");
  for (int a : members) {
    if (!std::binary_search(members.begin(), members.end(), parent->inv(a)))
      throw NotASubgroup("inverse of " + std::to_string(a) + " missing");
    for (int b : members)
      if (!std::binary_search(members.begin(), members.end(), parent->mul(a, b)))
        throw NotASubgroup("product " + std::to_string(a) + "*" + std::to_string(b) +
                           " escapes the set");
  }
  if (n % static_cast<int>(members.size()) != 0)
    throw NotASubgroup("order does not divide the group order");

  Subgroup sub;
  sub.parent_ = std::move(parent);
  sub.members_ = std::move(members);
  return sub;
}

bool Subgroup::contains(int g) const {
  return std::binary_search(members_.begin(), members_.end(), g);
}

BuiltGroup build_group_from_generators(const std::vector<Perm>& generators,
                                       int closure_cap) {
  if (generators.empty()) throw NotAPermutation("no generators given");
  const int n_points = static_cast<int>(generators[0].size());
  for (size_t j = 0; j < generators.size(); ++j)
    check_permutation(generators[j], n_points, "generator " + std::to_string(j));

  Perm id(n_points);
  for (int x = 0; x < n_points; ++x) id[x] = x;

  // BFS over words: new candidates are current*generator, i.e. the generator
  // acts first. Discovery order fixes the element numbering.
  std::vector<Perm> elems{id};
  std::map<Perm, int> index{{id, 0}};
  for (size_t i = 0; i < elems.size(); ++i) {
    for (const Perm& gen : generators) {
      Perm cand(n_points);
      for (int x = 0; x < n_points; ++x) cand[x] = elems[i][gen[x]];
      if (index.emplace(cand, static_cast<int>(elems.size())).second) {
        elems.push_back(std::move(cand));
        if (static_cast<int>(elems.size()) > closure_cap)
          throw ClosureTooLarge("closure exceeds " + std::to_string(closure_cap) +
                                " elements");
      }
    }
  }

  const int n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> cayley(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Perm prod(n_points);
      for (int x = 0; x < n_points; ++x) prod[x] = elems[a][elems[b][x]];
      cayley[a][b] = index.at(prod);
    }

  std::vector<int> gen_idx;
  gen_idx.reserve(generators.size());
  for (const Perm& gen : generators) gen_idx.push_back(index.at(gen));

  GroupPtr group = FiniteGroup::from_parts(std::move(cayley), std::move(gen_idx));

  std::vector<std::vector<int>> table(n);
  for (int g = 0; g < n; ++g) table[g] = elems[g];
  GroupAction action = GroupAction::make(group, n_points, std::move(table));
  return BuiltGroup{std::move(group), std::move(action)};
}

GroupAction action_on_itself(const GroupPtr& group) {
  if (!group) throw ConfigError("action needs a group");
  const int n = group->order();
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) table[g][h] = group->mul(g, h);
  return GroupAction::make(group, n, std::move(table));
}

Subgroup stabiliser(const GroupAction& action, int x) {
  if (x < 0 || x >= action.n_points())
    throw PointOutOfRange("point " + std::to_string(x));
  std::vector<int> members;
  for (int g = 0; g < action.group()->order(); ++g)
    if (action.apply(g, x) == x) members.push_back(g);
  return Subgroup::make(action.group(), std::move(members));
}

Subgroup conjugate_subgroup(const Subgroup& sub, int g) {
  const auto& parent = sub.parent();
  if (g < 0 || g >= parent->order())
    throw PointOutOfRange("element " + std::to_string(g));
  std::vector<int> members;
  members.reserve(sub.members().size());
  const int ginv = parent->inv(g);
  for (int h : sub.members()) members.push_back(parent->mul(parent->mul(g, h), ginv));
  return Subgroup::make(parent, std::move(members));
}

CosetDecomposition left_cosets(const GroupPtr& group, const Subgroup& sub) {
  if (!group) throw ConfigError("cosets need a group");
  if (sub.parent().get() != group.get())
    throw NotASubgroup("subgroup belongs to a different group");
  const int n = group->order();
  CosetDecomposition dec;
  dec.subgroup_ = sub;
  dec.coset_of_.assign(n, -1);
  // sweeping g ascending makes each coset's representative its lowest element
  for (int g = 0; g < n; ++g) {
    if (dec.coset_of_[g] >= 0) continue;
    int c = static_cast<int>(dec.representatives_.size());
    dec.representatives_.push_back(g);
    for (int h : sub.members()) dec.coset_of_[group->mul(g, h)] = c;
  }
  return dec;
}

std::vector<int> orbit(const GroupAction& action, int x) {
  if (x < 0 || x >= action.n_points())
    throw PointOutOfRange("point " + std::to_string(x));
  std::vector<char> seen(action.n_points(), 0);
  for (int g = 0; g < action.group()->order(); ++g) seen[action.apply(g, x)] = 1;
  std::vector<int> out;
  for (int y = 0; y < action.n_points(); ++y)
    if (seen[y]) out.push_back(y);
  return out;
}

}  // namespace qrf
