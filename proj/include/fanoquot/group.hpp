#pragma once

// Finite groups on element indices. A FinGroup knows nothing about how its
// elements are represented: it holds the right Cayley graph for a fixed
// generator list, a spanning tree of that graph (so every element has a
// word), and derived tables. Index 0 is the identity.

#include <cstdint>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace fanoquot {

using Elem = std::uint32_t;

class BudgetExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class MembershipError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Groups up to this order keep a dense multiplication table.
inline constexpr std::size_t kDenseTableLimit = 4096;

class FinGroup {
public:
  /// right[g][x] = x * gen_g. The graph must be connected and describe a
  /// group (callers build it from an actual closure). Element 0 is the
  /// identity; the spanning tree is rebuilt here by breadth-first search.
  explicit FinGroup(std::vector<std::vector<Elem>> right);

  std::size_t order() const { return order_; }
  int num_generators() const { return static_cast<int>(right_.size()); }
  /// Element index of generator g.
  Elem generator(int g) const { return right_[g][0]; }
  std::vector<Elem> generators() const;

  Elem right(int g, Elem x) const { return right_[g][x]; }
  /// gen_g * x
  Elem left(int g, Elem x) const { return left_[g][x]; }
  /// gen_g^-1 * x
  Elem left_inverse(int g, Elem x) const { return left_inv_[g][x]; }
  /// gen_g^-1 * x * gen_g
  Elem conjugate_by_generator(int g, Elem x) const { return right_[g][left_inv_[g][x]]; }

  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const { return inv_[a]; }
  Elem pow(Elem a, long e) const;
  /// b^-1 a b
  Elem conjugate(Elem a, Elem b) const { return mul(inv_[b], mul(a, b)); }
  Elem commutator(Elem a, Elem b) const { return mul(mul(inv_[a], inv_[b]), mul(a, b)); }

  /// Generator indices whose product (left to right) is x.
  std::vector<int> word(Elem x) const;
  /// Spanning-tree parent: x == right(parent_generator(x), parent(x)).
  Elem parent(Elem x) const { return parent_[x]; }
  int parent_generator(Elem x) const { return parent_gen_[x]; }
  /// Elements in breadth-first order from the identity (parents first).
  const std::vector<Elem> &bfs_order() const { return bfs_; }

  int element_order(Elem x) const { return orders_[x]; }
  const std::vector<int> &element_orders() const { return orders_; }

  bool has_dense_table() const { return !table_.empty(); }

private:
  void build_tree();
  void build_left();
  void build_inverse();
  void build_table();
  void build_orders();

  std::size_t order_;
  std::vector<std::vector<Elem>> right_, left_, left_inv_;
  std::vector<Elem> parent_, bfs_, inv_;
  std::vector<int> parent_gen_, orders_;
  std::vector<Elem> table_;
};

/// Result of a closure: the group plus, for every element index, the
/// position the element had in discovery order (so callers can carry
/// per-element payloads across the canonical relabelling).
struct ClosureResult {
  std::shared_ptr<const FinGroup> group;
  std::vector<std::size_t> discovery_index; // by canonical index
  std::vector<std::string> keys;            // by canonical index
};

/// Key interning for a breadth-first closure. Keys are serialized normal
/// forms; they sort the final element list, with the identity always first.
class ClosureBuilder {
public:
  /// `identity_key` is element 0. `ngens` generators.
  ClosureBuilder(std::string identity_key, int ngens, std::size_t cap);

  /// Looks up a key; returns {index, true} when the key is new.
  std::pair<std::size_t, bool> intern(std::string key);
  std::size_t discovered() const { return keys_.size(); }
  void set_edge(std::size_t from, int gen, std::size_t to) { right_[gen][from] = static_cast<Elem>(to); }

  /// Relabels by sorted key (identity first) and builds the group.
  ClosureResult finish();

private:
  std::size_t cap_;
  std::vector<std::string> keys_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::vector<Elem>> right_;
};

/// Generic closure driver shared by matrix groups, permutation groups and
/// coset actions. `expand(i, g)` returns the key of (i-th discovered
/// element) * gen_g; when that key is new, `adopt()` is called so the caller
/// can store the payload for the next discovery index. `release(i)` runs
/// once element i has been fully expanded.
ClosureResult generate_closure(std::string identity_key, int ngens, std::size_t cap,
                               const std::function<std::string(std::size_t, int)> &expand,
                               const std::function<void()> &adopt,
                               const std::function<void(std::size_t)> &release = {});

/// Group generated by permutations of {0..d-1}; images[g][i] = i^g.
ClosureResult permutation_group(const std::vector<std::vector<int>> &gens, std::size_t cap = 1u << 22);

// ------------------------------------------------------------ subgroups

/// Sorted member set of a subgroup of some FinGroup together with a
/// generating set (indices of the parent).
struct Subgroup {
  std::vector<Elem> members;
  std::vector<Elem> gens;

  std::size_t order() const { return members.size(); }
  bool contains(Elem x) const;
};

/// Smallest subgroup containing the seed.
Subgroup subgroup_closure(const FinGroup &g, const std::vector<Elem> &seed);
Subgroup whole_group(const FinGroup &g);
Subgroup cyclic_subgroup(const FinGroup &g, Elem x);

/// Subgroup closure that grows an existing subgroup by extra elements.
Subgroup extend_subgroup(const FinGroup &g, const Subgroup &h, const std::vector<Elem> &extra);

Subgroup centralizer(const FinGroup &g, const Subgroup &within, Elem x);
Subgroup normalizer(const FinGroup &g, const Subgroup &within, const Subgroup &k);
bool is_normal(const FinGroup &g, const Subgroup &h, const Subgroup &n);

/// The subgroup as a group in its own right. Element i of the result
/// corresponds to parent element `embedding[i]`.
struct SubgroupGroup {
  std::shared_ptr<const FinGroup> group;
  std::vector<Elem> embedding;
};
SubgroupGroup as_group(const FinGroup &g, const Subgroup &h);

/// H/N on cosets; each coset is named by its least member.
struct QuotientGroup {
  std::shared_ptr<const FinGroup> group;
  std::vector<Elem> coset_rep; // by quotient element index
};
/// Throws std::invalid_argument when N is not normal in H.
QuotientGroup quotient_group(const FinGroup &g, const Subgroup &h, const Subgroup &n);

/// Conjugacy classes of elements of a group, each sorted, ordered by least
/// member.
std::vector<std::vector<Elem>> conjugacy_classes(const FinGroup &g);
/// Classes of elements of `h` under conjugation by `h` (h a subgroup of g).
std::vector<std::vector<Elem>> conjugacy_classes(const FinGroup &g, const Subgroup &h);

/// 128-bit order-independent hash of a member set, used to deduplicate
/// subgroups.
struct SetHash {
  std::uint64_t a = 0, b = 0;
  friend bool operator==(const SetHash &x, const SetHash &y) { return x.a == y.a && x.b == y.b; }
};
struct SetHashHasher {
  std::size_t operator()(const SetHash &h) const { return static_cast<std::size_t>(h.a ^ (h.b * 0x9e3779b97f4a7c15ULL)); }
};
SetHash hash_members(const std::vector<Elem> &sorted_members);

struct SubgroupClass {
  Subgroup representative;
  std::size_t class_size; // number of conjugates
};

struct EnumerationOptions {
  /// Refuse groups larger than this (0 = no limit).
  std::size_t max_order = 1000;
};

/// One representative per conjugacy class of subgroups, sorted by
/// (order, least member list). Throws BudgetExceeded above max_order.
std::vector<SubgroupClass> subgroup_conjugacy_classes(const FinGroup &g, const EnumerationOptions &opt = {});

/// Reference enumeration used by the tests: every subgroup reached by
/// adding single elements to already known subgroups, classes formed by
/// conjugating with every element.
std::vector<SubgroupClass> subgroup_conjugacy_classes_bruteforce(const FinGroup &g);

/// All conjugates of a subgroup under the whole group.
std::vector<Subgroup> conjugates(const FinGroup &g, const Subgroup &h);
bool are_conjugate(const FinGroup &g, const Subgroup &a, const Subgroup &b);

} // namespace fanoquot
