#pragma once

// Invariants of the quotient F(X)/H for subgroups H of a symplectic
// automorphism group: order-3 elements fixing a codimension-2 locus (L3),
// the counts n2, N3, n3, n31, n32, the fundamental group of the regular
// locus and b2 of a terminalization.

#include "fanoquot/identify.hpp"
#include "fanoquot/matrix_group.hpp"
#include "fanoquot/rank.hpp"

#include <memory>
#include <string>
#include <vector>

namespace fanoquot {

/// Projective normal-form test for diag(1,1,1,w,w,w) on an arbitrary lift:
/// m is not scalar, m^3 is scalar and char_poly(m) = (t^2 + a t + a^2)^3
/// for some a != 0.
bool is_l3_matrix(const MatC &m);

struct L3Set {
  /// One entry per subgroup: the smaller of the indices of g and g^2.
  std::vector<Elem> generators;
  std::vector<Subgroup> subgroups;

  std::size_t size() const { return generators.size(); }
};

L3Set detect_L3(const MatrixGroup &g);

struct SingularInvariants {
  int n2 = 0, N3 = 0, n3 = 0, n31 = 0, n32 = 0;
  friend bool operator==(const SingularInvariants &, const SingularInvariants &) = default;
};

/// Counts for H <= G; `h.gens` must generate H.
SingularInvariants singular_invariants(const FinGroup &g, const Subgroup &h, const L3Set &l3);

/// The subgroup N of H generated by involutions and L3 elements in H.
Subgroup codim2_subgroup(const FinGroup &g, const Subgroup &h, const L3Set &l3);
/// identify(H/N).
Identification pi1_regular_locus(const FinGroup &g, const Subgroup &h, const L3Set &l3);

/// 23 - rank + n2 + n31 + 2 n32; throws std::out_of_range unless 0 <= rank <= 23.
int b2_of_terminalization(int rank_coinvariant, int n2, int n31, int n32);

struct SubgroupRecord {
  int class_index = 0; // 1-based position in the processed list
  Subgroup subgroup;
  Identification id;
  SingularInvariants inv;
  RankResult rank;
  std::vector<int> b2; // one value per rank candidate
  Identification pi1;

  bool non_terminal() const { return inv.n2 + inv.n3 > 0; }
};

enum class SweepMode { FullSweep, FullGroupOnly, Targeted };

struct TableOptions {
  SweepMode mode = SweepMode::FullSweep;
  std::size_t budget = 1000;         // full sweeps refuse larger ambients
  bool all_subgroups = false;        // full sweep: keep rows with n2 + n3 == 0
  bool resolve_ranks = true;         // false: rank table candidates only
  std::vector<std::string> subgroups; // targeted mode: generator lists
  int threads = 1;
};

/// A group definition together with its enumerated group and L3 set.
struct Ambient {
  Ambient(GroupDefinition d, MatrixGroup g);

  GroupDefinition definition;
  MatrixGroup group;
  L3Set l3;
  std::shared_ptr<const FermatAction> fermat; // set for the Fermat ambient
};

/// Generators of one targeted subgroup: words over the generator names (or
/// g1, g2, ...) and inline matrix literals, separated by top-level commas.
Subgroup parse_subgroup_spec(const Ambient &a, const std::string &spec);

/// One record per subgroup class (or per targeted subgroup), sorted by
/// class index. Full sweeps drop rows with n2 + n3 == 0 unless
/// all_subgroups; requested subgroups are always reported.
/// Throws BudgetExceeded for a full sweep above the budget.
std::vector<SubgroupRecord> classification_table(const Ambient &a, const TableOptions &opt);

/// Narrows unresolved rank candidates using rank(K) <= rank(H) for K <= H
/// up to conjugacy, against resolved records in the same list.
void propagate_rank_bounds(const FinGroup &g, std::vector<SubgroupRecord> &records);

} // namespace fanoquot
