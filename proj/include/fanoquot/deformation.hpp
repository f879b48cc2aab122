#pragma once

// Numerical obstruction to deformation equivalence. A terminalization with
// group H and second Betti number b can only be deformation equivalent to a
// known class with group H' and the same b if sqrt(|H|/|H'|) is rational
// (sqrt(|H|/(3|H'|)) for Kummer-type classes). The test is necessary, not
// sufficient, so a match only means "numerically unobstructed".

#include "fanoquot/catalog.hpp"
#include "fanoquot/cyclotomic.hpp"

#include <string>
#include <vector>

namespace fanoquot {

/// True iff the reduced numerator and denominator of q are perfect squares.
/// Throws std::domain_error for q <= 0.
bool is_square_rational(const Rational &q);

struct DeformationEntry {
  SmallGroupId id;
  int b2 = 0;
  std::size_t ambient_order = 0;

  friend auto operator<=>(const DeformationEntry &, const DeformationEntry &) = default;
};

enum class KnownFamily { Fujiki, K3, Kummer };
std::string to_string(KnownFamily f);

/// Per-entry outcome against one family.
struct FamilyMatch {
  bool b2_listed = false;   // the family has classes with this b2
  long matched_order = 0;   // first order making the ratio a square, or 0
  bool matched() const { return matched_order != 0; }
};

struct ObstructionRow {
  DeformationEntry entry;
  FamilyMatch fujiki, k3, kummer;
  bool new_candidate() const { return !fujiki.matched() && !k3.matched() && !kummer.matched(); }
  /// "new candidate" or "numerically unobstructed"
  std::string verdict() const;
};

struct ObstructionReport {
  std::vector<ObstructionRow> rows; // deduplicated, in input order
  std::vector<DeformationEntry> unmatched_fujiki, unmatched_k3, unmatched_kummer, new_candidates;
};

/// Whether |H| is compatible with a family at b2 (ratio uses the entry's own
/// group order, not the ambient order).
FamilyMatch match_family(std::size_t order, int b2, const std::map<int, std::vector<long>> &family,
                         KnownFamily kind);

/// Identical entries (same id, b2 and ambient order) are reported once.
ObstructionReport obstruction_report(const std::vector<DeformationEntry> &entries, const KnownClassCatalog &catalog);

std::vector<DeformationEntry> entries_from_fixtures(const std::vector<FixtureRow> &rows);

} // namespace fanoquot
