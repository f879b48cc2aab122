#pragma once

// Isomorphism invariants of finite groups and identification against the
// shipped small-group catalog (data/idcatalog).

#include "fanoquot/group.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fanoquot {

/// Small-group library id. id == 0 means "identified by order only" (used
/// for orders >= kIdentifyOrderLimit).
struct SmallGroupId {
  std::size_t order = 0;
  std::size_t id = 0;

  friend auto operator<=>(const SmallGroupId &, const SmallGroupId &) = default;
  /// "(660,13)"
  std::string to_string() const;
};

/// Groups of at least this order are reported as (order, 0).
inline constexpr std::size_t kIdentifyOrderLimit = 2520;

struct GroupFingerprint {
  std::size_t order = 0;
  std::map<int, std::size_t> order_histogram; // element order -> count
  std::size_t num_classes = 0;
  std::vector<std::size_t> abelian_invariants; // prime powers, ascending
  std::size_t center_order = 0;
  std::vector<std::size_t> derived_series; // |G|, |G'|, |G''|, ... until stable
  // [k-1] = number of subgroups of order k, k = 1..9; order 9 separates the
  // pairs (81,13)/(81,14) and (243,57)/(243,60) that agree on everything else
  std::vector<std::size_t> small_subgroups;

  friend bool operator==(const GroupFingerprint &, const GroupFingerprint &) = default;
  /// One-line text form, also the catalog key.
  std::string serialize() const;
};

GroupFingerprint fingerprint(const FinGroup &g);

/// Result of identify(): either a catalog id or the fingerprint that matched
/// nothing.
struct Identification {
  bool known = false;
  SmallGroupId id;
  std::string fingerprint; // set when !known

  /// "(order,id)" or "(order,?)"
  std::string to_string() const;
};

/// (order, 0) above the order limit; otherwise a catalog lookup.
Identification identify(const FinGroup &g);

/// Fingerprint -> id table. Fingerprints shared by several ids are kept as
/// ambiguous and never match.
class IdCatalog {
public:
  static const IdCatalog &shipped(); // loaded once from the data directory
  static IdCatalog load(const std::string &path);

  std::optional<SmallGroupId> lookup(const std::string &fingerprint) const;
  std::size_t size() const { return ids_.size(); }
  const std::vector<std::pair<std::string, SmallGroupId>> &entries() const { return entries_; }
  std::vector<SmallGroupId> ambiguous() const;

private:
  std::vector<std::pair<std::string, SmallGroupId>> entries_;
  std::map<std::string, std::vector<SmallGroupId>> ids_;
};

/// Normal closure of `seed` inside the subgroup h.
Subgroup normal_closure(const FinGroup &g, const Subgroup &h, const std::vector<Elem> &seed);
Subgroup derived_subgroup(const FinGroup &g, const Subgroup &h);

} // namespace fanoquot
