#pragma once

// The data layer: group definitions (one file per group under data/groups),
// the coinvariant rank table, the rank overlay, the known deformation
// classes and the fixture list.

#include "fanoquot/identify.hpp"
#include "fanoquot/linalg.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace fanoquot {

class CatalogError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// The product of generators in `word` ("h1*h2") has projective order
/// `order`; checked on the matrices before any enumeration.
struct GroupRelation {
  std::string word;
  int order = 0;
  friend bool operator==(const GroupRelation &, const GroupRelation &) = default;
};

struct GroupDefinition {
  std::string name;
  std::size_t order = 0;
  SmallGroupId id;
  std::string source;
  std::string cubic;
  std::string notes;
  std::vector<GroupRelation> relations;
  std::vector<std::string> generator_names;
  std::vector<MatC> generators;
};

/// Parses the text form: "key: value" header lines, then blocks
/// "generator <name>" followed by a matrix literal that may span lines.
GroupDefinition parse_group_definition(const std::string &text);
/// Canonical text form; parse_group_definition(format(d)) == d.
std::string format_group_definition(const GroupDefinition &d);

/// Sorted keys of data/groups/*.group.
std::vector<std::string> group_keys();
/// Throws CatalogError for an unknown key.
GroupDefinition load_group(const std::string &key);

struct RankRow {
  std::string label; // e.g. "15/17"
  SmallGroupId id;
  int rank = 0; // coinvariant rank
};
std::vector<RankRow> load_rank_table(const std::string &path);

/// A resolution decision for one subgroup class of one ambient group. The
/// row applies when the id matches and every listed invariant has the given
/// value.
struct OverlayRow {
  std::string ambient; // catalog key
  SmallGroupId id;
  std::map<std::string, int> conditions; // keys: n2 N3 n3 n31 n32
  int rank = 0;
  std::string tag; // which resolution argument the row records
};
std::vector<OverlayRow> load_overlay(const std::string &path);

/// Orders of known classes by b2, one map per comparison family.
struct KnownClassCatalog {
  std::map<int, std::vector<long>> fujiki, k3, kummer;
};
std::map<int, std::vector<long>> load_known_class_table(const std::string &path);
KnownClassCatalog load_known_classes();

struct FixtureRow {
  SmallGroupId id;
  int b2 = 0;
  std::size_t ambient_order = 0;
};
std::vector<FixtureRow> load_fixtures(const std::string &path);

} // namespace fanoquot
