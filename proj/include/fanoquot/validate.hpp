#pragma once

// Consistency checks for shipped group definitions: text round trip,
// invertible generators, declared relations, enumerated order and
// small-group id.

#include "fanoquot/cache.hpp"
#include "fanoquot/catalog.hpp"

#include <string>
#include <vector>

namespace fanoquot {

struct ValidationCheck {
  std::string group;
  std::string check; // round-trip, invertible, relation, order, id
  bool ok = false;
  std::string detail;
};

/// Runs every check; enumeration is capped at twice the declared order so a
/// wrong generator cannot run away.
std::vector<ValidationCheck> validate_group(const GroupDefinition &d, const CacheOptions &cache);

} // namespace fanoquot
