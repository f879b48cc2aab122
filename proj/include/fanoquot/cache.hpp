#pragma once

// On-disk cache of enumerated matrix groups. An entry stores the element
// keys in canonical order and the right Cayley table, keyed by a content
// hash of the generator list; loading skips the matrix closure. A group
// rebuilt from the cache is identical to a freshly enumerated one.

#include "fanoquot/matrix_group.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fanoquot {

/// FNV-1a (64 bit) over the canonical text of the generators, as 16 hex
/// digits.
std::string generator_hash(const std::vector<MatC> &gens);

/// Path of the cache file for a generator list inside `dir`.
std::string cache_file(const std::string &dir, const std::vector<MatC> &gens);

void store_group(const std::string &dir, const MatrixGroup &g);
/// nullopt when the file is missing, stale or malformed.
std::optional<MatrixGroup> load_cached_group(const std::string &dir, const std::vector<MatC> &gens);

struct CacheOptions {
  std::string dir; // empty disables the cache
  GenerateOptions generate;
};

/// Loads from the cache when possible; otherwise enumerates and stores.
MatrixGroup enumerate_group(const std::vector<MatC> &gens, const CacheOptions &opt);

} // namespace fanoquot
