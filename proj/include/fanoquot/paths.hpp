#pragma once

#include <string>

namespace fanoquot {

/// Directory holding the shipped data files: $FANOQUOT_DATA_DIR when set,
/// otherwise the source tree's data/ directory fixed at build time.
std::string data_dir();
std::string data_path(const std::string &relative);

} // namespace fanoquot
