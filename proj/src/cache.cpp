#include "fanoquot/cache.hpp"

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fanoquot {

namespace {

constexpr const char *kMagic = "fanoquot-group-cache 1";

std::string canonical_text(const std::vector<MatC> &gens) {
  std::string s;
  for (const auto &g : gens) {
    s += to_string(g);
    s += '\n';
  }
  return s;
}

std::string to_hex(const std::string &bytes) {
  static const char *digits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 15]);
  }
  return out;
}

std::optional<std::string> from_hex(const std::string &hex) {
  if (hex.size() % 2) return std::nullopt;
  auto val = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    return -1;
  };
  std::string out(hex.size() / 2, '\0');
  for (std::size_t i = 0; i < out.size(); ++i) {
    int hi = val(hex[2 * i]), lo = val(hex[2 * i + 1]);
    if (hi < 0 || lo < 0) return std::nullopt;
    out[i] = static_cast<char>(hi * 16 + lo);
  }
  return out;
}

} // namespace

std::string generator_hash(const std::vector<MatC> &gens) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical_text(gens)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string cache_file(const std::string &dir, const std::vector<MatC> &gens) {
  return (std::filesystem::path(dir) / (generator_hash(gens) + ".grp")).string();
}

void store_group(const std::string &dir, const MatrixGroup &g) {
  std::filesystem::create_directories(dir);
  const auto &gens = g.input_generators();
  std::string path = cache_file(dir, gens);
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp);
    const FinGroup &fg = g.group();
    out << kMagic << '\n' << canonical_text(gens) << "order " << fg.order() << " generators " << fg.num_generators()
        << '\n';
    for (Elem x = 0; x < fg.order(); ++x) {
      out << to_hex(g.keys()[x]);
      for (int k = 0; k < fg.num_generators(); ++k) out << ' ' << fg.right(k, x);
      out << '\n';
    }
    if (!out) throw std::runtime_error("cannot write cache file " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

std::optional<MatrixGroup> load_cached_group(const std::string &dir, const std::vector<MatC> &gens) {
  std::ifstream in(cache_file(dir, gens));
  if (!in) return std::nullopt;
  std::string line;
  if (!std::getline(in, line) || line != kMagic) return std::nullopt;
  // the stored generator text guards against hash collisions
  std::istringstream expected(canonical_text(gens));
  std::string want;
  while (std::getline(expected, want))
    if (!std::getline(in, line) || line != want) return std::nullopt;
  std::string word1, word2;
  std::size_t order = 0;
  int ngens = 0;
  if (!std::getline(in, line)) return std::nullopt;
  std::istringstream head(line);
  if (!(head >> word1 >> order >> word2 >> ngens) || word1 != "order" || word2 != "generators" ||
      ngens != static_cast<int>(gens.size()) || order == 0)
    return std::nullopt;
  std::vector<std::string> keys(order);
  std::vector<std::vector<Elem>> right(ngens, std::vector<Elem>(order));
  for (std::size_t x = 0; x < order; ++x) {
    if (!std::getline(in, line)) return std::nullopt;
    std::istringstream row(line);
    std::string hex;
    if (!(row >> hex)) return std::nullopt;
    auto key = from_hex(hex);
    if (!key) return std::nullopt;
    keys[x] = std::move(*key);
    for (int k = 0; k < ngens; ++k) {
      unsigned long v = 0;
      if (!(row >> v) || v >= order) return std::nullopt;
      right[k][x] = static_cast<Elem>(v);
    }
  }
  try {
    auto group = std::make_shared<const FinGroup>(std::move(right));
    return MatrixGroup::from_parts(gens, std::move(group), std::move(keys));
  } catch (const std::exception &) {
    return std::nullopt;
  }
}

MatrixGroup enumerate_group(const std::vector<MatC> &gens, const CacheOptions &opt) {
  if (!opt.dir.empty())
    if (auto g = load_cached_group(opt.dir, gens)) {
      if (g->order() > opt.generate.order_cap) throw BudgetExceeded("cached group exceeds the order cap");
      return std::move(*g);
    }
  MatrixGroup g = MatrixGroup::generate(gens, opt.generate);
  if (!opt.dir.empty()) {
    try {
      store_group(opt.dir, g);
    } catch (const std::exception &) {
      // an unwritable cache only costs the next run an enumeration
    }
  }
  return g;
}

} // namespace fanoquot
