#include "fanoquot/identify.hpp"

#include "fanoquot/paths.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace fanoquot {

std::string SmallGroupId::to_string() const {
  return "(" + std::to_string(order) + "," + std::to_string(id) + ")";
}

std::string Identification::to_string() const {
  return known ? id.to_string() : "(" + std::to_string(id.order) + ",?)";
}

Subgroup normal_closure(const FinGroup &g, const Subgroup &h, const std::vector<Elem> &seed) {
  Subgroup n = subgroup_closure(g, seed);
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<Elem> gens = n.gens;
    for (Elem x : gens)
      for (Elem t : h.gens) {
        Elem y = g.conjugate(x, t);
        if (!n.contains(y)) {
          n = extend_subgroup(g, n, {y});
          grew = true;
        }
      }
  }
  return n;
}

Subgroup derived_subgroup(const FinGroup &g, const Subgroup &h) {
  std::vector<Elem> seed;
  for (std::size_t i = 0; i < h.gens.size(); ++i)
    for (std::size_t j = i + 1; j < h.gens.size(); ++j) seed.push_back(g.commutator(h.gens[i], h.gens[j]));
  return normal_closure(g, h, seed);
}

namespace {

std::vector<int> prime_factors(std::size_t n) {
  std::vector<int> ps;
  for (std::size_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      ps.push_back(static_cast<int>(p));
      while (n % p == 0) n /= p;
    }
  if (n > 1) ps.push_back(static_cast<int>(n));
  return ps;
}

// Invariants of a finite abelian group from the number of solutions of
// x^(p^k) = 1.
std::vector<std::size_t> abelian_invariants(const FinGroup &a) {
  std::vector<std::size_t> inv;
  for (int p : prime_factors(a.order())) {
    std::vector<int> logs{0}; // logs[k] = log_p #{x : x^(p^k) = 1}
    std::size_t pk = 1;
    while (true) {
      pk *= p;
      std::size_t count = 0;
      for (int o : a.element_orders())
        if (pk % o == 0) ++count;
      int l = 0;
      for (std::size_t c = count; c > 1; c /= p) ++l;
      if (l == logs.back()) break;
      logs.push_back(l);
    }
    // number of cyclic factors of order >= p^k is logs[k] - logs[k-1]
    for (std::size_t k = 1; k < logs.size(); ++k) {
      int here = logs[k] - logs[k - 1];
      int next = k + 1 < logs.size() ? logs[k + 1] - logs[k] : 0;
      std::size_t q = 1;
      for (std::size_t i = 0; i < k; ++i) q *= p;
      for (int i = 0; i < here - next; ++i) inv.push_back(q);
    }
  }
  std::sort(inv.begin(), inv.end());
  return inv;
}

// Subgroups of order <= 9 by extending known ones one element at a time.
std::vector<std::size_t> small_subgroup_counts(const FinGroup &g) {
  constexpr std::size_t kMax = 9;
  std::vector<std::size_t> counts(kMax, 0);
  std::vector<std::vector<Elem>> level{{0}};
  std::unordered_set<SetHash, SetHashHasher> seen{hash_members({0})};
  counts[0] = 1;
  std::vector<Elem> buf;
  for (std::size_t i = 0; i < level.size(); ++i) {
    const std::vector<Elem> base = level[i];
    for (Elem x = 1; x < g.order(); ++x) {
      if (std::binary_search(base.begin(), base.end(), x)) continue;
      if (g.element_order(x) > static_cast<int>(kMax)) continue;
      // close base + x under right multiplication, giving up above kMax
      buf = base;
      std::vector<Elem> gens;
      gens.push_back(x);
      for (Elem b : base)
        if (b) gens.push_back(b);
      bool too_big = false;
      for (std::size_t k = 0; k < buf.size() && !too_big; ++k)
        for (Elem t : gens) {
          Elem y = g.mul(buf[k], t);
          if (std::find(buf.begin(), buf.end(), y) != buf.end()) continue;
          buf.push_back(y);
          if (buf.size() > kMax) {
            too_big = true;
            break;
          }
        }
      if (too_big) continue;
      std::sort(buf.begin(), buf.end());
      if (!seen.insert(hash_members(buf)).second) continue;
      ++counts[buf.size() - 1];
      level.push_back(buf);
    }
  }
  return counts;
}

} // namespace

GroupFingerprint fingerprint(const FinGroup &g) {
  GroupFingerprint f;
  f.order = g.order();
  for (int o : g.element_orders()) ++f.order_histogram[o];
  f.num_classes = conjugacy_classes(g).size();

  Subgroup all = whole_group(g);
  f.center_order = 0;
  for (Elem x = 0; x < g.order(); ++x) {
    bool central = true;
    for (Elem t : all.gens)
      if (g.mul(x, t) != g.mul(t, x)) {
        central = false;
        break;
      }
    if (central) ++f.center_order;
  }

  Subgroup d = derived_subgroup(g, all);
  f.abelian_invariants = abelian_invariants(*quotient_group(g, all, d).group);
  f.derived_series.push_back(g.order());
  Subgroup cur = all;
  while (true) {
    Subgroup next = derived_subgroup(g, cur);
    if (next.order() == cur.order()) break;
    f.derived_series.push_back(next.order());
    cur = std::move(next);
  }
  f.small_subgroups = small_subgroup_counts(g);
  return f;
}

std::string GroupFingerprint::serialize() const {
  std::ostringstream s;
  auto list = [&](const std::vector<std::size_t> &v) {
    for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
  };
  s << "o" << order << ";h";
  bool first = true;
  for (const auto &[o, c] : order_histogram) {
    s << (first ? "" : ",") << o << ":" << c;
    first = false;
  }
  s << ";k" << num_classes << ";a";
  list(abelian_invariants);
  s << ";z" << center_order << ";d";
  list(derived_series);
  s << ";s";
  list(small_subgroups);
  return s.str();
}

IdCatalog IdCatalog::load(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open identification catalog " + path);
  IdCatalog c;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    SmallGroupId id;
    std::string fp;
    if (!(ls >> id.order >> id.id >> fp)) throw std::runtime_error("bad catalog line: " + line);
    c.entries_.emplace_back(fp, id);
    c.ids_[fp].push_back(id);
  }
  return c;
}

const IdCatalog &IdCatalog::shipped() {
  static const IdCatalog c = load(data_path("idcatalog"));
  return c;
}

std::optional<SmallGroupId> IdCatalog::lookup(const std::string &fp) const {
  auto it = ids_.find(fp);
  if (it == ids_.end() || it->second.size() != 1) return std::nullopt;
  return it->second[0];
}

std::vector<SmallGroupId> IdCatalog::ambiguous() const {
  std::vector<SmallGroupId> r;
  for (const auto &[fp, ids] : ids_)
    if (ids.size() > 1) r.insert(r.end(), ids.begin(), ids.end());
  std::sort(r.begin(), r.end());
  return r;
}

Identification identify(const FinGroup &g) {
  Identification r;
  r.id.order = g.order();
  if (g.order() >= kIdentifyOrderLimit) {
    r.known = true;
    return r;
  }
  std::string fp = fingerprint(g).serialize();
  if (auto id = IdCatalog::shipped().lookup(fp)) {
    r.known = true;
    r.id = *id;
  } else {
    r.fingerprint = std::move(fp);
  }
  return r;
}

} // namespace fanoquot
