#include "fanoquot/group.hpp"

#include <algorithm>
#include <cstring>
#include <deque>
#include <numeric>
#include <unordered_set>

namespace fanoquot {

// ----------------------------------------------------------- FinGroup

FinGroup::FinGroup(std::vector<std::vector<Elem>> right) : order_(right.empty() ? 1 : right[0].size()), right_(std::move(right)) {
  if (right_.empty()) right_.push_back({0}); // trivial group with a dummy generator
  for (const auto &r : right_)
    if (r.size() != order_) throw std::invalid_argument("FinGroup: ragged Cayley graph");
  build_tree();
  build_left();
  build_inverse();
  if (order_ <= kDenseTableLimit) build_table();
  build_orders();
}

void FinGroup::build_tree() {
  parent_.assign(order_, 0);
  parent_gen_.assign(order_, -1);
  std::vector<char> seen(order_, 0);
  bfs_.clear();
  bfs_.reserve(order_);
  bfs_.push_back(0);
  seen[0] = 1;
  for (std::size_t i = 0; i < bfs_.size(); ++i) {
    Elem x = bfs_[i];
    for (int g = 0; g < num_generators(); ++g) {
      Elem y = right_[g][x];
      if (seen[y]) continue;
      seen[y] = 1;
      parent_[y] = x;
      parent_gen_[y] = g;
      bfs_.push_back(y);
    }
  }
  if (bfs_.size() != order_) throw std::invalid_argument("FinGroup: Cayley graph is not connected");
}

void FinGroup::build_left() {
  const int ng = num_generators();
  left_.assign(ng, std::vector<Elem>(order_));
  left_inv_.assign(ng, std::vector<Elem>(order_));
  for (int g = 0; g < ng; ++g) {
    auto &l = left_[g];
    l[0] = generator(g);
    // g * (p * h) = (g * p) * h
    for (std::size_t i = 1; i < order_; ++i) {
      Elem x = bfs_[i];
      l[x] = right_[parent_gen_[x]][l[parent_[x]]];
    }
    for (std::size_t x = 0; x < order_; ++x) left_inv_[g][l[x]] = static_cast<Elem>(x);
  }
}

void FinGroup::build_inverse() {
  inv_.assign(order_, 0);
  // (p * h)^-1 = h^-1 * p^-1
  for (std::size_t i = 1; i < order_; ++i) {
    Elem x = bfs_[i];
    inv_[x] = left_inv_[parent_gen_[x]][inv_[parent_[x]]];
  }
}

void FinGroup::build_table() {
  table_.assign(order_ * order_, 0);
  for (std::size_t a = 0; a < order_; ++a) {
    Elem *row = table_.data() + a * order_;
    row[0] = static_cast<Elem>(a);
    for (std::size_t i = 1; i < order_; ++i) {
      Elem x = bfs_[i];
      row[x] = right_[parent_gen_[x]][row[parent_[x]]];
    }
  }
}

void FinGroup::build_orders() {
  orders_.assign(order_, 1);
  for (std::size_t x = 1; x < order_; ++x) {
    Elem y = static_cast<Elem>(x);
    int k = 1;
    while (y != 0) {
      y = mul(y, static_cast<Elem>(x));
      ++k;
    }
    orders_[x] = k;
  }
}

Elem FinGroup::mul(Elem a, Elem b) const {
  if (!table_.empty()) return table_[static_cast<std::size_t>(a) * order_ + b];
  // a = p * h  =>  a * b = p * (h * b)
  Elem x = b;
  while (a != 0) {
    x = left_[parent_gen_[a]][x];
    a = parent_[a];
  }
  return x;
}

Elem FinGroup::pow(Elem a, long e) const {
  const long n = orders_.empty() ? 0 : orders_[a];
  if (n) {
    e %= n;
    if (e < 0) e += n;
  } else if (e < 0) {
    a = inv_[a];
    e = -e;
  }
  Elem r = 0;
  for (; e > 0; e >>= 1) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
  }
  return r;
}

std::vector<Elem> FinGroup::generators() const {
  std::vector<Elem> r;
  for (int g = 0; g < num_generators(); ++g) r.push_back(generator(g));
  return r;
}

std::vector<int> FinGroup::word(Elem x) const {
  std::vector<int> w;
  while (x != 0) {
    w.push_back(parent_gen_[x]);
    x = parent_[x];
  }
  std::reverse(w.begin(), w.end());
  return w;
}

// ------------------------------------------------------------ closure

ClosureBuilder::ClosureBuilder(std::string identity_key, int ngens, std::size_t cap)
    : cap_(cap), right_(ngens) {
  intern(std::move(identity_key));
}

std::pair<std::size_t, bool> ClosureBuilder::intern(std::string key) {
  auto [it, fresh] = index_.try_emplace(key, keys_.size());
  if (!fresh) return {it->second, false};
  if (cap_ && keys_.size() >= cap_)
    throw BudgetExceeded("group closure exceeded the order cap of " + std::to_string(cap_));
  keys_.push_back(std::move(key));
  for (auto &r : right_) r.push_back(0);
  return {keys_.size() - 1, true};
}

ClosureResult ClosureBuilder::finish() {
  const std::size_t n = keys_.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin() + 1, order.end(), [&](std::size_t a, std::size_t b) { return keys_[a] < keys_[b]; });
  std::vector<Elem> relabel(n);
  for (std::size_t i = 0; i < n; ++i) relabel[order[i]] = static_cast<Elem>(i);
  std::vector<std::vector<Elem>> right(right_.size(), std::vector<Elem>(n));
  for (std::size_t g = 0; g < right_.size(); ++g)
    for (std::size_t i = 0; i < n; ++i) right[g][relabel[i]] = relabel[right_[g][i]];
  ClosureResult r;
  r.group = std::make_shared<const FinGroup>(std::move(right));
  r.keys.resize(n);
  for (std::size_t i = 0; i < n; ++i) r.keys[i] = std::move(keys_[order[i]]);
  r.discovery_index = std::move(order);
  index_.clear();
  keys_.clear();
  return r;
}

ClosureResult generate_closure(std::string identity_key, int ngens, std::size_t cap,
                               const std::function<std::string(std::size_t, int)> &expand,
                               const std::function<void()> &adopt,
                               const std::function<void(std::size_t)> &release) {
  ClosureBuilder b(std::move(identity_key), ngens, cap);
  for (std::size_t i = 0; i < b.discovered(); ++i) {
    for (int g = 0; g < ngens; ++g) {
      auto [j, fresh] = b.intern(expand(i, g));
      if (fresh) adopt();
      b.set_edge(i, g, j);
    }
    if (release) release(i);
  }
  return b.finish();
}

namespace {

std::string perm_key(const std::vector<int> &p) {
  std::string k(p.size() * 2, '\0');
  for (std::size_t i = 0; i < p.size(); ++i) {
    k[2 * i] = static_cast<char>(p[i] >> 8);
    k[2 * i + 1] = static_cast<char>(p[i] & 0xff);
  }
  return k;
}

std::string index_key(Elem x) {
  std::string k(4, '\0');
  for (int i = 0; i < 4; ++i) k[i] = static_cast<char>((x >> (24 - 8 * i)) & 0xff);
  return k;
}

} // namespace

ClosureResult permutation_group(const std::vector<std::vector<int>> &gens, std::size_t cap) {
  const std::size_t d = gens.empty() ? 0 : gens[0].size();
  std::vector<int> id(d);
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::vector<int>> elems{id};
  std::vector<int> pending;
  return generate_closure(
      perm_key(id), static_cast<int>(gens.size()), cap,
      [&](std::size_t i, int g) {
        // x * g: apply x, then g
        pending.assign(d, 0);
        for (std::size_t p = 0; p < d; ++p) pending[p] = gens[g][elems[i][p]];
        return perm_key(pending);
      },
      [&] { elems.push_back(pending); });
}

// ---------------------------------------------------------- subgroups

bool Subgroup::contains(Elem x) const { return std::binary_search(members.begin(), members.end(), x); }

namespace {

struct Bits {
  std::vector<std::uint64_t> w;
  explicit Bits(std::size_t n) : w((n + 63) / 64, 0) {}
  bool test(Elem x) const { return (w[x >> 6] >> (x & 63)) & 1; }
  void set(Elem x) { w[x >> 6] |= std::uint64_t(1) << (x & 63); }
};

Bits bits_of(const FinGroup &g, const std::vector<Elem> &members) {
  Bits b(g.order());
  for (Elem x : members) b.set(x);
  return b;
}

} // namespace

Subgroup whole_group(const FinGroup &g) {
  Subgroup s;
  s.members.resize(g.order());
  std::iota(s.members.begin(), s.members.end(), 0);
  s.gens = g.generators();
  if (g.order() == 1) s.gens.clear();
  return s;
}

Subgroup extend_subgroup(const FinGroup &g, const Subgroup &h, const std::vector<Elem> &extra) {
  Subgroup s = h;
  if (s.members.empty()) s.members = {0};
  Bits in = bits_of(g, s.members);
  std::vector<Elem> list = s.members;
  for (Elem x : extra) {
    if (in.test(x)) continue;
    s.gens.push_back(x);
    // the new group is closed under right multiplication by every generator
    for (std::size_t i = 0; i < list.size(); ++i) {
      for (Elem t : s.gens) {
        Elem y = g.mul(list[i], t);
        if (in.test(y)) continue;
        in.set(y);
        list.push_back(y);
      }
      if (2 * list.size() > g.order()) {
        Subgroup all = whole_group(g);
        all.gens = s.gens;
        return all;
      }
    }
  }
  std::sort(list.begin(), list.end());
  s.members = std::move(list);
  return s;
}

Subgroup subgroup_closure(const FinGroup &g, const std::vector<Elem> &seed) {
  Subgroup trivial;
  trivial.members = {0};
  return extend_subgroup(g, trivial, seed);
}

Subgroup cyclic_subgroup(const FinGroup &g, Elem x) {
  Subgroup s;
  Elem y = 0;
  do {
    s.members.push_back(y);
    y = g.mul(y, x);
  } while (y != 0);
  std::sort(s.members.begin(), s.members.end());
  if (x != 0) s.gens = {x};
  return s;
}

namespace {

Subgroup from_members(const FinGroup &g, std::vector<Elem> members) {
  Subgroup s;
  s.members = {0};
  Bits in(g.order());
  in.set(0);
  for (Elem m : members) {
    if (in.test(m)) continue;
    s = extend_subgroup(g, s, {m});
    in = bits_of(g, s.members);
  }
  if (s.members.size() != members.size()) throw std::logic_error("member set is not a subgroup");
  return s;
}

} // namespace

Subgroup centralizer(const FinGroup &g, const Subgroup &within, Elem x) {
  std::vector<Elem> m;
  for (Elem h : within.members)
    if (g.mul(h, x) == g.mul(x, h)) m.push_back(h);
  return from_members(g, std::move(m));
}

Subgroup normalizer(const FinGroup &g, const Subgroup &within, const Subgroup &k) {
  Bits in = bits_of(g, k.members);
  std::vector<Elem> m;
  for (Elem h : within.members) {
    bool ok = true;
    for (Elem t : k.gens)
      if (!in.test(g.conjugate(t, h))) {
        ok = false;
        break;
      }
    if (ok) m.push_back(h);
  }
  return from_members(g, std::move(m));
}

bool is_normal(const FinGroup &g, const Subgroup &h, const Subgroup &n) {
  Bits in = bits_of(g, n.members);
  for (Elem x : h.gens)
    for (Elem t : n.gens)
      if (!in.test(g.conjugate(t, x))) return false;
  return true;
}

SubgroupGroup as_group(const FinGroup &g, const Subgroup &h) {
  std::vector<Elem> elems{0};
  Elem pending = 0;
  auto res = generate_closure(
      index_key(0), static_cast<int>(h.gens.size()), 0,
      [&](std::size_t i, int k) {
        pending = g.mul(elems[i], h.gens[k]);
        return index_key(pending);
      },
      [&] { elems.push_back(pending); });
  SubgroupGroup r;
  r.group = res.group;
  r.embedding.resize(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) r.embedding[i] = elems[res.discovery_index[i]];
  return r;
}

QuotientGroup quotient_group(const FinGroup &g, const Subgroup &h, const Subgroup &n) {
  if (!is_normal(g, h, n)) throw std::invalid_argument("quotient_group: subgroup is not normal");
  std::vector<Elem> rep(g.order(), static_cast<Elem>(-1));
  for (Elem x : h.members) {
    if (rep[x] != static_cast<Elem>(-1)) continue;
    for (Elem m : n.members) rep[g.mul(x, m)] = x; // x is the least member of xN
  }
  std::vector<Elem> elems{0};
  Elem pending = 0;
  auto res = generate_closure(
      index_key(0), static_cast<int>(h.gens.size()), 0,
      [&](std::size_t i, int k) {
        pending = rep[g.mul(elems[i], h.gens[k])];
        return index_key(pending);
      },
      [&] { elems.push_back(pending); });
  QuotientGroup q;
  q.group = res.group;
  q.coset_rep.resize(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) q.coset_rep[i] = elems[res.discovery_index[i]];
  return q;
}

std::vector<std::vector<Elem>> conjugacy_classes(const FinGroup &g) {
  std::vector<char> seen(g.order(), 0);
  std::vector<std::vector<Elem>> classes;
  for (Elem x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    std::vector<Elem> orbit{x};
    seen[x] = 1;
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (int k = 0; k < g.num_generators(); ++k) {
        Elem y = g.conjugate_by_generator(k, orbit[i]);
        if (!seen[y]) {
          seen[y] = 1;
          orbit.push_back(y);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    classes.push_back(std::move(orbit));
  }
  return classes;
}

std::vector<std::vector<Elem>> conjugacy_classes(const FinGroup &g, const Subgroup &h) {
  Bits done(g.order());
  std::vector<std::vector<Elem>> classes;
  for (Elem x : h.members) {
    if (done.test(x)) continue;
    std::vector<Elem> orbit{x};
    done.set(x);
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (Elem t : h.gens) {
        Elem y = g.conjugate(orbit[i], t);
        if (!done.test(y)) {
          done.set(y);
          orbit.push_back(y);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    classes.push_back(std::move(orbit));
  }
  return classes;
}

// ------------------------------------------------ subgroup enumeration

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::vector<Elem> conjugate_members(const FinGroup &g, const std::vector<Elem> &m, int k) {
  std::vector<Elem> r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) r[i] = g.conjugate_by_generator(k, m[i]);
  std::sort(r.begin(), r.end());
  return r;
}

// All conjugates of h; the first entry is the lexicographically least one.
std::vector<std::vector<Elem>> orbit_of(const FinGroup &g, const std::vector<Elem> &members,
                                        std::unordered_set<SetHash, SetHashHasher> *hashes) {
  std::vector<std::vector<Elem>> orbit{members};
  std::unordered_set<SetHash, SetHashHasher> local{hash_members(members)};
  for (std::size_t i = 0; i < orbit.size(); ++i)
    for (int k = 0; k < g.num_generators(); ++k) {
      auto c = conjugate_members(g, orbit[i], k);
      if (local.insert(hash_members(c)).second) orbit.push_back(std::move(c));
    }
  auto least = std::min_element(orbit.begin(), orbit.end());
  std::iter_swap(orbit.begin(), least);
  if (hashes) hashes->insert(local.begin(), local.end());
  return orbit;
}

void sort_classes(std::vector<SubgroupClass> &cls) {
  std::sort(cls.begin(), cls.end(), [](const SubgroupClass &a, const SubgroupClass &b) {
    if (a.representative.order() != b.representative.order()) return a.representative.order() < b.representative.order();
    return a.representative.members < b.representative.members;
  });
}

bool is_prime_power(int n) {
  if (n < 2) return false;
  int p = 2;
  while (n % p) ++p;
  while (n % p == 0) n /= p;
  return n == 1;
}

} // namespace

SetHash hash_members(const std::vector<Elem> &m) {
  SetHash h;
  for (Elem x : m) {
    h.a += splitmix(x);
    h.b += splitmix(static_cast<std::uint64_t>(x) ^ 0x5bd1e9955bd1e995ULL);
  }
  h.a += splitmix(m.size() + 0x1000000000ULL);
  return h;
}

std::vector<Subgroup> conjugates(const FinGroup &g, const Subgroup &h) {
  std::vector<Subgroup> r;
  for (auto &m : orbit_of(g, h.members, nullptr)) r.push_back(from_members(g, std::move(m)));
  return r;
}

bool are_conjugate(const FinGroup &g, const Subgroup &a, const Subgroup &b) {
  if (a.order() != b.order()) return false;
  for (const auto &m : orbit_of(g, a.members, nullptr))
    if (m == b.members) return true;
  return false;
}

std::vector<SubgroupClass> subgroup_conjugacy_classes(const FinGroup &g, const EnumerationOptions &opt) {
  if (opt.max_order && g.order() > opt.max_order)
    throw BudgetExceeded("subgroup enumeration budget exceeded: group order " + std::to_string(g.order()) +
                         " > " + std::to_string(opt.max_order));
  // cyclic subgroups of prime-power order generate everything
  std::vector<Elem> cyc_gens;
  {
    std::unordered_set<SetHash, SetHashHasher> seen;
    for (Elem x = 1; x < g.order(); ++x) {
      if (!is_prime_power(g.element_order(x))) continue;
      if (seen.insert(hash_members(cyclic_subgroup(g, x).members)).second) cyc_gens.push_back(x);
    }
  }
  std::unordered_set<SetHash, SetHashHasher> known;
  std::vector<SubgroupClass> reps;
  auto add = [&](const Subgroup &s) {
    if (known.count(hash_members(s.members))) return;
    auto orbit = orbit_of(g, s.members, &known);
    SubgroupClass c;
    c.representative = orbit[0] == s.members ? s : from_members(g, orbit[0]);
    c.class_size = orbit.size();
    reps.push_back(std::move(c));
  };
  // cyclic_index[y]: position in cyc_gens of <y>, or -1
  std::vector<int> cyclic_index(g.order(), -1);
  for (std::size_t c = 0; c < cyc_gens.size(); ++c) {
    Elem x = cyc_gens[c];
    int n = g.element_order(x);
    for (int k = 1; k < n; ++k)
      if (std::gcd(k, n) == 1) cyclic_index[g.pow(x, k)] = static_cast<int>(c);
  }
  Subgroup trivial;
  trivial.members = {0};
  add(trivial);
  const Subgroup all = whole_group(g);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    const Subgroup r = reps[i].representative;
    if (r.order() == g.order()) continue;
    Bits in = bits_of(g, r.members);
    // <r, x> and <r, x^n> are conjugate for n in N(r): one x per N(r)-orbit
    Subgroup n = normalizer(g, all, r);
    std::vector<char> seen(cyc_gens.size(), 0);
    std::unordered_set<SetHash, SetHashHasher> tried;
    for (std::size_t c = 0; c < cyc_gens.size(); ++c) {
      if (seen[c]) continue;
      seen[c] = 1;
      for (std::vector<std::size_t> orbit{c}; !orbit.empty();) {
        Elem y = cyc_gens[orbit.back()];
        orbit.pop_back();
        for (Elem t : n.gens) {
          int d = cyclic_index[g.conjugate(y, t)];
          if (!seen[d]) {
            seen[d] = 1;
            orbit.push_back(static_cast<std::size_t>(d));
          }
        }
      }
      Elem x = cyc_gens[c];
      if (in.test(x)) continue;
      Subgroup j = extend_subgroup(g, r, {x});
      if (!tried.insert(hash_members(j.members)).second) continue;
      add(j);
    }
  }
  sort_classes(reps);
  return reps;
}

std::vector<SubgroupClass> subgroup_conjugacy_classes_bruteforce(const FinGroup &g) {
  std::vector<Subgroup> all;
  std::unordered_set<SetHash, SetHashHasher> seen;
  Subgroup trivial;
  trivial.members = {0};
  all.push_back(trivial);
  seen.insert(hash_members(trivial.members));
  for (std::size_t i = 0; i < all.size(); ++i) {
    Bits in = bits_of(g, all[i].members);
    for (Elem x = 1; x < g.order(); ++x) {
      if (in.test(x)) continue;
      Subgroup j = extend_subgroup(g, all[i], {x});
      if (seen.insert(hash_members(j.members)).second) all.push_back(std::move(j));
    }
  }
  // classes by conjugating with every element
  std::unordered_map<SetHash, std::size_t, SetHashHasher> where;
  for (std::size_t i = 0; i < all.size(); ++i) where[hash_members(all[i].members)] = i;
  std::vector<char> done(all.size(), 0);
  std::vector<SubgroupClass> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (done[i]) continue;
    std::vector<std::size_t> cls;
    for (Elem t = 0; t < g.order(); ++t) {
      std::vector<Elem> c(all[i].members.size());
      for (std::size_t k = 0; k < c.size(); ++k) c[k] = g.conjugate(all[i].members[k], t);
      std::sort(c.begin(), c.end());
      std::size_t j = where.at(hash_members(c));
      if (!done[j]) {
        done[j] = 1;
        cls.push_back(j);
      }
    }
    std::size_t best = cls[0];
    for (std::size_t j : cls)
      if (all[j].members < all[best].members) best = j;
    out.push_back({all[best], cls.size()});
  }
  sort_classes(out);
  return out;
}

} // namespace fanoquot
