#include "fanoquot/invariants.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

namespace fanoquot {

namespace {

PolyC poly_mul(const PolyC &a, const PolyC &b) {
  PolyC r(a.size() + b.size() - 1, Cyclotomic(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

} // namespace

bool is_l3_matrix(const MatC &m) {
  if (!m.square() || m.rows() != 6) return false;
  if (is_scalar(m)) return false;
  if (!is_scalar(m * m * m)) return false;
  PolyC cp = char_poly(m);
  // the t^5 coefficient of (t^2 + a t + a^2)^3 is 3a
  Cyclotomic a = cp[5] / Cyclotomic(3);
  if (a.is_zero()) return false;
  PolyC q{a * a, a, Cyclotomic(1)};
  return poly_mul(poly_mul(q, q), q) == cp;
}

L3Set detect_L3(const MatrixGroup &mg) {
  const FinGroup &g = mg.group();
  std::vector<Elem> gens;
  for (const auto &cls : conjugacy_classes(g)) {
    if (g.element_order(cls[0]) != 3) continue;
    if (!is_l3_matrix(mg.matrix_c(cls[0]))) continue;
    for (Elem x : cls) gens.push_back(std::min(x, g.inv(x)));
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  L3Set s;
  s.generators = gens;
  for (Elem x : gens) s.subgroups.push_back(cyclic_subgroup(g, x));
  return s;
}

SingularInvariants singular_invariants(const FinGroup &g, const Subgroup &h, const L3Set &l3) {
  SingularInvariants r;
  auto classes = conjugacy_classes(g, h);
  std::vector<int> class_of(g.order(), -1);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (Elem x : classes[c]) class_of[x] = static_cast<int>(c);
    if (g.element_order(classes[c][0]) == 2) ++r.n2;
  }
  std::set<int> seen;
  for (Elem x : l3.generators) {
    if (!h.contains(x)) continue;
    ++r.N3;
    int key = std::min(class_of[x], class_of[g.inv(x)]);
    if (!seen.insert(key).second) continue;
    ++r.n3;
    Subgroup n = normalizer(g, h, cyclic_subgroup(g, x));
    Subgroup c = centralizer(g, h, x);
    bool even = false;
    for (Elem y : n.members)
      if (g.element_order(y) % 2 == 0 && !c.contains(y)) {
        even = true;
        break;
      }
    ++(even ? r.n31 : r.n32);
  }
  return r;
}

Subgroup codim2_subgroup(const FinGroup &g, const Subgroup &h, const L3Set &l3) {
  std::vector<Elem> seed;
  for (Elem x : h.members)
    if (g.element_order(x) == 2) seed.push_back(x);
  for (Elem x : l3.generators)
    if (h.contains(x)) seed.push_back(x);
  return subgroup_closure(g, seed);
}

Identification pi1_regular_locus(const FinGroup &g, const Subgroup &h, const L3Set &l3) {
  Subgroup n = codim2_subgroup(g, h, l3);
  if (n.order() == h.order()) return {true, {1, 1}, {}};
  return identify(*quotient_group(g, h, n).group);
}

int b2_of_terminalization(int rank, int n2, int n31, int n32) {
  if (rank < 0 || rank > 23) throw std::out_of_range("coinvariant rank " + std::to_string(rank) + " outside [0,23]");
  return 23 - rank + n2 + n31 + 2 * n32;
}

Ambient::Ambient(GroupDefinition d, MatrixGroup g)
    : definition(std::move(d)), group(std::move(g)), l3(detect_L3(group)) {
  if (definition.name == kFermatAmbient) fermat = std::make_shared<const FermatAction>(group);
}

namespace {

// Splits on commas outside brackets and parentheses.
std::vector<std::string> split_spec(const std::string &s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '[' || c == '(') ++depth;
    if (c == ']' || c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

} // namespace

Subgroup parse_subgroup_spec(const Ambient &a, const std::string &spec) {
  std::vector<Elem> gens;
  for (std::string part : split_spec(spec)) {
    part.erase(0, part.find_first_not_of(" \t"));
    if (part.empty()) throw ParseError("empty generator in subgroup spec '" + spec + "'");
    if (part[0] == '[') {
      auto x = a.group.find(parse_matrix(part));
      if (!x) throw MembershipError("matrix " + part + " is not an element of " + a.definition.name);
      gens.push_back(*x);
    } else {
      gens.push_back(a.group.evaluate_word(part, a.definition.generator_names));
    }
  }
  return subgroup_closure(a.group.group(), gens);
}

namespace {

SubgroupRecord make_record(const Ambient &a, int index, Subgroup h, bool resolve) {
  const FinGroup &g = a.group.group();
  SubgroupRecord r;
  r.class_index = index;
  r.id = identify(*as_group(g, h).group);
  r.inv = singular_invariants(g, h, a.l3);
  r.pi1 = pi1_regular_locus(g, h, a.l3);
  RankContext ctx{r.inv.n2, r.inv.N3, r.inv.n3, r.inv.n31, r.inv.n32};
  static const std::vector<OverlayRow> no_overlay;
  r.rank = resolve
               ? resolve_rank(a.definition.name, r.id.id, ctx, h, a.fermat.get())
               : resolve_rank(a.definition.name, r.id.id, ctx, h, nullptr, RankTable::shipped(), no_overlay);
  if (r.rank.source == RankSource::Fermat) {
    // one L3 subgroup fixes only x0x1x2 and x3x4x5; two share no invariant
    int rk = r.rank.candidates[0];
    if ((r.inv.N3 >= 1 && rk < 18) || (r.inv.N3 >= 2 && rk != 20))
      throw std::logic_error("Fermat rank " + std::to_string(rk) + " contradicts N3 = " + std::to_string(r.inv.N3) +
                             " for " + r.id.to_string());
  }
  r.subgroup = std::move(h);
  return r;
}

void fill_b2(SubgroupRecord &r) {
  r.b2.clear();
  for (int k : r.rank.candidates) r.b2.push_back(b2_of_terminalization(k, r.inv.n2, r.inv.n31, r.inv.n32));
  std::sort(r.b2.begin(), r.b2.end());
  r.b2.erase(std::unique(r.b2.begin(), r.b2.end()), r.b2.end());
}

bool contained_up_to_conjugacy(const FinGroup &g, const Subgroup &small, const Subgroup &big) {
  if (big.order() % small.order()) return false;
  if (big.order() == g.order()) return true;
  for (const auto &c : conjugates(g, small))
    if (std::includes(big.members.begin(), big.members.end(), c.members.begin(), c.members.end())) return true;
  return false;
}

} // namespace

void propagate_rank_bounds(const FinGroup &g, std::vector<SubgroupRecord> &records) {
  for (bool changed = true; changed;) {
    changed = false;
    for (auto &r : records) {
      if (r.rank.candidates.size() < 2) continue;
      int lo = 0, hi = 23;
      for (const auto &k : records) {
        if (&k == &r || !k.rank.resolved()) continue;
        int v = k.rank.candidates[0];
        if (v > lo && contained_up_to_conjugacy(g, k.subgroup, r.subgroup)) lo = v;
        if (v < hi && contained_up_to_conjugacy(g, r.subgroup, k.subgroup)) hi = v;
      }
      std::vector<int> kept;
      for (int c : r.rank.candidates)
        if (c >= lo && c <= hi) kept.push_back(c);
      if (kept.size() == r.rank.candidates.size() || kept.empty()) continue;
      r.rank.candidates = kept;
      if (r.rank.resolved()) r.rank.source = RankSource::Monotonicity;
      changed = true;
    }
  }
}

std::vector<SubgroupRecord> classification_table(const Ambient &a, const TableOptions &opt) {
  const FinGroup &g = a.group.group();
  std::vector<Subgroup> subs;
  switch (opt.mode) {
  case SweepMode::FullSweep: {
    if (opt.budget && g.order() > opt.budget)
      throw BudgetExceeded("full sweep of " + a.definition.name + " (order " + std::to_string(g.order()) +
                           ") exceeds the budget of " + std::to_string(opt.budget) +
                           "; use --mode targeted or --mode full-group-only, or raise --budget");
    for (auto &c : subgroup_conjugacy_classes(g, {opt.budget})) subs.push_back(std::move(c.representative));
    break;
  }
  case SweepMode::FullGroupOnly:
    subs.push_back(whole_group(g));
    break;
  case SweepMode::Targeted:
    if (opt.subgroups.empty()) throw std::invalid_argument("targeted mode needs at least one --subgroup");
    for (const auto &s : opt.subgroups) subs.push_back(parse_subgroup_spec(a, s));
    break;
  }

  std::vector<SubgroupRecord> records(subs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_lock;
  auto worker = [&] {
    for (std::size_t i; (i = next++) < subs.size();) {
      try {
        records[i] = make_record(a, static_cast<int>(i + 1), subs[i], opt.resolve_ranks);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_lock);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  int threads = std::max(1, std::min<int>(opt.threads, static_cast<int>(subs.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto &t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  if (opt.mode == SweepMode::FullSweep && opt.resolve_ranks) propagate_rank_bounds(g, records);
  for (auto &r : records) fill_b2(r);
  if (opt.mode == SweepMode::FullSweep && !opt.all_subgroups)
    records.erase(std::remove_if(records.begin(), records.end(), [](const SubgroupRecord &r) { return !r.non_terminal(); }),
                  records.end());
  return records;
}

} // namespace fanoquot
