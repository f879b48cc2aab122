// Acceptance suite: one PASS/FAIL line per criterion. `--stretch` also runs
// the full subgroup sweeps of the 1944-, 2520- and 29160-element ambients.

#include "fanoquot/cli.hpp"
#include "fanoquot/deformation.hpp"
#include "fanoquot/paths.hpp"
#include "fanoquot/report.hpp"
#include "support.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <thread>

using namespace fanoquot;
using namespace fanoquot::testing;
using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string &what) {
    if (!ok) pass = false;
    notes.push_back(std::string(ok ? "ok " : "MISMATCH ") + what);
  }
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt_seconds(double s) {
  std::ostringstream o;
  o.precision(2);
  o << std::fixed << s << "s";
  return o.str();
}

using PairSet = std::set<std::pair<SmallGroupId, int>>;

std::string to_string(const PairSet &s) {
  std::string out = "{";
  for (const auto &[id, b2] : s) out += (out.size() > 1 ? " " : "") + id.to_string() + ":" + std::to_string(b2);
  return out + "}";
}

std::string difference(const PairSet &got, const PairSet &want) {
  PairSet extra, missing;
  std::set_difference(got.begin(), got.end(), want.begin(), want.end(), std::inserter(extra, extra.end()));
  std::set_difference(want.begin(), want.end(), got.begin(), got.end(), std::inserter(missing, missing.end()));
  return ", extra " + to_string(extra) + ", missing " + to_string(missing);
}

PairSet trivial_pi1_pairs(const std::vector<SubgroupRecord> &rows) {
  PairSet out;
  for (const auto &r : rows)
    if (r.pi1.known && r.pi1.id == SmallGroupId{1, 1})
      for (int b : r.b2) out.insert({r.id.id, b});
  return out;
}

PairSet fixture_pairs(std::size_t ambient_order) {
  PairSet out;
  for (const auto &f : load_fixtures(data_path("fixtures.list")))
    if (f.ambient_order == ambient_order) out.insert({f.id, f.b2});
  return out;
}

struct CliRun {
  int code;
  std::string out;
};

CliRun cli(std::vector<std::string> args) {
  args.push_back("--no-cache");
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str()};
}

/// Trivial-pi1 (id, b2) pairs from a JSON table report.
PairSet trivial_pi1_pairs(const json &doc) {
  PairSet out;
  for (const auto &row : doc["rows"])
    if (row["pi1"]["order"] == 1)
      for (int b : row["b2"])
        out.insert({{row["group"]["order"].get<std::size_t>(), row["group"]["id"].get<std::size_t>()}, b});
  return out;
}

// ------------------------------------------------------------------ 1

Outcome criterion1() {
  Outcome o;
  const std::vector<std::tuple<std::string, std::size_t, std::size_t>> cases{
      {"Q8_S3", 48, 6}, {"A35", 360, 14}, {"L2_11", 660, 7}, {"M10_first", 720, 9}};
  for (const auto &[key, order, count] : cases) {
    auto t0 = Clock::now();
    TableOptions opt;
    auto rows = classification_table(ambient(key), opt);
    PairSet got = trivial_pi1_pairs(rows), want = fixture_pairs(order);
    double dt = seconds_since(t0);
    o.expect(want.size() == count && got == want,
             key + " full sweep: " + std::to_string(got.size()) + "/" + std::to_string(want.size()) +
                 " fixture rows in " + fmt_seconds(dt) + (got == want ? "" : difference(got, want)));
    o.expect(dt < 600, key + " under 10 minutes");
  }

  CliRun l2 = cli({"table", "--group", "L2_11", "--format", "json"});
  PairSet l2rows = l2.code == 0 ? trivial_pi1_pairs(json::parse(l2.out)) : PairSet{};
  o.expect(l2.code == 0 && l2rows.size() == 7 && l2rows == fixture_pairs(660),
           "`table --group L2_11`: 7 simply connected (id,b2) rows");

  CliRun q8 = cli({"table", "--group", "Q8_S3", "--all-subgroups", "--format", "json"});
  bool superset = false;
  std::size_t rows = 0;
  if (q8.code == 0) {
    json doc = json::parse(q8.out);
    rows = doc["rows"].size();
    PairSet all = trivial_pi1_pairs(doc), want = fixture_pairs(48);
    superset = std::includes(all.begin(), all.end(), want.begin(), want.end());
  }
  std::size_t oracle = subgroup_conjugacy_classes_bruteforce(ambient("Q8_S3").group.group()).size();
  o.expect(superset && rows == oracle, "`table --group Q8_S3 --all-subgroups`: " + std::to_string(rows) +
                                           " classes (oracle " + std::to_string(oracle) + "), fixture rows included");
  return o;
}

// ------------------------------------------------------------------ 2

Outcome criterion2() {
  Outcome o;
  const std::vector<std::tuple<std::string, SmallGroupId, int>> cases{
      {"L2_11", {660, 13}, 4},     {"A7_perm", {2520, 0}, 4}, {"A7_second", {2520, 0}, 4},
      {"A35", {360, 120}, 5},      {"M10_first", {720, 765}, 5}, {"M10_second", {720, 765}, 5},
      {"Q8_S3", {48, 29}, 6},      {"C3_4_A6", {29160, 0}, 5}};
  TableOptions opt;
  opt.mode = SweepMode::FullGroupOnly;
  for (const auto &[key, id, b2] : cases) {
    auto rows = classification_table(ambient(key), opt);
    const auto &r = rows.at(0);
    std::string got = r.id.to_string() + " b2 " + format_set(r.b2) + " pi1 " + r.pi1.to_string();
    o.expect(rows.size() == 1 && r.id.id == id && r.b2 == std::vector<int>{b2},
             key + " -> " + id.to_string() + " b2 " + std::to_string(b2) + " (got " + got + ")");
  }
  // 1944: the full-group row is in the fixture list exactly when its regular
  // locus is simply connected
  auto rows = classification_table(ambient("G1944"), opt);
  const auto &r = rows.at(0);
  PairSet fx = fixture_pairs(1944);
  bool simply_connected = r.pi1.id == SmallGroupId{1, 1};
  bool listed = r.b2.size() == 1 && fx.count({r.id.id, r.b2[0]});
  o.expect(r.id.id == SmallGroupId{1944, 3559} && r.rank.resolved() && simply_connected == listed,
           "G1944 -> " + r.id.to_string() + " b2 " + format_set(r.b2) + " pi1 " + r.pi1.to_string() +
               (listed ? ", listed" : ", not listed") + " in the fixtures");

  CliRun c = cli({"table", "--group", "C3_4_A6", "--mode", "full-group-only", "--format", "json"});
  bool one_row = false;
  if (c.code == 0) {
    json doc = json::parse(c.out);
    one_row = doc["rows"].size() == 1 && doc["rows"][0]["b2"] == json::array({5});
  }
  o.expect(one_row, "`table --group C3_4_A6 --mode full-group-only`: single row with b2 = 5");
  return o;
}

// ------------------------------------------------------------------ 3

Outcome criterion3() {
  Outcome o;
  const std::vector<std::pair<std::string, std::size_t>> cases{
      {"A7_perm", 0}, {"A7_second", 0}, {"M10_first", 0}, {"M10_second", 0}, {"L2_11", 0},
      {"A35", 0},     {"Q8_S3", 0},     {"G1944", 1},     {"C3_4_A6", 10}};
  for (const auto &[key, n] : cases)
    o.expect(ambient(key).l3.size() == n, key + " |L3| = " + std::to_string(ambient(key).l3.size()) +
                                              " (want " + std::to_string(n) + ")");

  // diag(w^e) with e a rearrangement of (0,0,0,1,1,1): 20 elements, 10 cyclic subgroups
  const Ambient &a = ambient(kFermatAmbient);
  const FinGroup &g = a.group.group();
  std::set<Elem> want;
  std::vector<int> e{0, 0, 0, 1, 1, 1};
  bool all_members = true;
  do {
    auto x = a.group.find(monomial(e, {}));
    if (!x) {
      all_members = false;
      continue;
    }
    want.insert(std::min(*x, g.inv(*x)));
  } while (std::next_permutation(e.begin(), e.end()));
  std::set<Elem> got(a.l3.generators.begin(), a.l3.generators.end());
  o.expect(all_members && got == want, "C3_4_A6 L3 generators are exactly the sigma = id, {0,0,0,1,1,1} elements");

  for (const auto &[key, n] : std::vector<std::pair<std::string, std::size_t>>{{"A7_perm", 0}, {"G1944", 1}, {"C3_4_A6", 10}}) {
    CliRun r = cli({"detect-l3", "--group", key, "--format", "json"});
    o.expect(r.code == 0 && json::parse(r.out)["count"] == n, "`detect-l3 --group " + key + "` -> " + std::to_string(n));
  }
  return o;
}

// ------------------------------------------------------------------ 4

Outcome criterion4() {
  Outcome o;
  const Ambient &a = ambient(kFermatAmbient);
  const FinGroup &g = a.group.group();
  auto dim = [&](const Subgroup &h) { return a.fermat->invariant_dimension(h); };
  o.expect(dim(subgroup_closure(g, {})) == 20, "trivial H: dim W^H = 20");
  Subgroup c3 = subgroup_of(a, {monomial({0, 0, 0, 1, 1, 1}, {})});
  o.expect(dim(c3) == 2, "<diag(1,1,1,w,w,w)>: dim W^H = " + std::to_string(dim(c3)) + " (want 2)");
  Subgroup g1 = subgroup_of(a, fermat_g1()), g2 = subgroup_of(a, fermat_g2());
  o.expect(g1.order() == 108 && dim(g1) == 1,
           "G1 (order " + std::to_string(g1.order()) + "): dim W^H = " + std::to_string(dim(g1)) + " (want 1)");
  o.expect(g2.order() == 108 && dim(g2) == 0,
           "G2 (order " + std::to_string(g2.order()) + "): dim W^H = " + std::to_string(dim(g2)) + " (want 0)");

  CliRun r = cli({"table", "--group", "C3_4_A6", "--mode", "targeted", "--format", "json", "--subgroup",
                  "[[1,0,0,0,0,0],[0,1,0,0,0,0],[0,0,1,0,0,0],[0,0,0,E(3),0,0],[0,0,0,0,E(3),0],[0,0,0,0,0,E(3)]]"});
  bool ok = false;
  std::string got = "exit " + std::to_string(r.code);
  if (r.code == 0) {
    json row = json::parse(r.out)["rows"][0];
    got = "b2 " + row["b2"].dump() + " pi1 order " + row["pi1"]["order"].dump();
    ok = row["b2"] == json::array({7}) && row["pi1"]["order"] == 1;
  }
  o.expect(ok, "targeted <diag(1,1,1,w,w,w)> in C3_4_A6: b2 = 7, pi1 trivial (" + got + ")");
  return o;
}

// ------------------------------------------------------------------ 5

Outcome criterion5() {
  Outcome o;
  const Ambient &a = ambient(kFermatAmbient);
  const FinGroup &g = a.group.group();
  std::mt19937 rng(20240517);
  std::uniform_int_distribution<Elem> any(0, static_cast<Elem>(g.order() - 1));
  std::uniform_int_distribution<std::size_t> pick_l3(0, a.l3.size() - 1);
  std::vector<Subgroup> subs;
  for (int k = 0; k < 240; ++k) {
    std::vector<Elem> seed;
    int l3s = k % 3, randoms = 1 + (k / 3) % 2;
    for (int i = 0; i < l3s; ++i) seed.push_back(a.l3.generators[pick_l3(rng)]);
    for (int i = 0; i < randoms; ++i) {
      Elem x = any(rng);
      // short random elements keep many subgroups proper
      // odd rounds use elements of order 2 or 3 so many subgroups stay small
      int ord = g.element_order(x);
      if (k % 2 && ord % 3 == 0) x = g.pow(x, ord / 3);
      else if (k % 2 && ord % 2 == 0) x = g.pow(x, ord / 2);
      seed.push_back(x);
    }
    subs.push_back(subgroup_closure(g, seed));
  }
  for (Elem x : a.l3.generators) subs.push_back(cyclic_subgroup(g, x));
  subs.push_back(whole_group(g));

  int n1 = 0, n2 = 0, violations = 0;
  std::set<std::size_t> orders;
  for (const auto &h : subs) {
    SingularInvariants inv = singular_invariants(g, h, a.l3);
    int rk = a.fermat->coinvariant_rank(h);
    orders.insert(h.order());
    if (inv.N3 >= 1) {
      ++n1;
      if (rk < 18) ++violations;
    }
    if (inv.N3 >= 2) {
      ++n2;
      if (rk != 20) ++violations;
    }
  }
  o.expect(violations == 0, std::to_string(subs.size()) + " subgroups (" + std::to_string(orders.size()) +
                                " distinct orders): " + std::to_string(n1) + " with N3 >= 1, " + std::to_string(n2) +
                                " with N3 >= 2, " + std::to_string(violations) + " violations");
  o.expect(n1 > 0 && n2 > 0, "both hypotheses exercised");
  return o;
}

// ------------------------------------------------------------------ 6

Outcome criterion6() {
  Outcome o;
  auto entries = entries_from_fixtures(load_fixtures(data_path("fixtures.list")));
  auto report = obstruction_report(entries, load_known_classes());
  std::set<std::pair<SmallGroupId, int>> got;
  for (const auto &e : report.new_candidates) got.insert({e.id, e.b2});
  o.expect(got == PairSet{{{660, 13}, 4}, {{2520, 0}, 4}}, "new candidates " + to_string(got));
  bool a6 = false, fermat = false;
  for (const auto &row : report.rows) {
    if (row.entry.id == SmallGroupId{360, 118} && row.entry.b2 == 5)
      a6 = row.k3.matched() && row.k3.matched_order == 360;
    if (row.entry.id == SmallGroupId{29160, 0} && row.entry.b2 == 5)
      fermat = row.k3.matched() && 29160 == 81 * row.k3.matched_order;
  }
  o.expect(a6, "(360,118) at b2 5 matched with ratio 1");
  o.expect(fermat, "(29160,0) at b2 5 matched with ratio 81");

  CliRun shipped = cli({"check-deformation", "--format", "json"});
  std::size_t n = shipped.code == 0 ? json::parse(shipped.out)["new_candidates"].size() : 99;
  o.expect(n == 2, "`check-deformation` on the shipped fixtures: 2 new candidates");
  auto empty = obstruction_report({}, load_known_classes());
  o.expect(empty.rows.empty() && empty.new_candidates.empty(), "empty fixture list -> empty report");
  auto single = obstruction_report({{{360, 118}, 5, 360}}, load_known_classes());
  o.expect(single.rows.size() == 1 && single.rows[0].k3.matched() && single.new_candidates.empty(),
           "single entry (360,5) matched by the Hilbert-square catalog");
  return o;
}

// ------------------------------------------------------------------ 7

bool same_classes(const FinGroup &g) {
  auto a = subgroup_conjugacy_classes(g, {0});
  auto b = subgroup_conjugacy_classes_bruteforce(g);
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].representative.members != b[i].representative.members || a[i].class_size != b[i].class_size)
      return false;
  return true;
}

Outcome criterion7() {
  Outcome o;
  // catalog-reachable: ambients of order <= 360 and every subgroup class of
  // order <= 360 of the ambients within the default sweep budget
  std::map<std::string, std::shared_ptr<const FinGroup>> groups;
  for (const std::string key : {"Q8_S3", "A35", "L2_11", "M10_first", "M10_second"}) {
    const Ambient &a = ambient(key);
    const FinGroup &g = a.group.group();
    if (g.order() <= 360) groups[key] = a.group.shared_group();
    for (const auto &c : subgroup_conjugacy_classes(g)) {
      const auto &h = c.representative;
      if (h.order() > 360 || h.order() == g.order()) continue;
      auto sub = as_group(g, h).group;
      groups[key + ":" + std::to_string(h.order()) + "#" + std::to_string(h.members[1 % h.order()])] = sub;
    }
  }
  int agree = 0;
  std::string first_bad;
  for (const auto &[name, g] : groups) {
    if (same_classes(*g))
      ++agree;
    else if (first_bad.empty())
      first_bad = name;
  }
  o.expect(agree == static_cast<int>(groups.size()),
           "enumeration equals the brute-force oracle on " + std::to_string(agree) + "/" +
               std::to_string(groups.size()) + " groups" + (first_bad.empty() ? "" : ", first mismatch " + first_bad));

  o.expect(conjugacy_classes(*alt(7)).size() == 9, "A7 (permutations) has 9 conjugacy classes");
  o.expect(conjugacy_classes(ambient("A7_perm").group.group()).size() == 9, "A7 (matrices) has 9 conjugacy classes");

  // quotient battery: G / N identified against the expected id
  struct Q {
    std::string name;
    std::shared_ptr<const FinGroup> g;
    std::function<Subgroup(const FinGroup &)> n;
    SmallGroupId want;
  };
  auto derived = [](const FinGroup &g) { return derived_subgroup(g, whole_group(g)); };
  auto power = [](int k) {
    return [k](const FinGroup &g) { return cyclic_subgroup(g, g.pow(g.generator(0), k)); };
  };
  auto center_of = [](const FinGroup &g) {
    std::vector<Elem> z;
    for (Elem x = 0; x < g.order(); ++x) {
      bool central = true;
      for (int k = 0; k < g.num_generators() && central; ++k) central = g.mul(x, g.generator(k)) == g.mul(g.generator(k), x);
      if (central) z.push_back(x);
    }
    return subgroup_closure(g, z);
  };
  std::vector<Q> battery{
      {"C6/C3", cyclic(6), power(2), {2, 1}},
      {"C12/C2", cyclic(12), power(6), {6, 2}},
      {"C12/C4", cyclic(12), power(3), {3, 1}},
      {"S3/A3", sym(3), derived, {2, 1}},
      {"S4/A4", sym(4), derived, {2, 1}},
      {"S4/V4", sym(4), [](const FinGroup &g) { return derived_subgroup(g, derived_subgroup(g, whole_group(g))); }, {6, 1}},
      {"S5/A5", sym(5), derived, {2, 1}},
      {"A4/V4", alt(4), derived, {3, 1}},
      {"Q8_S3/Z", ambient("Q8_S3").group.shared_group(), center_of, {24, 12}},
      {"Q8_S3/G'", ambient("Q8_S3").group.shared_group(), derived, {2, 1}},
      {"M10/G'", ambient("M10_first").group.shared_group(), derived, {2, 1}},
  };
  for (const auto &q : battery) {
    Subgroup n = q.n(*q.g);
    Identification id = identify(*quotient_group(*q.g, whole_group(*q.g), n).group);
    o.expect(id.known && id.id == q.want, q.name + " = " + id.to_string() + " (want " + q.want.to_string() + ")");
  }
  return o;
}

// ------------------------------------------------------------------ 8

Outcome criterion8() {
  Outcome o;
  auto t0 = Clock::now();
  std::mt19937 rng(8);
  const std::vector<long> conductors{1, 3, 4, 5, 8, 11, 12, 15, 24};
  std::uniform_int_distribution<std::size_t> pick(0, conductors.size() - 1);
  std::uniform_int_distribution<int> coef(-5, 5), den(1, 4), terms(1, 4);
  auto random_cyc = [&](long n) {
    std::uniform_int_distribution<long> k(0, n - 1);
    Cyclotomic c;
    for (int t = terms(rng); t > 0; --t) c += Cyclotomic(Rational(coef(rng), den(rng))) * Cyclotomic::root_of_unity(n, k(rng));
    return c;
  };
  long cases = 0, failures = 0;
  auto check = [&](bool ok) {
    ++cases;
    failures += !ok;
  };

  for (int i = 0; i < 3000; ++i) {
    Cyclotomic a = random_cyc(conductors[pick(rng)]), b = random_cyc(conductors[pick(rng)]),
               c = random_cyc(conductors[pick(rng)]);
    check(a + b == b + a && a * b == b * a);
    check((a + b) + c == a + (b + c) && (a * b) * c == a * (b * c));
    check(a * (b + c) == a * b + a * c);
    check((a - a).is_zero() && a * Cyclotomic(1) == a);
    if (!a.is_zero()) check((a * a.inverse()).is_one() && (b / a) * a == b);
  }
  for (int i = 0; i < 3000; ++i) {
    long n = conductors[pick(rng)];
    Cyclotomic a = random_cyc(n);
    // lifting to a larger field and back is the identity
    const CyclotomicField &big = CyclotomicField::get(n % 2 ? 4 * n : 3 * n);
    Cyclotomic lifted(a.in_field(big));
    check(lifted == a && lifted.conductor() == a.conductor());
    check(Cyclotomic(a.value()) == a);
    check(parse_cyclotomic(a.to_string()) == a);
  }
  // square roots of p/q live in conductor 4pq; keep the fields small
  std::uniform_int_distribution<int> num(-12, 12), dd(1, 6);
  for (int i = 0; i < 3000; ++i) {
    int p = num(rng);
    if (p == 0) p = 1;
    Rational r(p, dd(rng));
    r.canonicalize();
    Cyclotomic s = Cyclotomic::sqrt(r);
    check(s * s == Cyclotomic(r));
  }
  std::uniform_int_distribution<int> small(-2, 2);
  for (int i = 0; i < 400; ++i) {
    long n = i % 2 ? 3 : 12;
    MatC a(6, 6), p(6, 6);
    for (int r = 0; r < 6; ++r)
      for (int c = 0; c < 6; ++c) {
        a(r, c) = small(rng) ? random_cyc(n) : Cyclotomic();
        p(r, c) = Cyclotomic(small(rng));
      }
    PolyC cp = char_poly(a);
    check(poly_eval(cp, a) == MatC(6, 6));
    if (!determinant(p).is_zero()) check(char_poly(mat_inv(p) * a * p) == cp);
  }
  double dt = seconds_since(t0);
  o.expect(failures == 0, std::to_string(cases) + " randomized cases, " + std::to_string(failures) + " failures");
  o.expect(cases >= 10000, "at least 10^4 cases");
  o.expect(dt < 60, "finished in " + fmt_seconds(dt) + " (limit 60s)");
  return o;
}

// ------------------------------------------------------------------ 9

Outcome criterion9(bool stretch) {
  Outcome o;
  // default: the large sweeps are refused by the budget gate
  for (const std::string key : {"G1944", "A7_perm", "A7_second", "C3_4_A6"}) {
    CliRun r = cli({"table", "--group", key});
    o.expect(r.code == kExitBudget, "`table --group " + key + "` refused by the default budget (exit " +
                                        std::to_string(r.code) + ")");
  }
  if (!stretch) {
    o.notes.push_back("full sweeps skipped (run with --stretch)");
    return o;
  }
  for (const auto &[key, order] : std::vector<std::pair<std::string, std::size_t>>{
           {"G1944", 1944}, {"A7_perm", 2520}, {"A7_second", 2520}, {"C3_4_A6", 29160}}) {
    auto t0 = Clock::now();
    TableOptions opt;
    opt.budget = 0;
    opt.threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    auto rows = classification_table(ambient(key), opt);
    PairSet got = trivial_pi1_pairs(rows), want = fixture_pairs(order);
    o.expect(got == want, key + " full sweep: " + std::to_string(got.size()) + " rows vs " +
                              std::to_string(want.size()) + " fixture rows in " + fmt_seconds(seconds_since(t0)) +
                              (got == want ? "" : difference(got, want)));
  }
  return o;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"acceptance criteria"};
  bool stretch = false, verbose = false;
  app.add_flag("--stretch", stretch, "also run the long full sweeps");
  app.add_flag("-v,--verbose", verbose, "print every individual check");
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"fixture reproduction, small ambients", criterion1},
      {"full-group rows of the maximal groups", criterion2},
      {"L3 cardinalities", criterion3},
      {"Fermat rank computation", criterion4},
      {"rank bound sweep over Fermat subgroups", criterion5},
      {"deformation obstruction", criterion6},
      {"oracle equivalence", criterion7},
      {"arithmetic suite", criterion8},
      {"large sweeps gated behind --stretch", [stretch] { return criterion9(stretch); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto t0 = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception &e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << i + 1 << ": " << criteria[i].first << " ("
              << fmt_seconds(seconds_since(t0)) << ")\n";
    for (const auto &n : o.notes)
      if (verbose || !o.pass || n.rfind("ok ", 0) != 0) std::cout << "      " << n << "\n";
    std::cout.flush();
  }
  std::cout << (failed ? std::to_string(failed) + " of 9 criteria failed\n" : "all 9 criteria passed\n");
  return failed ? 1 : 0;
}
