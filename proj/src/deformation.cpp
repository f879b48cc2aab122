#include "fanoquot/deformation.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace fanoquot {

namespace {

bool is_square(const Integer &n) { return mpz_perfect_square_p(n.get_mpz_t()) != 0; }

} // namespace

bool is_square_rational(const Rational &q) {
  if (sgn(q) <= 0) throw std::domain_error("is_square_rational: argument must be positive");
  Rational r = q;
  r.canonicalize();
  return is_square(r.get_num()) && is_square(r.get_den());
}

std::string to_string(KnownFamily f) {
  switch (f) {
  case KnownFamily::Fujiki: return "fujiki";
  case KnownFamily::K3: return "k3";
  case KnownFamily::Kummer: return "kummer";
  }
  return "?";
}

std::string ObstructionRow::verdict() const { return new_candidate() ? "new candidate" : "numerically unobstructed"; }

FamilyMatch match_family(std::size_t order, int b2, const std::map<int, std::vector<long>> &family, KnownFamily kind) {
  FamilyMatch m;
  auto it = family.find(b2);
  if (it == family.end()) return m;
  m.b2_listed = true;
  for (long h : it->second) {
    Rational q(Integer(static_cast<unsigned long>(order)), Integer(kind == KnownFamily::Kummer ? 3 * h : h));
    q.canonicalize();
    if (is_square_rational(q)) {
      m.matched_order = h;
      break;
    }
  }
  return m;
}

ObstructionReport obstruction_report(const std::vector<DeformationEntry> &entries, const KnownClassCatalog &catalog) {
  ObstructionReport rep;
  std::set<DeformationEntry> seen;
  for (const auto &e : entries) {
    if (!seen.insert(e).second) continue;
    ObstructionRow row{e, match_family(e.id.order, e.b2, catalog.fujiki, KnownFamily::Fujiki),
                       match_family(e.id.order, e.b2, catalog.k3, KnownFamily::K3),
                       match_family(e.id.order, e.b2, catalog.kummer, KnownFamily::Kummer)};
    if (!row.fujiki.matched()) rep.unmatched_fujiki.push_back(e);
    if (!row.k3.matched()) rep.unmatched_k3.push_back(e);
    if (!row.kummer.matched()) rep.unmatched_kummer.push_back(e);
    if (row.new_candidate()) rep.new_candidates.push_back(e);
    rep.rows.push_back(row);
  }
  return rep;
}

std::vector<DeformationEntry> entries_from_fixtures(const std::vector<FixtureRow> &rows) {
  std::vector<DeformationEntry> out;
  out.reserve(rows.size());
  for (const auto &r : rows) out.push_back({r.id, r.b2, r.ambient_order});
  return out;
}

} // namespace fanoquot
