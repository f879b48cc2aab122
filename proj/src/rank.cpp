#include "fanoquot/rank.hpp"

#include "fanoquot/paths.hpp"

#include <algorithm>

namespace fanoquot {

const RankTable &RankTable::shipped() {
  static const RankTable t(load_rank_table(data_path("rkl.table")));
  return t;
}

std::vector<int> RankTable::candidates(const SmallGroupId &id) const {
  std::vector<int> r;
  for (const auto &row : rows_)
    if (row.id == id) r.push_back(row.rank);
  std::sort(r.begin(), r.end());
  r.erase(std::unique(r.begin(), r.end()), r.end());
  return r;
}

const std::vector<OverlayRow> &shipped_overlay() {
  static const std::vector<OverlayRow> o = load_overlay(data_path("overlay.table"));
  return o;
}

const std::vector<std::array<int, 3>> &w_basis() {
  static const std::vector<std::array<int, 3>> b = [] {
    std::vector<std::array<int, 3>> v;
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j)
        for (int k = j + 1; k < 6; ++k) v.push_back({i, j, k});
    return v;
  }();
  return b;
}

std::optional<MonomialForm> monomial_form(const FieldMatrix &m) {
  if (m.dim != 6) return std::nullopt;
  MonomialForm f;
  std::array<bool, 6> used{};
  for (int i = 0; i < 6; ++i) {
    int c = -1;
    for (int j = 0; j < 6; ++j)
      if (!m(i, j).is_zero()) {
        if (c >= 0) return std::nullopt;
        c = j;
      }
    if (c < 0 || used[c]) return std::nullopt;
    used[c] = true;
    f.col[i] = c;
    f.scale.push_back(m(i, c));
  }
  return f;
}

FieldElement w_trace(const MonomialForm &m) {
  FieldElement t(m.scale[0].field());
  for (const auto &b : w_basis()) {
    std::array<int, 3> img{m.col[b[0]], m.col[b[1]], m.col[b[2]]};
    std::sort(img.begin(), img.end());
    if (img != b) continue;
    t += m.scale[b[0]] * m.scale[b[1]] * m.scale[b[2]];
  }
  return t;
}

namespace {

MonomialForm compose(const MonomialForm &a, const MonomialForm &b) {
  // (AB)_{i, b(a(i))} = a_i * b_{a(i)}
  MonomialForm r;
  for (int i = 0; i < 6; ++i) {
    r.col[i] = b.col[a.col[i]];
    r.scale.push_back(a.scale[i] * b.scale[a.col[i]]);
  }
  return r;
}

} // namespace

FermatAction::FermatAction(const MatrixGroup &g) : field_(&g.field()) {
  const FinGroup &grp = g.group();
  std::vector<MonomialForm> gens;
  for (int k = 0; k < grp.num_generators(); ++k) {
    auto f = monomial_form(g.matrix(grp.generator(k)));
    if (!f) throw NotMonomialError("generator " + std::to_string(k + 1) + " is not a monomial matrix");
    gens.push_back(std::move(*f));
  }
  std::vector<MonomialForm> forms(grp.order());
  forms[0] = *monomial_form(g.matrix(0));
  traces_.assign(grp.order(), FieldElement(g.field()));
  traces_[0] = w_trace(forms[0]);
  const auto &bfs = grp.bfs_order();
  for (std::size_t i = 1; i < bfs.size(); ++i) {
    Elem x = bfs[i];
    forms[x] = compose(forms[grp.parent(x)], gens[grp.parent_generator(x)]);
    traces_[x] = w_trace(forms[x]);
  }
}

int FermatAction::invariant_dimension(const Subgroup &h) const {
  FieldElement sum(*field_);
  for (Elem x : h.members) sum += traces_.at(x);
  sum *= Rational(1, static_cast<long>(h.order()));
  auto q = sum.rational_value();
  if (!q || q->get_den() != 1 || *q < 0 || *q > 20)
    throw ArithmeticError("averaged trace on W is not an integer in [0,20]: " + Cyclotomic(sum).to_string());
  return static_cast<int>(q->get_num().get_si());
}

std::string to_string(RankSource s) {
  switch (s) {
  case RankSource::Fermat: return "fermat";
  case RankSource::Overlay: return "overlay";
  case RankSource::Table: return "table";
  case RankSource::Monotonicity: return "monotonicity";
  case RankSource::Unresolved: break;
  }
  return "unresolved";
}

namespace {

bool overlay_applies(const OverlayRow &row, const RankContext &c) {
  for (const auto &[k, v] : row.conditions) {
    int have = k == "n2" ? c.n2 : k == "N3" ? c.N3 : k == "n3" ? c.n3 : k == "n31" ? c.n31 : c.n32;
    if (have != v) return false;
  }
  return true;
}

} // namespace

RankResult resolve_rank(const std::string &ambient, const SmallGroupId &id, const RankContext &ctx,
                        const Subgroup &h, const FermatAction *fermat, const RankTable &table,
                        const std::vector<OverlayRow> &overlay) {
  RankResult r;
  if (fermat) {
    r.candidates = {fermat->coinvariant_rank(h)};
    r.source = RankSource::Fermat;
    return r;
  }
  for (const auto &row : overlay)
    if (row.ambient == ambient && row.id == id && overlay_applies(row, ctx)) {
      r.candidates = {row.rank};
      r.source = RankSource::Overlay;
      r.tag = row.tag;
      return r;
    }
  r.candidates = table.candidates(id);
  r.source = r.candidates.size() == 1 ? RankSource::Table : RankSource::Unresolved;
  return r;
}

} // namespace fanoquot
