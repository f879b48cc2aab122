#include "fanoquot/matrix_group.hpp"

#include <algorithm>
#include <cctype>

namespace fanoquot {

FieldMatrix to_field(const MatC &m, const CyclotomicField &f) {
  if (!m.square()) throw DimensionError("projective matrices must be square");
  FieldMatrix r;
  r.dim = m.rows();
  r.a.reserve(m.data().size());
  for (const auto &c : m.data()) r.a.push_back(c.in_field(f));
  return r;
}

MatC to_cyclotomic(const FieldMatrix &m) {
  MatC r(m.dim, m.dim);
  for (int i = 0; i < m.dim; ++i)
    for (int j = 0; j < m.dim; ++j) r(i, j) = Cyclotomic(m(i, j));
  return r;
}

FieldMatrix multiply(const FieldMatrix &x, const FieldMatrix &y) {
  if (x.dim != y.dim) throw DimensionError("multiply: dimension mismatch");
  const int n = x.dim;
  const CyclotomicField &f = x.a[0].field();
  FieldMatrix r;
  r.dim = n;
  r.a.reserve(static_cast<std::size_t>(n) * n);
  std::vector<const FieldElement *> pa, pb;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      pa.clear();
      pb.clear();
      for (int k = 0; k < n; ++k)
        if (!x(i, k).is_zero() && !y(k, j).is_zero()) {
          pa.push_back(&x(i, k));
          pb.push_back(&y(k, j));
        }
      if (pa.empty())
        r.a.emplace_back(f);
      else if (pa.size() == 1)
        r.a.push_back(*pa[0] * *pb[0]);
      else
        r.a.push_back(dot_product(pa, pb));
    }
  return r;
}

FieldMatrix normalize_projective(FieldMatrix m) {
  auto first = std::find_if(m.a.begin(), m.a.end(), [](const FieldElement &e) { return !e.is_zero(); });
  if (first == m.a.end()) throw ArithmeticError("zero matrix has no projective class");
  if (first->is_one()) return m;
  FieldElement inv = first->inverse();
  for (auto it = first; it != m.a.end(); ++it)
    if (!it->is_zero()) *it = *it * inv;
  return m;
}

std::string projective_key(const FieldMatrix &m) {
  std::string k;
  k.reserve(m.a.size() * (m.a[0].numerators().size() + 1));
  for (const auto &e : m.a) e.append_key(k);
  return k;
}

namespace {

int common_conductor_of(const std::vector<MatC> &gens) {
  int n = 1;
  for (const auto &g : gens)
    for (const auto &c : g.data()) n = common_conductor(n, c.conductor());
  return n;
}

} // namespace

MatrixGroup MatrixGroup::generate(const std::vector<MatC> &gens, const GenerateOptions &opt) {
  if (gens.empty()) throw std::invalid_argument("generate: no generators");
  MatrixGroup mg;
  mg.input_ = gens;
  mg.dim_ = gens[0].rows();
  for (const auto &g : gens) {
    if (!g.square() || g.rows() != mg.dim_) throw DimensionError("generate: generators differ in size");
    if (determinant(g).is_zero()) throw ArithmeticError("generate: singular generator");
  }
  mg.field_ = &CyclotomicField::get(common_conductor_of(gens));
  for (const auto &g : gens) mg.gens_.push_back(normalize_projective(to_field(g, *mg.field_)));

  FieldMatrix id = to_field(MatC::identity(mg.dim_), *mg.field_);
  std::vector<FieldMatrix> frontier{id};
  FieldMatrix pending;
  auto res = generate_closure(
      projective_key(id), static_cast<int>(gens.size()), opt.order_cap,
      [&](std::size_t i, int g) {
        pending = normalize_projective(multiply(frontier[i], mg.gens_[g]));
        return projective_key(pending);
      },
      [&] { frontier.push_back(std::move(pending)); },
      [&](std::size_t i) { frontier[i] = FieldMatrix{}; });
  mg.group_ = res.group;
  mg.keys_ = std::move(res.keys);
  mg.cache_matrices();
  return mg;
}

MatrixGroup MatrixGroup::from_parts(const std::vector<MatC> &gens, std::shared_ptr<const FinGroup> group,
                                    std::vector<std::string> keys) {
  MatrixGroup mg;
  mg.input_ = gens;
  mg.dim_ = gens.at(0).rows();
  mg.field_ = &CyclotomicField::get(common_conductor_of(gens));
  for (const auto &g : gens) mg.gens_.push_back(normalize_projective(to_field(g, *mg.field_)));
  mg.group_ = std::move(group);
  mg.keys_ = std::move(keys);
  mg.cache_matrices();
  return mg;
}

void MatrixGroup::cache_matrices() {
  if (group_->order() > kDenseTableLimit) return;
  cached_.assign(group_->order(), FieldMatrix{});
  cached_[0] = to_field(MatC::identity(dim_), *field_);
  const auto &bfs = group_->bfs_order();
  for (std::size_t i = 1; i < bfs.size(); ++i) {
    Elem x = bfs[i];
    cached_[x] = normalize_projective(multiply(cached_[group_->parent(x)], gens_[group_->parent_generator(x)]));
  }
}

FieldMatrix MatrixGroup::matrix(Elem x) const {
  if (!cached_.empty()) return cached_.at(x);
  FieldMatrix m = to_field(MatC::identity(dim_), *field_);
  for (int g : group_->word(x)) m = normalize_projective(multiply(m, gens_[g]));
  return m;
}

std::optional<Elem> MatrixGroup::find(const MatC &m) const {
  if (!m.square() || m.rows() != dim_) return std::nullopt;
  for (const auto &c : m.data())
    if (field_->conductor() % c.conductor()) return std::nullopt;
  if (determinant(m).is_zero()) return std::nullopt;
  std::string k = projective_key(normalize_projective(to_field(m, *field_)));
  if (k == keys_[0]) return 0;
  auto it = std::lower_bound(keys_.begin() + 1, keys_.end(), k);
  if (it == keys_.end() || *it != k) return std::nullopt;
  return static_cast<Elem>(it - keys_.begin());
}

namespace {

class WordParser {
public:
  WordParser(const FinGroup &g, const std::string &s, const std::vector<std::string> &names)
      : g_(g), s_(s), names_(names) {}

  Elem parse() {
    Elem x = product();
    skip();
    if (i_ != s_.size()) fail("unexpected character");
    return x;
  }

private:
  [[noreturn]] void fail(const std::string &what) const {
    throw ParseError("word '" + s_ + "': " + what + " at offset " + std::to_string(i_));
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  long number() {
    skip();
    bool neg = false;
    if (i_ < s_.size() && s_[i_] == '-') {
      neg = true;
      ++i_;
    }
    std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_ || i_ - start > 9) fail("expected integer");
    long v = std::stol(s_.substr(start, i_ - start));
    return neg ? -v : v;
  }
  Elem product() {
    Elem x = factor();
    while (eat('*')) x = g_.mul(x, factor());
    return x;
  }
  Elem factor() {
    Elem x = base();
    if (eat('^')) x = g_.pow(x, number());
    return x;
  }
  Elem base() {
    if (eat('(')) {
      Elem x = product();
      if (!eat(')')) fail("expected ')'");
      return x;
    }
    skip();
    std::size_t start = i_;
    while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
    std::string id = s_.substr(start, i_ - start);
    if (id.empty() || std::isdigit(static_cast<unsigned char>(id[0]))) fail("expected generator");
    if (id == "e") return 0;
    auto it = std::find(names_.begin(), names_.end(), id);
    if (it != names_.end()) return g_.generator(static_cast<int>(it - names_.begin()));
    if (id[0] == 'g' && id.size() > 1 && id.size() < 6 &&
        std::all_of(id.begin() + 1, id.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      int k = std::stoi(id.substr(1));
      if (k >= 1 && k <= g_.num_generators()) return g_.generator(k - 1);
    }
    i_ = start;
    fail("unknown generator '" + id + "'");
  }

  const FinGroup &g_;
  std::string s_;
  const std::vector<std::string> &names_;
  std::size_t i_ = 0;
};

} // namespace

Elem MatrixGroup::evaluate_word(const std::string &word, const std::vector<std::string> &names) const {
  return WordParser(*group_, word, names).parse();
}

int projective_order(const FieldMatrix &m, int limit) {
  FieldMatrix p = normalize_projective(m);
  FieldMatrix base = p;
  for (int k = 1; k <= limit; ++k) {
    bool scalar = true;
    for (int i = 0; i < p.dim && scalar; ++i)
      for (int j = 0; j < p.dim && scalar; ++j)
        if (i == j ? !(p(i, j) == p(0, 0)) : !p(i, j).is_zero()) scalar = false;
    if (scalar) return k;
    p = normalize_projective(multiply(p, base));
  }
  throw BudgetExceeded("projective_order: limit reached");
}

} // namespace fanoquot
