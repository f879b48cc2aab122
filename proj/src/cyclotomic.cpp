#include "fanoquot/cyclotomic.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <utility>

namespace fanoquot {

namespace {

using Poly = std::vector<std::int64_t>;

Poly poly_mul(const Poly &a, const Poly &b) {
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// Exact division by a monic polynomial.
Poly poly_div_monic(Poly a, const Poly &b) {
  const std::size_t db = b.size() - 1;
  Poly q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    std::int64_t c = a[i];
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  return q;
}

int mobius(int n) {
  int m = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    m = -m;
  }
  return n > 1 ? -m : m;
}

// Phi_n = prod_{d | n} (x^d - 1)^mu(n/d)
Poly cyclotomic_poly(int n) {
  Poly num{1}, den{1};
  for (int d = 1; d <= n; ++d) {
    if (n % d) continue;
    int mu = mobius(n / d);
    if (mu == 0) continue;
    Poly f(d + 1, 0);
    f[0] = -1;
    f[d] = 1;
    if (mu > 0)
      num = poly_mul(num, f);
    else
      den = poly_mul(den, f);
  }
  return poly_div_monic(num, den);
}

std::vector<int> prime_factors(int n) {
  std::vector<int> ps;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    ps.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

long mod(long a, long n) {
  long r = a % n;
  return r < 0 ? r + n : r;
}

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

} // namespace

int euler_phi(int n) {
  if (n <= 0) throw ArithmeticError("euler_phi: non-positive argument");
  int r = n;
  for (int p : prime_factors(n)) r = r / p * (p - 1);
  return r;
}

int canonical_conductor(int n) {
  if (n <= 0) throw ArithmeticError("conductor must be positive");
  return n % 4 == 2 ? n / 2 : n;
}

int common_conductor(int a, int b) {
  return canonical_conductor(std::lcm(a, b));
}

// ---------------------------------------------------------------- fields

namespace {

struct FieldRegistry {
  std::mutex mu;
  std::map<int, std::unique_ptr<CyclotomicField>> fields;
};

FieldRegistry &registry() {
  static FieldRegistry r;
  return r;
}

} // namespace

CyclotomicField::CyclotomicField(int n) : n_(n), phi_(euler_phi(n)) {
  phi_poly_ = cyclotomic_poly(n);
  powers_.assign(static_cast<std::size_t>(n) * phi_, 0);
  std::vector<std::int64_t> cur(phi_, 0);
  cur[0] = 1;
  for (int e = 0; e < n; ++e) {
    std::copy(cur.begin(), cur.end(), powers_.begin() + static_cast<std::size_t>(e) * phi_);
    // multiply by x and reduce the overflow term with x^phi = -sum c_i x^i
    std::int64_t top = cur[phi_ - 1];
    for (int i = phi_ - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0)
      for (int i = 0; i < phi_; ++i) cur[i] -= top * phi_poly_[i];
  }
  for (int k = 1; k <= n; ++k)
    if (std::gcd(k, n) == 1) units_.push_back(k % n);
  if (n == 1) units_ = {0};
}

const CyclotomicField &CyclotomicField::get(int n) {
  if (n <= 0 || n % 4 == 2) throw ArithmeticError("not a canonical conductor: " + std::to_string(n));
  auto &reg = registry();
  std::lock_guard lock(reg.mu);
  auto &slot = reg.fields[n];
  if (!slot) slot.reset(new CyclotomicField(n));
  return *slot;
}

void CyclotomicField::set_cache_bound(int bound) {
  for (int n = 1; n <= bound; ++n)
    if (n % 4 != 2) get(n);
}

std::span<const std::int64_t> CyclotomicField::power(long e) const {
  std::size_t r = static_cast<std::size_t>(mod(e, n_));
  return {powers_.data() + r * phi_, static_cast<std::size_t>(phi_)};
}

// --------------------------------------------------------- FieldElement

FieldElement::FieldElement(const CyclotomicField &field)
    : field_(&field), num_(field.degree()), den_(1) {}

FieldElement::FieldElement(const CyclotomicField &field, const Rational &r)
    : field_(&field), num_(field.degree()), den_(r.get_den()) {
  num_[0] = r.get_num();
}

FieldElement::FieldElement(const CyclotomicField &field, std::vector<Integer> num, Integer den)
    : field_(&field), num_(std::move(num)), den_(std::move(den)) {
  if (static_cast<int>(num_.size()) != field.degree())
    throw ArithmeticError("coefficient vector has wrong length");
  if (den_ == 0) throw ArithmeticError("zero denominator");
  normalize();
}

void FieldElement::normalize() {
  if (sgn(den_) < 0) {
    den_ = -den_;
    for (auto &c : num_) c = -c;
  }
  if (den_ == 1) return;
  Integer g = den_;
  for (const auto &c : num_) {
    if (c == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) return;
  }
  if (g == den_ && is_zero()) {
    den_ = 1;
    return;
  }
  for (auto &c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
}

bool FieldElement::is_zero() const {
  return std::all_of(num_.begin(), num_.end(), [](const Integer &c) { return c == 0; });
}

bool FieldElement::is_one() const {
  if (den_ != 1 || num_[0] != 1) return false;
  return std::all_of(num_.begin() + 1, num_.end(), [](const Integer &c) { return c == 0; });
}

std::optional<Rational> FieldElement::rational_value() const {
  for (std::size_t i = 1; i < num_.size(); ++i)
    if (num_[i] != 0) return std::nullopt;
  Rational r(num_[0], den_);
  r.canonicalize();
  return r;
}

FieldElement FieldElement::root_of_unity(const CyclotomicField &field, long k) {
  FieldElement r(field);
  auto p = field.power(k);
  for (int i = 0; i < field.degree(); ++i) r.num_[i] = static_cast<long>(p[i]);
  return r;
}

FieldElement FieldElement::lift(const CyclotomicField &target) const {
  if (&target == field_) return *this;
  const int n = conductor(), m = target.conductor();
  if (m % n) throw ArithmeticError("lift target is not a multiple of the conductor");
  const long step = m / n;
  FieldElement r(target);
  r.den_ = den_;
  for (int j = 0; j < field_->degree(); ++j) {
    if (num_[j] == 0) continue;
    auto p = target.power(j * step);
    for (int i = 0; i < target.degree(); ++i) {
      if (p[i] > 0)
        mpz_addmul_ui(r.num_[i].get_mpz_t(), num_[j].get_mpz_t(), static_cast<unsigned long>(p[i]));
      else if (p[i] < 0)
        mpz_submul_ui(r.num_[i].get_mpz_t(), num_[j].get_mpz_t(), static_cast<unsigned long>(-p[i]));
    }
  }
  return r; // a lift of a normalized value stays normalized
}

namespace {

// acc[i] += c * p[i]
void addmul_row(std::vector<Integer> &acc, const Integer &c, std::span<const std::int64_t> p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] > 0)
      mpz_addmul_ui(acc[i].get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(p[i]));
    else if (p[i] < 0)
      mpz_submul_ui(acc[i].get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(-p[i]));
  }
}

// Folds the terms of degree >= phi back into the power basis.
void reduce_wide(const CyclotomicField &f, std::vector<Integer> &wide) {
  const int phi = f.degree();
  for (std::size_t k = phi; k < wide.size(); ++k) {
    if (wide[k] == 0) continue;
    addmul_row(wide, wide[k], f.power(static_cast<long>(k)));
  }
  wide.resize(phi);
}

} // namespace

FieldElement FieldElement::galois(int k) const {
  const int n = conductor();
  if (std::gcd(mod(k, n), static_cast<long>(n)) != 1 && n > 1)
    throw ArithmeticError("galois: exponent not a unit");
  FieldElement r(*field_);
  r.den_ = den_;
  for (int j = 0; j < field_->degree(); ++j)
    if (num_[j] != 0) addmul_row(r.num_, num_[j], field_->power(static_cast<long>(j) * k));
  return r;
}

Rational FieldElement::norm() const {
  FieldElement p(*field_, Rational(1));
  for (int k : field_->units()) p *= galois(k);
  auto r = p.rational_value();
  if (!r) throw ArithmeticError("norm is not rational");
  return *r;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw ArithmeticError("inverse of zero");
  if (auto r = rational_value()) return FieldElement(*field_, 1 / *r);
  // product of the other conjugates over the norm
  FieldElement p(*field_, Rational(1));
  for (int k : field_->units())
    if (k != 1) p *= galois(k);
  FieldElement all = p * *this;
  auto nrm = all.rational_value();
  if (!nrm) throw ArithmeticError("norm is not rational");
  return p * Rational(1 / *nrm);
}

FieldElement FieldElement::operator-() const {
  FieldElement r(*this);
  for (auto &c : r.num_) c = -c;
  return r;
}

FieldElement &FieldElement::operator+=(const FieldElement &o) {
  if (o.field_ != field_) throw ArithmeticError("field mismatch");
  if (den_ == o.den_) {
    for (std::size_t i = 0; i < num_.size(); ++i) num_[i] += o.num_[i];
  } else {
    Integer l;
    mpz_lcm(l.get_mpz_t(), den_.get_mpz_t(), o.den_.get_mpz_t());
    Integer sa = l / den_, sb = l / o.den_;
    for (std::size_t i = 0; i < num_.size(); ++i) {
      num_[i] *= sa;
      mpz_addmul(num_[i].get_mpz_t(), o.num_[i].get_mpz_t(), sb.get_mpz_t());
    }
    den_ = l;
  }
  normalize();
  return *this;
}

FieldElement &FieldElement::operator-=(const FieldElement &o) { return *this += -o; }

FieldElement operator*(const FieldElement &a, const FieldElement &b) {
  if (a.field_ != b.field_) throw ArithmeticError("field mismatch");
  const CyclotomicField &f = *a.field_;
  const int phi = f.degree();
  std::vector<Integer> wide(2 * phi - 1);
  for (int i = 0; i < phi; ++i) {
    if (a.num_[i] == 0) continue;
    for (int j = 0; j < phi; ++j)
      if (b.num_[j] != 0) mpz_addmul(wide[i + j].get_mpz_t(), a.num_[i].get_mpz_t(), b.num_[j].get_mpz_t());
  }
  reduce_wide(f, wide);
  FieldElement r(f);
  r.num_ = std::move(wide);
  r.den_ = a.den_ * b.den_;
  r.normalize();
  return r;
}

FieldElement &FieldElement::operator*=(const FieldElement &o) { return *this = *this * o; }

FieldElement &FieldElement::operator*=(const Rational &r) {
  if (r == 0) {
    for (auto &c : num_) c = 0;
    den_ = 1;
    return *this;
  }
  for (auto &c : num_) c *= r.get_num();
  den_ *= r.get_den();
  normalize();
  return *this;
}

bool operator==(const FieldElement &a, const FieldElement &b) {
  return a.field_ == b.field_ && a.den_ == b.den_ && a.num_ == b.num_;
}

std::size_t FieldElement::hash() const {
  std::size_t h = static_cast<std::size_t>(conductor());
  auto limb = [](const Integer &z) -> std::size_t {
    std::size_t v = mpz_size(z.get_mpz_t()) ? mpz_getlimbn(z.get_mpz_t(), 0) : 0;
    return sgn(z) < 0 ? ~v : v;
  };
  for (const auto &c : num_) h = mix(h, limb(c));
  return mix(h, limb(den_));
}

void FieldElement::append_key(std::string &out) const {
  auto put = [&out](const Integer &z) {
    if (mpz_fits_slong_p(z.get_mpz_t())) {
      long v = z.get_si();
      if (v >= -100 && v <= 100) {
        out.push_back(static_cast<char>(v));
        return;
      }
      out.push_back(static_cast<char>(101));
      out.append(reinterpret_cast<const char *>(&v), sizeof v);
      return;
    }
    out.push_back(static_cast<char>(102));
    out += z.get_str(62);
    out.push_back('\0');
  };
  for (const auto &c : num_) put(c);
  put(den_);
}

FieldElement dot_product(std::span<const FieldElement *const> a,
                         std::span<const FieldElement *const> b) {
  if (a.size() != b.size() || a.empty()) throw ArithmeticError("dot_product: bad operands");
  const CyclotomicField &f = a[0]->field();
  const int phi = f.degree();
  Integer den = 1;
  for (std::size_t t = 0; t < a.size(); ++t) {
    if (a[t]->is_zero() || b[t]->is_zero()) continue;
    Integer d = a[t]->denominator() * b[t]->denominator();
    if (d != 1) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
  }
  std::vector<Integer> wide(2 * phi - 1);
  Integer scale, tmp;
  for (std::size_t t = 0; t < a.size(); ++t) {
    const FieldElement &x = *a[t], &y = *b[t];
    if (&x.field() != &f || &y.field() != &f) throw ArithmeticError("field mismatch");
    if (x.is_zero() || y.is_zero()) continue;
    scale = den / (x.denominator() * y.denominator());
    const auto &xn = x.numerators(), &yn = y.numerators();
    for (int i = 0; i < phi; ++i) {
      if (xn[i] == 0) continue;
      tmp = xn[i] * scale;
      for (int j = 0; j < phi; ++j)
        if (yn[j] != 0) mpz_addmul(wide[i + j].get_mpz_t(), tmp.get_mpz_t(), yn[j].get_mpz_t());
    }
  }
  reduce_wide(f, wide);
  return FieldElement(f, std::move(wide), den);
}

// ------------------------------------------------------- canonical form

namespace {

// Left inverse of the embedding Q(zeta_d) -> Q(zeta_n): a set of pivot
// coordinates in the big field and the inverse of the square submatrix.
struct Descent {
  std::vector<int> rows;
  std::vector<Rational> inv; // phi(d) x phi(d), row-major
};

const Descent &descent(int n, int d) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, Descent> cache;
  std::lock_guard lock(mu);
  auto it = cache.find({n, d});
  if (it != cache.end()) return it->second;

  const auto &big = CyclotomicField::get(n);
  const auto &small = CyclotomicField::get(d);
  const int pn = big.degree(), pd = small.degree();
  const long step = n / d;
  // E[i][j] = coefficient i of zeta_n^(j*step)
  std::vector<std::vector<Rational>> E(pn, std::vector<Rational>(pd));
  for (int j = 0; j < pd; ++j) {
    auto p = big.power(j * step);
    for (int i = 0; i < pn; ++i) E[i][j] = static_cast<long>(p[i]);
  }
  // greedy choice of independent rows
  Descent ds;
  std::vector<std::vector<Rational>> basis; // echelon rows
  std::vector<int> pivcol;
  for (int i = 0; i < pn && static_cast<int>(ds.rows.size()) < pd; ++i) {
    auto v = E[i];
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (v[pivcol[b]] == 0) continue;
      Rational c = v[pivcol[b]] / basis[b][pivcol[b]];
      for (int j = 0; j < pd; ++j) v[j] -= c * basis[b][j];
    }
    int pc = -1;
    for (int j = 0; j < pd; ++j)
      if (v[j] != 0) {
        pc = j;
        break;
      }
    if (pc < 0) continue;
    basis.push_back(v);
    pivcol.push_back(pc);
    ds.rows.push_back(i);
  }
  // invert S = E[rows] by Gauss-Jordan
  std::vector<std::vector<Rational>> S(pd, std::vector<Rational>(2 * pd));
  for (int r = 0; r < pd; ++r) {
    for (int j = 0; j < pd; ++j) S[r][j] = E[ds.rows[r]][j];
    S[r][pd + r] = 1;
  }
  for (int c = 0; c < pd; ++c) {
    int p = c;
    while (S[p][c] == 0) ++p;
    std::swap(S[p], S[c]);
    Rational inv = 1 / S[c][c];
    for (auto &x : S[c]) x *= inv;
    for (int r = 0; r < pd; ++r) {
      if (r == c || S[r][c] == 0) continue;
      Rational f = S[r][c];
      for (int j = 0; j < 2 * pd; ++j) S[r][j] -= f * S[c][j];
    }
  }
  ds.inv.resize(static_cast<std::size_t>(pd) * pd);
  for (int r = 0; r < pd; ++r)
    for (int j = 0; j < pd; ++j) ds.inv[r * pd + j] = S[r][pd + j];
  return cache.emplace(std::make_pair(n, d), std::move(ds)).first->second;
}

std::optional<FieldElement> try_descend(const FieldElement &e, int d) {
  const int n = e.conductor();
  const auto &small = CyclotomicField::get(d);
  const Descent &ds = descent(n, d);
  const int pd = small.degree();
  std::vector<Rational> x(pd);
  for (int r = 0; r < pd; ++r) {
    Rational s = 0;
    for (int j = 0; j < pd; ++j) {
      const Integer &c = e.numerators()[ds.rows[j]];
      if (c != 0) s += ds.inv[r * pd + j] * c;
    }
    x[r] = s;
  }
  Integer den = 1;
  for (auto &v : x) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
  std::vector<Integer> num(pd);
  for (int r = 0; r < pd; ++r) num[r] = x[r].get_num() * (den / x[r].get_den());
  // x holds numerators over 1, so the true value has denominator e.den * den
  FieldElement cand(small, std::move(num), den * e.denominator());
  if (cand.lift(e.field()) == e) return cand;
  return std::nullopt;
}

} // namespace

FieldElement canonicalize(const FieldElement &e) {
  FieldElement cur = e;
  bool moved = true;
  while (moved && cur.conductor() > 1) {
    moved = false;
    if (cur.rational_value()) return FieldElement(CyclotomicField::get(1), *cur.rational_value());
    const int n = cur.conductor();
    for (int p : prime_factors(n)) {
      int d = canonical_conductor(n / p);
      if (d == n) continue;
      if (auto down = try_descend(cur, d)) {
        cur = std::move(*down);
        moved = true;
        break;
      }
    }
  }
  return cur;
}

// ----------------------------------------------------------- Cyclotomic

Cyclotomic::Cyclotomic() : value_(CyclotomicField::get(1)) {}
Cyclotomic::Cyclotomic(long v) : value_(CyclotomicField::get(1), Rational(v)) {}
Cyclotomic::Cyclotomic(const Rational &r) : value_(CyclotomicField::get(1), r) {}
Cyclotomic::Cyclotomic(const FieldElement &e) : value_(canonicalize(e)) {}

Cyclotomic Cyclotomic::root_of_unity(long n, long k) {
  if (n <= 0) throw ArithmeticError("root_of_unity: order must be positive");
  k = mod(k, n);
  if (n % 4 == 2) {
    // zeta_n = -zeta_m^((m+1)/2) with m = n/2 odd
    long m = n / 2;
    long e = mod(k * ((m + 1) / 2), m);
    FieldElement z = FieldElement::root_of_unity(CyclotomicField::get(static_cast<int>(m)), e);
    if (k % 2) z = -z;
    return Cyclotomic(z);
  }
  return Cyclotomic(FieldElement::root_of_unity(CyclotomicField::get(static_cast<int>(n)), k));
}

namespace {

Cyclotomic sqrt_prime(unsigned long p) {
  if (p == 2) return Cyclotomic::root_of_unity(8, 1) - Cyclotomic::root_of_unity(8, 3);
  const auto &f = CyclotomicField::get(static_cast<int>(p));
  FieldElement g(f);
  for (unsigned long k = 1; k < p; ++k) {
    int leg = mpz_kronecker_ui(Integer(static_cast<unsigned long>(k)).get_mpz_t(), p);
    g += FieldElement::root_of_unity(f, static_cast<long>(k)) * Rational(leg);
  }
  Cyclotomic gs(g);
  if (p % 4 == 1) return gs;
  return -(Cyclotomic::root_of_unity(4, 1) * gs);
}

} // namespace

Cyclotomic Cyclotomic::sqrt(const Rational &r0) {
  Rational r = r0;
  r.canonicalize();
  if (r == 0) return Cyclotomic();
  bool neg = sgn(r) < 0;
  if (neg) r = -r;
  // sqrt(a/b) = sqrt(a*b)/b
  Integer m = r.get_num() * r.get_den();
  Integer s = 1;
  Cyclotomic root(1);
  if (!mpz_fits_ulong_p(m.get_mpz_t())) throw ArithmeticError("sqrt_rational: argument too large");
  unsigned long v = m.get_ui();
  for (unsigned long p = 2; p * p <= v; ++p) {
    int e = 0;
    while (v % p == 0) {
      v /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) s *= p;
    if (e % 2) root *= sqrt_prime(p);
  }
  if (v > 1) root *= sqrt_prime(v);
  root *= Cyclotomic(Rational(s, r.get_den()));
  if (neg) root *= root_of_unity(4, 1);
  return root;
}

std::optional<Rational> Cyclotomic::to_rational() const {
  if (conductor() != 1) return std::nullopt;
  return value_.rational_value();
}

Cyclotomic Cyclotomic::inverse() const { return Cyclotomic(value_.inverse()); }

Cyclotomic Cyclotomic::galois(int k) const {
  Cyclotomic r;
  r.value_ = value_.galois(k);
  return r; // automorphisms preserve the conductor
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r;
  r.value_ = -value_;
  return r;
}

namespace {

template <class Op>
Cyclotomic combine(const Cyclotomic &a, const Cyclotomic &b, Op op) {
  const auto &f = CyclotomicField::get(common_conductor(a.conductor(), b.conductor()));
  return Cyclotomic(op(a.value().lift(f), b.value().lift(f)));
}

} // namespace

Cyclotomic &Cyclotomic::operator+=(const Cyclotomic &o) {
  return *this = combine(*this, o, [](const FieldElement &x, const FieldElement &y) { return x + y; });
}
Cyclotomic &Cyclotomic::operator-=(const Cyclotomic &o) {
  return *this = combine(*this, o, [](const FieldElement &x, const FieldElement &y) { return x - y; });
}
Cyclotomic &Cyclotomic::operator*=(const Cyclotomic &o) {
  return *this = combine(*this, o, [](const FieldElement &x, const FieldElement &y) { return x * y; });
}
Cyclotomic &Cyclotomic::operator/=(const Cyclotomic &o) { return *this *= o.inverse(); }

std::string Cyclotomic::to_string() const {
  const int n = conductor();
  const auto &num = value_.numerators();
  std::string out;
  for (std::size_t k = 0; k < num.size(); ++k) {
    if (num[k] == 0) continue;
    Rational c(num[k], value_.denominator());
    c.canonicalize();
    std::string term;
    if (k == 0) {
      term = c.get_str();
    } else {
      std::string root = "E(" + std::to_string(n) + ")";
      if (k > 1) root += "^" + std::to_string(k);
      if (c == 1)
        term = root;
      else if (c == -1)
        term = "-" + root;
      else
        term = c.get_str() + "*" + root;
    }
    if (!out.empty() && term[0] != '-') out += "+";
    out += term;
  }
  return out.empty() ? "0" : out;
}

std::complex<double> Cyclotomic::approximate() const {
  const int n = conductor();
  const double den = value_.denominator().get_d();
  std::complex<double> s = 0;
  const auto &num = value_.numerators();
  for (std::size_t k = 0; k < num.size(); ++k)
    s += num[k].get_d() / den * std::polar(1.0, 2 * M_PI * static_cast<double>(k) / n);
  return s;
}

std::ostream &operator<<(std::ostream &os, const Cyclotomic &c) { return os << c.to_string(); }

// --------------------------------------------------------------- parser

namespace {

class Parser {
public:
  explicit Parser(std::string_view s) : s_(s) {}

  Cyclotomic parse() {
    Cyclotomic v = expr();
    skip();
    if (i_ != s_.size()) fail("unexpected trailing input");
    return v;
  }

private:
  [[noreturn]] void fail(const std::string &what) const {
    throw ParseError(what + " at offset " + std::to_string(i_) + " in '" + std::string(s_) + "'");
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
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  Integer integer() {
    skip();
    std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) fail("expected integer");
    return Integer(std::string(s_.substr(start, i_ - start)));
  }
  long small_integer() {
    Integer z = integer();
    if (!mpz_fits_slong_p(z.get_mpz_t()) || z > 1000000) fail("integer out of range");
    return z.get_si();
  }

  Cyclotomic expr() {
    Cyclotomic v = term();
    for (;;) {
      if (eat('+'))
        v += term();
      else if (eat('-'))
        v -= term();
      else
        return v;
    }
  }
  Cyclotomic term() {
    Cyclotomic v = unary();
    for (;;) {
      if (eat('*')) {
        v *= unary();
      } else if (eat('/')) {
        Cyclotomic d = unary();
        if (d.is_zero()) fail("division by zero");
        v /= d;
      } else {
        return v;
      }
    }
  }
  Cyclotomic unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }
  Cyclotomic power() {
    Cyclotomic base = atom();
    if (!eat('^')) return base;
    bool neg = eat('-');
    long e = small_integer();
    Cyclotomic r(1);
    Cyclotomic b = neg ? base.inverse() : base;
    for (; e > 0; e >>= 1) {
      if (e & 1) r *= b;
      b *= b;
    }
    return r;
  }
  Cyclotomic atom() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end of input");
    if (eat('(')) {
      Cyclotomic v = expr();
      expect(')');
      return v;
    }
    if (s_.compare(i_, 3, "ER(") == 0) {
      i_ += 3;
      bool neg = eat('-');
      Integer p = integer();
      Integer q = 1;
      if (eat('/')) q = integer();
      if (q == 0) fail("zero denominator");
      expect(')');
      Rational r(p, q);
      r.canonicalize();
      return Cyclotomic::sqrt(neg ? Rational(-r) : r);
    }
    if (s_.compare(i_, 2, "E(") == 0) {
      i_ += 2;
      long n = small_integer();
      if (n == 0) fail("E(0) is undefined");
      expect(')');
      return Cyclotomic::root_of_unity(n, 1);
    }
    if (std::isdigit(static_cast<unsigned char>(s_[i_]))) return Cyclotomic(Rational(integer()));
    fail("unexpected character");
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

} // namespace

Cyclotomic parse_cyclotomic(std::string_view text) { return Parser(text).parse(); }

} // namespace fanoquot
