#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_n).
//
// Two layers live here. FieldElement is a value of a fixed field Q(zeta_n) in
// the power basis {1, z, ..., z^(phi(n)-1)} reduced modulo Phi_n; it never
// changes field on its own and is what the hot loops (group enumeration,
// matrix products) use. Cyclotomic is the canonical public value: the same
// representation, but always stored in the smallest field that contains it,
// so equal values have identical representations.

#include <gmpxx.h>

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fanoquot {

using Integer = mpz_class;
using Rational = mpq_class;

class ArithmeticError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Euler totient.
int euler_phi(int n);

/// Conductors congruent to 2 mod 4 describe the same field as n/2; this maps
/// such n to n/2 and leaves every other n alone.
int canonical_conductor(int n);

/// Precomputed tables for Q(zeta_n), n a canonical conductor. Instances are
/// created once per conductor and live for the whole process, so raw
/// pointers to them stay valid.
class CyclotomicField {
public:
  /// Thread-safe lookup; builds the tables on first use.
  static const CyclotomicField &get(int n);

  /// Conductors up to this bound are built eagerly on first access to any
  /// field; larger ones are built on demand. Purely a warm-up knob.
  static void set_cache_bound(int bound);

  int conductor() const { return n_; }
  int degree() const { return phi_; }

  /// Coefficients of Phi_n, ascending, monic.
  const std::vector<std::int64_t> &cyclotomic_polynomial() const { return phi_poly_; }

  /// zeta_n^e reduced modulo Phi_n, for any integer e.
  std::span<const std::int64_t> power(long e) const;

  /// Units k mod n, ascending; index i of galois() refers to units()[i].
  const std::vector<int> &units() const { return units_; }

private:
  explicit CyclotomicField(int n);

  int n_;
  int phi_;
  std::vector<std::int64_t> phi_poly_;
  std::vector<std::int64_t> powers_; // n rows of phi_ entries
  std::vector<int> units_;
};

/// An element of a fixed field Q(zeta_n): num[k] / den is the coefficient of
/// zeta_n^k. Invariant: den > 0 and gcd(num..., den) == 1.
class FieldElement {
public:
  explicit FieldElement(const CyclotomicField &field);
  FieldElement(const CyclotomicField &field, const Rational &r);
  FieldElement(const CyclotomicField &field, std::vector<Integer> num, Integer den);

  const CyclotomicField &field() const { return *field_; }
  int conductor() const { return field_->conductor(); }
  const std::vector<Integer> &numerators() const { return num_; }
  const Integer &denominator() const { return den_; }

  bool is_zero() const;
  bool is_one() const;
  /// The value when it lies in Q (only the constant coefficient is nonzero).
  std::optional<Rational> rational_value() const;

  /// zeta_n^k in the given field.
  static FieldElement root_of_unity(const CyclotomicField &field, long k);

  /// Same value viewed in Q(zeta_m), m a multiple of this conductor.
  FieldElement lift(const CyclotomicField &target) const;

  /// Image under the automorphism zeta -> zeta^k, gcd(k, n) == 1.
  FieldElement galois(int k) const;

  FieldElement inverse() const;
  /// Product of all conjugates; a rational number.
  Rational norm() const;

  FieldElement operator-() const;
  FieldElement &operator+=(const FieldElement &o);
  FieldElement &operator-=(const FieldElement &o);
  FieldElement &operator*=(const FieldElement &o);
  FieldElement &operator*=(const Rational &r);
  FieldElement &operator/=(const FieldElement &o) { return *this *= o.inverse(); }

  friend FieldElement operator+(FieldElement a, const FieldElement &b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement &b) { return a -= b; }
  friend FieldElement operator*(const FieldElement &a, const FieldElement &b);
  friend FieldElement operator*(FieldElement a, const Rational &r) { return a *= r; }
  friend FieldElement operator/(FieldElement a, const FieldElement &b) { return a /= b; }
  friend bool operator==(const FieldElement &a, const FieldElement &b);

  std::size_t hash() const;

  /// Appends a compact exact encoding (field-relative); used as a hash key.
  void append_key(std::string &out) const;

private:
  void normalize();

  const CyclotomicField *field_;
  std::vector<Integer> num_;
  Integer den_;
};

/// Fused sum of products: returns sum_i a[i] * b[i], reducing modulo Phi_n
/// only once. All operands must share one field.
FieldElement dot_product(std::span<const FieldElement *const> a,
                         std::span<const FieldElement *const> b);

/// A cyclotomic number in canonical form: stored in Q(zeta_c) with c the
/// conductor of the value (the least c whose field contains it).
class Cyclotomic {
public:
  Cyclotomic();
  Cyclotomic(long v);
  Cyclotomic(const Rational &r);
  /// Canonicalizes (minimizes the conductor of) an arbitrary field element.
  explicit Cyclotomic(const FieldElement &e);

  /// zeta_n^k; rejects n == 0.
  static Cyclotomic root_of_unity(long n, long k = 1);
  /// A square root of r built from Gauss sums: for r > 0 the positive real
  /// root, for r < 0 i times the root of -r.
  static Cyclotomic sqrt(const Rational &r);

  int conductor() const { return value_.conductor(); }
  const FieldElement &value() const { return value_; }
  /// The same value in Q(zeta_n); n must be a multiple of conductor().
  FieldElement in_field(const CyclotomicField &field) const { return value_.lift(field); }

  bool is_zero() const { return value_.is_zero(); }
  bool is_one() const { return value_.is_one(); }
  std::optional<Rational> to_rational() const;

  Cyclotomic inverse() const;
  Cyclotomic galois(int k) const;
  Cyclotomic conjugate() const { return galois(-1); }

  Cyclotomic operator-() const;
  Cyclotomic &operator+=(const Cyclotomic &o);
  Cyclotomic &operator-=(const Cyclotomic &o);
  Cyclotomic &operator*=(const Cyclotomic &o);
  Cyclotomic &operator/=(const Cyclotomic &o);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic &b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic &b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic &b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic &b) { return a /= b; }
  friend bool operator==(const Cyclotomic &a, const Cyclotomic &b) { return a.value_ == b.value_; }

  std::size_t hash() const { return value_.hash(); }

  /// Canonical text: sum of c*E(n)^k terms by ascending k, e.g. "1/2+1/2*E(3)".
  std::string to_string() const;
  /// Floating-point approximation for display only; never fed back into
  /// computation.
  std::complex<double> approximate() const;

private:
  FieldElement value_;
};

std::ostream &operator<<(std::ostream &os, const Cyclotomic &c);

/// Smallest-field canonical form of an element.
FieldElement canonicalize(const FieldElement &e);

/// Least common canonical conductor.
int common_conductor(int a, int b);

/// Parses the entry grammar used by the data files:
///   expr   := term (('+'|'-') term)*
///   term   := unary (('*'|'/') unary)*
///   unary  := '-' unary | power
///   power  := atom ('^' ['-'] integer)?
///   atom   := integer | 'E(' integer ')' | 'ER(' ['-'] integer ['/' integer] ')'
///           | '(' expr ')'
/// Rationals are written as integer quotients ("p/q").
Cyclotomic parse_cyclotomic(std::string_view text);

struct CyclotomicHash {
  std::size_t operator()(const Cyclotomic &c) const { return c.hash(); }
};

} // namespace fanoquot
