#pragma once

// Helpers shared by the unit tests and the acceptance binary.

#include "fanoquot/catalog.hpp"
#include "fanoquot/group.hpp"
#include "fanoquot/invariants.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace fanoquot::testing {

inline std::shared_ptr<const FinGroup> sym(int n) {
  std::vector<int> t(n), c(n);
  for (int i = 0; i < n; ++i) t[i] = c[i] = i;
  std::swap(t[0], t[1]);
  for (int i = 0; i < n; ++i) c[i] = (i + 1) % n;
  return permutation_group({t, c}).group;
}

inline std::shared_ptr<const FinGroup> alt(int n) {
  std::vector<int> a(n), b(n);
  for (int i = 0; i < n; ++i) a[i] = b[i] = i;
  a[0] = 1, a[1] = 2, a[2] = 0;
  if (n % 2)
    for (int i = 0; i < n; ++i) b[i] = (i + 1) % n;
  else
    for (int i = 1; i < n; ++i) b[i] = i % (n - 1) + 1;
  return permutation_group({a, b}).group;
}

inline std::shared_ptr<const FinGroup> cyclic(int n) {
  std::vector<int> c(n);
  for (int i = 0; i < n; ++i) c[i] = (i + 1) % n;
  return permutation_group({c}).group;
}

/// D * P with D = diag(w^e_0, ..., w^e_5) (w = E(3)) and P the permutation
/// matrix sending basis vector j to basis vector sigma(j); sigma is given by
/// disjoint cycles on 0..5.
inline MatC monomial(const std::vector<int> &exps, const std::vector<std::vector<int>> &cycles) {
  std::vector<int> sigma{0, 1, 2, 3, 4, 5};
  for (const auto &c : cycles)
    for (std::size_t i = 0; i < c.size(); ++i) sigma[c[i]] = c[(i + 1) % c.size()];
  MatC m(6, 6);
  for (int j = 0; j < 6; ++j) m(sigma[j], j) = Cyclotomic::root_of_unity(3, exps[sigma[j]]);
  return m;
}

/// Generators of two subgroups of the Fermat group with the same singular
/// invariants; expected invariant dimensions 1 and 0.
inline std::vector<MatC> fermat_g1() {
  return {monomial({0, 0, 0, 1, 1, 1}, {}), monomial({0, 0, 0, 0, 1, 2}, {{0, 1, 2}}),
          monomial({0, 2, 1, 0, 0, 0}, {{3, 4, 5}}), monomial({0, 0, 0, 0, 0, 0}, {{0, 3}, {1, 4, 2, 5}})};
}
inline std::vector<MatC> fermat_g2() {
  return {monomial({0, 0, 0, 1, 1, 1}, {}), monomial({0, 0, 0, 0, 1, 2}, {{0, 1, 2}}),
          monomial({0, 2, 1, 0, 1, 2}, {{3, 4, 5}}), monomial({0, 0, 1, 0, 0, 2}, {{0, 3}, {1, 4, 2, 5}})};
}

/// Catalog ambients enumerated once per process.
inline const Ambient &ambient(const std::string &key) {
  static std::mutex lock;
  static std::map<std::string, std::unique_ptr<Ambient>> cache;
  std::lock_guard<std::mutex> guard(lock);
  auto &slot = cache[key];
  if (!slot) {
    GroupDefinition d = load_group(key);
    MatrixGroup g = MatrixGroup::generate(d.generators);
    slot = std::make_unique<Ambient>(std::move(d), std::move(g));
  }
  return *slot;
}

/// Subgroup of an ambient generated by matrices (each must be a member).
inline Subgroup subgroup_of(const Ambient &a, const std::vector<MatC> &gens) {
  std::vector<Elem> seed;
  for (const auto &m : gens) {
    auto x = a.group.find(m);
    if (!x) throw MembershipError("matrix not in ambient");
    seed.push_back(*x);
  }
  return subgroup_closure(a.group.group(), seed);
}

} // namespace fanoquot::testing
