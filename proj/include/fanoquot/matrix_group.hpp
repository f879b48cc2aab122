#pragma once

// Finite subgroups of PGL_d given by generator matrices. Matrices are kept
// over one fixed cyclotomic field (the common conductor of the generators)
// and normalized so the first nonzero entry in row-major order is 1.

#include "fanoquot/cyclotomic.hpp"
#include "fanoquot/group.hpp"
#include "fanoquot/linalg.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace fanoquot {

/// A d x d matrix over a fixed field, row-major.
struct FieldMatrix {
  int dim = 0;
  std::vector<FieldElement> a;

  const FieldElement &operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * dim + j]; }
  FieldElement &operator()(int i, int j) { return a[static_cast<std::size_t>(i) * dim + j]; }
  friend bool operator==(const FieldMatrix &x, const FieldMatrix &y) { return x.dim == y.dim && x.a == y.a; }
};

FieldMatrix to_field(const MatC &m, const CyclotomicField &f);
MatC to_cyclotomic(const FieldMatrix &m);
FieldMatrix multiply(const FieldMatrix &x, const FieldMatrix &y);
/// Scales so the first nonzero entry (row-major) is 1. Throws on the zero
/// matrix.
FieldMatrix normalize_projective(FieldMatrix m);
/// Serialized normal form; equal keys iff projectively equal (same field).
std::string projective_key(const FieldMatrix &normalized);

struct GenerateOptions {
  /// Closure stops with BudgetExceeded beyond this many elements.
  std::size_t order_cap = 100000;
};

class MatrixGroup {
public:
  /// Breadth-first closure of the projective classes of `gens`.
  static MatrixGroup generate(const std::vector<MatC> &gens, const GenerateOptions &opt = {});
  /// Rebuilds from a stored Cayley graph (see cache.hpp).
  static MatrixGroup from_parts(const std::vector<MatC> &gens, std::shared_ptr<const FinGroup> group,
                                std::vector<std::string> keys);

  const FinGroup &group() const { return *group_; }
  std::shared_ptr<const FinGroup> shared_group() const { return group_; }
  std::size_t order() const { return group_->order(); }
  int dim() const { return dim_; }
  const CyclotomicField &field() const { return *field_; }
  const std::vector<MatC> &input_generators() const { return input_; }
  /// Serialized normal forms in canonical element order.
  const std::vector<std::string> &keys() const { return keys_; }

  /// Normalized representative of element x.
  FieldMatrix matrix(Elem x) const;
  MatC matrix_c(Elem x) const { return to_cyclotomic(matrix(x)); }
  /// Element index of a matrix; nullopt if it is not in the group.
  std::optional<Elem> find(const MatC &m) const;
  /// Element given by a word such as "g1*g2^2*(g1*g3)^-1": generators are
  /// referred to by the given names or as g1, g2, ... (1-based); "e" is the
  /// identity.
  Elem evaluate_word(const std::string &word, const std::vector<std::string> &names = {}) const;

private:
  MatrixGroup() = default;
  void cache_matrices();

  std::vector<MatC> input_;
  const CyclotomicField *field_ = nullptr;
  int dim_ = 0;
  std::vector<FieldMatrix> gens_; // normalized, in field_
  std::shared_ptr<const FinGroup> group_;
  std::vector<std::string> keys_;
  std::vector<FieldMatrix> cached_; // all elements when the group is small
};

/// Least m with x^m scalar (projective order) computed from the matrix.
int projective_order(const FieldMatrix &m, int limit = 100000);

} // namespace fanoquot
