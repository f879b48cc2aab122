#pragma once

// Coinvariant rank rk H^2(F(X),Z)_H per subgroup: the imported rank table,
// the Fermat computation on the space W of squarefree cubic monomials, and
// the curated overlay of decisions for the order-1944 ambient.

#include "fanoquot/catalog.hpp"
#include "fanoquot/matrix_group.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace fanoquot {

/// Catalog key of the ambient whose subgroups use the Fermat computation.
inline constexpr const char *kFermatAmbient = "C3_4_A6";

class RankTable {
public:
  explicit RankTable(std::vector<RankRow> rows) : rows_(std::move(rows)) {}
  static const RankTable &shipped();

  /// All ranks listed for the id, ascending and distinct; empty when absent.
  std::vector<int> candidates(const SmallGroupId &id) const;
  const std::vector<RankRow> &rows() const { return rows_; }

private:
  std::vector<RankRow> rows_;
};

const std::vector<OverlayRow> &shipped_overlay();

/// The 20 monomials x_i x_j x_k, i < j < k, in lexicographic order.
const std::vector<std::array<int, 3>> &w_basis();

/// A monomial matrix: row i has its single nonzero entry scale[i] in column
/// col[i]. Under substitution x_i -> scale[i] x_col[i].
struct MonomialForm {
  std::array<int, 6> col{};
  std::vector<FieldElement> scale;
};
std::optional<MonomialForm> monomial_form(const FieldMatrix &m);

/// Trace on W of the substitution defined by a monomial 6x6 matrix.
FieldElement w_trace(const MonomialForm &m);

class NotMonomialError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Per-element traces on W for a group of 6x6 monomial matrices, built once
/// along the Cayley-graph spanning tree.
class FermatAction {
public:
  /// Throws NotMonomialError if some generator is not monomial.
  explicit FermatAction(const MatrixGroup &g);
  /// dim W^H by averaging traces over H; checked to be an integer in [0,20].
  int invariant_dimension(const Subgroup &h) const;
  /// 20 - dim W^H.
  int coinvariant_rank(const Subgroup &h) const { return 20 - invariant_dimension(h); }

private:
  const CyclotomicField *field_;
  std::vector<FieldElement> traces_;
};

/// Where a rank value came from.
enum class RankSource { Fermat, Overlay, Table, Unresolved, Monotonicity };
std::string to_string(RankSource s);

struct RankResult {
  std::vector<int> candidates; // a single entry when resolved
  RankSource source = RankSource::Unresolved;
  std::string tag; // overlay tag, if any

  bool resolved() const { return candidates.size() == 1; }
};

/// Invariants an overlay row may condition on.
struct RankContext {
  int n2 = 0, N3 = 0, n3 = 0, n31 = 0, n32 = 0;
};

/// Priority: Fermat computation (when `fermat` is given), then the overlay
/// for this ambient, then a unique table rank, else the candidate set.
RankResult resolve_rank(const std::string &ambient, const SmallGroupId &id, const RankContext &ctx,
                        const Subgroup &h, const FermatAction *fermat,
                        const RankTable &table = RankTable::shipped(),
                        const std::vector<OverlayRow> &overlay = shipped_overlay());

} // namespace fanoquot
