#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "spmodels/rational.hpp"

namespace spm {

using SparseRow = std::vector<std::pair<int, Rational>>;   // strictly increasing columns
using IntRow = std::vector<std::pair<int, Integer>>;       // strictly increasing columns

struct SparseMatrix {
  int cols = 0;
  std::vector<SparseRow> rows;
};

/// Exact right nullspace by fraction-free sparse elimination.
///
/// Rows are cleared to primitive integer rows, fed in order of increasing
/// fill, and reduced against the current pivot set by cross-multiplication
/// (r <- p*r - a*P) followed by content removal, so no fractions appear. The
/// echelon form is then back-substituted to reduced form the same way. One
/// basis vector is returned per free column (ascending); each vector is
/// integral and primitive with a positive entry at its free column.
std::vector<IntRow> nullspace(const SparseMatrix& m);

int rank(const SparseMatrix& m);

/// Incrementally maintained span of sparse rational vectors in reduced row
/// echelon form, with coordinates of each echelon row relative to the
/// vectors that were inserted.
class IncrementalSpan {
 public:
  /// Adds v if it is independent of the current span. Returns true if added.
  bool insert(const SparseRow& v);

  /// Coordinates of v in terms of the inserted vectors, if v is in the span.
  std::optional<std::vector<Rational>> coordinates(const SparseRow& v) const;

  bool contains(const SparseRow& v) const { return coordinates(v).has_value(); }
  int dimension() const { return static_cast<int>(rows_.size()); }

 private:
  struct EchelonRow {
    SparseRow vec;               // pivot entry == 1
    std::vector<Rational> comb;  // vec = sum comb[i] * inserted[i]
  };
  // Reduces v (and its combination) against all pivots.
  void reduce(SparseRow& v, std::vector<Rational>& comb) const;

  std::map<int, std::size_t> pivots_;  // pivot column -> row
  std::vector<EchelonRow> rows_;
};

}  // namespace spm
