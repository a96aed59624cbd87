#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "peodd/rational.hpp"

namespace peodd {

using Vec = std::vector<Rational>;

/// Sparse matrix over Rational. Zero entries are never stored.
class SparseMatrix {
 public:
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  void set(std::size_t r, std::size_t c, const Rational& v);
  void add(std::size_t r, std::size_t c, const Rational& v);
  Rational get(std::size_t r, std::size_t c) const;

  const std::map<std::pair<std::size_t, std::size_t>, Rational>& entries() const {
    return entries_;
  }

  Vec apply(const Vec& x) const;  // m * x

  /// Stack other below this one (same column count).
  static SparseMatrix vstack(const SparseMatrix& top, const SparseMatrix& bottom);

  static SparseMatrix identity(std::size_t n);

  bool operator==(const SparseMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
  }

 private:
  std::size_t rows_, cols_;
  std::map<std::pair<std::size_t, std::size_t>, Rational> entries_;
};

struct RrefResult {
  SparseMatrix matrix;
  std::vector<std::size_t> pivots;  // strictly increasing pivot columns
};

/// Reduced row echelon form. Pivot rule: in each column, the first row (lowest
/// index) with a nonzero entry; deterministic output for golden tests.
RrefResult rref(const SparseMatrix& m);

std::size_t rank(const SparseMatrix& m);

/// Basis of {x : m x = 0}. Vectors are exact; count = cols - rank.
std::vector<Vec> kernel_basis(const SparseMatrix& m);

/// Some x with m x = rhs, or nullopt when inconsistent.
std::optional<Vec> solve(const SparseMatrix& m, const Vec& rhs);

/// Coefficients expressing v in the given list, or nullopt.
std::optional<Vec> in_span(const std::vector<Vec>& vectors, const Vec& v);

}  // namespace peodd
