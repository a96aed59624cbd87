#include "peodd/linalg.hpp"

#include <stdexcept>

namespace peodd {

void SparseMatrix::set(std::size_t r, std::size_t c, const Rational& v) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("SparseMatrix::set");
  if (is_zero(v))
    entries_.erase({r, c});
  else
    entries_[{r, c}] = v;
}

void SparseMatrix::add(std::size_t r, std::size_t c, const Rational& v) {
  if (is_zero(v)) return;
  auto key = std::make_pair(r, c);
  auto it = entries_.find(key);
  if (it == entries_.end()) {
    set(r, c, v);
  } else {
    it->second += v;
    if (is_zero(it->second)) entries_.erase(it);
  }
}

Rational SparseMatrix::get(std::size_t r, std::size_t c) const {
  auto it = entries_.find({r, c});
  return it == entries_.end() ? Rational(0) : it->second;
}

Vec SparseMatrix::apply(const Vec& x) const {
  if (x.size() != cols_) throw std::invalid_argument("SparseMatrix::apply size");
  Vec out(rows_, Rational(0));
  for (const auto& [rc, v] : entries_) out[rc.first] += v * x[rc.second];
  return out;
}

SparseMatrix SparseMatrix::vstack(const SparseMatrix& top, const SparseMatrix& bottom) {
  if (top.cols() != bottom.cols()) throw std::invalid_argument("vstack cols");
  SparseMatrix out(top.rows() + bottom.rows(), top.cols());
  for (const auto& [rc, v] : top.entries_) out.set(rc.first, rc.second, v);
  for (const auto& [rc, v] : bottom.entries_) out.set(top.rows() + rc.first, rc.second, v);
  return out;
}

SparseMatrix SparseMatrix::identity(std::size_t n) {
  SparseMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out.set(i, i, Rational(1));
  return out;
}

namespace {

// Dense Gauss-Jordan. Weight-space dimensions here are tiny, so a dense
// kernel under 64 columns covers every system in the pipeline; the sparse
// wrapper only strips/restores the representation.
struct DenseRref {
  std::vector<Vec> rows;
  std::vector<std::size_t> pivots;
};

DenseRref dense_rref(std::vector<Vec> a, std::size_t cols) {
  DenseRref out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t piv = r;
    while (piv < a.size() && is_zero(a[piv][c])) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[r], a[piv]);
    Rational inv = a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] /= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || is_zero(a[i][c])) continue;
      Rational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rows = std::move(a);
  return out;
}

std::vector<Vec> to_dense(const SparseMatrix& m) {
  std::vector<Vec> a(m.rows(), Vec(m.cols(), Rational(0)));
  for (const auto& [rc, v] : m.entries()) a[rc.first][rc.second] = v;
  return a;
}

// Sparse elimination: rows kept as column->value maps. Same pivot rule as the
// dense path (lowest row index with a nonzero in the leading column).
using SRow = std::map<std::size_t, Rational>;

std::pair<std::vector<SRow>, std::vector<std::size_t>> sparse_rref(const SparseMatrix& m) {
  std::vector<SRow> rows(m.rows());
  for (const auto& [rc, v] : m.entries()) rows[rc.first][rc.second] = v;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < rows.size(); ++c) {
    std::size_t piv = rows.size();
    for (std::size_t i = r; i < rows.size(); ++i) {
      auto it = rows[i].begin();
      if (it != rows[i].end() && it->first == c) {
        piv = i;
        break;
      }
    }
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    Rational inv = rows[r].begin()->second;
    for (auto& [j, v] : rows[r]) v /= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r) continue;
      auto it = rows[i].find(c);
      if (it == rows[i].end()) continue;
      Rational f = it->second;
      for (const auto& [j, v] : rows[r]) {
        auto jt = rows[i].find(j);
        if (jt == rows[i].end()) {
          rows[i][j] = -f * v;
        } else {
          jt->second -= f * v;
          if (is_zero(jt->second)) rows[i].erase(jt);
        }
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(rows), std::move(pivots)};
}

}  // namespace

RrefResult rref(const SparseMatrix& m) {
  SparseMatrix out(m.rows(), m.cols());
  if (m.cols() < 64) {
    DenseRref d = dense_rref(to_dense(m), m.cols());
    for (std::size_t i = 0; i < d.rows.size(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (!is_zero(d.rows[i][j])) out.set(i, j, d.rows[i][j]);
    return {std::move(out), std::move(d.pivots)};
  }
  auto [rows, pivots] = sparse_rref(m);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& [j, v] : rows[i]) out.set(i, j, v);
  return {std::move(out), std::move(pivots)};
}

std::size_t rank(const SparseMatrix& m) { return rref(m).pivots.size(); }

std::vector<Vec> kernel_basis(const SparseMatrix& m) {
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : r.pivots) is_pivot[c] = true;

  std::vector<Vec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols(), Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i)
      v[r.pivots[i]] = -r.matrix.get(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const SparseMatrix& m, const Vec& rhs) {
  if (rhs.size() != m.rows()) throw std::invalid_argument("solve: rhs length");
  SparseMatrix aug(m.rows(), m.cols() + 1);
  for (const auto& [rc, v] : m.entries()) aug.set(rc.first, rc.second, v);
  for (std::size_t i = 0; i < rhs.size(); ++i) aug.set(i, m.cols(), rhs[i]);

  RrefResult r = rref(aug);
  for (std::size_t c : r.pivots)
    if (c == m.cols()) return std::nullopt;  // inconsistent

  Vec x(m.cols(), Rational(0));
  for (std::size_t i = 0; i < r.pivots.size(); ++i)
    x[r.pivots[i]] = r.matrix.get(i, m.cols());
  return x;
}

std::optional<Vec> in_span(const std::vector<Vec>& vectors, const Vec& v) {
  std::size_t len = v.size();
  for (const auto& w : vectors)
    if (w.size() != len) throw std::invalid_argument("in_span: vector lengths");
  SparseMatrix m(len, vectors.size());
  for (std::size_t j = 0; j < vectors.size(); ++j)
    for (std::size_t i = 0; i < len; ++i)
      if (!is_zero(vectors[j][i])) m.set(i, j, vectors[j][i]);
  return solve(m, v);
}

}  // namespace peodd
