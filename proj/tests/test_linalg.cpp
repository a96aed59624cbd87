#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "peodd/linalg.hpp"

using namespace peodd;

namespace {

SparseMatrix from_rows(const std::vector<std::vector<long long>>& rows, std::size_t cols) {
  SparseMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (rows[i][j] != 0) m.set(i, j, Rational(rows[i][j]));
  return m;
}

// Independent rank oracle: largest k with a nonzero k x k minor, determinants
// by Laplace expansion.
Rational det_laplace(const std::vector<Vec>& a) {
  std::size_t n = a.size();
  if (n == 0) return Rational(1);
  if (n == 1) return a[0][0];
  Rational out(0);
  int sign = 1;
  for (std::size_t j = 0; j < n; ++j) {
    if (!is_zero(a[0][j])) {
      std::vector<Vec> minor;
      for (std::size_t i = 1; i < n; ++i) {
        Vec row;
        for (std::size_t c = 0; c < n; ++c)
          if (c != j) row.push_back(a[i][c]);
        minor.push_back(std::move(row));
      }
      out += Rational(sign) * a[0][j] * det_laplace(minor);
    }
    sign = -sign;
  }
  return out;
}

std::size_t rank_minor_oracle(const SparseMatrix& m) {
  std::size_t maxk = std::min(m.rows(), m.cols());
  for (std::size_t k = maxk; k >= 1; --k) {
    std::vector<std::size_t> ri(k), ci(k);
    std::function<bool(std::size_t, std::size_t)> pick_rows =
        [&](std::size_t pos, std::size_t start) -> bool {
      if (pos == k) {
        std::function<bool(std::size_t, std::size_t)> pick_cols =
            [&](std::size_t cpos, std::size_t cstart) -> bool {
          if (cpos == k) {
            std::vector<Vec> sub(k, Vec(k, Rational(0)));
            for (std::size_t i = 0; i < k; ++i)
              for (std::size_t j = 0; j < k; ++j) sub[i][j] = m.get(ri[i], ci[j]);
            return !is_zero(det_laplace(sub));
          }
          for (std::size_t c = cstart; c < m.cols(); ++c) {
            ci[cpos] = c;
            if (pick_cols(cpos + 1, c + 1)) return true;
          }
          return false;
        };
        return pick_cols(0, 0);
      }
      for (std::size_t r = start; r < m.rows(); ++r) {
        ri[pos] = r;
        if (pick_rows(pos + 1, r + 1)) return true;
      }
      return false;
    };
    if (pick_rows(0, 0)) return k;
  }
  return 0;
}

SparseMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols,
                           int density_pct = 60) {
  SparseMatrix m(rows, cols);
  std::uniform_int_distribution<int> val(-5, 5), den(1, 3), pct(0, 99);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (pct(rng) < density_pct) m.set(i, j, Rational(val(rng), den(rng)));
  return m;
}

}  // namespace

TEST_CASE("rref identity") {
  auto r = rref(SparseMatrix::identity(3));
  CHECK(r.matrix == SparseMatrix::identity(3));
  CHECK(r.pivots == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("rref rank-1 example") {
  auto r = rref(from_rows({{2, 4}, {1, 2}}, 2));
  CHECK(r.pivots == std::vector<std::size_t>{0});
  CHECK(r.matrix.get(0, 0) == Rational(1));
  CHECK(r.matrix.get(0, 1) == Rational(2));
  CHECK(r.matrix.get(1, 0) == Rational(0));
  CHECK(r.matrix.get(1, 1) == Rational(0));
}

TEST_CASE("rref rank vs minor-expansion oracle on random 5x7") {
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 8; ++trial) {
    SparseMatrix m = random_matrix(rng, 5, 7, 45);
    CHECK(rank(m) == rank_minor_oracle(m));
  }
}

TEST_CASE("rref idempotent") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    SparseMatrix m = random_matrix(rng, 6, 9);
    auto once = rref(m);
    auto twice = rref(once.matrix);
    CHECK(once.matrix == twice.matrix);
    CHECK(once.pivots == twice.pivots);
  }
}

TEST_CASE("kernel: identity, zero, single row") {
  CHECK(kernel_basis(SparseMatrix::identity(4)).empty());
  CHECK(kernel_basis(SparseMatrix(2, 3)).size() == 3);

  SparseMatrix row = from_rows({{1, 2, 3}}, 3);
  auto ker = kernel_basis(row);
  REQUIRE(ker.size() == 2);
  for (const Vec& v : ker)
    for (const Rational& x : row.apply(v)) CHECK(is_zero(x));
}

TEST_CASE("rank + nullity = cols on 100 random matrices up to 30x30") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<std::size_t> dim(1, 30);
  for (int trial = 0; trial < 100; ++trial) {
    SparseMatrix m = random_matrix(rng, dim(rng), dim(rng), 30);
    auto ker = kernel_basis(m);
    CHECK(rank(m) + ker.size() == m.cols());
    for (const Vec& v : ker)
      for (const Rational& x : m.apply(v)) CHECK(is_zero(x));  // exact, no tolerance
  }
}

TEST_CASE("solve") {
  SparseMatrix id = SparseMatrix::identity(3);
  Vec e1{Rational(1), Rational(0), Rational(0)};
  auto x = solve(id, e1);
  REQUIRE(x.has_value());
  CHECK(*x == e1);

  SparseMatrix under = from_rows({{1, 1}}, 2);
  auto u = solve(under, {Rational(2)});
  REQUIRE(u.has_value());
  CHECK((*u)[0] + (*u)[1] == Rational(2));

  SparseMatrix incons = from_rows({{1}, {2}}, 1);
  CHECK_FALSE(solve(incons, {Rational(1), Rational(1)}).has_value());
}

TEST_CASE("in_span") {
  Vec e1{Rational(1), Rational(0)}, e2{Rational(0), Rational(1)};
  auto c = in_span({e1, e2}, {Rational(1), Rational(2)});
  REQUIRE(c.has_value());
  CHECK((*c)[0] == Rational(1));
  CHECK((*c)[1] == Rational(2));
  CHECK_FALSE(in_span({e1}, e2).has_value());
}

TEST_CASE("in_span consistent with solve on random spanning sets") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> val(-4, 4);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Vec> gens;
    for (int i = 0; i < 4; ++i) {
      Vec v(6, Rational(0));
      for (auto& x : v) x = Rational(val(rng));
      gens.push_back(v);
    }
    std::uniform_int_distribution<int> coef(-3, 3);
    Vec target(6, Rational(0));
    Vec chosen(4, Rational(0));
    for (int i = 0; i < 4; ++i) {
      chosen[static_cast<std::size_t>(i)] = Rational(coef(rng));
      for (std::size_t j = 0; j < 6; ++j)
        target[j] += chosen[static_cast<std::size_t>(i)] * gens[static_cast<std::size_t>(i)][j];
    }
    auto c = in_span(gens, target);
    REQUIRE(c.has_value());
    // verify by substitution (the coefficient vector need not be unique)
    Vec rebuilt(6, Rational(0));
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 6; ++j) rebuilt[j] += (*c)[i] * gens[i][j];
    CHECK(rebuilt == target);
  }
}
