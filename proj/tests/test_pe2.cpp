#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "peodd/pe2.hpp"

using namespace peodd;

namespace {

using Lin = std::map<Gen, Rational>;

Lin lin_of(const std::vector<GenTerm>& terms) {
  Lin out;
  for (const auto& t : terms) {
    out[t.gen] += t.coeff;
    if (is_zero(out[t.gen])) out.erase(t.gen);
  }
  return out;
}

// [g, v] for a linear combination v
Lin bracket_lin(Gen g, const Lin& v) {
  Lin out;
  for (const auto& [h, c] : v)
    for (const auto& t : bracket(g, h)) {
      out[t.gen] += c * t.coeff;
      if (is_zero(out[t.gen])) out.erase(t.gen);
    }
  return out;
}

int par(Gen g) { return is_odd(g) ? 1 : 0; }

}  // namespace

TEST_CASE("bracket examples") {
  CHECK(lin_of(bracket(Gen::d_xi, Gen::y_minus)) == Lin{{Gen::y, Rational(1)}});
  CHECK(lin_of(bracket(Gen::x, Gen::y)) == Lin{{Gen::h, Rational(1)}});
  CHECK(lin_of(bracket(Gen::xi_dxi, Gen::x_minus)) == Lin{{Gen::x_minus, Rational(1)}});
  CHECK(bracket(Gen::d_xi, Gen::d_xi).empty());
}

TEST_CASE("super-antisymmetry on all 64 pairs") {
  for (Gen a : all_generators)
    for (Gen b : all_generators) {
      Lin lhs = lin_of(bracket(a, b));
      Lin rhs = lin_of(bracket(b, a));
      Rational sign = (par(a) && par(b)) ? Rational(1) : Rational(-1);
      for (auto& [g, c] : rhs) c *= sign;
      std::erase_if(rhs, [](const auto& kv) { return is_zero(kv.second); });
      CHECK(lhs == rhs);
    }
}

TEST_CASE("super Jacobi identity on all 512 triples") {
  for (Gen a : all_generators)
    for (Gen b : all_generators)
      for (Gen c : all_generators) {
        // (-1)^{p(a)p(c)} [a,[b,c]] + (-1)^{p(b)p(a)} [b,[c,a]] +
        // (-1)^{p(c)p(b)} [c,[a,b]] = 0
        Lin total;
        auto acc = [&](Gen x, Gen y, Gen z, int sign_par) {
          Lin inner = lin_of(bracket(y, z));
          Lin outer = bracket_lin(x, inner);
          Rational s = (sign_par % 2) ? Rational(-1) : Rational(1);
          for (auto& [g, cc] : outer) {
            total[g] += s * cc;
            if (is_zero(total[g])) total.erase(g);
          }
        };
        acc(a, b, c, par(a) * par(c));
        acc(b, c, a, par(b) * par(a));
        acc(c, a, b, par(c) * par(b));
        CHECK(total.empty());
      }
}

TEST_CASE("roots") {
  CHECK(root(Gen::x_minus) == Weight{2, -1});
  CHECK(root(Gen::d_xi) == Weight{0, 1});
  CHECK(root(Gen::h) == Weight{0, 0});
  CHECK(root(Gen::y_minus) == Weight{-2, -1});
}

TEST_CASE("root additivity on nonzero brackets") {
  for (Gen a : all_generators)
    for (Gen b : all_generators)
      for (const auto& t : bracket(a, b))
        CHECK(root(t.gen) == root(a) + root(b));
}

TEST_CASE("dual weight") {
  CHECK(dual({5, 0}) == Weight{-7, 0});
  CHECK(dual({-1, 3}) == Weight{-1, 3});
  std::mt19937 rng(4);
  std::uniform_int_distribution<int> d(-40, 40);
  for (int i = 0; i < 50; ++i) {
    Weight w{d(rng), d(rng)};
    CHECK(dual(dual(w)) == w);
  }
}

TEST_CASE("odd block membership") {
  CHECK(in_odd_block({1, 0}));
  CHECK_FALSE(in_odd_block({2, 0}));
  CHECK_FALSE(in_odd_block({3, 0}));
  CHECK(in_odd_block({3, 1}));
  CHECK(in_odd_block({5, 0}));
  CHECK(in_odd_block({-3, 0}));
  CHECK(in_odd_block({-7, 0}));
  CHECK_FALSE(in_odd_block({-1, 0}));
  CHECK(in_odd_block({-1, 1}));
  CHECK_FALSE(in_odd_block({-5, 0}));
  CHECK(in_odd_block({-5, 1}));
}

TEST_CASE("arrow shifts and the dual preserve the block") {
  for (int a = -21; a <= 21; a += 2) {
    if ((a % 2 + 2) % 2 != 1) continue;
    for (int b = -3; b <= 3; ++b) {
      Weight w{a, b};
      if (!in_odd_block(w)) continue;
      CHECK(in_odd_block(w + Weight{2, 1}));
      CHECK(in_odd_block(w + Weight{-2, 1}));
      CHECK(in_odd_block(dual(w)));
    }
  }
}

TEST_CASE("canonical_b produces block vertices") {
  for (int a = -21; a <= 21; a += 2)
    if ((a % 2 + 2) % 2 == 1) CHECK(in_odd_block({a, canonical_b(a)}));
}
