#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>
#include <random>

#include "peodd/modules.hpp"

using namespace peodd;

namespace {

ModuleVector unit(const InducedModule& P, std::uint8_t alpha, BaseKind kind, int idx) {
  ModuleVector v;
  v.add(alpha, P.base0().index_of.at({kind, idx}), Rational(1));
  return v;
}

ModuleVector scaled(ModuleVector v, const Rational& c) {
  v *= c;
  return v;
}

}  // namespace

TEST_CASE("sl2 Verma actions") {
  Base0Module m0 = build_verma0({5, 0}, 12);
  InducedModule P = induce(m0);
  ModuleVector y1 = unit(P, 0, BaseKind::verma_pbw, 1);

  // x.(y w) = 5 w
  CHECK(P.apply(Gen::x, y1) == scaled(unit(P, 0, BaseKind::verma_pbw, 0), Rational(5)));
  // x.(y^6 w) = 0: the singular vector
  CHECK(P.apply(Gen::x, unit(P, 0, BaseKind::verma_pbw, 6)).is_zero());
  // h eigenvalue a - 2k
  CHECK(P.apply(Gen::h, unit(P, 0, BaseKind::verma_pbw, 3)) ==
        scaled(unit(P, 0, BaseKind::verma_pbw, 3), Rational(-1)));
  // xi_dxi acts by -b = 0 here
  CHECK(P.apply(Gen::xi_dxi, unit(P, 0, BaseKind::verma_pbw, 3)).is_zero());
}

TEST_CASE("xi_dxi sign convention: eigenvalue -b") {
  InducedModule P = induce(build_verma0({1, 2}, 8));
  CHECK(P.apply(Gen::xi_dxi, P.generator()) == scaled(P.generator(), Rational(-2)));
}

TEST_CASE("induced action: d_xi climbs back to the base") {
  InducedModule P = induce(build_verma0({5, 0}, 10));
  // d_xi.(h_- (x) w) = h.w = 5 w
  ModuleVector hm = unit(P, 2, BaseKind::verma_pbw, 0);
  CHECK(P.apply(Gen::d_xi, hm) == scaled(unit(P, 0, BaseKind::verma_pbw, 0), Rational(5)));
  // weight of x_- (x) w
  CHECK(P.weight_of({4, P.base0().index_of.at({BaseKind::verma_pbw, 0})}) ==
        Weight{7, -1});
}

TEST_CASE("d_xi squares to zero on every basis vector") {
  for (Weight lam : {Weight{5, 0}, Weight{1, 0}, Weight{-3, 0}, Weight{-5, 1}}) {
    InducedModule P = make_projective(lam, 9);
    for (std::uint8_t alpha = 0; alpha < 8; ++alpha)
      for (int b = 0; b < static_cast<int>(P.base0().basis.size()); ++b) {
        ModuleVector v;
        v.add(alpha, b, Rational(1));
        CHECK(P.apply(Gen::d_xi, P.apply(Gen::d_xi, v)).is_zero());
      }
  }
}

TEST_CASE("the action is a representation: supercommutators match brackets") {
  std::mt19937 rng(2718);
  for (Weight lam : {Weight{5, 0}, Weight{-5, 1}}) {
    InducedModule P = make_projective(lam, 14);
    std::uniform_int_distribution<int> base(0, static_cast<int>(P.base0().basis.size()) / 2);
    for (Gen g1 : all_generators)
      for (Gen g2 : all_generators) {
        ModuleVector v;
        v.add(rng() % 8, base(rng), Rational(1));
        ModuleVector lhs = P.apply(g1, P.apply(g2, v));
        ModuleVector rhs12 = P.apply(g2, P.apply(g1, v));
        Rational sign = (is_odd(g1) && is_odd(g2)) ? Rational(-1) : Rational(1);
        rhs12 *= sign;
        ModuleVector br;
        for (const auto& t : bracket(g1, g2)) {
          ModuleVector piece = P.apply(t.gen, v);
          piece *= t.coeff;
          br += piece;
        }
        br += rhs12;
        CHECK(lhs == br);
      }
  }
}

TEST_CASE("weight space dimensions of a Verma") {
  InducedModule P = induce(build_verma0({5, 0}, 12));
  CHECK(P.weight_space_dim({5, 0}) == 1);
  CHECK(P.weight_space_dim({5, -1}) == 2);  // h_- (x) w and y x_- (x) w
  CHECK(P.weight_space_dim({5, 1}) == 0);   // above the highest weight
}

TEST_CASE("P_0(lambda) construction for a <= -3") {
  Base0Module p0 = build_proj0({-3, 0}, 10);
  InducedModule P = induce(p0);

  // weight space at lambda is 2-dimensional: v_0 and u_0
  std::size_t dim_at_lambda = 0;
  for (const auto& bv : p0.basis)
    if (bv.weight == Weight{-3, 0}) ++dim_at_lambda;
  CHECK(dim_at_lambda == 2);

  // x u_0 = v_{-1} exactly (the normalization the target formulas assume)
  ModuleVector u0 = unit(P, 0, BaseKind::proj_bottom, 0);
  CHECK(P.apply(Gen::x, u0) == unit(P, 0, BaseKind::proj_top, -1));

  // y u_j = u_{j+1}, y v_j = v_{j+1}
  CHECK(P.apply(Gen::y, u0) == unit(P, 0, BaseKind::proj_bottom, 1));
  CHECK(P.apply(Gen::y, unit(P, 0, BaseKind::proj_top, 0)) ==
        unit(P, 0, BaseKind::proj_top, 1));

  CHECK_THROWS_AS(build_proj0({-1, 1}, 6), std::invalid_argument);
  CHECK_THROWS_AS(build_proj0({1, 0}, 6), std::invalid_argument);
}

TEST_CASE("targets dim in P_0 at lambda: xyx kernel is 2-dimensional") {
  // {v in P_0(lambda)_lambda : xyx v = 0} has dimension 2 (End(P_0) = 2)
  for (Weight lam : {Weight{-5, 1}, Weight{-3, 0}}) {
    InducedModule P = make_projective(lam, 12);
    SparseMatrix m = P.matrix_xyx(lam);
    CHECK(kernel_basis(m).size() == 2);
  }
}

TEST_CASE("ker d_xi = im d_xi on interior weight spaces") {
  for (Weight lam : {Weight{1, 0}, Weight{5, 0}, Weight{-3, 0}, Weight{-5, 1}}) {
    InducedModule P = make_projective(lam, 12);
    for (int da = -4; da <= 2; da += 2)
      for (int db = -2; db <= 0; ++db) {
        Weight mu{lam.a + da, lam.b + db};
        if (P.weight_space_dim(mu) == 0) continue;
        auto [ker, im] = P.ker_im_partial(mu);
        CHECK(ker == im);
      }
  }
}

TEST_CASE("ker/im at the highest weight of a Verma") {
  InducedModule P = induce(build_verma0({5, 0}, 10));
  auto [ker, im] = P.ker_im_partial({5, 0});
  CHECK(ker == 1);
  CHECK(im == 1);
  auto [zker, zim] = P.ker_im_partial({5, 1});
  CHECK(zker == 0);
  CHECK(zim == 0);
}

TEST_CASE("P(lambda) = Delta(lambda) for a >= -1") {
  CHECK_FALSE(make_projective({1, 0}, 6).projective_kind());
  CHECK_FALSE(make_projective({-1, 1}, 6).projective_kind());
  CHECK(make_projective({-3, 0}, 6).projective_kind());
}

TEST_CASE("PBW factorization: weight dims are sums of 8 shifted base dims") {
  InducedModule P = make_projective({-5, 1}, 12);
  const Base0Module& b0 = P.base0();
  auto base_dim = [&](Weight w) {
    std::size_t n = 0;
    for (const auto& bv : b0.basis)
      if (bv.weight == w) ++n;
    return n;
  };
  for (int da = -6; da <= 4; da += 2)
    for (int db = -3; db <= 0; ++db) {
      Weight mu{-5 + da, 1 + db};
      std::size_t expect = 0;
      for (std::uint8_t alpha = 0; alpha < 8; ++alpha) {
        Weight shift{0, 0};
        if (alpha & 1) shift = shift + root(Gen::y_minus);
        if (alpha & 2) shift = shift + root(Gen::h_minus);
        if (alpha & 4) shift = shift + root(Gen::x_minus);
        expect += base_dim(mu - shift);
      }
      CHECK(P.weight_space_dim(mu) == expect);
    }
}

TEST_CASE("weight space boundary guard") {
  InducedModule P = induce(build_verma0({5, 0}, 6));
  CHECK_THROWS_AS(P.weight_space({5 - 2 * 6, 0}), WindowError);
}

TEST_CASE("reaching words rebuild basis vectors") {
  for (Weight lam : {Weight{5, 0}, Weight{-5, 1}}) {
    InducedModule P = make_projective(lam, 9);
    for (std::uint8_t alpha : {std::uint8_t(0), std::uint8_t(3), std::uint8_t(5)})
      for (int b = 0; b < static_cast<int>(P.base0().basis.size()); b += 3) {
        MVKey key{alpha, b};
        auto [word, scale] = P.reaching_word(key);
        ModuleVector rebuilt = P.apply_word(word, P.generator());
        ModuleVector expect;
        expect.add(key, scale);
        CHECK(rebuilt == expect);
      }
  }
}

TEST_CASE("module JSON dump") {
  InducedModule P = induce(build_verma0({1, 0}, 4));
  auto j = nlohmann::json::parse(P.dump_json());
  CHECK(j["kind"] == "verma");
  CHECK(j["lambda"][0] == 1);
  CHECK(j["basis"].size() == 8 * 5);
  CHECK(j["actions"].contains("d_xi"));
}
