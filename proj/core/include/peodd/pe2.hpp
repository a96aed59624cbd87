#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "peodd/rational.hpp"

namespace peodd {

/// Integral weight a*eps + b*delta of pe(2), with eps(h)=1, delta(xi_dxi)=-1.
struct Weight {
  int a = 0;
  int b = 0;

  friend Weight operator+(Weight l, Weight r) { return {l.a + r.a, l.b + r.b}; }
  friend Weight operator-(Weight l, Weight r) { return {l.a - r.a, l.b - r.b}; }
  auto operator<=>(const Weight&) const = default;

  std::string str() const {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  }
};

/// Dual weight (-a-2)eps + b*delta; an involution with fixed line a = -1.
inline Weight dual(Weight w) { return {-w.a - 2, w.b}; }

/// Membership in the block O_odd^0: weights (2n+1)eps + (2k-n)delta.
bool in_odd_block(Weight w);

/// Smallest b in {0,1} making (a,b) a vertex of O_odd^0 (a odd).
int canonical_b(int a);

/// The eight basis elements of pe(2). Even part: x, y, h, xi_dxi spanning
/// sl2 + C*(xi d_xi); odd part: d_xi raising, and x_-, y_-, h_- = x,y,h (x) xi.
enum class Gen : std::uint8_t {
  x = 0,
  y = 1,
  h = 2,
  xi_dxi = 3,
  d_xi = 4,
  x_minus = 5,
  y_minus = 6,
  h_minus = 7,
};

constexpr std::array<Gen, 8> all_generators = {
    Gen::x, Gen::y, Gen::h, Gen::xi_dxi,
    Gen::d_xi, Gen::x_minus, Gen::y_minus, Gen::h_minus};

bool is_odd(Gen g);
Weight root(Gen g);
std::string gen_name(Gen g);

/// One term of a bracket value: coefficient times a generator.
struct GenTerm {
  Rational coeff;
  Gen gen;
};

/// Superbracket [g1, g2] as a linear combination of generators (empty = 0).
const std::vector<GenTerm>& bracket(Gen g1, Gen g2);

/// A word in U(g): generators applied right-to-left (back() acts first).
using UEAWord = std::vector<Gen>;

}  // namespace peodd
