#include "peodd/pe2.hpp"

#include <map>
#include <stdexcept>

namespace peodd {

bool in_odd_block(Weight w) {
  if ((w.a % 2 + 2) % 2 != 1) return false;
  int n = (w.a - 1) / 2;  // exact: a odd
  return ((w.b + n) % 2 + 2) % 2 == 0;
}

int canonical_b(int a) {
  if ((a % 2 + 2) % 2 != 1) throw std::invalid_argument("canonical_b: a must be odd");
  int n = (a - 1) / 2;
  return ((n % 2) + 2) % 2;
}

bool is_odd(Gen g) {
  switch (g) {
    case Gen::x:
    case Gen::y:
    case Gen::h:
    case Gen::xi_dxi:
      return false;
    default:
      return true;
  }
}

Weight root(Gen g) {
  switch (g) {
    case Gen::x: return {2, 0};
    case Gen::y: return {-2, 0};
    case Gen::h: return {0, 0};
    case Gen::xi_dxi: return {0, 0};
    case Gen::d_xi: return {0, 1};
    case Gen::x_minus: return {2, -1};
    case Gen::y_minus: return {-2, -1};
    case Gen::h_minus: return {0, -1};
  }
  throw std::logic_error("root: bad generator");
}

std::string gen_name(Gen g) {
  switch (g) {
    case Gen::x: return "x";
    case Gen::y: return "y";
    case Gen::h: return "h";
    case Gen::xi_dxi: return "xi_dxi";
    case Gen::d_xi: return "d_xi";
    case Gen::x_minus: return "x_minus";
    case Gen::y_minus: return "y_minus";
    case Gen::h_minus: return "h_minus";
  }
  return "?";
}

namespace {

using Table = std::map<std::pair<Gen, Gen>, std::vector<GenTerm>>;

// The seven defining bracket rules plus the sl2 brackets, completed to all
// 64 ordered pairs by super-antisymmetry [g1,g2] = -(-1)^{p1 p2}[g2,g1].
Table build_table() {
  Table t;
  auto put = [&](Gen a, Gen b, std::vector<GenTerm> val) {
    t[{a, b}] = std::move(val);
  };
  auto one = [](Gen g) { return std::vector<GenTerm>{{Rational(1), g}}; };
  auto scaled = [](long long c, Gen g) {
    return std::vector<GenTerm>{{Rational(c), g}};
  };
  const std::vector<GenTerm> zero;

  // sl2
  put(Gen::x, Gen::y, one(Gen::h));
  put(Gen::h, Gen::x, scaled(2, Gen::x));
  put(Gen::h, Gen::y, scaled(-2, Gen::y));
  put(Gen::x, Gen::x, zero);
  put(Gen::y, Gen::y, zero);
  put(Gen::h, Gen::h, zero);

  // (b) [f, xi_dxi] = 0 = [xi_dxi, xi_dxi]
  for (Gen f : {Gen::x, Gen::y, Gen::h}) put(f, Gen::xi_dxi, zero);
  put(Gen::xi_dxi, Gen::xi_dxi, zero);

  // (c) [d_xi, f (x) xi] = f
  put(Gen::d_xi, Gen::x_minus, one(Gen::x));
  put(Gen::d_xi, Gen::y_minus, one(Gen::y));
  put(Gen::d_xi, Gen::h_minus, one(Gen::h));

  // (d) [f, g (x) xi] = [f,g] (x) xi
  put(Gen::x, Gen::x_minus, zero);
  put(Gen::x, Gen::y_minus, one(Gen::h_minus));
  put(Gen::x, Gen::h_minus, scaled(-2, Gen::x_minus));
  put(Gen::y, Gen::x_minus, scaled(-1, Gen::h_minus));
  put(Gen::y, Gen::y_minus, zero);
  put(Gen::y, Gen::h_minus, scaled(2, Gen::y_minus));
  put(Gen::h, Gen::x_minus, scaled(2, Gen::x_minus));
  put(Gen::h, Gen::y_minus, scaled(-2, Gen::y_minus));
  put(Gen::h, Gen::h_minus, zero);

  // (e) [f, d_xi] = 0
  for (Gen f : {Gen::x, Gen::y, Gen::h}) put(f, Gen::d_xi, zero);

  // (f) [xi_dxi, f (x) xi] = f (x) xi
  put(Gen::xi_dxi, Gen::x_minus, one(Gen::x_minus));
  put(Gen::xi_dxi, Gen::y_minus, one(Gen::y_minus));
  put(Gen::xi_dxi, Gen::h_minus, one(Gen::h_minus));

  // (g) [d_xi, xi_dxi] = d_xi
  put(Gen::d_xi, Gen::xi_dxi, one(Gen::d_xi));

  // (a) [g1,g1] = 0 = [g-1,g-1]
  put(Gen::d_xi, Gen::d_xi, zero);
  for (Gen a : {Gen::x_minus, Gen::y_minus, Gen::h_minus})
    for (Gen b : {Gen::x_minus, Gen::y_minus, Gen::h_minus}) put(a, b, zero);

  // Complete by super-antisymmetry.
  for (Gen a : all_generators) {
    for (Gen b : all_generators) {
      if (t.count({a, b})) continue;
      auto it = t.find({b, a});
      if (it == t.end()) throw std::logic_error("bracket table incomplete");
      std::vector<GenTerm> flipped = it->second;
      Rational sign = (is_odd(a) && is_odd(b)) ? Rational(1) : Rational(-1);
      for (auto& term : flipped) term.coeff *= sign;
      t[{a, b}] = std::move(flipped);
    }
  }
  return t;
}

}  // namespace

const std::vector<GenTerm>& bracket(Gen g1, Gen g2) {
  static const Table table = build_table();
  return table.at({g1, g2});
}

}  // namespace peodd
