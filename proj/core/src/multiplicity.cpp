#include "peodd/multiplicity.hpp"

namespace peodd {

namespace {

// [Delta_0(nu) : L_0(mu)] for sl2 (fixed delta level): 1 at mu = nu, plus 1 at
// the dual when the highest weight is a natural number.
int verma0_mult(Weight nu, Weight mu) {
  int c = 0;
  if (mu == nu) ++c;
  if (nu.a >= 0 && mu == dual(nu)) ++c;
  return c;
}

}  // namespace

int multiplicity_delta0(Weight lambda, Weight mu) {
  int total = 0;
  for (int i = 0; i <= 1; ++i)
    for (int j = 0; j <= 1; ++j)
      for (int k = 0; k <= 1; ++k) {
        Weight shifted{lambda.a + 2 * i - 2 * k, lambda.b - i - j - k};
        total += verma0_mult(shifted, mu);
      }
  return total;
}

int multiplicity_delta(Weight lambda, Weight mu) {
  int n = lambda.b - mu.b;
  if (n < 0 || n > 3) return 0;
  // T(t) = [Delta(lambda) : L(c eps + (b-t) delta)] with T(t)+T(t-1) = D0(t),
  // T vanishing for t >= 4 since b-4 is not a weight.
  int tcur = 0;  // T(4)
  for (int t = 3; t >= n; --t) {
    int d0 = multiplicity_delta0(lambda, {mu.a, lambda.b - t - 1});
    tcur = d0 - tcur;  // now T(t)
  }
  return tcur;
}

int multiplicity_proj(Weight lambda, Weight mu) {
  if (lambda.a >= -1) return multiplicity_delta(lambda, mu);
  return multiplicity_delta(lambda, mu) + multiplicity_delta(dual(lambda), mu);
}

int multiplicity_closed_form(Weight lambda, Weight mu) {
  const int a = lambda.a, b = lambda.b;
  auto is_e = [&](int ae) { return mu == Weight{ae, b} || mu == Weight{ae, b - 2}; };
  auto is_o = [&](int ao) { return mu == Weight{ao, b - 1}; };

  if (a >= 3) {
    if (is_e(a) || is_e(-a - 2)) return 1;
    if (is_o(a + 2) || is_o(a - 2) || is_o(-a - 4) || is_o(-a)) return 1;
    return 0;
  }
  if (a == 1) {
    if (is_e(1) || is_e(-3)) return 1;
    if (is_o(3) || is_o(-1) || is_o(-5)) return 1;
    return 0;
  }
  if (a == -1) {
    if (mu == Weight{-3, b - 1}) return 2;
    if (is_e(-1) || is_o(1)) return 1;
    return 0;
  }
  if (a == -3) {
    if (is_e(-3) || is_o(-1) || is_o(-5)) return 2;
    if (is_e(1) || is_o(3)) return 1;
    return 0;
  }
  // a <= -5
  if (is_e(a) || is_o(a + 2) || is_o(a - 2)) return 2;
  if (is_e(-a - 2) || is_o(-a) || is_o(-a - 4)) return 1;
  return 0;
}

std::map<Weight, int> multiplicity_support(Weight lambda) {
  std::map<Weight, int> out;
  for (int da = -2; da <= 2; ++da)
    for (int db = -2; db <= 0; ++db) {
      for (int sign = 0; sign <= 1; ++sign) {
        int am = sign ? -(lambda.a + 2 * da) - 2 : lambda.a + 2 * da;
        Weight mu{am, lambda.b + db};
        int m = multiplicity_closed_form(lambda, mu);
        if (m > 0) out[mu] = m;
      }
    }
  return out;
}

}  // namespace peodd
