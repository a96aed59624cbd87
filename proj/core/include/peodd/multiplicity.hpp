#pragma once

#include <map>

#include "peodd/pe2.hpp"

namespace peodd {

/// [Delta(lambda) : L_0(mu)] via the eight odd shifts
/// lambda_ijk = lambda + i(2e-d) - jd - k(2e+d) and sl2 Verma multiplicities.
int multiplicity_delta0(Weight lambda, Weight mu);

/// [Delta(lambda) : L(mu)], by downward recursion in the delta coefficient
/// seeded where the multiplicities vanish (delta-coefficient b-4).
int multiplicity_delta(Weight lambda, Weight mu);

/// [P(lambda) : L(mu)]: Delta-multiplicity for a >= -1, plus the dual Verma
/// layer for a <= -3.
int multiplicity_proj(Weight lambda, Weight mu);

/// The closed form of the composition multiplicities [P(lambda):L(mu)],
/// split over a >= 3 / a = 1 / a = -1 / a = -3 / a <= -5.
int multiplicity_closed_form(Weight lambda, Weight mu);

/// All mu with nonzero closed-form multiplicity, with values.
std::map<Weight, int> multiplicity_support(Weight lambda);

}  // namespace peodd
