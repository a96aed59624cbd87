#pragma once

#include <optional>
#include <string>
#include <vector>

#include "peodd/quiver.hpp"

namespace peodd {

struct Summand {
  Weight vertex;
  int shift;
  auto operator<=>(const Summand&) const = default;
};

struct GradedProjectiveSum {
  std::vector<Summand> summands;
};

/// One homological degree of a minimal graded projective resolution of the
/// simple at mu. boundary[col][row] is the phi_n matrix entry: an element
/// with path source = row vertex (in P_{n-1}) and target = col vertex,
/// of pure degree col.shift - row.shift.
struct ResolutionStep {
  int n = 0;
  GradedProjectiveSum projectives;
  std::vector<std::vector<AlgebraElement>> boundary;
  std::vector<int> generator_degrees;  // degrees of the minimal generators G_{n-1}
};

struct Resolution {
  Weight mu;
  std::vector<ResolutionStep> steps;  // steps[0] = P(mu)
};

/// Minimal graded projective resolution of C e_mu out to homological degree N.
/// Kernels are computed degree by degree with exact linear algebra; minimal
/// generators are extracted by graded Nakayama. Throws WindowError when the
/// reachable vertices are not all inside the algebra's window.
Resolution resolve(const QuiverAlgebra& A, Weight mu, int N);

/// phi_{n-1} o phi_n = 0 for all computed n, as AlgebraElement matrices.
bool boundary_square_zero(const QuiverAlgebra& A, const Resolution& res);

/// Lemma on_reso parts 2-3: the degree-n-generated columns only hit
/// shift-(n-1) rows, and the restricted (linear) composite also vanishes.
bool linear_subcomplex_ok(const QuiverAlgebra& A, const Resolution& res);

struct KoszulReport {
  bool koszul = true;
  int fail_n = -1;
  int fail_degree = -1;
  Weight fail_vertex{0, 0};
};

/// True iff every minimal generator in G_{n-1} has degree exactly n.
KoszulReport koszul_check(const Resolution& res);

/// Multiplicity of P(lambda)<n> in step n (= dim ext^n(C e_mu, C e_lambda<n>)).
int ext_dims(const Resolution& res, Weight lambda, int n);

/// The closed form N^n_n(mu, lambda).
int ext_formula(Weight mu, Weight lambda, int n);

struct ExtEntry {
  Weight lambda;
  int n;
  int from_resolution;
  int from_formula;
};

/// All (lambda, n) with a nonzero value on either side, n <= N.
std::vector<ExtEntry> ext_agreement(const QuiverAlgebra& A, const Resolution& res, int N);

/// Support of the closed form for fixed mu and n.
std::vector<Weight> ext_formula_support(Weight mu, int n);

}  // namespace peodd
