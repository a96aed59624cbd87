#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "peodd/linalg.hpp"
#include "peodd/pe2.hpp"

namespace peodd {

/// Raised when a computation would touch basis vectors beyond the y-truncation
/// depth (or outside a quiver window). Carries the offending weight.
class WindowError : public std::runtime_error {
 public:
  WindowError(const std::string& what, Weight w)
      : std::runtime_error(what + " at weight " + w.str()), offending(w) {}
  Weight offending;
};

enum class BaseKind : std::uint8_t { verma_pbw, proj_top, proj_bottom };

/// Label of a basis vector of the underlying g0-module.
///  - verma_pbw(k): y^k (x) w in Delta_0(lambda)
///  - proj_top(j):  v_j, the Delta_0(lambda') chain; v_j has eps-weight a-2j
///                  (j = a+1 is the top vector v, j = a+2 is v', ...)
///  - proj_bottom(j): u_j = y^j u_0, mapping onto Delta_0(lambda)
struct BaseLabel {
  BaseKind kind;
  int index;
  auto operator<=>(const BaseLabel&) const = default;
  std::string str() const;
};

struct Base0Vector {
  BaseLabel label;
  Weight weight;
  UEAWord reach;        // word applied to the generator reaches scale * this
  Rational reach_scale;
};

/// A based module over g0 = sl2 + C xi_dxi at a single delta-level, truncated
/// at y-depth `depth`. Action rows reference basis indices; index -1 marks a
/// truncated image (touching it raises WindowError).
struct Base0Module {
  Weight lambda;
  bool projective = false;
  int depth = 0;
  std::vector<Base0Vector> basis;
  std::map<BaseLabel, int> index_of;
  using Row = std::vector<std::pair<Rational, int>>;
  std::map<Gen, std::vector<Row>> act0;  // x, y, h
  int generator_index = 0;
};

/// sl2 Verma Delta_0(lambda) with basis y^k (x) w, 0 <= k <= depth.
Base0Module build_verma0(Weight lambda, int depth);

/// Indecomposable projective P_0(lambda) for a <= -3, realized by translation:
/// Delta_0(-eps + b delta) tensored with the simple of highest weight
/// (-a-1) eps, then the Casimir generalized eigenspace of the block of a.
/// Basis: the v-chain (a copy of Delta_0(lambda')) and the u-chain with
/// x u_0 = v_{-1} and the quotient by the v-chain equal to Delta_0(lambda).
Base0Module build_proj0(Weight lambda, int depth);

/// Key of one induced-basis coordinate: odd PBW exponents + base label index.
/// alpha bits: 1 = y_-, 2 = h_-, 4 = x_- (monomial y_-^a1 h_-^a2 x_-^a3).
struct MVKey {
  std::uint8_t alpha;
  int base;
  auto operator<=>(const MVKey&) const = default;
};

/// Exact-rational combination of induced PBW basis vectors.
class ModuleVector {
 public:
  void add(MVKey k, const Rational& c);
  void add(std::uint8_t alpha, int base, const Rational& c) { add(MVKey{alpha, base}, c); }
  const std::map<MVKey, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  ModuleVector& operator+=(const ModuleVector& o);
  ModuleVector& operator*=(const Rational& c);
  friend ModuleVector operator-(ModuleVector l, const ModuleVector& r);
  bool operator==(const ModuleVector& o) const { return terms_ == o.terms_; }

 private:
  std::map<MVKey, Rational> terms_;
};

/// P(lambda) or Delta(lambda) = Ind_{g>=0}^g of a Base0Module, with basis
/// y_-^{a1} h_-^{a2} x_-^{a3} (x) (base vector) and exact actions of all
/// eight generators.
class InducedModule {
 public:
  explicit InducedModule(Base0Module base0);

  Weight lambda() const { return base0_.lambda; }
  bool projective_kind() const { return base0_.projective; }
  int depth() const { return base0_.depth; }
  const Base0Module& base0() const { return base0_; }

  ModuleVector generator() const;

  Weight weight_of(MVKey k) const;

  /// Action of a single generator; exact. Throws WindowError if the result
  /// would leave the truncated basis.
  ModuleVector apply(Gen g, const ModuleVector& v) const;

  /// word.back() acts first.
  ModuleVector apply_word(const UEAWord& w, const ModuleVector& v) const;

  /// Basis keys of weight mu (guarded: mu must be >= 2 y-steps from depth).
  std::vector<MVKey> weight_space(Weight mu) const;
  std::size_t weight_space_dim(Weight mu) const { return weight_space(mu).size(); }

  /// Reaching word: apply to the generator of a module and divide by scale
  /// to rebuild the basis vector with this key.
  std::pair<UEAWord, Rational> reaching_word(MVKey k) const;

  /// Coordinates of v on weight_space(mu); throws if v has terms off mu.
  Vec coordinates(const ModuleVector& v, Weight mu) const;

  /// (dim ker, dim im) of d_xi through the weight space at mu.
  std::pair<std::size_t, std::size_t> ker_im_partial(Weight mu) const;

  /// Matrix of the xyx composite on the weight space at mu.
  SparseMatrix matrix_xyx(Weight mu) const;
  /// Matrix of d_xi from the weight space at mu into the one at mu + delta.
  SparseMatrix matrix_dxi(Weight mu) const;

  std::string dump_json() const;

 private:
  Base0Module base0_;
  std::map<Weight, std::vector<MVKey>> by_weight_;
  ModuleVector apply_term(Gen g, std::uint8_t alpha, int base) const;
  void check_interior(Weight mu, int margin) const;
};

InducedModule induce(Base0Module m0);

/// P(lambda) over the window: Verma for a >= -1 (Remark: P = Delta there),
/// induced projective for a <= -3.
InducedModule make_projective(Weight lambda, int depth);

/// Default truncation depth for computations reaching homological degree
/// n_max around weights with |a| <= abs_a_max.
int default_depth(int abs_a_max, int n_max);

}  // namespace peodd
