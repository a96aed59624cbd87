#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "peodd/pe2.hpp"
#include "peodd/rational.hpp"

namespace peodd {

enum class ArrowKind : std::uint8_t { f, g, p, q, fp, gp };
std::string arrow_name(ArrowKind k);
std::optional<ArrowKind> arrow_from_name(const std::string& s);

/// Shift of the arrow: f,gp: (+2,+1); g,fp: (-2,+1); p,q: dual (same b).
Weight arrow_shift_target(Weight source, ArrowKind k);

/// Structural existence at a block vertex (window not considered):
/// f,p at a >= 1; g at a >= 3; q,gp at a <= -3; fp at a <= -1.
bool arrow_exists(Weight source, ArrowKind k);

/// Coefficient as an exact function of the source vertex's eps-coefficient c:
/// scale * prod (c + offset)^exponent.
struct CoeffExpr {
  Rational scale = Rational(1);
  std::vector<std::pair<int, int>> factors;  // (offset, exponent)
  Rational eval(int c) const;
};

/// Rewrite rule: a path pattern (application order: front() acts first) at a
/// source vertex with a <= c <= b, rewriting to a combination of patterns.
struct RewriteRule {
  std::vector<ArrowKind> pattern;
  int c_min, c_max;
  std::vector<std::pair<CoeffExpr, std::vector<ArrowKind>>> replacement;
  std::string name;
};

/// The quadratic relations of the endomorphism algebra oriented into the
/// graded normal basis, completed with the derived rules that make the
/// rewriting confluent.
std::vector<RewriteRule> default_relations();

struct NormalPath {
  Weight source;
  std::vector<ArrowKind> word;  // front() acts first
  auto operator<=>(const NormalPath&) const = default;
  int degree() const { return static_cast<int>(word.size()); }
  std::string str() const;
};

/// Exact-rational combination of normal paths.
class AlgebraElement {
 public:
  void add(const NormalPath& p, const Rational& c);
  const std::map<NormalPath, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator*=(const Rational& c);
  bool operator==(const AlgebraElement& o) const { return terms_ == o.terms_; }

 private:
  std::map<NormalPath, Rational> terms_;
};

enum class ReduceStrategy { leftmost, rightmost };

/// The algebra CQ/I on a rectangular window of block vertices. Arrows that
/// would cross the window boundary are excluded.
class QuiverAlgebra {
 public:
  QuiverAlgebra(int a_min, int a_max, int b_min, int b_max,
                std::vector<RewriteRule> rules = default_relations());

  bool has_vertex(Weight v) const;
  std::optional<Weight> arrow_target(Weight source, ArrowKind k) const;
  std::vector<ArrowKind> arrows_out(Weight source) const;
  std::vector<Weight> vertices() const;

  AlgebraElement idempotent(Weight v) const;
  AlgebraElement arrow(Weight source, ArrowKind k) const;

  Weight path_target(const NormalPath& p) const;
  bool path_valid(const NormalPath& p) const;

  /// Normal form of a (valid) path word.
  AlgebraElement reduce(const NormalPath& p,
                        ReduceStrategy strategy = ReduceStrategy::leftmost) const;

  /// x * y composes y first; non-composable pairs contribute zero.
  AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y,
                          ReduceStrategy strategy = ReduceStrategy::leftmost) const;

  bool is_irreducible(const NormalPath& p) const;

  /// All irreducible paths from mu of the given degree.
  std::vector<NormalPath> normal_paths_from(Weight mu, int degree) const;

  /// Count of irreducible paths mu -> lambda of degree d.
  int graded_dim(Weight mu, Weight lambda, int d) const;

  int a_min() const { return a_min_; }
  int a_max() const { return a_max_; }
  int b_min() const { return b_min_; }
  int b_max() const { return b_max_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }

  std::string to_json() const;
  static QuiverAlgebra from_json(const std::string& text);

 private:
  int a_min_, a_max_, b_min_, b_max_;
  std::vector<RewriteRule> rules_;
  void reduce_into(AlgebraElement& acc, const Rational& coeff, const NormalPath& p,
                   ReduceStrategy strategy, int fuel) const;
};

}  // namespace peodd
