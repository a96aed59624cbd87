#include "peodd/quiver.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace peodd {

std::string arrow_name(ArrowKind k) {
  switch (k) {
    case ArrowKind::f: return "f";
    case ArrowKind::g: return "g";
    case ArrowKind::p: return "p";
    case ArrowKind::q: return "q";
    case ArrowKind::fp: return "f'";
    case ArrowKind::gp: return "g'";
  }
  return "?";
}

std::optional<ArrowKind> arrow_from_name(const std::string& s) {
  if (s == "f") return ArrowKind::f;
  if (s == "g") return ArrowKind::g;
  if (s == "p") return ArrowKind::p;
  if (s == "q") return ArrowKind::q;
  if (s == "f'") return ArrowKind::fp;
  if (s == "g'") return ArrowKind::gp;
  return std::nullopt;
}

Weight arrow_shift_target(Weight s, ArrowKind k) {
  switch (k) {
    case ArrowKind::f:
    case ArrowKind::gp: return {s.a + 2, s.b + 1};
    case ArrowKind::g:
    case ArrowKind::fp: return {s.a - 2, s.b + 1};
    case ArrowKind::p:
    case ArrowKind::q: return dual(s);
  }
  return s;
}

bool arrow_exists(Weight s, ArrowKind k) {
  if (!in_odd_block(s)) return false;
  switch (k) {
    case ArrowKind::f:
    case ArrowKind::p: return s.a >= 1;
    case ArrowKind::g: return s.a >= 3;
    case ArrowKind::q:
    case ArrowKind::gp: return s.a <= -3;
    case ArrowKind::fp: return s.a <= -1;
  }
  return false;
}

Rational CoeffExpr::eval(int c) const {
  Rational out = scale;
  for (auto [off, exp] : factors) {
    Rational base(c + off);
    if (is_zero(base) && exp < 0)
      throw std::domain_error("CoeffExpr: pole at c=" + std::to_string(c));
    for (int i = 0; i < exp; ++i) out *= base;
    for (int i = 0; i > exp; --i) out /= base;
  }
  return out;
}

namespace {

constexpr int kNoMin = -1000000;
constexpr int kNoMax = 1000000;

using Word = std::vector<ArrowKind>;

RewriteRule zero_rule(std::string name, Word pat, int cmin, int cmax) {
  return {std::move(pat), cmin, cmax, {}, std::move(name)};
}

RewriteRule swap_rule(std::string name, Word pat, int cmin, int cmax, CoeffExpr co,
                      Word repl) {
  return {std::move(pat), cmin, cmax, {{std::move(co), std::move(repl)}}, std::move(name)};
}

}  // namespace

std::vector<RewriteRule> default_relations() {
  using K = ArrowKind;
  std::vector<RewriteRule> r;
  // Quadratic relations, oriented into the graded normal basis.
  r.push_back(zero_rule("ff", {K::f, K::f}, 1, kNoMax));
  r.push_back(zero_rule("gg", {K::g, K::g}, 5, kNoMax));
  r.push_back(zero_rule("f'f'", {K::fp, K::fp}, kNoMin, -1));
  r.push_back(zero_rule("g'g'", {K::gp, K::gp}, kNoMin, -5));
  r.push_back(zero_rule("qp", {K::p, K::q}, 1, kNoMax));
  r.push_back(zero_rule("g'f'@-1", {K::fp, K::gp}, -1, -1));
  r.push_back(swap_rule("fg", {K::g, K::f}, 3, kNoMax,
                        {Rational(-1), {{-1, 1}, {3, -1}}}, {K::f, K::g}));
  r.push_back(swap_rule("f'g'@-3", {K::gp, K::fp}, -3, -3, {rat(1, 16), {}},
                        {K::fp, K::gp}));
  r.push_back(swap_rule("f'g'", {K::gp, K::fp}, kNoMin, -5,
                        {Rational(-1), {{3, 2}, {-1, -2}}}, {K::fp, K::gp}));
  r.push_back(swap_rule("pf", {K::f, K::p}, 1, kNoMax, {Rational(1), {{1, -1}}},
                        {K::p, K::fp}));
  r.push_back(swap_rule("pg", {K::g, K::p}, 3, kNoMax, {Rational(1), {{1, -1}}},
                        {K::p, K::gp}));
  r.push_back(swap_rule("fq", {K::q, K::f}, kNoMin, -3,
                        {Rational(-1), {{-1, -1}}}, {K::fp, K::q}));
  r.push_back(swap_rule("gq", {K::q, K::g}, kNoMin, -5,
                        {Rational(-1), {{3, -1}}}, {K::gp, K::q}));
  // Derived rules completing the system (overlaps of the quadratics).
  r.push_back(swap_rule("f'pq", {K::q, K::p, K::fp}, kNoMin, -3,
                        {Rational(1), {{1, 1}, {-1, -1}}}, {K::fp, K::q, K::p}));
  r.push_back(swap_rule("pqg'", {K::gp, K::q, K::p}, kNoMin, -5,
                        {Rational(1), {{3, 1}, {1, -1}}}, {K::q, K::p, K::gp}));
  r.push_back(zero_rule("qf'p", {K::p, K::fp, K::q}, 1, kNoMax));
  r.push_back(zero_rule("qg'p", {K::p, K::gp, K::q}, 3, kNoMax));
  r.push_back(zero_rule("qg'f'p", {K::p, K::fp, K::gp, K::q}, 1, kNoMax));
  return r;
}

std::string NormalPath::str() const {
  std::string out = source.str() + ":";
  if (word.empty()) return out + "e";
  // print in composition order (last applied first), matching paper notation
  for (auto it = word.rbegin(); it != word.rend(); ++it) out += arrow_name(*it);
  return out;
}

void AlgebraElement::add(const NormalPath& p, const Rational& c) {
  if (peodd::is_zero(c)) return;
  auto it = terms_.find(p);
  if (it == terms_.end()) {
    terms_.emplace(p, c);
  } else {
    it->second += c;
    if (peodd::is_zero(it->second)) terms_.erase(it);
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  for (const auto& [p, c] : o.terms_) add(p, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Rational& c) {
  if (peodd::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, v] : terms_) v *= c;
  return *this;
}

QuiverAlgebra::QuiverAlgebra(int a_min, int a_max, int b_min, int b_max,
                             std::vector<RewriteRule> rules)
    : a_min_(a_min), a_max_(a_max), b_min_(b_min), b_max_(b_max),
      rules_(std::move(rules)) {
  if (a_min_ > a_max_ || b_min_ > b_max_)
    throw std::invalid_argument("QuiverAlgebra: empty window");
}

bool QuiverAlgebra::has_vertex(Weight v) const {
  return in_odd_block(v) && v.a >= a_min_ && v.a <= a_max_ && v.b >= b_min_ &&
         v.b <= b_max_;
}

std::optional<Weight> QuiverAlgebra::arrow_target(Weight s, ArrowKind k) const {
  if (!has_vertex(s) || !arrow_exists(s, k)) return std::nullopt;
  Weight t = arrow_shift_target(s, k);
  if (!has_vertex(t)) return std::nullopt;
  return t;
}

std::vector<ArrowKind> QuiverAlgebra::arrows_out(Weight s) const {
  std::vector<ArrowKind> out;
  for (ArrowKind k : {ArrowKind::f, ArrowKind::g, ArrowKind::p, ArrowKind::q,
                      ArrowKind::fp, ArrowKind::gp})
    if (arrow_target(s, k)) out.push_back(k);
  return out;
}

std::vector<Weight> QuiverAlgebra::vertices() const {
  std::vector<Weight> out;
  for (int a = a_min_; a <= a_max_; ++a)
    for (int b = b_min_; b <= b_max_; ++b)
      if (in_odd_block({a, b})) out.push_back({a, b});
  return out;
}

AlgebraElement QuiverAlgebra::idempotent(Weight v) const {
  if (!has_vertex(v)) throw std::invalid_argument("idempotent: no vertex " + v.str());
  AlgebraElement e;
  e.add({v, {}}, Rational(1));
  return e;
}

AlgebraElement QuiverAlgebra::arrow(Weight s, ArrowKind k) const {
  if (!arrow_target(s, k))
    throw std::invalid_argument("arrow: no " + arrow_name(k) + " at " + s.str());
  AlgebraElement e;
  e.add({s, {k}}, Rational(1));
  return e;
}

Weight QuiverAlgebra::path_target(const NormalPath& p) const {
  Weight cur = p.source;
  for (ArrowKind k : p.word) cur = arrow_shift_target(cur, k);
  return cur;
}

bool QuiverAlgebra::path_valid(const NormalPath& p) const {
  if (!has_vertex(p.source)) return false;
  Weight cur = p.source;
  for (ArrowKind k : p.word) {
    auto t = arrow_target(cur, k);
    if (!t) return false;
    cur = *t;
  }
  return true;
}

void QuiverAlgebra::reduce_into(AlgebraElement& acc, const Rational& coeff,
                                const NormalPath& p, ReduceStrategy strategy,
                                int fuel) const {
  if (fuel <= 0) throw std::logic_error("reduce: fuel exhausted (non-terminating rules?)");
  const Word& w = p.word;
  const int n = static_cast<int>(w.size());

  // vertex before each position
  std::vector<Weight> at(n + 1);
  at[0] = p.source;
  for (int i = 0; i < n; ++i) at[i + 1] = arrow_shift_target(at[i], w[i]);

  auto match_at = [&](int i) -> const RewriteRule* {
    for (const RewriteRule& r : rules_) {
      int len = static_cast<int>(r.pattern.size());
      if (i + len > n) continue;
      if (at[i].a < r.c_min || at[i].a > r.c_max) continue;
      bool ok = true;
      for (int j = 0; j < len && ok; ++j) ok = (w[i + j] == r.pattern[j]);
      if (ok) return &r;
    }
    return nullptr;
  };

  int pos = -1;
  const RewriteRule* rule = nullptr;
  if (strategy == ReduceStrategy::leftmost) {
    for (int i = 0; i < n && !rule; ++i) {
      rule = match_at(i);
      if (rule) pos = i;
    }
  } else {
    for (int i = n - 1; i >= 0 && !rule; --i) {
      rule = match_at(i);
      if (rule) pos = i;
    }
  }

  if (!rule) {
    acc.add(p, coeff);
    return;
  }
  int c = at[pos].a;
  for (const auto& [expr, repl] : rule->replacement) {
    Word next;
    next.insert(next.end(), w.begin(), w.begin() + pos);
    next.insert(next.end(), repl.begin(), repl.end());
    next.insert(next.end(), w.begin() + pos + static_cast<int>(rule->pattern.size()),
                w.end());
    reduce_into(acc, coeff * expr.eval(c), {p.source, std::move(next)}, strategy,
                fuel - 1);
  }
}

AlgebraElement QuiverAlgebra::reduce(const NormalPath& p, ReduceStrategy strategy) const {
  if (!path_valid(p))
    throw std::invalid_argument("reduce: invalid path " + p.str());
  AlgebraElement acc;
  reduce_into(acc, Rational(1), p, strategy, 4000);
  return acc;
}

AlgebraElement QuiverAlgebra::multiply(const AlgebraElement& x, const AlgebraElement& y,
                                       ReduceStrategy strategy) const {
  AlgebraElement out;
  for (const auto& [py, cy] : y.terms()) {
    Weight ytgt = path_target(py);
    for (const auto& [px, cx] : x.terms()) {
      if (px.source != ytgt) continue;
      NormalPath prod{py.source, py.word};
      prod.word.insert(prod.word.end(), px.word.begin(), px.word.end());
      AlgebraElement red;
      reduce_into(red, cx * cy, prod, strategy, 4000);
      out += red;
    }
  }
  return out;
}

bool QuiverAlgebra::is_irreducible(const NormalPath& p) const {
  const Word& w = p.word;
  const int n = static_cast<int>(w.size());
  std::vector<Weight> at(n + 1);
  at[0] = p.source;
  for (int i = 0; i < n; ++i) at[i + 1] = arrow_shift_target(at[i], w[i]);
  for (int i = 0; i < n; ++i)
    for (const RewriteRule& r : rules_) {
      int len = static_cast<int>(r.pattern.size());
      if (i + len > n) continue;
      if (at[i].a < r.c_min || at[i].a > r.c_max) continue;
      bool ok = true;
      for (int j = 0; j < len && ok; ++j) ok = (w[i + j] == r.pattern[j]);
      if (ok) return false;
    }
  return true;
}

std::vector<NormalPath> QuiverAlgebra::normal_paths_from(Weight mu, int degree) const {
  std::vector<NormalPath> out;
  if (!has_vertex(mu)) return out;
  NormalPath cur{mu, {}};
  // DFS over arrows; prune words that already contain a redex.
  std::vector<std::pair<Weight, Word>> stack = {{mu, {}}};
  while (!stack.empty()) {
    auto [v, w] = stack.back();
    stack.pop_back();
    if (static_cast<int>(w.size()) == degree) {
      NormalPath p{mu, w};
      if (is_irreducible(p)) out.push_back(std::move(p));
      continue;
    }
    for (ArrowKind k : arrows_out(v)) {
      Word w2 = w;
      w2.push_back(k);
      stack.push_back({*arrow_target(v, k), std::move(w2)});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int QuiverAlgebra::graded_dim(Weight mu, Weight lambda, int d) const {
  int count = 0;
  for (const NormalPath& p : normal_paths_from(mu, d))
    if (path_target(p) == lambda) ++count;
  return count;
}

std::string QuiverAlgebra::to_json() const {
  nlohmann::json j;
  j["format"] = "peodd-quiver-v1";
  j["window"] = {{"a_min", a_min_}, {"a_max", a_max_}, {"b_min", b_min_}, {"b_max", b_max_}};
  nlohmann::json verts = nlohmann::json::array();
  nlohmann::json arrows = nlohmann::json::array();
  for (Weight v : vertices()) {
    verts.push_back({v.a, v.b});
    for (ArrowKind k : arrows_out(v)) {
      Weight t = *arrow_target(v, k);
      arrows.push_back({{"from", {v.a, v.b}}, {"to", {t.a, t.b}}, {"kind", arrow_name(k)}});
    }
  }
  j["vertices"] = std::move(verts);
  j["arrows"] = std::move(arrows);
  nlohmann::json rules = nlohmann::json::array();
  for (const RewriteRule& r : rules_) {
    nlohmann::json jr;
    jr["name"] = r.name;
    nlohmann::json pat = nlohmann::json::array();
    for (ArrowKind k : r.pattern) pat.push_back(arrow_name(k));
    jr["pattern"] = std::move(pat);
    if (r.c_min > kNoMin) jr["source_min"] = r.c_min;
    if (r.c_max < kNoMax) jr["source_max"] = r.c_max;
    nlohmann::json repl = nlohmann::json::array();
    for (const auto& [expr, word] : r.replacement) {
      nlohmann::json je;
      je["scale"] = to_string(expr.scale);
      nlohmann::json fac = nlohmann::json::array();
      for (auto [off, exp] : expr.factors) fac.push_back({off, exp});
      je["factors"] = std::move(fac);
      nlohmann::json jw = nlohmann::json::array();
      for (ArrowKind k : word) jw.push_back(arrow_name(k));
      je["word"] = std::move(jw);
      repl.push_back(std::move(je));
    }
    jr["replacement"] = std::move(repl);
    rules.push_back(std::move(jr));
  }
  j["relations"] = std::move(rules);
  return j.dump(2);
}

QuiverAlgebra QuiverAlgebra::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (j.value("format", "") != "peodd-quiver-v1")
    throw std::invalid_argument("quiver JSON: unknown format");
  const auto& w = j.at("window");
  std::vector<RewriteRule> rules;
  for (const auto& jr : j.at("relations")) {
    RewriteRule r;
    r.name = jr.value("name", "");
    for (const auto& s : jr.at("pattern")) {
      auto k = arrow_from_name(s.get<std::string>());
      if (!k) throw std::invalid_argument("quiver JSON: bad arrow " + s.get<std::string>());
      r.pattern.push_back(*k);
    }
    r.c_min = jr.value("source_min", kNoMin);
    r.c_max = jr.value("source_max", kNoMax);
    for (const auto& je : jr.at("replacement")) {
      CoeffExpr e;
      e.scale = Rational(je.at("scale").get<std::string>());
      for (const auto& f : je.at("factors"))
        e.factors.push_back({f.at(0).get<int>(), f.at(1).get<int>()});
      std::vector<ArrowKind> word;
      for (const auto& s : je.at("word")) word.push_back(*arrow_from_name(s.get<std::string>()));
      r.replacement.push_back({std::move(e), std::move(word)});
    }
    rules.push_back(std::move(r));
  }
  return QuiverAlgebra(w.at("a_min").get<int>(), w.at("a_max").get<int>(),
                       w.at("b_min").get<int>(), w.at("b_max").get<int>(), std::move(rules));
}

}  // namespace peodd
