#include "peodd/modules.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

namespace peodd {

std::string BaseLabel::str() const {
  switch (kind) {
    case BaseKind::verma_pbw: return "y^" + std::to_string(index) + "w";
    case BaseKind::proj_top: return "v_" + std::to_string(index);
    case BaseKind::proj_bottom: return "u_" + std::to_string(index);
  }
  return "?";
}

void ModuleVector::add(MVKey k, const Rational& c) {
  if (peodd::is_zero(c)) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
  } else {
    it->second += c;
    if (peodd::is_zero(it->second)) terms_.erase(it);
  }
}

ModuleVector& ModuleVector::operator+=(const ModuleVector& o) {
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

ModuleVector& ModuleVector::operator*=(const Rational& c) {
  if (peodd::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

ModuleVector operator-(ModuleVector l, const ModuleVector& r) {
  for (const auto& [k, c] : r.terms()) l.add(k, -c);
  return l;
}

Base0Module build_verma0(Weight lambda, int depth) {
  if (depth < 1) throw std::invalid_argument("build_verma0: depth >= 1");
  Base0Module m;
  m.lambda = lambda;
  m.projective = false;
  m.depth = depth;
  const int a = lambda.a;
  for (int k = 0; k <= depth; ++k) {
    Base0Vector v;
    v.label = {BaseKind::verma_pbw, k};
    v.weight = {a - 2 * k, lambda.b};
    v.reach = UEAWord(static_cast<std::size_t>(k), Gen::y);
    v.reach_scale = 1;
    m.index_of[v.label] = static_cast<int>(m.basis.size());
    m.basis.push_back(std::move(v));
  }
  m.generator_index = 0;

  auto& ax = m.act0[Gen::x];
  auto& ay = m.act0[Gen::y];
  auto& ah = m.act0[Gen::h];
  ax.resize(m.basis.size());
  ay.resize(m.basis.size());
  ah.resize(m.basis.size());
  for (int k = 0; k <= depth; ++k) {
    // h y^k w = (a-2k) y^k w ; x y^k w = k(a-k+1) y^{k-1} w ; y raises k.
    ah[k] = {{Rational(a - 2 * k), k}};
    if (k > 0) {
      Rational c = Rational(k) * Rational(a - k + 1);
      if (!is_zero(c)) ax[k] = {{c, k - 1}};
    }
    ay[k] = {{Rational(1), k == depth ? -1 : k + 1}};
  }
  return m;
}

namespace {

// Dense helpers over level spaces of the tensor module T = Delta_0(-1) (x) V.
// Level s holds the vectors t_{k,i} = y^k w (x) e_i with k+i = s; the eps
// weight there is -1+m-2s.
struct Tensor {
  int m;       // dim V - 1 = -a-1
  int tdepth;  // max k

  int level_dim(int s) const { return std::min(s, m) + 1; }
  // coordinates within level s are indexed by i = 0..min(s,m), k = s-i.

  // y: level s -> s+1
  SparseMatrix y_mat(int s) const {
    SparseMatrix out(level_dim(s + 1), level_dim(s));
    for (int i = 0; i <= std::min(s, m); ++i) {
      int k = s - i;
      if (k + 1 > tdepth) throw WindowError("tensor truncation", {0, 0});
      out.add(i, i, Rational(1));  // t_{k+1,i}
      if (i + 1 <= m) out.add(i + 1, i, Rational(1));  // t_{k,i+1}
    }
    return out;
  }

  // x: level s -> s-1
  SparseMatrix x_mat(int s) const {
    SparseMatrix out(level_dim(s - 1), level_dim(s));
    for (int i = 0; i <= std::min(s, m); ++i) {
      int k = s - i;
      if (k > 0 && i <= std::min(s - 1, m))
        out.add(i, i, Rational(-(long long)k * k));  // x y^k w = -k^2 y^{k-1} w in Delta_0(-1)
      if (i > 0) out.add(i - 1, i, Rational((long long)i * (m - i + 1)));
    }
    return out;
  }
};

Vec mat_apply(const SparseMatrix& m, const Vec& v) { return m.apply(v); }

// Span-closure of {w : M w in span(K)}.
std::vector<Vec> preimage_space(const SparseMatrix& M, const std::vector<Vec>& K) {
  std::size_t n = M.cols();
  SparseMatrix aug(M.rows(), n + K.size());
  for (const auto& [rc, v] : M.entries()) aug.set(rc.first, rc.second, v);
  for (std::size_t j = 0; j < K.size(); ++j)
    for (std::size_t i = 0; i < K[j].size(); ++i) aug.add(i, n + j, -K[j][i]);
  std::vector<Vec> out;
  for (const auto& kv : kernel_basis(aug)) {
    Vec w(kv.begin(), kv.begin() + static_cast<long>(n));
    bool nz = false;
    for (const auto& c : w) nz = nz || !is_zero(c);
    if (nz) out.push_back(std::move(w));
  }
  // Reduce to an independent spanning set.
  SparseMatrix stack(out.size(), n);
  for (std::size_t r = 0; r < out.size(); ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (!is_zero(out[r][c])) stack.set(r, c, out[r][c]);
  RrefResult rr = rref(stack);
  std::vector<Vec> basis;
  for (std::size_t r = 0; r < rr.pivots.size(); ++r) {
    Vec v(n, Rational(0));
    for (std::size_t c = 0; c < n; ++c) v[c] = rr.matrix.get(r, c);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

Base0Module build_proj0(Weight lambda, int depth) {
  const int a = lambda.a;
  if (a >= -1)
    throw std::invalid_argument(
        "build_proj0: P_0 = Delta_0 for a >= -1; use build_verma0");
  if (depth < 1) throw std::invalid_argument("build_proj0: depth >= 1");

  const int m = -a - 1;     // highest weight of the tensoring simple
  const int dv = depth + m - 1;  // v-chain length: x.u_depth needs vc_{m+depth-1}
  Tensor T{m, depth + m + 4};
  const int top_level = depth + m;  // u-chain reaches level m + depth

  // Generalized Casimir eigenspace per level. On level s the Casimir is
  // (m-2s)^2 + 4 y x, and the block of lambda has eigenvalue m^2.
  std::vector<std::vector<Vec>> G(top_level + 1);
  for (int s = 0; s <= top_level; ++s) {
    int d = T.level_dim(s);
    SparseMatrix M(d, d);
    Rational diag = Rational((long long)(m - 2 * s) * (m - 2 * s) - (long long)m * m);
    for (int i = 0; i < d; ++i) M.add(i, i, diag);
    if (s > 0) {
      SparseMatrix yx(d, d);
      SparseMatrix X = T.x_mat(s), Y = T.y_mat(s - 1);
      for (const auto& [rcY, vY] : Y.entries())
        for (const auto& [rcX, vX] : X.entries())
          if (rcY.second == rcX.first) yx.add(rcY.first, rcX.second, Rational(4) * vY * vX);
      for (const auto& [rc, v] : yx.entries()) M.add(rc.first, rc.second, v);
    }
    std::vector<Vec> K;
    for (int iter = 0; iter < d + 1; ++iter) {
      std::vector<Vec> K2 = preimage_space(M, K);
      if (K2.size() == K.size()) break;
      K = std::move(K2);
    }
    std::size_t expected = (s < m) ? 1 : 2;
    if (K.size() != expected)
      throw std::logic_error("build_proj0: block eigenspace dimension " +
                             std::to_string(K.size()) + " != " + std::to_string(expected) +
                             " at level " + std::to_string(s));
    G[s] = std::move(K);
  }

  // v-chain: v = t_{0,0}, vc_{k+1} = y vc_k. Chain position k corresponds to
  // the figure index j = k + a + 1 (v_0 = vc_{-a-1}, v_{-1} = vc_{m-1}).
  std::vector<Vec> vc(top_level + 1);
  vc[0] = Vec{Rational(1)};
  for (int k = 0; k + 1 <= top_level; ++k) vc[k + 1] = mat_apply(T.y_mat(k), vc[k]);

  // u_0 in G[m] with x u_0 = vc[m-1], made unique by zeroing the coordinate
  // where vc[m] (= v_0) has its leading entry.
  SparseMatrix xg(T.level_dim(m - 1), 2);
  for (int j = 0; j < 2; ++j) {
    Vec img = mat_apply(T.x_mat(m), G[m][static_cast<std::size_t>(j)]);
    for (std::size_t i = 0; i < img.size(); ++i)
      if (!is_zero(img[i])) xg.set(i, j, img[i]);
  }
  auto sol = solve(xg, vc[m - 1]);
  if (!sol) throw std::logic_error("build_proj0: x u_0 = v_{-1} unsolvable");
  Vec u0(T.level_dim(m), Rational(0));
  for (int j = 0; j < 2; ++j)
    for (std::size_t i = 0; i < u0.size(); ++i) u0[i] += (*sol)[j] * G[m][j][i];
  std::size_t pivot = 0;
  while (is_zero(vc[m][pivot])) ++pivot;
  Rational shift = u0[pivot] / vc[m][pivot];
  for (std::size_t i = 0; i < u0.size(); ++i) u0[i] -= shift * vc[m][i];

  std::vector<Vec> uc(depth + 1);
  uc[0] = std::move(u0);
  for (int j = 0; j + 1 <= depth; ++j) uc[j + 1] = mat_apply(T.y_mat(m + j), uc[j]);

  // Assemble the based module. Basis order: v-chain then u-chain.
  Base0Module out;
  out.lambda = lambda;
  out.projective = true;
  out.depth = depth;
  auto vlabel = [&](int k) { return BaseLabel{BaseKind::proj_top, k + a + 1}; };
  auto ulabel = [&](int j) { return BaseLabel{BaseKind::proj_bottom, j}; };
  for (int k = 0; k <= dv; ++k) {
    Base0Vector bv;
    bv.label = vlabel(k);
    bv.weight = {-a - 2 - 2 * k, lambda.b};
    if (k >= m - 1) {
      bv.reach = UEAWord(static_cast<std::size_t>(k - (m - 1)), Gen::y);
      bv.reach.push_back(Gen::x);
      bv.reach_scale = 1;
    } else {
      // climb with x from v_{-1}: x vc_k = k(m-k) vc_{k-1} in Delta_0(m-1)
      bv.reach = UEAWord(static_cast<std::size_t>(m - k), Gen::x);
      Rational scale(1);
      for (int kk = k + 1; kk <= m - 1; ++kk) scale *= Rational((long long)kk * (m - kk));
      bv.reach_scale = scale;
    }
    out.index_of[bv.label] = static_cast<int>(out.basis.size());
    out.basis.push_back(std::move(bv));
  }
  for (int j = 0; j <= depth; ++j) {
    Base0Vector bv;
    bv.label = ulabel(j);
    bv.weight = {a - 2 * j, lambda.b};
    bv.reach = UEAWord(static_cast<std::size_t>(j), Gen::y);
    bv.reach_scale = 1;
    out.index_of[bv.label] = static_cast<int>(out.basis.size());
    out.basis.push_back(std::move(bv));
  }
  out.generator_index = out.index_of[ulabel(0)];

  // Actions in chain coordinates. Vectors at level s: vc_s (s <= depth) and
  // uc_{s-m} (s >= m); solve small systems in T coordinates.
  auto members_at = [&](int s) {
    std::vector<std::pair<int, const Vec*>> mem;  // (basis index, T coords)
    if (s >= 0 && s <= dv) mem.push_back({out.index_of.at(vlabel(s)), &vc[s]});
    if (s >= m && s - m <= depth) mem.push_back({out.index_of.at(ulabel(s - m)), &uc[s - m]});
    return mem;
  };
  auto expand_at = [&](const Vec& target, int s) {
    auto mem = members_at(s);
    std::vector<Vec> cols;
    for (auto& [idx, coords] : mem) cols.push_back(*coords);
    auto coeffs = in_span(cols, target);
    if (!coeffs)
      throw std::logic_error("build_proj0: vector outside chain span at level " +
                             std::to_string(s) + " (" + std::to_string(mem.size()) +
                             " members)");
    Base0Module::Row row;
    for (std::size_t i = 0; i < mem.size(); ++i)
      if (!is_zero((*coeffs)[i])) row.push_back({(*coeffs)[i], mem[i].first});
    return row;
  };

  auto& ax = out.act0[Gen::x];
  auto& ay = out.act0[Gen::y];
  auto& ah = out.act0[Gen::h];
  ax.resize(out.basis.size());
  ay.resize(out.basis.size());
  ah.resize(out.basis.size());
  for (int k = 0; k <= dv; ++k) {
    int idx = out.index_of.at(vlabel(k));
    ah[idx] = {{Rational(out.basis[idx].weight.a), idx}};
    ay[idx] = {{Rational(1), k == dv ? -1 : out.index_of.at(vlabel(k + 1))}};
    if (k > 0) {
      Base0Module::Row row = expand_at(mat_apply(T.x_mat(k), vc[k]), k - 1);
      // the v-chain is the Verma submodule Delta_0(lambda'): x must stay on it
      for (auto& [c, j] : row)
        if (out.basis[j].label.kind != BaseKind::proj_top)
          throw std::logic_error("build_proj0: v-chain not a submodule");
      ax[idx] = std::move(row);
    }
  }
  for (int j = 0; j <= depth; ++j) {
    int idx = out.index_of.at(ulabel(j));
    ah[idx] = {{Rational(out.basis[idx].weight.a), idx}};
    ay[idx] = {{Rational(1), j == depth ? -1 : out.index_of.at(ulabel(j + 1))}};
    if (m + j - 1 >= 0) {
      Base0Module::Row row = expand_at(mat_apply(T.x_mat(m + j), uc[j]), m + j - 1);
      // quotient by the v-chain must be Delta_0(lambda)
      Rational ucoeff(0);
      for (auto& [c, i] : row)
        if (out.basis[i].label.kind == BaseKind::proj_bottom) ucoeff = c;
      if (ucoeff != Rational((long long)j * (a - j + 1)))
        throw std::logic_error("build_proj0: quotient is not Delta_0(lambda)");
      ax[idx] = std::move(row);
    }
  }

  // End(P_0) has dimension 2: the kernel of xyx on the eigenspace at lambda.
  {
    SparseMatrix xyx(T.level_dim(m + 1 - 1), 2);
    std::vector<Vec> cols;
    for (int j = 0; j < 2; ++j) {
      Vec w = mat_apply(T.x_mat(m), G[m][static_cast<std::size_t>(j)]);
      w = mat_apply(T.y_mat(m - 1), w);
      w = mat_apply(T.x_mat(m), w);
      cols.push_back(std::move(w));
    }
    SparseMatrix mm(cols[0].size(), 2);
    for (int j = 0; j < 2; ++j)
      for (std::size_t i = 0; i < cols[j].size(); ++i)
        if (!is_zero(cols[j][i])) mm.set(i, j, cols[j][i]);
    if (kernel_basis(mm).size() != 2)
      throw std::logic_error("build_proj0: End(P_0) dimension != 2");
  }

  return out;
}

// ---------------------------------------------------------------------------

namespace {

constexpr std::uint8_t kBitYm = 1, kBitHm = 2, kBitXm = 4;

std::uint8_t gen_bit(Gen g) {
  switch (g) {
    case Gen::y_minus: return kBitYm;
    case Gen::h_minus: return kBitHm;
    case Gen::x_minus: return kBitXm;
    default: return 0;
  }
}

Gen leading_odd(std::uint8_t alpha) {
  if (alpha & kBitYm) return Gen::y_minus;
  if (alpha & kBitHm) return Gen::h_minus;
  return Gen::x_minus;
}

// Sign of moving g to its slot in y_- h_- x_- order from the front; 0 if the
// slot is occupied.
int insert_sign(Gen g, std::uint8_t alpha) {
  std::uint8_t bit = gen_bit(g);
  if (alpha & bit) return 0;
  int below = 0;
  for (std::uint8_t b : {kBitYm, kBitHm, kBitXm}) {
    if (b == bit) break;
    if (alpha & b) ++below;
  }
  return (below % 2 == 0) ? 1 : -1;
}

}  // namespace

InducedModule::InducedModule(Base0Module base0) : base0_(std::move(base0)) {
  for (std::uint8_t alpha = 0; alpha < 8; ++alpha)
    for (int b = 0; b < static_cast<int>(base0_.basis.size()); ++b)
      by_weight_[weight_of({alpha, b})].push_back({alpha, b});
}

Weight InducedModule::weight_of(MVKey k) const {
  Weight w = base0_.basis[static_cast<std::size_t>(k.base)].weight;
  if (k.alpha & kBitYm) w = w + root(Gen::y_minus);
  if (k.alpha & kBitHm) w = w + root(Gen::h_minus);
  if (k.alpha & kBitXm) w = w + root(Gen::x_minus);
  return w;
}

ModuleVector InducedModule::generator() const {
  ModuleVector v;
  v.add(0, base0_.generator_index, Rational(1));
  return v;
}

ModuleVector InducedModule::apply_term(Gen g, std::uint8_t alpha, int base) const {
  ModuleVector out;
  if (alpha == 0) {
    switch (g) {
      case Gen::x:
      case Gen::y:
      case Gen::h: {
        for (const auto& [c, j] : base0_.act0.at(g)[static_cast<std::size_t>(base)]) {
          if (j < 0)
            throw WindowError("InducedModule: action past truncation depth",
                              base0_.basis[static_cast<std::size_t>(base)].weight);
          out.add(0, j, c);
        }
        return out;
      }
      case Gen::xi_dxi:
        out.add(0, base, Rational(-base0_.lambda.b));
        return out;
      case Gen::d_xi:
        return out;
      default: {  // odd lowering: becomes the prefix
        out.add(gen_bit(g), base, Rational(1));
        return out;
      }
    }
  }
  Gen first = leading_odd(alpha);
  std::uint8_t rest = alpha & static_cast<std::uint8_t>(~gen_bit(first));
  // g . first = (-1)^{p(g)} first . g + [g, first]  (p(first) = 1)
  Rational sign = is_odd(g) ? Rational(-1) : Rational(1);
  for (const auto& [k, c] : apply_term(g, rest, base).terms()) {
    int s = insert_sign(first, k.alpha);
    if (s != 0)
      out.add(static_cast<std::uint8_t>(k.alpha | gen_bit(first)), k.base,
              sign * Rational(s) * c);
  }
  for (const auto& term : bracket(g, first)) {
    ModuleVector sub = apply_term(term.gen, rest, base);
    sub *= term.coeff;
    out += sub;
  }
  return out;
}

ModuleVector InducedModule::apply(Gen g, const ModuleVector& v) const {
  ModuleVector out;
  for (const auto& [k, c] : v.terms()) {
    ModuleVector t = apply_term(g, k.alpha, k.base);
    t *= c;
    out += t;
  }
  return out;
}

ModuleVector InducedModule::apply_word(const UEAWord& w, const ModuleVector& v) const {
  ModuleVector cur = v;
  for (auto it = w.rbegin(); it != w.rend(); ++it) cur = apply(*it, cur);
  return cur;
}

void InducedModule::check_interior(Weight mu, int margin) const {
  auto it = by_weight_.find(mu);
  if (it == by_weight_.end()) return;
  for (const MVKey& k : it->second) {
    const BaseLabel& l = base0_.basis[static_cast<std::size_t>(k.base)].label;
    int chain = 0;
    switch (l.kind) {
      case BaseKind::verma_pbw: chain = l.index; break;
      // y-steps from the generator: v_j = y^{j+1} x u_0 above v_{-1}
      case BaseKind::proj_top: chain = std::max(0, l.index + 1); break;
      case BaseKind::proj_bottom: chain = l.index; break;
    }
    if (chain > base0_.depth - margin)
      throw WindowError("weight space touches truncation depth", mu);
  }
}

std::vector<MVKey> InducedModule::weight_space(Weight mu) const {
  check_interior(mu, 2);
  auto it = by_weight_.find(mu);
  if (it == by_weight_.end()) return {};
  return it->second;
}

std::pair<UEAWord, Rational> InducedModule::reaching_word(MVKey k) const {
  const Base0Vector& bv = base0_.basis[static_cast<std::size_t>(k.base)];
  UEAWord w;
  if (k.alpha & kBitYm) w.push_back(Gen::y_minus);
  if (k.alpha & kBitHm) w.push_back(Gen::h_minus);
  if (k.alpha & kBitXm) w.push_back(Gen::x_minus);
  w.insert(w.end(), bv.reach.begin(), bv.reach.end());
  return {w, bv.reach_scale};
}

Vec InducedModule::coordinates(const ModuleVector& v, Weight mu) const {
  std::vector<MVKey> keys = weight_space(mu);
  std::map<MVKey, std::size_t> pos;
  for (std::size_t i = 0; i < keys.size(); ++i) pos[keys[i]] = i;
  Vec out(keys.size(), Rational(0));
  for (const auto& [k, c] : v.terms()) {
    auto it = pos.find(k);
    if (it == pos.end())
      throw std::invalid_argument("coordinates: vector not supported at " + mu.str());
    out[it->second] = c;
  }
  return out;
}

SparseMatrix InducedModule::matrix_dxi(Weight mu) const {
  std::vector<MVKey> dom = weight_space(mu);
  Weight nu = mu + root(Gen::d_xi);
  std::vector<MVKey> cod = weight_space(nu);
  std::map<MVKey, std::size_t> pos;
  for (std::size_t i = 0; i < cod.size(); ++i) pos[cod[i]] = i;
  SparseMatrix out(cod.size(), dom.size());
  for (std::size_t j = 0; j < dom.size(); ++j) {
    ModuleVector unit;
    unit.add(dom[j], Rational(1));
    for (const auto& [k, c] : apply(Gen::d_xi, unit).terms()) out.set(pos.at(k), j, c);
  }
  return out;
}

SparseMatrix InducedModule::matrix_xyx(Weight mu) const {
  std::vector<MVKey> dom = weight_space(mu);
  Weight nu = mu + Weight{2, 0};
  std::vector<MVKey> cod = weight_space(nu);
  std::map<MVKey, std::size_t> pos;
  for (std::size_t i = 0; i < cod.size(); ++i) pos[cod[i]] = i;
  SparseMatrix out(cod.size(), dom.size());
  const UEAWord xyx = {Gen::x, Gen::y, Gen::x};
  for (std::size_t j = 0; j < dom.size(); ++j) {
    ModuleVector unit;
    unit.add(dom[j], Rational(1));
    for (const auto& [k, c] : apply_word(xyx, unit).terms()) out.set(pos.at(k), j, c);
  }
  return out;
}

std::pair<std::size_t, std::size_t> InducedModule::ker_im_partial(Weight mu) const {
  std::size_t dom = weight_space(mu).size();
  std::size_t rk = rank(matrix_dxi(mu));
  std::size_t ker_dim = dom - rk;
  // image of d_xi landing in mu comes from the space one delta below
  Weight below = mu - root(Gen::d_xi);
  std::size_t im_dim = weight_space(below).empty() ? 0 : rank(matrix_dxi(below));
  return {ker_dim, im_dim};
}

std::string InducedModule::dump_json() const {
  nlohmann::json j;
  j["lambda"] = {lambda().a, lambda().b};
  j["kind"] = projective_kind() ? "projective" : "verma";
  j["depth"] = depth();
  nlohmann::json basis = nlohmann::json::array();
  for (std::uint8_t alpha = 0; alpha < 8; ++alpha) {
    for (int b = 0; b < static_cast<int>(base0_.basis.size()); ++b) {
      Weight w = weight_of({alpha, b});
      std::string name;
      if (alpha & kBitYm) name += "y_-.";
      if (alpha & kBitHm) name += "h_-.";
      if (alpha & kBitXm) name += "x_-.";
      name += base0_.basis[static_cast<std::size_t>(b)].label.str();
      basis.push_back({{"alpha", alpha}, {"base", b}, {"label", name}, {"weight", {w.a, w.b}}});
    }
  }
  j["basis"] = std::move(basis);
  nlohmann::json acts;
  for (Gen g : all_generators) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::uint8_t alpha = 0; alpha < 8; ++alpha) {
      for (int b = 0; b < static_cast<int>(base0_.basis.size()); ++b) {
        nlohmann::json row = nlohmann::json::array();
        ModuleVector img;
        bool truncated = false;
        try {
          img = apply_term(g, alpha, b);
        } catch (const WindowError&) {
          truncated = true;
        }
        if (truncated) {
          rows.push_back("truncated");
          continue;
        }
        for (const auto& [k, c] : img.terms())
          row.push_back({{"alpha", k.alpha}, {"base", k.base}, {"coeff", to_string(c)}});
        rows.push_back(std::move(row));
      }
    }
    acts[gen_name(g)] = std::move(rows);
  }
  j["actions"] = std::move(acts);
  return j.dump(2);
}

InducedModule induce(Base0Module m0) { return InducedModule(std::move(m0)); }

InducedModule make_projective(Weight lambda, int depth) {
  if (lambda.a >= -1) return induce(build_verma0(lambda, depth));
  return induce(build_proj0(lambda, depth));
}

int default_depth(int abs_a_max, int n_max) {
  return abs_a_max + 2 + 2 * n_max + 8;
}

}  // namespace peodd
