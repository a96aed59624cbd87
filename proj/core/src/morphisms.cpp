#include "peodd/morphisms.hpp"

namespace peodd {

const InducedModule& ModuleCache::get(Weight lambda) {
  auto it = store_.find(lambda);
  if (it != store_.end()) return it->second;
  if (!in_odd_block(lambda))
    throw std::invalid_argument("ModuleCache: " + lambda.str() + " not in O_odd");
  auto [jt, _] = store_.emplace(lambda, make_projective(lambda, depth_));
  return jt->second;
}

std::vector<Morphism> target_vectors(ModuleCache& cache, Weight lambda, Weight mu) {
  const InducedModule& P = cache.get(lambda);
  std::vector<MVKey> keys = P.weight_space(mu);
  if (keys.empty()) return {};
  SparseMatrix stacked = SparseMatrix::vstack(P.matrix_dxi(mu), P.matrix_xyx(mu));
  std::vector<Morphism> out;
  for (const Vec& k : kernel_basis(stacked)) {
    Morphism m;
    m.source = mu;
    m.target_module = lambda;
    for (std::size_t i = 0; i < keys.size(); ++i) m.vec.add(keys[i], k[i]);
    out.push_back(std::move(m));
  }
  return out;
}

bool is_target_vector(ModuleCache& cache, const Morphism& m) {
  const InducedModule& P = cache.get(m.target_module);
  for (const auto& [k, c] : m.vec.terms())
    if (P.weight_of(k) != m.source) return false;
  const UEAWord xyx = {Gen::x, Gen::y, Gen::x};
  return P.apply(Gen::d_xi, m.vec).is_zero() && P.apply_word(xyx, m.vec).is_zero();
}

Morphism identity_morphism(ModuleCache& cache, Weight lambda) {
  Morphism m;
  m.source = lambda;
  m.target_module = lambda;
  m.vec = cache.get(lambda).generator();
  m.degree = 0;
  return m;
}

Morphism compose(ModuleCache& cache, const Morphism& outer, const Morphism& inner) {
  if (inner.target_module != outer.source)
    throw std::invalid_argument("compose: middle module mismatch, inner lands in " +
                                inner.target_module.str() + ", outer starts at " +
                                outer.source.str());
  const InducedModule& Pmid = cache.get(inner.target_module);
  const InducedModule& Ptgt = cache.get(outer.target_module);
  Morphism out;
  out.source = inner.source;
  out.target_module = outer.target_module;
  out.degree = (inner.degree < 0 || outer.degree < 0) ? -1 : inner.degree + outer.degree;
  for (const auto& [k, c] : inner.vec.terms()) {
    auto [word, scale] = Pmid.reaching_word(k);
    ModuleVector piece = Ptgt.apply_word(word, outer.vec);
    piece *= c / scale;
    out.vec += piece;
  }
  return out;
}

std::optional<Vec> in_span_morphisms(ModuleCache& cache,
                                     const std::vector<Morphism>& basis,
                                     const Morphism& m) {
  if (basis.empty()) return std::nullopt;
  const InducedModule& P = cache.get(m.target_module);
  std::vector<Vec> cols;
  for (const Morphism& b : basis) {
    if (b.target_module != m.target_module || b.source != m.source)
      throw std::invalid_argument("in_span_morphisms: Hom space mismatch");
    cols.push_back(P.coordinates(b.vec, m.source));
  }
  return in_span(cols, P.coordinates(m.vec, m.source));
}

}  // namespace peodd
