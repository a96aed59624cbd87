#pragma once

#include <optional>
#include <vector>

#include "peodd/modules.hpp"

namespace peodd {

/// Shared store of built modules; morphism work repeatedly crosses between
/// P(lambda) for nearby lambda. Modules are immutable once built.
class ModuleCache {
 public:
  explicit ModuleCache(int depth) : depth_(depth) {}
  const InducedModule& get(Weight lambda);
  int depth() const { return depth_; }

 private:
  int depth_;
  std::map<Weight, InducedModule> store_;
};

/// A homomorphism P(source) -> P(target_module), stored as the image of the
/// generator: a vector in P(target_module)_source killed by d_xi and xyx.
/// degree is the path-length grading; -1 when it is not pinned (raw solver
/// output).
struct Morphism {
  Weight source;
  Weight target_module;
  ModuleVector vec;
  int degree = -1;

  bool is_zero() const { return vec.is_zero(); }
};

/// Basis of {v in P(lambda)_mu : d_xi v = 0, xyx v = 0}; the count equals
/// [P(lambda) : L(mu)].
std::vector<Morphism> target_vectors(ModuleCache& cache, Weight lambda, Weight mu);

bool is_target_vector(ModuleCache& cache, const Morphism& m);

Morphism identity_morphism(ModuleCache& cache, Weight lambda);

/// outer . inner; requires inner.target_module == outer.source.
Morphism compose(ModuleCache& cache, const Morphism& outer, const Morphism& inner);

/// Coefficients of m over the given morphisms (same source/target required),
/// or nullopt when m is outside their span.
std::optional<Vec> in_span_morphisms(ModuleCache& cache,
                                     const std::vector<Morphism>& basis,
                                     const Morphism& m);

}  // namespace peodd
