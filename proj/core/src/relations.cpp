#include "peodd/relations.hpp"

#include <sstream>

#include "peodd/multiplicity.hpp"

namespace peodd {

std::string label_name(MorphismLabel l) {
  switch (l) {
    case MorphismLabel::f: return "f";
    case MorphismLabel::g: return "g";
    case MorphismLabel::p: return "p";
    case MorphismLabel::q: return "q";
    case MorphismLabel::f1: return "f1";
    case MorphismLabel::f2: return "f2";
    case MorphismLabel::g1: return "g1";
    case MorphismLabel::g2: return "g2";
    case MorphismLabel::fprime: return "f'";
    case MorphismLabel::gprime: return "g'";
    case MorphismLabel::r: return "r";
    case MorphismLabel::r1: return "r1";
    case MorphismLabel::r2: return "r2";
    case MorphismLabel::identity: return "e";
  }
  return "?";
}

Gauge gauge_fix(int a_target) {
  if ((a_target % 2 + 2) % 2 != 1)
    throw std::invalid_argument("gauge_fix: a must be odd");
  if (a_target == -1) return {std::nullopt, std::nullopt};
  Rational den(a_target + 1);
  return {Rational(-2) / den, Rational(2) / den};
}

Rational gauge_difference_residual(int a) {
  auto beta = [](int c) { return Rational(2) / Rational(c + 1); };
  auto alpha = [](int c) { return Rational(-2) / Rational(c + 1); };
  return beta(a - 2) - beta(a) - alpha(a) + alpha(a + 2) -
         Rational(8) / (Rational(a - 1) * Rational(a + 3));
}

namespace {

ModuleVector from_words(const InducedModule& P,
                        const std::vector<std::pair<Rational, UEAWord>>& words) {
  ModuleVector out;
  for (const auto& [c, w] : words) {
    ModuleVector piece = P.apply_word(w, P.generator());
    piece *= c;
    out += piece;
  }
  return out;
}

constexpr std::uint8_t kYm = 1, kHm = 2, kXm = 4;

MVKey proj_key(const InducedModule& P, std::uint8_t alpha, BaseKind kind, int j) {
  return {alpha, P.base0().index_of.at({kind, j})};
}

ModuleVector from_units(
    const InducedModule& P,
    const std::vector<std::tuple<Rational, std::uint8_t, BaseKind, int>>& units) {
  ModuleVector out;
  for (const auto& [c, alpha, kind, j] : units) out.add(proj_key(P, alpha, kind, j), c);
  return out;
}

}  // namespace

Morphism named_morphism(ModuleCache& cache, MorphismLabel l, Weight s,
                        const GaugeOptions& opt) {
  const int c = s.a;
  Morphism m;
  m.source = s;
  m.degree = 1;
  const Rational A1(1);

  switch (l) {
    case MorphismLabel::identity:
      return identity_morphism(cache, s);

    case MorphismLabel::f: {
      if (c < 1) throw std::invalid_argument("f needs source a >= 1");
      m.target_module = {c + 2, s.b + 1};
      const InducedModule& P = cache.get(m.target_module);
      long long a = c + 2;
      m.vec = from_words(P, {{Rational(-a * (a + 1)), {Gen::y_minus}},
                             {Rational(a + 1), {Gen::y, Gen::h_minus}},
                             {A1, {Gen::y, Gen::y, Gen::x_minus}}});
      return m;
    }
    case MorphismLabel::g: {
      if (c < 3) throw std::invalid_argument("g needs source a >= 3");
      m.target_module = {c - 2, s.b + 1};
      const InducedModule& P = cache.get(m.target_module);
      m.vec = from_words(P, {{A1, {Gen::x_minus}}});
      return m;
    }
    case MorphismLabel::p: {
      if (c < 1) throw std::invalid_argument("p needs source a >= 1");
      m.target_module = dual(s);
      const InducedModule& P = cache.get(m.target_module);
      int a = m.target_module.a;
      m.vec = from_units(P, {{A1, 0, BaseKind::proj_top, a + 1}});  // 1 (x) v
      return m;
    }
    case MorphismLabel::q: {
      if (c > -3) throw std::invalid_argument("q needs source a <= -3");
      m.target_module = dual(s);
      const InducedModule& P = cache.get(m.target_module);
      int a = m.target_module.a;
      UEAWord w(static_cast<std::size_t>(a + 1), Gen::y);
      m.vec = from_words(P, {{A1, w}});
      return m;
    }
    case MorphismLabel::f1:
    case MorphismLabel::f2: {
      if (c > -1) throw std::invalid_argument("f-family needs source a <= -1");
      m.target_module = {c - 2, s.b + 1};
      const InducedModule& P = cache.get(m.target_module);
      long long a = c - 2;
      if (l == MorphismLabel::f1) {
        m.vec = from_units(P, {{A1, kXm, BaseKind::proj_top, 0}});
      } else {
        m.vec = from_units(P, {{Rational(-1), kYm, BaseKind::proj_top, -2},
                               {A1, kHm, BaseKind::proj_top, -1},
                               {Rational(-(a + 1)), kXm, BaseKind::proj_bottom, 0}});
      }
      return m;
    }
    case MorphismLabel::g1:
    case MorphismLabel::g2: {
      if (c > -3) throw std::invalid_argument("g-family needs source a <= -3");
      m.target_module = {c + 2, s.b + 1};
      const InducedModule& P = cache.get(m.target_module);
      long long a = c + 2;
      if (a == -1) {
        if (l == MorphismLabel::g1)
          m.vec = from_words(P, {{A1, {Gen::y, Gen::y, Gen::x_minus}}});
        else
          m.vec = from_words(P, {{A1, {Gen::y_minus}}, {A1, {Gen::y, Gen::h_minus}}});
      } else if (l == MorphismLabel::g1) {
        m.vec = from_units(P, {{Rational(a * a - a), kYm, BaseKind::proj_top, 0},
                               {Rational(-(a - 1)), kHm, BaseKind::proj_top, 1},
                               {Rational(-1), kXm, BaseKind::proj_top, 2}});
      } else {
        m.vec = from_units(P, {{Rational(a * (a * a - 1)), kYm, BaseKind::proj_bottom, 0},
                               {Rational(-(a * a - 1)), kHm, BaseKind::proj_bottom, 1},
                               {Rational(-(a + 1)), kXm, BaseKind::proj_bottom, 2},
                               {Rational(2 * a - 1), kYm, BaseKind::proj_top, 0},
                               {Rational(-1), kHm, BaseKind::proj_top, 1}});
      }
      return m;
    }
    case MorphismLabel::fprime: {
      Morphism a2 = named_morphism(cache, MorphismLabel::f2, s);
      Morphism a1 = named_morphism(cache, MorphismLabel::f1, s);
      Gauge gg = gauge_fix(c - 2);
      Rational beta = *gg.beta + opt.beta_shift;
      a1.vec *= beta;
      a2.vec += a1.vec;
      return a2;
    }
    case MorphismLabel::gprime: {
      Morphism a2 = named_morphism(cache, MorphismLabel::g2, s);
      Gauge gg = gauge_fix(c + 2);
      if (!gg.alpha) return a2;  // target a = -1: g' = g2
      Morphism a1 = named_morphism(cache, MorphismLabel::g1, s);
      a1.vec *= (*gg.alpha + opt.alpha_shift);
      a2.vec += a1.vec;
      return a2;
    }
    case MorphismLabel::r: {
      if (c < -1) throw std::invalid_argument("r needs a Verma target (a >= -1)");
      m.target_module = {c, s.b + 2};
      m.degree = 2;
      const InducedModule& P = cache.get(m.target_module);
      long long a = c;
      m.vec = from_words(P, {{Rational(-(a + 2)), {Gen::y_minus, Gen::x_minus}},
                             {A1, {Gen::y, Gen::h_minus, Gen::x_minus}}});
      return m;
    }
    case MorphismLabel::r1:
    case MorphismLabel::r2: {
      if (c > -3) throw std::invalid_argument("r-family needs source a <= -3");
      m.target_module = {c, s.b + 2};
      m.degree = 2;
      const InducedModule& P = cache.get(m.target_module);
      long long a = c;
      if (l == MorphismLabel::r1) {
        m.vec = from_units(P, {{Rational(-a), kYm | kXm, BaseKind::proj_top, 0},
                               {A1, kHm | kXm, BaseKind::proj_top, 1}});
      } else {
        m.vec = from_units(P, {{A1, kYm | kHm, BaseKind::proj_top, -1},
                               {Rational(-a), kYm | kXm, BaseKind::proj_bottom, 0},
                               {A1, kHm | kXm, BaseKind::proj_bottom, 1}});
      }
      return m;
    }
  }
  throw std::logic_error("named_morphism: unhandled label");
}

namespace {

std::string zero_or_witness(const Morphism& m) {
  if (m.vec.is_zero()) return "0";
  std::ostringstream os;
  os << m.vec.terms().size() << " nonzero terms at " << m.source.str() << "->"
     << m.target_module.str();
  return os.str();
}

struct Checker {
  ModuleCache& cache;
  const GaugeOptions& gauge;
  std::vector<RelationCheck> out;
  int center;

  Morphism nm(MorphismLabel l, Weight s) { return named_morphism(cache, l, s, gauge); }

  void check_zero(const std::string& name, Morphism m) {
    out.push_back({center, name, m.vec.is_zero(), zero_or_witness(m)});
  }
  // lhs + kappa * rhs == 0
  void check_comb(const std::string& name, Morphism lhs, Morphism rhs, Rational kappa) {
    rhs.vec *= kappa;
    lhs.vec += rhs.vec;
    check_zero(name, std::move(lhs));
  }
};

}  // namespace

std::vector<RelationCheck> verify_relations(int a_max, const GaugeOptions& gauge) {
  ModuleCache cache(default_depth(a_max + 6, 1));
  Checker ck{cache, gauge, {}, 0};
  using L = MorphismLabel;

  for (int a = -1; a <= a_max; a += 2) {
    ck.center = a;
    int b = canonical_b(a);
    Weight mu{a, b};
    Weight mup = dual(mu);

    if (a == -1) {
      ck.check_zero("f'^2", compose(cache, ck.nm(L::fprime, {-3, b + 1}), ck.nm(L::fprime, mu)));
      ck.check_zero("qp", compose(cache, ck.nm(L::q, {-3, b + 1}), ck.nm(L::p, {1, b + 1})));
      ck.check_zero("g'f'", compose(cache, ck.nm(L::gprime, {-3, b + 1}), ck.nm(L::fprime, mu)));
      continue;
    }
    if (a == 1) {
      ck.check_zero("f^2", compose(cache, ck.nm(L::f, {3, b + 1}), ck.nm(L::f, mu)));
      ck.check_zero("f'^2",
                    compose(cache, ck.nm(L::fprime, {-5, b + 1}), ck.nm(L::fprime, mup)));
      ck.check_zero("qp", compose(cache, ck.nm(L::q, mup), ck.nm(L::p, mu)));
      ck.check_comb("f'g'-(1/16)g'f'",
                    compose(cache, ck.nm(L::fprime, {-1, b + 1}), ck.nm(L::gprime, mup)),
                    compose(cache, ck.nm(L::gprime, {-5, b + 1}), ck.nm(L::fprime, mup)),
                    rat(-1, 16));
      ck.check_comb("f'p-2pf", compose(cache, ck.nm(L::fprime, mup), ck.nm(L::p, mu)),
                    compose(cache, ck.nm(L::p, {3, b + 1}), ck.nm(L::f, mu)), Rational(-2));
      ck.check_comb("qf'-4fq",
                    compose(cache, ck.nm(L::q, {-5, b + 1}), ck.nm(L::fprime, mup)),
                    compose(cache, ck.nm(L::f, mu), ck.nm(L::q, mup)), Rational(-4));
      continue;
    }

    // a >= 3
    Rational kap = Rational(a - 1) / Rational(a + 3);
    ck.check_zero("f^2", compose(cache, ck.nm(L::f, {a + 2, b + 1}), ck.nm(L::f, mu)));
    if (a >= 5)
      ck.check_zero("g^2", compose(cache, ck.nm(L::g, {a - 2, b + 1}), ck.nm(L::g, mu)));
    ck.check_zero("f'^2",
                  compose(cache, ck.nm(L::fprime, {-a - 4, b + 1}), ck.nm(L::fprime, mup)));
    ck.check_zero("g'^2",
                  compose(cache, ck.nm(L::gprime, {-a, b + 1}), ck.nm(L::gprime, mup)));
    ck.check_zero("qp", compose(cache, ck.nm(L::q, mup), ck.nm(L::p, mu)));
    ck.check_comb("fg+((a-1)/(a+3))gf",
                  compose(cache, ck.nm(L::f, {a - 2, b + 1}), ck.nm(L::g, mu)),
                  compose(cache, ck.nm(L::g, {a + 2, b + 1}), ck.nm(L::f, mu)), kap);
    ck.check_comb("f'g'+((a-1)/(a+3))^2g'f'",
                  compose(cache, ck.nm(L::fprime, {-a, b + 1}), ck.nm(L::gprime, mup)),
                  compose(cache, ck.nm(L::gprime, {-a - 4, b + 1}), ck.nm(L::fprime, mup)),
                  kap * kap);
    ck.check_comb("f'p-(a+1)pf", compose(cache, ck.nm(L::fprime, mup), ck.nm(L::p, mu)),
                  compose(cache, ck.nm(L::p, {a + 2, b + 1}), ck.nm(L::f, mu)),
                  Rational(-(a + 1)));
    ck.check_comb("qf'-(a+3)fq",
                  compose(cache, ck.nm(L::q, {-a - 4, b + 1}), ck.nm(L::fprime, mup)),
                  compose(cache, ck.nm(L::f, mu), ck.nm(L::q, mup)), Rational(-(a + 3)));
    ck.check_comb("g'p-(a+1)pg", compose(cache, ck.nm(L::gprime, mup), ck.nm(L::p, mu)),
                  compose(cache, ck.nm(L::p, {a - 2, b + 1}), ck.nm(L::g, mu)),
                  Rational(-(a + 1)));
    ck.check_comb("qg'-(a-1)gq",
                  compose(cache, ck.nm(L::q, {-a, b + 1}), ck.nm(L::gprime, mup)),
                  compose(cache, ck.nm(L::g, mu), ck.nm(L::q, mup)), Rational(-(a - 1)));
  }
  return ck.out;
}

std::vector<RelationCheck> verify_relns_downstairs(int a) {
  ModuleCache cache(default_depth(std::abs(a) + 8, 1));
  GaugeOptions none;
  Checker ck{cache, none, {}, a};
  using L = MorphismLabel;
  int b = canonical_b(a);

  if (a == -1) {
    Weight mu{-1, b};
    Weight t{-3, b + 1};
    Morphism f1 = ck.nm(L::f1, mu), f2 = ck.nm(L::f2, mu);
    Morphism g1 = ck.nm(L::g1, t), g2 = ck.nm(L::g2, t);
    Morphism r = ck.nm(L::r, mu);
    ck.check_zero("g1f1", compose(cache, g1, f1));
    ck.check_comb("g2f1+4r", compose(cache, g2, f1), r, Rational(4));
    ck.check_comb("g2f2+4r", compose(cache, g2, f2), r, Rational(4));
    ck.check_comb("g1f2-4r", compose(cache, g1, f2), r, Rational(-4));
    return ck.out;
  }

  if (a < 1) throw std::invalid_argument("verify_relns_downstairs: a in {-1,1,3,5,...}");
  Weight mup{-a - 2, b};
  Weight tg{-a, b + 1};       // target of the g-family out of mu'
  Weight tf{-a - 4, b + 1};   // target of the f-family out of mu'
  Morphism g1 = ck.nm(L::g1, mup), g2 = ck.nm(L::g2, mup);
  Morphism f1u = ck.nm(L::f1, tg), f2u = ck.nm(L::f2, tg);    // continue to mu'+2delta
  Morphism f1d = ck.nm(L::f1, mup), f2d = ck.nm(L::f2, mup);  // out of mu'
  Morphism g1u = ck.nm(L::g1, tf), g2u = ck.nm(L::g2, tf);
  Morphism r1 = ck.nm(L::r1, mup), r2 = ck.nm(L::r2, mup);

  auto comb_r = [&](Rational c2, Rational c1) {
    Morphism m = r2;
    m.vec *= c2;
    Morphism m1 = r1;
    m1.vec *= c1;
    m.vec += m1.vec;
    return m;
  };

  if (a == 1) {
    ck.check_comb("f2g2-2r2", compose(cache, f2u, g2), comb_r(Rational(2), Rational(0)),
                  Rational(-1));
    ck.check_comb("f1g2-r1", compose(cache, f1u, g2), r1, Rational(-1));
    ck.check_comb("f2g1+r1", compose(cache, f2u, g1), r1, Rational(1));
  } else {
    // (a) f2 g2 = -(a-1)((a-1)(a+1) r2 + 2 r1)
    ck.check_comb("f2g2", compose(cache, f2u, g2),
                  comb_r(Rational((long long)(a - 1) * (a - 1) * (a + 1)),
                         Rational(2 * (a - 1))),
                  Rational(1));
    // (d) f2 g1 = (a-1)^2 r1 ; f1 g2 = -(a-1)^2 r1
    ck.check_comb("f2g1-(a-1)^2r1", compose(cache, f2u, g1), r1,
                  Rational(-(long long)(a - 1) * (a - 1)));
    ck.check_comb("f1g2+(a-1)^2r1", compose(cache, f1u, g2), r1,
                  Rational((long long)(a - 1) * (a - 1)));
  }
  // (b) g2 f2 = (a+3)((a+3)(a+1) r2 + 2 r1)
  ck.check_comb("g2f2", compose(cache, g2u, f2d),
                comb_r(Rational(-(long long)(a + 3) * (a + 3) * (a + 1)),
                       Rational(-2 * (a + 3))),
                Rational(1));
  // (c) g2 f1 = (a+3)^2 r1 ; g1 f2 = -(a+3)^2 r1
  ck.check_comb("g2f1-(a+3)^2r1", compose(cache, g2u, f1d), r1,
                Rational(-(long long)(a + 3) * (a + 3)));
  ck.check_comb("g1f2+(a+3)^2r1", compose(cache, g1u, f2d), r1,
                Rational((long long)(a + 3) * (a + 3)));
  // (e) f1 g1 = 0 = g1 f1
  ck.check_zero("f1g1", compose(cache, f1u, g1));
  ck.check_zero("g1f1", compose(cache, g1u, f1d));
  return ck.out;
}

}  // namespace peodd

namespace peodd {

Morphism arrow_morphism(ModuleCache& cache, ArrowKind k, Weight source,
                        const GaugeOptions& gauge) {
  switch (k) {
    case ArrowKind::f: return named_morphism(cache, MorphismLabel::f, source, gauge);
    case ArrowKind::g: return named_morphism(cache, MorphismLabel::g, source, gauge);
    case ArrowKind::p: return named_morphism(cache, MorphismLabel::p, source, gauge);
    case ArrowKind::q: return named_morphism(cache, MorphismLabel::q, source, gauge);
    case ArrowKind::fp: return named_morphism(cache, MorphismLabel::fprime, source, gauge);
    case ArrowKind::gp: return named_morphism(cache, MorphismLabel::gprime, source, gauge);
  }
  throw std::logic_error("arrow_morphism: bad kind");
}

Morphism path_morphism(ModuleCache& cache, const NormalPath& p,
                       const GaugeOptions& gauge) {
  Morphism cur = identity_morphism(cache, p.source);
  Weight at = p.source;
  for (ArrowKind k : p.word) {
    Morphism step = arrow_morphism(cache, k, at, gauge);
    cur = compose(cache, step, cur);
    at = arrow_shift_target(at, k);
  }
  return cur;
}

ConsistencyResult consistency_vs_homalg(const QuiverAlgebra& A, int dim_a_max,
                                        int product_a_max) {
  ConsistencyResult out;
  ModuleCache cache(default_depth(dim_a_max + 8, 1));

  // graded dimensions against target-vector counts and the closed form
  for (int a = -dim_a_max; a <= dim_a_max; a += 2) {
    if ((a % 2 + 2) % 2 != 1) continue;
    Weight mu{a, canonical_b(a)};
    if (!A.has_vertex(mu)) continue;
    // every lambda a path can reach: |da| <= 8, db in [0,2]
    for (int la = mu.a - 8; la <= mu.a + 8; ++la) {
      for (int lb = mu.b; lb <= mu.b + 2; ++lb) {
        Weight lambda{la, lb};
        if (!in_odd_block(lambda)) continue;
        int total = 0;
        for (int d = 0; d <= 4; ++d) total += A.graded_dim(mu, lambda, d);
        int closed = multiplicity_closed_form(lambda, mu);
        int solved = static_cast<int>(target_vectors(cache, lambda, mu).size());
        ++out.dim_pairs_checked;
        if (total != closed || solved != closed) {
          ++out.dim_mismatches;
          out.failures.push_back("dim mismatch mu=" + mu.str() + " lambda=" + lambda.str() +
                                 " paths=" + std::to_string(total) +
                                 " closed=" + std::to_string(closed) +
                                 " solved=" + std::to_string(solved));
        }
      }
    }
  }

  // structure constants: multiply vs compose on composable arrow pairs
  for (int a = -product_a_max; a <= product_a_max; a += 2) {
    if ((a % 2 + 2) % 2 != 1) continue;
    Weight s{a, canonical_b(a)};
    if (!A.has_vertex(s)) continue;
    for (ArrowKind k1 : A.arrows_out(s)) {
      Weight mid = *A.arrow_target(s, k1);
      for (ArrowKind k2 : A.arrows_out(mid)) {
        AlgebraElement prod = A.multiply(A.arrow(mid, k2), A.arrow(s, k1));
        Morphism lhs = compose(cache, arrow_morphism(cache, k2, mid),
                               arrow_morphism(cache, k1, s));
        Morphism rhs;
        rhs.source = s;
        rhs.target_module = arrow_shift_target(mid, k2);
        rhs.degree = 2;
        for (const auto& [path, c] : prod.terms()) {
          Morphism piece = path_morphism(cache, path);
          piece.vec *= c;
          rhs.vec += piece.vec;
        }
        ++out.products_checked;
        if (!(lhs.vec == rhs.vec)) {
          ++out.product_failures;
          out.failures.push_back("product mismatch " + arrow_name(k2) + "*" +
                                 arrow_name(k1) + " at " + s.str());
        }
      }
    }
  }
  return out;
}

}  // namespace peodd
