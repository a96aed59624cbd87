#include "peodd/resolution.hpp"

#include <algorithm>
#include <set>

#include "peodd/linalg.hpp"
#include "peodd/modules.hpp"  // WindowError

namespace peodd {

namespace {

// Conservative reach of a resolution: arrow closure of mu, N+6 steps deep.
std::set<Weight> reach_set(Weight mu, int N) {
  std::set<Weight> reach = {mu};
  for (int it = 0; it < N + 6; ++it) {
    std::set<Weight> next = reach;
    for (Weight v : reach)
      for (ArrowKind k : {ArrowKind::f, ArrowKind::g, ArrowKind::p, ArrowKind::q,
                          ArrowKind::fp, ArrowKind::gp})
        if (arrow_exists(v, k)) next.insert(arrow_shift_target(v, k));
    if (next.size() == reach.size()) break;
    reach.swap(next);
  }
  return reach;
}

// Coordinate system: normal paths of internal degree d landing at tau, across
// the summands of a graded projective sum.
struct Coords {
  std::vector<std::pair<std::size_t, NormalPath>> basis;  // (summand, path)
  std::map<std::pair<std::size_t, NormalPath>, std::size_t> pos;

  void build(const QuiverAlgebra& A, const GradedProjectiveSum& P, int d, Weight tau) {
    for (std::size_t i = 0; i < P.summands.size(); ++i) {
      int pdeg = d - P.summands[i].shift;
      if (pdeg < 0) continue;
      for (const NormalPath& p : A.normal_paths_from(P.summands[i].vertex, pdeg))
        if (A.path_target(p) == tau) {
          pos[{i, p}] = basis.size();
          basis.push_back({i, p});
        }
    }
  }
};

struct HomogElement {
  Weight tau;
  int degree;
  std::vector<AlgebraElement> components;  // per summand of the ambient sum
};

Vec to_coords(const Coords& co, const HomogElement& e) {
  Vec out(co.basis.size(), Rational(0));
  for (std::size_t i = 0; i < e.components.size(); ++i)
    for (const auto& [p, c] : e.components[i].terms()) {
      auto it = co.pos.find({i, p});
      if (it == co.pos.end())
        throw std::logic_error("resolution: element outside coordinate system");
      out[it->second] += c;
    }
  return out;
}

HomogElement from_coords(const Coords& co, const GradedProjectiveSum& P, Weight tau,
                         int degree, const Vec& v) {
  HomogElement e{tau, degree, std::vector<AlgebraElement>(P.summands.size())};
  for (std::size_t j = 0; j < v.size(); ++j)
    if (!is_zero(v[j])) e.components[co.basis[j].first].add(co.basis[j].second, v[j]);
  return e;
}

std::vector<AlgebraElement> apply_boundary(const QuiverAlgebra& A,
                                           const ResolutionStep& step,
                                           std::size_t ci, const NormalPath& w) {
  std::vector<AlgebraElement> out(step.boundary[ci].size());
  AlgebraElement we;
  we.add(w, Rational(1));
  for (std::size_t j = 0; j < step.boundary[ci].size(); ++j)
    out[j] = A.multiply(we, step.boundary[ci][j]);
  return out;
}

}  // namespace

Resolution resolve(const QuiverAlgebra& A, Weight mu, int N) {
  if (!in_odd_block(mu))
    throw std::invalid_argument("resolve: " + mu.str() + " not in O_odd");
  for (Weight v : reach_set(mu, N))
    if (!A.has_vertex(v)) throw WindowError("resolve: window too small", v);

  Resolution res;
  res.mu = mu;
  ResolutionStep step0;
  step0.n = 0;
  step0.projectives.summands = {{mu, 0}};
  res.steps.push_back(std::move(step0));

  for (int n = 1; n <= N; ++n) {
    const ResolutionStep& prev = res.steps[static_cast<std::size_t>(n - 1)];
    std::vector<HomogElement> gens;

    if (n == 1) {
      // kernel of the augmentation is the radical: covered by the arrows
      for (ArrowKind k : A.arrows_out(mu))
        gens.push_back({*A.arrow_target(mu, k), 1, {A.arrow(mu, k)}});
    } else {
      int ceiling = 0;
      for (const Summand& s : prev.projectives.summands)
        ceiling = std::max(ceiling, s.shift + 4);

      for (int d = n - 1; d <= ceiling; ++d) {
        std::set<Weight> taus;
        for (const Summand& s : prev.projectives.summands)
          if (d >= s.shift)
            for (const NormalPath& p : A.normal_paths_from(s.vertex, d - s.shift))
              taus.insert(A.path_target(p));

        for (Weight tau : taus) {
          Coords dom;
          dom.build(A, prev.projectives, d, tau);
          if (dom.basis.empty()) continue;
          const ResolutionStep& pprev = res.steps[static_cast<std::size_t>(n - 2)];
          Coords cod;
          cod.build(A, pprev.projectives, d, tau);

          SparseMatrix m(cod.basis.size(), dom.basis.size());
          for (std::size_t j = 0; j < dom.basis.size(); ++j) {
            auto [ci, w] = dom.basis[j];
            std::vector<AlgebraElement> img = apply_boundary(A, prev, ci, w);
            for (std::size_t ri = 0; ri < img.size(); ++ri)
              for (const auto& [p, c] : img[ri].terms())
                m.add(cod.pos.at({ri, p}), j, c);
          }
          std::vector<Vec> ker = kernel_basis(m);
          if (ker.empty()) continue;
          if (d < n)
            throw std::logic_error("resolution: kernel in degree " + std::to_string(d) +
                                   " below homological degree " + std::to_string(n));

          // Graded Nakayama: quotient by A_{>0} . (generators already chosen).
          std::vector<Vec> span;
          for (const HomogElement& g : gens) {
            int udeg = d - g.degree;
            if (udeg < 1) continue;
            for (const NormalPath& u : A.normal_paths_from(g.tau, udeg)) {
              if (A.path_target(u) != tau) continue;
              AlgebraElement ue;
              ue.add(u, Rational(1));
              HomogElement ug{tau, d, std::vector<AlgebraElement>(g.components.size())};
              for (std::size_t i = 0; i < g.components.size(); ++i)
                ug.components[i] = A.multiply(ue, g.components[i]);
              span.push_back(to_coords(dom, ug));
            }
          }
          for (const Vec& kv : ker) {
            if (span.empty() || !in_span(span, kv)) {
              Vec norm = kv;
              std::size_t lead = 0;
              while (is_zero(norm[lead])) ++lead;
              Rational inv = norm[lead];
              for (auto& x : norm) x /= inv;
              gens.push_back(from_coords(dom, prev.projectives, tau, d, norm));
              span.push_back(std::move(norm));
            }
          }
        }
      }
      std::stable_sort(gens.begin(), gens.end(),
                       [](const HomogElement& a, const HomogElement& b) {
                         if (a.degree != b.degree) return a.degree < b.degree;
                         return a.tau < b.tau;
                       });
    }

    ResolutionStep step;
    step.n = n;
    for (HomogElement& g : gens) {
      step.projectives.summands.push_back({g.tau, g.degree});
      step.generator_degrees.push_back(g.degree);
      step.boundary.push_back(std::move(g.components));
    }
    // Lemma on_reso part 1: summand shifts >= n; minimality: entries in the
    // radical (no idempotent components).
    for (const Summand& s : step.projectives.summands)
      if (s.shift < n)
        throw std::logic_error("resolution: summand shift below homological degree");
    for (const auto& col : step.boundary)
      for (const AlgebraElement& e : col)
        for (const auto& [p, c] : e.terms())
          if (p.word.empty())
            throw std::logic_error("resolution: idempotent boundary entry");
    res.steps.push_back(std::move(step));
  }
  return res;
}

bool boundary_square_zero(const QuiverAlgebra& A, const Resolution& res) {
  for (std::size_t n = 2; n < res.steps.size(); ++n) {
    const ResolutionStep& cur = res.steps[n];
    const ResolutionStep& prv = res.steps[n - 1];
    for (std::size_t c = 0; c < cur.boundary.size(); ++c) {
      std::size_t rows2 = n >= 2 ? res.steps[n - 2].projectives.summands.size() : 0;
      for (std::size_t r2 = 0; r2 < rows2; ++r2) {
        AlgebraElement acc;
        for (std::size_t mid = 0; mid < prv.boundary.size(); ++mid)
          acc += A.multiply(cur.boundary[c][mid], prv.boundary[mid][r2]);
        if (!acc.is_zero()) return false;
      }
    }
  }
  return true;
}

bool linear_subcomplex_ok(const QuiverAlgebra& A, const Resolution& res) {
  // Lemma on_reso parts 2 and 3 for the degree-n-generated subcomplex:
  // shift-n columns may only hit shift-(n-1) rows, and the restricted
  // composite vanishes.
  for (std::size_t n = 1; n < res.steps.size(); ++n) {
    const ResolutionStep& cur = res.steps[n];
    const ResolutionStep& prv = res.steps[n - 1];
    for (std::size_t c = 0; c < cur.boundary.size(); ++c) {
      if (cur.projectives.summands[c].shift != static_cast<int>(n)) continue;
      for (std::size_t r = 0; r < cur.boundary[c].size(); ++r) {
        if (prv.projectives.summands[r].shift == static_cast<int>(n) - 1) continue;
        if (!cur.boundary[c][r].is_zero()) return false;
      }
    }
    if (n < 2) continue;
    const ResolutionStep& pprv = res.steps[n - 2];
    for (std::size_t c = 0; c < cur.boundary.size(); ++c) {
      if (cur.projectives.summands[c].shift != static_cast<int>(n)) continue;
      for (std::size_t r2 = 0; r2 < pprv.projectives.summands.size(); ++r2) {
        AlgebraElement acc;
        for (std::size_t mid = 0; mid < prv.boundary.size(); ++mid) {
          if (prv.projectives.summands[mid].shift != static_cast<int>(n) - 1) continue;
          acc += A.multiply(cur.boundary[c][mid], prv.boundary[mid][r2]);
        }
        if (!acc.is_zero()) return false;
      }
    }
  }
  return true;
}

KoszulReport koszul_check(const Resolution& res) {
  KoszulReport rep;
  for (std::size_t n = 1; n < res.steps.size(); ++n) {
    const ResolutionStep& s = res.steps[n];
    for (std::size_t i = 0; i < s.generator_degrees.size(); ++i) {
      if (s.generator_degrees[i] != static_cast<int>(n)) {
        rep.koszul = false;
        rep.fail_n = static_cast<int>(n);
        rep.fail_degree = s.generator_degrees[i];
        rep.fail_vertex = s.projectives.summands[i].vertex;
        return rep;
      }
    }
  }
  return rep;
}

int ext_dims(const Resolution& res, Weight lambda, int n) {
  if (n < 0 || n >= static_cast<int>(res.steps.size()))
    throw std::invalid_argument("ext_dims: n out of resolved range");
  int count = 0;
  for (const Summand& s : res.steps[static_cast<std::size_t>(n)].projectives.summands)
    if (s.vertex == lambda && s.shift == n) ++count;
  return count;
}

namespace {

std::vector<int> m_set(int n) {
  std::vector<int> out;
  for (int m = 2 * n; m >= -2 * n; m -= 4) out.push_back(m);
  return out;  // empty when n < 0
}

}  // namespace

int ext_formula(Weight mu, Weight lambda, int n) {
  if (n < 0) return 0;
  if (n == 0) return lambda == mu ? 1 : 0;
  const int a = mu.a;
  if (a >= 1) {
    for (int m : m_set(n))
      if (m > 2 * (n - a - 1) && lambda == mu + Weight{m, n}) return 1;
    for (int m : m_set(n - 1))
      if (m < -2 * (n - a - 2) && lambda == dual(mu) + Weight{m, n - 1}) return 1;
    for (int m : m_set(n - 2))
      if (m > 2 * (n - a - 3) && lambda == mu + Weight{m, n - 2}) return 1;
    return 0;
  }
  for (int m : m_set(n))
    if (m < 1 - a && lambda == mu + Weight{m, n}) return 1;
  for (int m : m_set(n - 1))
    if (m > 2 * (n + a) && lambda == dual(mu) + Weight{m, n - 1}) return 1;
  return 0;
}

std::vector<Weight> ext_formula_support(Weight mu, int n) {
  std::vector<Weight> out;
  auto push_ok = [&](Weight w) {
    if (ext_formula(mu, w, n) == 1 && std::find(out.begin(), out.end(), w) == out.end())
      out.push_back(w);
  };
  if (n == 0) {
    out.push_back(mu);
    return out;
  }
  for (int m : m_set(n)) push_ok(mu + Weight{m, n});
  for (int m : m_set(n - 1)) push_ok(dual(mu) + Weight{m, n - 1});
  for (int m : m_set(n - 2)) push_ok(mu + Weight{m, n - 2});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ExtEntry> ext_agreement(const QuiverAlgebra& A, const Resolution& res, int N) {
  (void)A;
  std::vector<ExtEntry> out;
  for (int n = 0; n <= N && n < static_cast<int>(res.steps.size()); ++n) {
    std::set<Weight> support;
    for (const Summand& s : res.steps[static_cast<std::size_t>(n)].projectives.summands)
      support.insert(s.vertex);
    for (Weight w : ext_formula_support(res.mu, n)) support.insert(w);
    for (Weight lambda : support)
      out.push_back({lambda, n, ext_dims(res, lambda, n), ext_formula(res.mu, lambda, n)});
  }
  return out;
}

}  // namespace peodd
