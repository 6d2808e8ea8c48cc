#include "scld/lp.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "scld/count.hpp"

namespace scld {

namespace {

// --- generic bounded simplex -------------------------------------------------
//
// maximize c.x subject to A x <= b, x >= 0 with b >= 0, so the slack basis is
// feasible and no phase 1 is needed. Bland's rule throughout. The tableau
// body and costs live in the scalar type; the right-hand side (and thus the
// objective) lives in the value type, which for the exact mode is a LogValue.

struct ExactOps {
  using Scalar = Rational;
  using Value = LogValue;
  static int ssign(const Scalar& s) { return sgn(s); }
  static int vsign(const Value& v) { return v.sign(); }
  static void v_sub_scaled(Value& v, const Scalar& s, const Value& w) {
    v.add_scaled(-s, w);
  }
  static Value v_scaled(const Value& v, const Scalar& s) {
    Value out = v;
    out *= s;
    return out;
  }
  static constexpr int max_iterations = 100000;
};

struct FloatOps {
  using Scalar = double;
  using Value = double;
  static constexpr double eps = 1e-12;
  static int ssign(double s) { return s > eps ? 1 : (s < -eps ? -1 : 0); }
  static int vsign(double v) { return v > eps ? 1 : (v < -eps ? -1 : 0); }
  static void v_sub_scaled(double& v, double s, double w) { v -= s * w; }
  static double v_scaled(double v, double s) { return v * s; }
  static constexpr int max_iterations = 20000;
};

template <class Ops>
struct Simplex {
  using Scalar = typename Ops::Scalar;
  using Value = typename Ops::Value;

  int m, n;  // constraints, variables
  std::vector<std::vector<Scalar>> body;  // m x (n + m)
  std::vector<Value> rhs;                 // m
  std::vector<Scalar> zrow;               // n + m reduced costs
  std::vector<int> basis;                 // column basic in each row

  Simplex(const std::vector<std::vector<Scalar>>& A, std::vector<Value> b,
          const std::vector<Scalar>& c)
      : m(static_cast<int>(b.size())), n(static_cast<int>(c.size())),
        rhs(std::move(b)) {
    body.assign(m, std::vector<Scalar>(n + m, Scalar(0)));
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < n; ++j) body[i][j] = A[i][j];
      body[i][n + i] = Scalar(1);
    }
    zrow.assign(n + m, Scalar(0));
    for (int j = 0; j < n; ++j) zrow[j] = -c[j];
    basis.resize(m);
    std::iota(basis.begin(), basis.end(), n);
  }

  bool solve() {
    for (int iter = 0; iter < Ops::max_iterations; ++iter) {
      // Bland: entering column = lowest index with negative reduced cost.
      int enter = -1;
      for (int j = 0; j < n + m; ++j) {
        if (Ops::ssign(zrow[j]) < 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;  // optimal

      // Ratio test; ties by lowest basis index (Bland).
      int leave = -1;
      for (int i = 0; i < m; ++i) {
        if (Ops::ssign(body[i][enter]) <= 0) continue;
        if (leave < 0) {
          leave = i;
          continue;
        }
        // rhs[i]/a_i < rhs[leave]/a_leave ?
        Value lhs = Ops::v_scaled(rhs[i], body[leave][enter]);
        Ops::v_sub_scaled(lhs, body[i][enter], rhs[leave]);
        int c = Ops::vsign(lhs);
        if (c < 0 || (c == 0 && basis[i] < basis[leave])) leave = i;
      }
      if (leave < 0) return false;  // unbounded; impossible for box-bounded x

      pivot(leave, enter);
    }
    return false;
  }

  void pivot(int r, int jc) {
    Scalar piv = body[r][jc];
    for (auto& e : body[r]) e /= piv;
    {
      Value v = rhs[r];
      // rhs[r] /= piv
      rhs[r] = Ops::v_scaled(v, Scalar(1) / piv);
    }
    for (int i = 0; i < m; ++i) {
      if (i == r) continue;
      Scalar f = body[i][jc];
      if (Ops::ssign(f) == 0) continue;
      for (int j = 0; j < n + m; ++j) body[i][j] -= f * body[r][j];
      Ops::v_sub_scaled(rhs[i], f, rhs[r]);
    }
    Scalar f = zrow[jc];
    if (Ops::ssign(f) != 0)
      for (int j = 0; j < n + m; ++j) zrow[j] -= f * body[r][j];
    basis[r] = jc;
  }

  Value variable_value(int j) const {
    for (int i = 0; i < m; ++i)
      if (basis[i] == j) return rhs[i];
    return Value{};
  }
};

struct ConstraintLayout {
  // row index of the vertex cap for each vertex, then per-dimension faces
  std::vector<int> vertex_row;
  std::vector<std::vector<int>> face_row;  // [dim-1][face index]
  int rows = 0;
};

template <class Scalar>
void build_matrix(const SimplicialComplex& G, std::vector<std::vector<Scalar>>& A,
                  ConstraintLayout& layout) {
  const int nv = G.vertex_count();
  const int k = G.dimension();
  layout.vertex_row.resize(nv);
  layout.face_row.assign(std::max(k, 0), {});
  int rows = 0;
  for (int v = 0; v < nv; ++v) layout.vertex_row[v] = rows++;
  for (int d = 1; d <= k; ++d) {
    layout.face_row[d - 1].resize(G.faces(d).size());
    for (std::size_t f = 0; f < G.faces(d).size(); ++f)
      layout.face_row[d - 1][f] = rows++;
  }
  layout.rows = rows;

  A.assign(rows, std::vector<Scalar>(nv, Scalar(0)));
  for (int v = 0; v < nv; ++v) A[layout.vertex_row[v]][v] = Scalar(1);
  for (int d = 1; d <= k; ++d)
    for (std::size_t f = 0; f < G.faces(d).size(); ++f)
      for (std::int32_t v : G.faces(d)[f]) A[layout.face_row[d - 1][f]][v] = Scalar(1);
}

}  // namespace

std::vector<LogValue> log_bounds_of_integers(const std::vector<std::int64_t>& bounds) {
  std::vector<LogValue> out;
  out.reserve(bounds.size());
  for (std::int64_t m : bounds) {
    if (m < 1) fail(errc::invalid_range, "bounds must be >= 1");
    out.push_back(LogValue::log_of_integer(BigInt(static_cast<long>(m))));
  }
  return out;
}

std::vector<LogValue> log_bounds_of_exponents(std::uint64_t base,
                                              const std::vector<Rational>& beta) {
  if (base < 1) fail(errc::invalid_range, "exponent base must be >= 1");
  LogValue lb = LogValue::log_of_integer(BigInt(static_cast<unsigned long>(base)));
  std::vector<LogValue> out;
  out.reserve(beta.size());
  for (const Rational& b : beta) {
    LogValue v = lb;
    v *= b;
    if (v.sign() < 0) fail(errc::invalid_range, "bounds must be >= 1");
    out.push_back(std::move(v));
  }
  return out;
}

LPSolution solve_gamma_exact(const SimplicialComplex& pattern,
                             const std::vector<LogValue>& log_bounds) {
  const int k = pattern.dimension();
  if (pattern.vertex_count() == 0) fail(errc::invalid_argument, "empty pattern");
  if (static_cast<int>(log_bounds.size()) != k + 1)
    fail(errc::invalid_argument, "need one bound per dimension 0..dim");
  for (const LogValue& b : log_bounds)
    if (b.sign() < 0) fail(errc::invalid_range, "bounds must be >= 1");

  std::vector<std::vector<Rational>> A;
  ConstraintLayout layout;
  build_matrix<Rational>(pattern, A, layout);

  std::vector<LogValue> b(layout.rows);
  const int nv = pattern.vertex_count();
  for (int v = 0; v < nv; ++v) b[layout.vertex_row[v]] = log_bounds[0];
  for (int d = 1; d <= k; ++d)
    for (std::size_t f = 0; f < pattern.faces(d).size(); ++f)
      b[layout.face_row[d - 1][f]] = log_bounds[d];

  std::vector<Rational> c(nv, Rational(1));
  Simplex<ExactOps> simplex(A, std::move(b), c);
  if (!simplex.solve()) fail(errc::internal, "exact simplex did not terminate");

  LPSolution sol;
  sol.mode = LPMode::exact;
  sol.primal_exact.resize(nv);
  sol.primal.resize(nv);
  for (int v = 0; v < nv; ++v) {
    sol.primal_exact[v] = simplex.variable_value(v);
    sol.primal[v] = sol.primal_exact[v].to_double();
    sol.gamma_exact += sol.primal_exact[v];
  }
  sol.gamma = sol.gamma_exact.to_double();

  sol.dual_vertex_exact.resize(nv);
  sol.dual_vertex.resize(nv);
  for (int v = 0; v < nv; ++v) {
    sol.dual_vertex_exact[v] = simplex.zrow[nv + layout.vertex_row[v]];
    sol.dual_vertex[v] = to_double(sol.dual_vertex_exact[v]);
  }
  sol.dual_face_exact.resize(std::max(k, 0));
  sol.dual_face.resize(std::max(k, 0));
  for (int d = 1; d <= k; ++d) {
    auto& exact = sol.dual_face_exact[d - 1];
    auto& flt = sol.dual_face[d - 1];
    exact.resize(pattern.faces(d).size());
    flt.resize(pattern.faces(d).size());
    for (std::size_t f = 0; f < pattern.faces(d).size(); ++f) {
      exact[f] = simplex.zrow[nv + layout.face_row[d - 1][f]];
      flt[f] = to_double(exact[f]);
    }
  }
  sol.duality_gap = 0.0;
  return sol;
}

LPSolution solve_gamma(const SimplicialComplex& pattern,
                       const std::vector<double>& bounds) {
  const int k = pattern.dimension();
  if (pattern.vertex_count() == 0) fail(errc::invalid_argument, "empty pattern");
  if (static_cast<int>(bounds.size()) != k + 1)
    fail(errc::invalid_argument, "need one bound per dimension 0..dim");
  for (double m : bounds)
    if (!(m >= 1.0)) fail(errc::invalid_range, "bounds must be >= 1");

  std::vector<std::vector<double>> A;
  ConstraintLayout layout;
  build_matrix<double>(pattern, A, layout);

  std::vector<double> b(layout.rows);
  const int nv = pattern.vertex_count();
  for (int v = 0; v < nv; ++v) b[layout.vertex_row[v]] = std::log(bounds[0]);
  for (int d = 1; d <= k; ++d)
    for (std::size_t f = 0; f < pattern.faces(d).size(); ++f)
      b[layout.face_row[d - 1][f]] = std::log(bounds[d]);

  std::vector<double> c(nv, 1.0);
  Simplex<FloatOps> simplex(A, std::move(b), c);
  if (!simplex.solve())
    fail(errc::nonconvergent_float, "float simplex hit the iteration cap");

  LPSolution sol;
  sol.mode = LPMode::floating;
  sol.primal.resize(nv);
  sol.gamma = 0.0;
  for (int v = 0; v < nv; ++v) {
    sol.primal[v] = simplex.variable_value(v);
    sol.gamma += sol.primal[v];
  }
  sol.dual_vertex.resize(nv);
  double dual_obj = 0.0;
  for (int v = 0; v < nv; ++v) {
    sol.dual_vertex[v] = simplex.zrow[nv + layout.vertex_row[v]];
    dual_obj += sol.dual_vertex[v] * std::log(bounds[0]);
  }
  sol.dual_face.resize(std::max(k, 0));
  for (int d = 1; d <= k; ++d) {
    auto& flt = sol.dual_face[d - 1];
    flt.resize(pattern.faces(d).size());
    for (std::size_t f = 0; f < pattern.faces(d).size(); ++f) {
      flt[f] = simplex.zrow[nv + layout.face_row[d - 1][f]];
      dual_obj += flt[f] * std::log(bounds[d]);
    }
  }
  sol.duality_gap = std::abs(dual_obj - sol.gamma);
  return sol;
}

// --- proof-explicit sandwich --------------------------------------------------

Rational witness_constant(const SimplicialComplex& pattern,
                          const std::vector<std::int64_t>& bounds) {
  const auto s = pattern.simplex_counts();
  const int k = pattern.dimension();
  if (static_cast<int>(bounds.size()) != k + 1)
    fail(errc::invalid_argument, "need one bound per dimension 0..dim");
  Rational c = 1;
  for (int j = 0; j <= k; ++j) {
    std::int64_t sj = j < static_cast<int>(s.size()) ? s[j] : 0;
    if (sj == 0) continue;
    if (sj > bounds[j]) fail(errc::invalid_range, "need s_j(G) <= m_j");
    if (bounds[j] == sj) {
      c = std::min(c, Rational(1, static_cast<long>(sj)));
    } else if (j == 0) {
      c = std::min(c, Rational(1, static_cast<long>(sj * (1 + sj))));
    } else {
      // largest verified dyadic fraction with (1+c)^(j+1) <= 1 + 1/(s_j(1+s_j))
      Rational r(1, static_cast<long>(sj * (1 + sj)));
      Rational cand = r / Rational(j + 1);
      auto ok = [&](const Rational& x) {
        Rational base = 1 + x;
        Rational pow = 1;
        for (int t = 0; t < j + 1; ++t) pow *= base;
        return pow <= 1 + r;
      };
      while (!ok(cand)) cand /= 2;
      c = std::min(c, cand);
    }
  }
  return c;
}

SandwichBounds n_hat_bounds(const SimplicialComplex& pattern,
                            const std::vector<std::int64_t>& bounds, LPMode mode) {
  const auto s = pattern.simplex_counts();
  const int k = pattern.dimension();
  if (static_cast<int>(bounds.size()) != k + 1)
    fail(errc::invalid_argument, "need one bound per dimension 0..dim");
  SandwichBounds out;
  for (int j = 0; j <= k; ++j)
    if ((j < static_cast<int>(s.size()) ? s[j] : 0) > bounds[j]) return out;  // (0,0)

  double gamma;
  if (mode == LPMode::exact) {
    gamma = solve_gamma_exact(pattern, log_bounds_of_integers(bounds)).gamma;
  } else {
    std::vector<double> fb(bounds.begin(), bounds.end());
    gamma = solve_gamma(pattern, fb).gamma;
  }
  out.gamma = gamma;
  const double s0 = static_cast<double>(s[0]);
  out.upper = std::exp(gamma + s0 * std::log(s0));
  out.witness_c = witness_constant(pattern, bounds);
  double aut = static_cast<double>(pattern.automorphism_count());
  out.lower = std::exp(gamma + s0 * std::log(to_double(out.witness_c))) / aut;
  return out;
}

SimplicialComplex blowup_witness(const SimplicialComplex& pattern,
                                 const LPSolution& solution, const Rational& c,
                                 const std::vector<std::int64_t>& bounds) {
  const int k = pattern.dimension();
  const int nv = pattern.vertex_count();
  if (c <= 0) fail(errc::invalid_argument, "blow-up constant must be positive");
  if (static_cast<int>(bounds.size()) != k + 1)
    fail(errc::invalid_argument, "need one bound per dimension 0..dim");

  // Block sizes ceil(c e^{x_v}), exact when the solution is exact.
  std::vector<std::int64_t> block(nv, 1);
  if (solution.mode == LPMode::exact) {
    if (static_cast<int>(solution.primal_exact.size()) != nv)
      fail(errc::invalid_argument, "solution does not match pattern");
    LogValue log_c = LogValue::log_of_rational(c);
    for (int v = 0; v < nv; ++v) {
      LogValue lv = log_c;
      lv += solution.primal_exact[v];
      BigInt size = ceil_exp(lv);
      if (!size.fits_slong_p()) fail(errc::invalid_argument, "block size overflow");
      block[v] = std::max<std::int64_t>(1, mpz_get_si(size.get_mpz_t()));
    }
  } else {
    if (static_cast<int>(solution.primal.size()) != nv)
      fail(errc::invalid_argument, "solution does not match pattern");
    for (int v = 0; v < nv; ++v) {
      double raw = to_double(c) * std::exp(solution.primal[v]);
      block[v] = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(raw - 1e-9)));
    }
  }

  // Validate s_j(F) <= m_j before materializing.
  std::int64_t total = 0;
  for (int v = 0; v < nv; ++v) total += block[v];
  if (total > bounds[0])
    fail(errc::witness_bound_violated, "dimension 0: " + std::to_string(total) +
                                           " vertices > m_0 = " + std::to_string(bounds[0]));
  for (int d = 1; d <= k; ++d) {
    BigInt count = 0;
    for (const Face& f : pattern.faces(d)) {
      BigInt prod = 1;
      for (std::int32_t v : f) prod *= BigInt(static_cast<long>(block[v]));
      count += prod;
    }
    if (count > BigInt(static_cast<long>(bounds[d])))
      fail(errc::witness_bound_violated,
           "dimension " + std::to_string(d) + ": " + count.get_str() +
               " faces > m_" + std::to_string(d));
  }

  std::vector<std::int64_t> offset(nv, 0);
  for (int v = 1; v < nv; ++v) offset[v] = offset[v - 1] + block[v - 1];

  std::vector<std::vector<Face>> faces(1);
  for (std::int64_t w = 0; w < total; ++w)
    faces[0].push_back({static_cast<std::int32_t>(w)});
  for (int d = 1; d <= k; ++d) {
    std::vector<Face> level;
    Face pick(d + 1);
    for (const Face& f : pattern.faces(d)) {
      std::function<void(int)> rec = [&](int t) {
        if (t == d + 1) {
          Face g = pick;
          std::sort(g.begin(), g.end());
          level.push_back(std::move(g));
          return;
        }
        std::int32_t v = f[t];
        for (std::int64_t i = 0; i < block[v]; ++i) {
          pick[t] = static_cast<std::int32_t>(offset[v] + i);
          rec(t + 1);
        }
      };
      rec(0);
    }
    std::sort(level.begin(), level.end());
    faces.push_back(std::move(level));
  }
  return SimplicialComplex::from_closed_faces(static_cast<std::int32_t>(total),
                                              std::move(faces));
}

// --- brute-force oracle -------------------------------------------------------

std::int64_t brute_force_N(const SimplicialComplex& pattern,
                           const std::vector<std::int64_t>& bounds) {
  const int k = pattern.dimension();
  if (static_cast<int>(bounds.size()) != k + 1)
    fail(errc::invalid_argument, "need one bound per dimension 0..dim");
  for (std::int64_t m : bounds)
    if (m < 0) fail(errc::invalid_argument, "bounds must be >= 0");
  if (bounds[0] > 6 || k > 2)
    fail(errc::oracle_too_large, "oracle guard: m_0 <= 6 and dim <= 2");

  const auto s = pattern.simplex_counts();
  for (int j = 0; j <= k; ++j)
    if ((j < static_cast<int>(s.size()) ? s[j] : 0) > bounds[j]) return 0;

  const std::int32_t v = static_cast<std::int32_t>(bounds[0]);
  if (v == 0) return 0;
  if (k <= 0)
    return mpz_get_si(binomial(v, s[0]).get_mpz_t());  // isolated-vertex pattern

  // all edges on [v]
  std::vector<std::pair<std::int32_t, std::int32_t>> edges;
  for (std::int32_t a = 0; a < v; ++a)
    for (std::int32_t b = a + 1; b < v; ++b) edges.emplace_back(a, b);
  const int ne = static_cast<int>(edges.size());
  std::vector<std::vector<std::int32_t>> edge_index(v, std::vector<std::int32_t>(v, -1));
  for (int e = 0; e < ne; ++e) {
    edge_index[edges[e].first][edges[e].second] = e;
    edge_index[edges[e].second][edges[e].first] = e;
  }

  // vertex permutations acting on edge masks, for canonical rejection
  std::vector<std::vector<int>> perm_edge;
  {
    std::vector<std::int32_t> p(v);
    std::iota(p.begin(), p.end(), 0);
    do {
      std::vector<int> map(ne);
      for (int e = 0; e < ne; ++e)
        map[e] = edge_index[p[edges[e].first]][p[edges[e].second]];
      perm_edge.push_back(std::move(map));
    } while (std::next_permutation(p.begin(), p.end()));
  }
  auto canonical_mask = [&](std::uint32_t mask) {
    for (const auto& map : perm_edge) {
      std::uint32_t img = 0;
      for (int e = 0; e < ne; ++e)
        if (mask & (1u << e)) img |= 1u << map[e];
      if (img < mask) return false;
    }
    return true;
  };

  const int e_target = static_cast<int>(std::min<std::int64_t>(bounds[1], ne));
  std::int64_t best = 0;

  auto evaluate = [&](std::uint32_t edge_mask, const std::vector<Face>& triangles) {
    std::vector<Face> facets;
    for (int e = 0; e < ne; ++e)
      if (edge_mask & (1u << e)) facets.push_back({edges[e].first, edges[e].second});
    for (const Face& t : triangles) facets.push_back(t);
    SimplicialComplex F = SimplicialComplex::from_facets(v, facets);
    best = std::max(best, static_cast<std::int64_t>(count_unordered(F, pattern)));
  };

  // iterate edge subsets of exactly e_target edges, canonical under relabeling
  std::vector<int> chosen(e_target);
  std::function<void(int, int)> pick_edges = [&](int start, int depth) {
    if (depth == e_target) {
      std::uint32_t mask = 0;
      for (int e : chosen) mask |= 1u << e;
      if (!canonical_mask(mask)) return;

      if (k == 1) {
        evaluate(mask, {});
        return;
      }
      // triangles available inside this edge set
      std::vector<Face> tris;
      for (std::int32_t a = 0; a < v; ++a)
        for (std::int32_t b = a + 1; b < v; ++b)
          for (std::int32_t cvx = b + 1; cvx < v; ++cvx)
            if ((mask & (1u << edge_index[a][b])) && (mask & (1u << edge_index[a][cvx])) &&
                (mask & (1u << edge_index[b][cvx])))
              tris.push_back({a, b, cvx});
      const int t_target = static_cast<int>(
          std::min<std::int64_t>(bounds[2], static_cast<std::int64_t>(tris.size())));
      std::vector<Face> pick_tris;
      std::function<void(int, int)> pick_t = [&](int tstart, int tdepth) {
        if (tdepth == t_target) {
          evaluate(mask, pick_tris);
          return;
        }
        for (int t = tstart; t <= static_cast<int>(tris.size()) - (t_target - tdepth); ++t) {
          pick_tris.push_back(tris[t]);
          pick_t(t + 1, tdepth + 1);
          pick_tris.pop_back();
        }
      };
      pick_t(0, 0);
      return;
    }
    for (int e = start; e <= ne - (e_target - depth); ++e) {
      chosen[depth] = e;
      pick_edges(e + 1, depth + 1);
    }
  };
  pick_edges(0, 0);
  return best;
}

// --- comparison-lemma gap -------------------------------------------------------

LemmaGap compare_lemma_gap(const SimplicialComplex& G, const SimplicialComplex& H,
                           std::int64_t m0, std::int64_t m1, std::int64_t m2) {
  const int k = G.dimension();
  if (H.dimension() != k || H.count(k) <= 0)
    fail(errc::invalid_argument, "H must be k-dimensional with s_k(H) > 0");
  if (count_ordered(G, H) == 0)
    fail(errc::invalid_subcomplex, "H does not embed in G");
  const auto sg = G.simplex_counts();
  if (m1 <= 0 || m1 > m2)
    fail(errc::invalid_range, "need 0 < m1 <= m2");
  // m2 <= m0^{k+1} / s_k(G)
  BigInt cap;
  mpz_ui_pow_ui(cap.get_mpz_t(), static_cast<unsigned long>(m0),
                static_cast<unsigned long>(k + 1));
  if (BigInt(static_cast<long>(m2)) * BigInt(static_cast<long>(sg[k])) > cap)
    fail(errc::invalid_range, "need m2 <= m0^{k+1}/s_k(G)");

  auto bounds_for = [&](std::int64_t mj) {
    std::vector<std::int64_t> b{m0};
    for (int i = 1; i <= k; ++i) b.push_back(mj * sg[i]);
    return log_bounds_of_integers(b);
  };
  LPSolution s1 = solve_gamma_exact(H, bounds_for(m1));
  LPSolution s2 = solve_gamma_exact(H, bounds_for(m2));

  LogValue gap = s2.gamma_exact;
  gap -= s1.gamma_exact;
  Rational m_ratio(static_cast<long>(m2), static_cast<long>(m1));
  m_ratio.canonicalize();
  LogValue ratio = LogValue::log_of_rational(m_ratio);
  ratio *= Rational(1, k + 1);
  gap -= ratio;

  LemmaGap out;
  out.gamma1 = s1.gamma;
  out.gamma2 = s2.gamma;
  out.gap = gap.to_double();
  out.sign = gap.sign();
  return out;
}

}  // namespace scld
