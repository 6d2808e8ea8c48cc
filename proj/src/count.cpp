#include "scld/count.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>

namespace scld {

namespace {

// Backtracking over pattern-vertex images, most-constrained vertex first,
// host candidates filtered by per-dimension degree dominance.
struct EmbedCount {
  const SimplicialComplex& host;
  const SimplicialComplex& pattern;
  std::vector<std::int32_t> order;                    // pattern vertices
  std::vector<std::vector<const Face*>> closing;      // faces completed at step t
  std::vector<std::vector<std::int32_t>> host_prof;
  std::vector<std::vector<std::int32_t>> pat_prof;
  std::vector<std::int32_t> image;
  std::vector<bool> used;
  std::uint64_t found = 0;

  EmbedCount(const SimplicialComplex& h, const SimplicialComplex& p)
      : host(h), pattern(p) {
    const std::int32_t pn = pattern.vertex_count();
    pat_prof = pattern.degree_profiles();
    host_prof = host.degree_profiles();
    order.resize(pn);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::int32_t a, std::int32_t b) {
      std::int64_t da = std::accumulate(pat_prof[a].begin(), pat_prof[a].end(), std::int64_t{0});
      std::int64_t db = std::accumulate(pat_prof[b].begin(), pat_prof[b].end(), std::int64_t{0});
      return da > db;
    });
    std::vector<std::int32_t> pos(pn);
    for (std::int32_t t = 0; t < pn; ++t) pos[order[t]] = t;
    closing.resize(pn);
    for (int d = 1; d <= pattern.dimension(); ++d) {
      for (const Face& f : pattern.faces(d)) {
        std::int32_t last = 0;
        for (std::int32_t v : f) last = std::max(last, pos[v]);
        closing[last].push_back(&f);
      }
    }
    image.assign(pn, -1);
    used.assign(host.vertex_count(), false);
  }

  bool admissible(std::int32_t pv, std::int32_t hv) const {
    const auto& pp = pat_prof[pv];
    const auto& hp = host_prof[hv];
    for (std::size_t d = 0; d < pp.size(); ++d) {
      if (pp[d] == 0) continue;
      if (d >= hp.size() || hp[d] < pp[d]) return false;
    }
    return true;
  }

  void run(std::int32_t t) {
    if (t == static_cast<std::int32_t>(order.size())) {
      ++found;
      return;
    }
    std::int32_t pv = order[t];
    Face mapped;
    for (std::int32_t hv = 0; hv < host.vertex_count(); ++hv) {
      if (used[hv] || !admissible(pv, hv)) continue;
      image[pv] = hv;
      used[hv] = true;
      bool ok = true;
      for (const Face* f : closing[t]) {
        mapped.clear();
        for (std::int32_t w : *f) mapped.push_back(image[w]);
        std::sort(mapped.begin(), mapped.end());
        if (!host.contains(mapped)) {
          ok = false;
          break;
        }
      }
      if (ok) run(t + 1);
      used[hv] = false;
      image[pv] = -1;
    }
  }
};

}  // namespace

std::uint64_t count_ordered(const SimplicialComplex& host,
                            const SimplicialComplex& pattern) {
  if (pattern.vertex_count() == 0) return 1;
  if (pattern.vertex_count() > host.vertex_count()) return 0;
  if (pattern.dimension() > host.dimension()) return 0;
  EmbedCount search(host, pattern);
  search.run(0);
  return search.found;
}

std::uint64_t count_unordered(const SimplicialComplex& host,
                              const SimplicialComplex& pattern) {
  std::uint64_t ordered = count_ordered(host, pattern);
  std::uint64_t aut = pattern.automorphism_count();
  if (ordered % aut != 0) fail(errc::internal, "ordered count not divisible by #Aut");
  return ordered / aut;
}

// --- means and Psi ----------------------------------------------------------

namespace {

LogQuantity assemble(const ModelParams& params, const SimplicialComplex& pattern,
                     bool psi_form) {
  const auto s = pattern.simplex_counts();
  const int dim = pattern.dimension();
  if (dim > params.k_max)
    fail(errc::invalid_argument, "pattern dimension exceeds k_max");
  const std::int64_t s0 = s.empty() ? 0 : s[0];

  LogQuantity out;
  // vertex factor: n^{s0} or (n)_{s0}
  BigInt vertex_factor =
      psi_form ? [&] {
        BigInt b;
        mpz_ui_pow_ui(b.get_mpz_t(), static_cast<unsigned long>(params.n),
                      static_cast<unsigned long>(s0));
        return b;
      }()
               : falling_factorial(params.n, s0);
  if (vertex_factor == 0) {
    out.zero = true;
    out.log_value = -std::numeric_limits<double>::infinity();
    return out;
  }

  if (params.exponent_form()) {
    Rational n_exp = 0;
    for (int i = 1; i <= dim; ++i) {
      if (i >= static_cast<int>(s.size()) || s[i] == 0) continue;
      Alpha a = params.alpha(i);
      if (a.infinite) {
        if (params.n >= 2) {
          out.zero = true;
          out.log_value = -std::numeric_limits<double>::infinity();
          return out;
        }
        continue;  // n <= 1: p_i = 1
      }
      n_exp -= Rational(s[i]) * a.value;
    }
    LogValue lg;
    if (psi_form)
      n_exp += s0;  // keep everything as one multiple of ln n
    else
      lg = LogValue::log_of_integer(vertex_factor);
    if (params.n >= 2 && n_exp != 0)
      lg.add_scaled(n_exp, LogValue::log_of_integer(BigInt(static_cast<unsigned long>(params.n))));
    out.exact_log = lg;
    out.log_value = lg.to_double();
    out.value = std::exp(out.log_value);
    return out;
  }

  // log-space with Kahan compensation; doubles are dyadic rationals, so the
  // exact product is available too
  double log_val = 0.0, comp = 0.0;
  {
    signed long e2 = 0;
    double mant = mpz_get_d_2exp(&e2, vertex_factor.get_mpz_t());
    log_val = std::log(mant) + static_cast<double>(e2) * std::log(2.0);
  }
  Rational exact{vertex_factor};
  double direct = vertex_factor.get_d();
  for (int i = 1; i <= dim; ++i) {
    if (i >= static_cast<int>(s.size()) || s[i] == 0) continue;
    double p = params.prob(i);
    if (p <= 0.0) {
      out.zero = true;
      out.log_value = -std::numeric_limits<double>::infinity();
      return out;
    }
    double term = static_cast<double>(s[i]) * std::log(p) - comp;
    double next = log_val + term;
    comp = (next - log_val) - term;
    log_val = next;
    direct *= std::pow(p, static_cast<double>(s[i]));
    Rational pq(p);  // exact dyadic value of the double
    for (std::int64_t t = 0; t < s[i]; ++t) exact *= pq;
  }
  out.log_value = log_val;
  out.exact_value = exact;
  // the direct product is exact in the common all-or-nothing cases; fall
  // back to the log form when it over/underflows
  out.value = std::isfinite(direct) && direct > 0 ? direct : std::exp(log_val);
  return out;
}

}  // namespace

LogQuantity expected_ordered(const ModelParams& params,
                             const SimplicialComplex& pattern) {
  return assemble(params, pattern, /*psi_form=*/false);
}

LogQuantity expected_unordered(const ModelParams& params,
                               const SimplicialComplex& pattern) {
  LogQuantity q = expected_ordered(params, pattern);
  if (q.zero) return q;
  std::uint64_t aut = pattern.automorphism_count();
  q.value /= static_cast<double>(aut);
  q.log_value -= std::log(static_cast<double>(aut));
  if (q.exact_log) *q.exact_log -= LogValue::log_of_integer(aut);
  if (q.exact_value) *q.exact_value /= Rational(static_cast<unsigned long>(aut));
  return q;
}

LogQuantity psi(const ModelParams& params, const SimplicialComplex& pattern) {
  return assemble(params, pattern, /*psi_form=*/true);
}

// --- subcomplex enumeration --------------------------------------------------

namespace {

SimplicialComplex restrict_to_support(const std::vector<const Face*>& selection,
                                      int extra_isolated) {
  std::vector<std::int32_t> verts;
  for (const Face* f : selection)
    for (std::int32_t v : *f) verts.push_back(v);
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  std::map<std::int32_t, std::int32_t> compact;
  for (std::size_t i = 0; i < verts.size(); ++i) compact[verts[i]] = static_cast<std::int32_t>(i);

  std::vector<std::vector<Face>> by_dim(1);
  std::int32_t n = static_cast<std::int32_t>(verts.size()) + extra_isolated;
  for (std::int32_t v = 0; v < n; ++v) by_dim[0].push_back({v});
  for (const Face* f : selection) {
    Face g;
    g.reserve(f->size());
    for (std::int32_t v : *f) g.push_back(compact[v]);
    int d = static_cast<int>(g.size()) - 1;
    if (static_cast<int>(by_dim.size()) <= d) by_dim.resize(d + 1);
    by_dim[d].push_back(std::move(g));
  }
  for (auto& level : by_dim) std::sort(level.begin(), level.end());
  return SimplicialComplex::from_closed_faces(n, std::move(by_dim));
}

std::string invariant_key(const SimplicialComplex& K) {
  std::ostringstream os;
  for (std::int64_t s : K.simplex_counts()) os << s << ',';
  os << '|';
  auto prof = K.degree_profiles();
  std::sort(prof.begin(), prof.end());
  for (const auto& p : prof) {
    for (std::int32_t d : p) os << d << '.';
    os << ';';
  }
  return os.str();
}

}  // namespace

std::vector<SimplicialComplex> enumerate_subcomplexes(
    const SimplicialComplex& pattern, const SubcomplexOptions& opts) {
  if (pattern.vertex_count() > opts.max_vertices_guard)
    fail(errc::pattern_too_large,
         "pattern has " + std::to_string(pattern.vertex_count()) + " vertices (guard " +
             std::to_string(opts.max_vertices_guard) + ")");

  // Faces of positive dimension in ascending dimension order, with the
  // indices of their codimension-1 subfaces (dimension >= 1 only).
  std::vector<const Face*> all;
  for (int d = 1; d <= pattern.dimension(); ++d)
    for (const Face& f : pattern.faces(d)) all.push_back(&f);
  std::map<Face, std::size_t> index_of;
  for (std::size_t i = 0; i < all.size(); ++i) index_of[*all[i]] = i;
  std::vector<std::vector<std::size_t>> boundary(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    const Face& f = *all[i];
    if (f.size() <= 2) continue;
    for (std::size_t skip = 0; skip < f.size(); ++skip) {
      Face sub;
      for (std::size_t t = 0; t < f.size(); ++t)
        if (t != skip) sub.push_back(f[t]);
      boundary[i].push_back(index_of.at(sub));
    }
  }

  constexpr std::size_t kFamilyCap = 2'000'000;
  std::vector<std::vector<const Face*>> families;
  std::vector<bool> chosen(all.size(), false);
  std::vector<const Face*> current;
  std::function<void(std::size_t)> dfs = [&](std::size_t i) {
    if (i == all.size()) {
      if (!current.empty()) {
        if (families.size() >= kFamilyCap)
          fail(errc::pattern_too_large, "too many subcomplexes to enumerate");
        families.push_back(current);
      }
      return;
    }
    dfs(i + 1);  // exclude face i
    bool closed = true;
    for (std::size_t b : boundary[i])
      if (!chosen[b]) {
        closed = false;
        break;
      }
    if (closed) {
      chosen[i] = true;
      current.push_back(all[i]);
      dfs(i + 1);
      current.pop_back();
      chosen[i] = false;
    }
  };
  dfs(0);

  const std::int32_t n_pattern = pattern.vertex_count();
  std::vector<SimplicialComplex> out;

  if (opts.labeled) {
    for (const auto& fam : families) {
      SimplicialComplex base = restrict_to_support(fam, 0);
      std::int32_t used = base.vertex_count();
      out.push_back(std::move(base));
      if (opts.include_isolated_vertices)
        for (std::int32_t e = 1; e <= n_pattern - used; ++e)
          out.push_back(restrict_to_support(fam, e));
    }
    return out;
  }

  std::map<std::string, std::vector<std::size_t>> buckets;  // invariant -> out idx
  for (const auto& fam : families) {
    SimplicialComplex base = restrict_to_support(fam, 0);
    std::int32_t used = base.vertex_count();
    std::int32_t max_extra =
        opts.include_isolated_vertices ? n_pattern - used : 0;
    for (std::int32_t e = 0; e <= max_extra; ++e) {
      SimplicialComplex K = e == 0 ? base : restrict_to_support(fam, e);
      std::string key = invariant_key(K);
      auto& bucket = buckets[key];
      bool dup = false;
      for (std::size_t idx : bucket)
        if (are_isomorphic(out[idx], K)) {
          dup = true;
          break;
        }
      if (!dup) {
        bucket.push_back(out.size());
        out.push_back(std::move(K));
      }
    }
  }
  return out;
}

}  // namespace scld
