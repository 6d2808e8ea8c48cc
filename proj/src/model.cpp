#include "scld/model.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

namespace scld {

ModelParams ModelParams::from_probs(std::int32_t n, std::vector<double> probs) {
  ModelParams p;
  p.n = n;
  p.k_max = static_cast<int>(probs.size());
  p.probs = std::move(probs);
  p.validate();
  return p;
}

ModelParams ModelParams::from_alphas(std::int32_t n, std::vector<Alpha> alphas,
                                     int k_max) {
  ModelParams p;
  p.n = n;
  p.k_max = k_max;
  p.alphas = std::move(alphas);
  p.validate();
  return p;
}

void ModelParams::validate() const {
  if (n < 0) fail(errc::invalid_argument, "vertex count must be >= 0");
  if (k_max < 1) fail(errc::invalid_argument, "k_max must be >= 1");
  if (!exponent_form()) {
    if (probs.empty()) fail(errc::invalid_argument, "no probabilities given");
    for (double p : probs)
      if (!(p >= 0.0 && p <= 1.0))
        fail(errc::invalid_argument, "probability outside [0,1]");
  } else {
    if (static_cast<int>(alphas.size()) > k_max)
      fail(errc::invalid_argument, "more alphas than k_max");
    for (const Alpha& a : alphas)
      if (!a.infinite && a.value < 0)
        fail(errc::invalid_argument, "alpha must be >= 0");
  }
}

double ModelParams::prob(int i) const {
  if (i < 1 || i > k_max) return 0.0;
  if (!exponent_form())
    return i <= static_cast<int>(probs.size()) ? probs[i - 1] : 0.0;
  Alpha a = alpha(i);
  if (a.infinite) return n >= 2 ? 0.0 : 1.0;
  if (a.value == 0) return 1.0;
  return std::exp(-to_double(a.value) * std::log(static_cast<double>(n)));
}

Alpha ModelParams::alpha(int i) const {
  if (i >= 1 && i <= static_cast<int>(alphas.size())) return alphas[i - 1];
  return Alpha::of(0);
}

// --- exponent diagnostics -------------------------------------------------

namespace {

// Sum of coeff_i * alpha_i with +inf propagation; nullopt = +inf.
std::optional<Rational> weighted_alpha_sum(
    const std::vector<Alpha>& alphas,
    const std::vector<std::pair<int, BigInt>>& terms) {
  Rational sum = 0;
  for (const auto& [idx, coeff] : terms) {
    if (coeff == 0) continue;
    Alpha a = idx >= 1 && idx <= static_cast<int>(alphas.size()) ? alphas[idx - 1]
                                                                 : Alpha::of(0);
    if (a.infinite) {
      if (a.value >= 0) return std::nullopt;
    }
    if (a.infinite) return std::nullopt;
    sum += Rational(coeff) * a.value;
  }
  return sum;
}

// S_j = sum_{i=1}^{j} C(j, i) alpha_i, the criticality sum.
std::optional<Rational> criticality_sum(const std::vector<Alpha>& alphas, int j) {
  std::vector<std::pair<int, BigInt>> terms;
  for (int i = 1; i <= j; ++i) terms.emplace_back(i, binomial(j, i));
  return weighted_alpha_sum(alphas, terms);
}

// -1 / 0 / +1 for value <=> 1, with nullopt meaning +inf.
int cmp_one(const std::optional<Rational>& value) {
  if (!value) return 1;
  if (*value < 1) return -1;
  if (*value > 1) return 1;
  return 0;
}

}  // namespace

std::optional<Rational> tau_exponent(const std::vector<Alpha>& alphas, int j) {
  std::vector<std::pair<int, BigInt>> terms;
  for (int i = 1; i <= j; ++i) terms.emplace_back(i, binomial(j + 1, i + 1));
  auto sum = weighted_alpha_sum(alphas, terms);
  if (!sum) return std::nullopt;  // some infinite alpha: tau = -inf
  return Rational(j + 1) - *sum;
}

CriticalProfile critical_profile(const std::vector<Alpha>& alphas, int k_max) {
  if (k_max < 1) fail(errc::invalid_argument, "k_max must be >= 1");
  CriticalProfile out;

  int q = 0;
  for (int i = 1; i <= static_cast<int>(alphas.size()); ++i) {
    if (alphas[i - 1].positive()) {
      q = i;
      break;
    }
  }
  if (q == 0) fail(errc::no_positive_exponent, "all alphas are zero");
  out.q = q;

  out.tau.reserve(k_max);
  for (int j = 1; j <= k_max; ++j) out.tau.push_back(tau_exponent(alphas, j));

  out.subcritical.assign(k_max, false);
  for (int k = 1; k <= k_max; ++k)
    out.subcritical[k - 1] = cmp_one(criticality_sum(alphas, k)) < 0 && q <= k;

  // Extra condition: for q < k and every k0 = q+1..k,
  //   (k-q)/(k+1) C(k+1,q+1) alpha_q + sum_{j=q+1}^{k0} C(k+1,j+1) alpha_j < k0 - q.
  out.extra_condition.assign(k_max, true);
  for (int k = 1; k <= k_max; ++k) {
    if (q >= k) continue;
    bool ok = true;
    for (int k0 = q + 1; k0 <= k && ok; ++k0) {
      std::vector<std::pair<int, BigInt>> terms;
      terms.emplace_back(q, binomial(k + 1, q + 1) * BigInt(k - q));
      auto head = weighted_alpha_sum(alphas, terms);
      std::vector<std::pair<int, BigInt>> tail_terms;
      for (int j = q + 1; j <= k0; ++j) tail_terms.emplace_back(j, binomial(k + 1, j + 1));
      auto tail = weighted_alpha_sum(alphas, tail_terms);
      if (!head || !tail) {
        ok = false;
        break;
      }
      Rational lhs = *head / Rational(k + 1) + *tail;
      ok = lhs < Rational(k0 - q);
    }
    out.extra_condition[k - 1] = ok;
  }

  // Critical dimension: S_k < 1 < S_{k+1}, q <= k, both strict.
  bool boundary_equality = false;
  for (int k = 1; k <= k_max; ++k) {
    if (q > k) continue;
    int lo = cmp_one(criticality_sum(alphas, k));
    int hi = cmp_one(criticality_sum(alphas, k + 1));
    if (lo < 0 && hi > 0) {
      out.k_star = k;
      break;
    }
    if (lo <= 0 && hi >= 0 && (lo == 0 || hi == 0)) boundary_equality = true;
  }
  out.degenerate_boundary = !out.k_star && boundary_equality;

  // Betti-tail condition at the critical dimension:
  //   sum_{i=q}^{k*+1} C(k*+1, i) alpha_i - 1 >=
  //   q (k*+2)! / ((q+1)! (k*+1-q)! (k*+1)) * alpha_q.
  if (out.k_star) {
    int ks = *out.k_star;
    std::vector<std::pair<int, BigInt>> terms;
    for (int i = q; i <= ks + 1; ++i) terms.emplace_back(i, binomial(ks + 1, i));
    auto lhs = weighted_alpha_sum(alphas, terms);
    Alpha aq = q <= static_cast<int>(alphas.size()) ? alphas[q - 1] : Alpha::of(0);
    if (!lhs || aq.infinite) {
      out.betti_condition = !lhs;  // +inf >= anything finite
    } else {
      Rational coeff = Rational(BigInt(q) * factorial(ks + 2),
                                factorial(q + 1) * factorial(ks + 1 - q) * BigInt(ks + 1));
      coeff.canonicalize();
      out.betti_condition = *lhs - 1 >= coeff * aq.value;
    }
  }
  return out;
}

std::string CriticalProfile::to_json() const {
  nlohmann::json j;
  j["q"] = q;
  nlohmann::json taus = nlohmann::json::array();
  nlohmann::json taus_float = nlohmann::json::array();
  for (const auto& t : tau) {
    if (t) {
      taus.push_back(rational_to_string(*t));
      taus_float.push_back(to_double(*t));
    } else {
      taus.push_back("-inf");
      taus_float.push_back(nullptr);
    }
  }
  j["tau"] = taus;
  j["tau_float"] = taus_float;
  if (k_star)
    j["k_star"] = *k_star;
  else
    j["k_star"] = nullptr;
  j["degenerate_boundary"] = degenerate_boundary;
  j["subcritical"] = subcritical;
  j["extra_condition"] = extra_condition;
  j["betti_condition"] = betti_condition;
  return j.dump();
}

// --- sampling ---------------------------------------------------------------

namespace {

inline std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ull;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebull;
  x ^= x >> 31;
  return x;
}

}  // namespace

double face_uniform(std::uint64_t seed, int dim, const Face& face) {
  std::uint64_t h = mix64(seed ^ 0xa0761d6478bd642full);
  h = mix64(h ^ (static_cast<std::uint64_t>(dim) * 0x9e3779b97f4a7c15ull));
  for (std::int32_t v : face)
    h = mix64(h ^ ((static_cast<std::uint64_t>(v) + 1) * 0xe7037ed1a0b428dbull));
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return mix64(master ^ mix64(index + 0x9e3779b97f4a7c15ull));
}

SimplicialComplex sample(const ModelParams& params, std::uint64_t seed) {
  params.validate();
  const std::int32_t n = params.n;
  std::vector<std::vector<Face>> faces(n > 0 ? 1 : 0);
  if (n > 0) {
    faces[0].reserve(n);
    for (std::int32_t v = 0; v < n; ++v) faces[0].push_back({v});
  }

  for (int i = 1; i <= params.k_max && n > 0; ++i) {
    double p = params.prob(i);
    const std::vector<Face>& below = faces[i - 1];
    if (below.empty() || p <= 0.0) break;
    std::vector<Face> level;
    Face cand, sub;
    for (const Face& f : below) {
      // extend by a new maximal vertex so each candidate appears once
      for (std::int32_t v = f.back() + 1; v < n; ++v) {
        cand = f;
        cand.push_back(v);
        bool closed = true;
        // the subset dropping v is f itself; check the others
        for (std::size_t skip = 0; skip + 1 < cand.size() && closed; ++skip) {
          sub.clear();
          for (std::size_t t = 0; t < cand.size(); ++t)
            if (t != skip) sub.push_back(cand[t]);
          closed = std::binary_search(below.begin(), below.end(), sub);
        }
        if (!closed) continue;
        if (face_uniform(seed, i, cand) < p) level.push_back(cand);
      }
    }
    if (level.empty()) break;
    std::sort(level.begin(), level.end());
    faces.push_back(std::move(level));
  }
  return SimplicialComplex::from_closed_faces(n, std::move(faces));
}

}  // namespace scld
