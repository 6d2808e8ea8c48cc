#include "scld/homology.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

#include "scld/parallel.hpp"
#include "scld/rational.hpp"

namespace scld {

namespace {

// Row-echelon rank of a GF(2) matrix given as packed rows.
std::int64_t rank_gf2(std::vector<std::vector<std::uint64_t>>& rows, std::size_t cols) {
  std::int64_t rank = 0;
  std::size_t row_words = (cols + 63) / 64;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t word = c / 64;
    std::uint64_t bit = 1ull << (c % 64);
    std::size_t pivot = r;
    while (pivot < rows.size() && !(rows[pivot][word] & bit)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != r && (rows[i][word] & bit))
        for (std::size_t w = word; w < row_words; ++w) rows[i][w] ^= rows[r][w];
    }
    ++r;
    ++rank;
  }
  return rank;
}

std::int64_t rank_mod_p(std::vector<std::vector<std::int64_t>>& rows,
                        std::size_t cols, std::int64_t p) {
  auto inv = [&](std::int64_t a) {
    // Fermat: p prime
    std::int64_t result = 1, base = a % p, e = p - 2;
    while (e > 0) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return result;
  };
  std::int64_t rank = 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c] % p == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    std::int64_t scale = inv((rows[r][c] % p + p) % p);
    for (std::size_t w = c; w < cols; ++w)
      rows[r][w] = (rows[r][w] % p + p) * scale % p;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r) continue;
      std::int64_t f = (rows[i][c] % p + p) % p;
      if (f == 0) continue;
      for (std::size_t w = c; w < cols; ++w)
        rows[i][w] = ((rows[i][w] - f * rows[r][w]) % p + p) % p;
    }
    ++r;
    ++rank;
  }
  return rank;
}

}  // namespace

std::int64_t boundary_rank(const SimplicialComplex& K, int j, int field_char) {
  if (field_char < 2 || !is_prime_u64(static_cast<std::uint64_t>(field_char)))
    fail(errc::invalid_field, "field characteristic must be prime");
  if (j <= 0 || j > K.dimension()) return 0;

  const auto& lower = K.faces(j - 1);
  const auto& upper = K.faces(j);
  if (lower.empty() || upper.empty()) return 0;
  std::map<Face, std::size_t> lower_index;
  for (std::size_t i = 0; i < lower.size(); ++i) lower_index[lower[i]] = i;

  if (field_char == 2) {
    std::size_t row_words = (lower.size() + 63) / 64;
    std::vector<std::vector<std::uint64_t>> rows(
        upper.size(), std::vector<std::uint64_t>(row_words, 0));
    Face sub;
    for (std::size_t r = 0; r < upper.size(); ++r) {
      const Face& f = upper[r];
      for (std::size_t skip = 0; skip < f.size(); ++skip) {
        sub.clear();
        for (std::size_t t = 0; t < f.size(); ++t)
          if (t != skip) sub.push_back(f[t]);
        std::size_t c = lower_index.at(sub);
        rows[r][c / 64] ^= 1ull << (c % 64);
      }
    }
    return rank_gf2(rows, lower.size());
  }

  std::vector<std::vector<std::int64_t>> rows(
      upper.size(), std::vector<std::int64_t>(lower.size(), 0));
  Face sub;
  for (std::size_t r = 0; r < upper.size(); ++r) {
    const Face& f = upper[r];
    std::int64_t sign = 1;
    for (std::size_t skip = 0; skip < f.size(); ++skip) {
      sub.clear();
      for (std::size_t t = 0; t < f.size(); ++t)
        if (t != skip) sub.push_back(f[t]);
      rows[r][lower_index.at(sub)] = sign;
      sign = -sign;
    }
  }
  return rank_mod_p(rows, lower.size(), field_char);
}

std::vector<std::int64_t> betti_vector(const SimplicialComplex& K, int field_char,
                                       int threads) {
  if (field_char < 2 || !is_prime_u64(static_cast<std::uint64_t>(field_char)))
    fail(errc::invalid_field, "field characteristic must be prime");
  const int dim = K.dimension();
  if (dim < 0) return {};
  std::vector<std::int64_t> ranks(dim + 2, 0);  // ranks[j] = rank boundary_j
  parallel_for(dim, threads,
               [&](std::int64_t i) { ranks[i + 1] = boundary_rank(K, i + 1, field_char); });
  std::vector<std::int64_t> betti(dim + 1, 0);
  for (int j = 0; j <= dim; ++j)
    betti[j] = K.count(j) - ranks[j] - ranks[j + 1];
  return betti;
}

MorseGap morse_gap(const SimplicialComplex& K, int j, int field_char) {
  if (j < 0 || j > K.dimension() + 1)
    fail(errc::invalid_argument, "dimension out of range");
  auto betti = betti_vector(K, field_char);
  auto at = [](const std::vector<std::int64_t>& v, int i) -> std::int64_t {
    return i >= 0 && i < static_cast<int>(v.size()) ? v[i] : 0;
  };
  std::int64_t beta_j = at(betti, j);
  std::int64_t sj = K.count(j), sjm = K.count(j - 1), sjp = K.count(j + 1);
  MorseGap out;
  out.lower_slack = beta_j - (sj - sjm - sjp);
  out.upper_slack = sj - beta_j;
  return out;
}

std::int64_t free_count(const SimplicialComplex& K, int j) {
  if (j < 0 || j > K.dimension())
    fail(errc::invalid_argument, "dimension out of range");
  const auto& level = K.faces(j);
  if (j + 1 > K.dimension()) return static_cast<std::int64_t>(level.size());
  std::map<Face, bool> covered;
  for (const Face& f : level) covered[f] = false;
  Face sub;
  for (const Face& f : K.faces(j + 1)) {
    for (std::size_t skip = 0; skip < f.size(); ++skip) {
      sub.clear();
      for (std::size_t t = 0; t < f.size(); ++t)
        if (t != skip) sub.push_back(f[t]);
      covered[sub] = true;
    }
  }
  std::int64_t free_faces = 0;
  for (const auto& [face, cov] : covered)
    if (!cov) ++free_faces;
  return free_faces;
}

std::int64_t euler_characteristic(const SimplicialComplex& K) {
  std::int64_t chi = 0;
  int sign = 1;
  for (int j = 0; j <= K.dimension(); ++j) {
    chi += sign * K.count(j);
    sign = -sign;
  }
  return chi;
}

}  // namespace scld
