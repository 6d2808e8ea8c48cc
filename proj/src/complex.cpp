#include "scld/complex.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

#include "scld/rational.hpp"

namespace scld {

namespace {

std::string serialize(std::int32_t n, const std::vector<std::vector<Face>>& faces) {
  std::ostringstream os;
  os << n << ';';
  for (std::size_t d = 1; d < faces.size(); ++d) {
    os << d << ':';
    for (const Face& f : faces[d]) {
      for (std::size_t i = 0; i < f.size(); ++i) os << f[i] << (i + 1 < f.size() ? ',' : '.');
    }
    os << ';';
  }
  return os.str();
}

std::vector<std::vector<Face>> relabel_faces(
    const std::vector<std::vector<Face>>& faces,
    const std::vector<std::int32_t>& perm) {
  std::vector<std::vector<Face>> out(faces.size());
  for (std::size_t d = 0; d < faces.size(); ++d) {
    out[d].reserve(faces[d].size());
    for (const Face& f : faces[d]) {
      Face g(f.size());
      for (std::size_t i = 0; i < f.size(); ++i) g[i] = perm[f[i]];
      std::sort(g.begin(), g.end());
      out[d].push_back(std::move(g));
    }
    std::sort(out[d].begin(), out[d].end());
  }
  return out;
}

}  // namespace

SimplicialComplex SimplicialComplex::from_facets(std::int32_t n,
                                                 const std::vector<Face>& facets) {
  if (n < 0) fail(errc::invalid_argument, "negative vertex count");
  std::vector<std::set<Face>> by_dim;
  for (const Face& facet : facets) {
    Face f = facet;
    std::sort(f.begin(), f.end());
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (f[i] < 0 || f[i] >= n)
        fail(errc::invalid_vertex,
             "label " + std::to_string(f[i]) + " outside [0," + std::to_string(n) + ")");
      if (i > 0 && f[i] == f[i - 1])
        fail(errc::malformed_facet, "duplicate label " + std::to_string(f[i]));
    }
    if (f.empty()) continue;
    // Downward closure of one facet: walk subsets breadth-first.
    std::vector<Face> frontier{f};
    while (!frontier.empty()) {
      std::vector<Face> next;
      for (Face& cur : frontier) {
        int d = static_cast<int>(cur.size()) - 1;
        if (static_cast<int>(by_dim.size()) <= d) by_dim.resize(d + 1);
        if (!by_dim[d].insert(cur).second) continue;  // subsets already present
        if (d >= 1) {
          for (std::size_t skip = 0; skip < cur.size(); ++skip) {
            Face sub;
            sub.reserve(cur.size() - 1);
            for (std::size_t i = 0; i < cur.size(); ++i)
              if (i != skip) sub.push_back(cur[i]);
            next.push_back(std::move(sub));
          }
        }
      }
      frontier = std::move(next);
    }
  }

  std::vector<std::vector<Face>> faces(std::max<std::size_t>(by_dim.size(), n > 0 ? 1 : 0));
  if (n > 0) {
    faces[0].reserve(n);
    for (std::int32_t v = 0; v < n; ++v) faces[0].push_back({v});
  }
  for (std::size_t d = 1; d < by_dim.size(); ++d)
    faces[d].assign(by_dim[d].begin(), by_dim[d].end());

  SimplicialComplex K;
  K.n_ = n;
  K.faces_ = std::move(faces);
  return K;
}

SimplicialComplex SimplicialComplex::from_closed_faces(
    std::int32_t n, std::vector<std::vector<Face>> faces_by_dim) {
  SimplicialComplex K;
  K.n_ = n;
  K.faces_ = std::move(faces_by_dim);
  while (!K.faces_.empty() && K.faces_.back().empty()) K.faces_.pop_back();
#ifndef NDEBUG
  K.check_closed();
#endif
  return K;
}

void SimplicialComplex::check_closed() const {
  if (n_ > 0 && (faces_.empty() || faces_[0].size() != static_cast<std::size_t>(n_)))
    fail(errc::internal, "0-skeleton must list all vertices");
  for (std::size_t d = 1; d < faces_.size(); ++d) {
    if (!std::is_sorted(faces_[d].begin(), faces_[d].end()))
      fail(errc::internal, "faces not sorted");
    for (const Face& f : faces_[d]) {
      for (std::size_t skip = 0; skip < f.size(); ++skip) {
        Face sub;
        for (std::size_t i = 0; i < f.size(); ++i)
          if (i != skip) sub.push_back(f[i]);
        if (!contains(sub)) fail(errc::internal, "closure violated");
      }
    }
  }
}

const std::vector<Face>& SimplicialComplex::faces(int dim) const {
  static const std::vector<Face> empty;
  if (dim < 0 || dim >= static_cast<int>(faces_.size())) return empty;
  return faces_[dim];
}

std::vector<std::int64_t> SimplicialComplex::simplex_counts() const {
  std::vector<std::int64_t> s;
  s.reserve(faces_.size());
  for (const auto& level : faces_) s.push_back(static_cast<std::int64_t>(level.size()));
  return s;
}

std::int64_t SimplicialComplex::count(int dim) const {
  if (dim < 0 || dim >= static_cast<int>(faces_.size())) return 0;
  return static_cast<std::int64_t>(faces_[dim].size());
}

std::int64_t SimplicialComplex::total_faces() const {
  std::int64_t t = 0;
  for (const auto& level : faces_) t += static_cast<std::int64_t>(level.size());
  return t;
}

bool SimplicialComplex::contains(const Face& face) const {
  int d = static_cast<int>(face.size()) - 1;
  if (d < 0 || d >= static_cast<int>(faces_.size())) return false;
  return std::binary_search(faces_[d].begin(), faces_[d].end(), face);
}

SimplicialComplex SimplicialComplex::skeleton(int max_dim) const {
  if (max_dim < 0) fail(errc::invalid_argument, "skeleton dimension must be >= 0");
  SimplicialComplex K;
  K.n_ = n_;
  K.faces_.assign(faces_.begin(),
                  faces_.begin() + std::min<std::size_t>(faces_.size(), max_dim + 1));
  return K;
}

std::vector<std::vector<std::int32_t>> SimplicialComplex::degree_profiles() const {
  std::vector<std::vector<std::int32_t>> prof(
      n_, std::vector<std::int32_t>(std::max<int>(dimension(), 0), 0));
  for (std::size_t d = 1; d < faces_.size(); ++d)
    for (const Face& f : faces_[d])
      for (std::int32_t v : f) prof[v][d - 1]++;
  return prof;
}

namespace {

// Backtracking count of vertex maps dom -> cod that carry every face of dom
// (within the assigned prefix) onto a face of cod. `bijective` restricts to
// permutation-style maps used for automorphisms and isomorphism tests.
struct MapSearch {
  const SimplicialComplex& dom;
  const SimplicialComplex& cod;
  const std::vector<std::vector<std::int32_t>>& dom_prof;
  const std::vector<std::vector<std::int32_t>>& cod_prof;
  bool require_equal_profile;
  bool stop_at_first;
  // faces of dom whose largest assigned vertex (in assignment order) is v
  std::vector<std::vector<const Face*>> faces_closing_at;
  std::vector<std::int32_t> image;
  std::vector<bool> used;
  std::uint64_t found = 0;

  MapSearch(const SimplicialComplex& d, const SimplicialComplex& c,
            const std::vector<std::vector<std::int32_t>>& dp,
            const std::vector<std::vector<std::int32_t>>& cp, bool eq_profile,
            bool first_only)
      : dom(d), cod(c), dom_prof(dp), cod_prof(cp),
        require_equal_profile(eq_profile), stop_at_first(first_only) {
    faces_closing_at.resize(dom.vertex_count());
    for (int dim = 1; dim <= dom.dimension(); ++dim)
      for (const Face& f : dom.faces(dim))
        faces_closing_at[f.back()].push_back(&f);
    image.assign(dom.vertex_count(), -1);
    used.assign(cod.vertex_count(), false);
  }

  bool profile_admissible(std::int32_t v, std::int32_t u) const {
    const auto& pv = dom_prof[v];
    const auto& pu = cod_prof[u];
    for (std::size_t d = 0; d < pv.size(); ++d) {
      std::int32_t cu = d < pu.size() ? pu[d] : 0;
      if (require_equal_profile ? pv[d] != cu : pv[d] > cu) return false;
    }
    if (require_equal_profile)
      for (std::size_t d = pv.size(); d < pu.size(); ++d)
        if (pu[d] != 0) return false;
    return true;
  }

  bool faces_ok(std::int32_t v) const {
    Face mapped;
    for (const Face* f : faces_closing_at[v]) {
      mapped.clear();
      for (std::int32_t w : *f) mapped.push_back(image[w]);
      std::sort(mapped.begin(), mapped.end());
      if (!cod.contains(mapped)) return false;
    }
    return true;
  }

  void run(std::int32_t v) {
    if (v == dom.vertex_count()) {
      ++found;
      return;
    }
    for (std::int32_t u = 0; u < cod.vertex_count(); ++u) {
      if (used[u] || !profile_admissible(v, u)) continue;
      image[v] = u;
      used[u] = true;
      if (faces_ok(v)) {
        run(v + 1);
        if (stop_at_first && found > 0) {
          used[u] = false;
          image[v] = -1;
          return;
        }
      }
      used[u] = false;
      image[v] = -1;
    }
  }
};

}  // namespace

std::uint64_t SimplicialComplex::automorphism_count() const {
  if (n_ == 0) fail(errc::invalid_argument, "automorphisms of the empty complex");
  auto prof = degree_profiles();
  MapSearch search(*this, *this, prof, prof, /*eq_profile=*/true, /*first_only=*/false);
  search.run(0);
  return search.found;
}

bool are_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.vertex_count() != b.vertex_count()) return false;
  if (a.simplex_counts() != b.simplex_counts()) return false;
  auto pa = a.degree_profiles();
  auto pb = b.degree_profiles();
  {
    auto sa = pa;
    auto sb = pb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  MapSearch search(a, b, pa, pb, /*eq_profile=*/true, /*first_only=*/true);
  search.run(0);
  return search.found > 0;
}

SimplicialComplex SimplicialComplex::relabel(const std::vector<std::int32_t>& perm) const {
  if (perm.size() != static_cast<std::size_t>(n_))
    fail(errc::invalid_argument, "permutation size mismatch");
  SimplicialComplex K;
  K.n_ = n_;
  K.faces_ = relabel_faces(faces_, perm);
  return K;
}

std::vector<std::int32_t> SimplicialComplex::support() const {
  std::vector<bool> seen(n_, false);
  for (std::size_t d = 1; d < faces_.size(); ++d)
    for (const Face& f : faces_[d])
      for (std::int32_t v : f) seen[v] = true;
  std::vector<std::int32_t> out;
  for (std::int32_t v = 0; v < n_; ++v)
    if (seen[v]) out.push_back(v);
  return out;
}

std::string SimplicialComplex::canonical_key() const {
  // Complete complexes are label-transitive: any relabeling serializes the same.
  bool complete = true;
  for (std::size_t d = 1; d < faces_.size(); ++d) {
    BigInt full_count = binomial(static_cast<std::uint64_t>(n_), d + 1);
    if (BigInt(static_cast<unsigned long>(faces_[d].size())) != full_count) complete = false;
  }
  if (complete) return serialize(n_, faces_);

  // Group vertices by degree profile; only label orders that sort profiles
  // are candidates, which is isomorphism-invariant.
  auto prof = degree_profiles();
  std::vector<std::int32_t> order(n_);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::int32_t x, std::int32_t y) {
    return prof[x] != prof[y] ? prof[x] < prof[y] : x < y;
  });
  std::vector<std::pair<std::size_t, std::size_t>> classes;  // [begin, end)
  std::size_t begin = 0;
  double candidates = 1.0;
  for (std::size_t i = 1; i <= order.size(); ++i) {
    if (i == order.size() || prof[order[i]] != prof[order[begin]]) {
      classes.emplace_back(begin, i);
      for (std::size_t f = 2; f <= i - begin; ++f) candidates *= static_cast<double>(f);
      begin = i;
    }
  }
  if (candidates > 5e5) fail(errc::pattern_too_large, "canonical key search too large");

  std::string best;
  std::vector<std::int32_t> arrangement = order;
  // Iterate the product of per-class permutations.
  std::vector<std::vector<std::int32_t>> blocks;
  for (auto [b, e] : classes)
    blocks.emplace_back(arrangement.begin() + b, arrangement.begin() + e);
  std::vector<std::int32_t> perm(n_);
  auto emit = [&]() {
    std::int32_t label = 0;
    for (const auto& block : blocks)
      for (std::int32_t v : block) perm[v] = label++;
    std::string key = serialize(n_, relabel_faces(faces_, perm));
    if (best.empty() || key < best) best = std::move(key);
  };
  std::function<void(std::size_t)> iterate = [&](std::size_t ci) {
    if (ci == blocks.size()) {
      emit();
      return;
    }
    auto& block = blocks[ci];
    std::sort(block.begin(), block.end());
    do {
      iterate(ci + 1);
    } while (std::next_permutation(block.begin(), block.end()));
  };
  iterate(0);
  return best;
}

std::vector<Face> SimplicialComplex::facets() const {
  std::vector<Face> out;
  for (int d = 1; d <= dimension(); ++d) {
    for (const Face& f : faces_[d]) {
      bool covered = false;
      if (d + 1 <= dimension()) {
        // contained in some (d+1)-face iff some extension by one vertex is a face
        for (std::int32_t v = 0; v < n_ && !covered; ++v) {
          if (std::binary_search(f.begin(), f.end(), v)) continue;
          Face ext = f;
          ext.insert(std::upper_bound(ext.begin(), ext.end(), v), v);
          covered = contains(ext);
        }
      }
      if (!covered) out.push_back(f);
    }
  }
  return out;
}

bool SimplicialComplex::operator==(const SimplicialComplex& other) const {
  return n_ == other.n_ && faces_ == other.faces_;
}

std::string SimplicialComplex::to_json() const {
  nlohmann::json j;
  j["n"] = n_;
  j["facets"] = facets();
  return j.dump();
}

SimplicialComplex SimplicialComplex::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(errc::parse_error, std::string("bad complex JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("facets"))
    fail(errc::parse_error, "complex JSON needs {\"n\", \"facets\"}");
  std::int32_t n = 0;
  std::vector<Face> facets;
  try {
    n = j.at("n").get<std::int32_t>();
    facets = j.at("facets").get<std::vector<Face>>();
  } catch (const nlohmann::json::exception& e) {
    fail(errc::parse_error, std::string("bad complex JSON: ") + e.what());
  }
  return from_facets(n, facets);
}

SimplicialComplex SimplicialComplex::read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::io_error, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return from_json(buf.str());
}

void SimplicialComplex::write_file(const std::string& path) const {
  std::ofstream out(path);
  if (!out) fail(errc::io_error, "cannot open " + path + " for writing");
  out << to_json() << "\n";
}

SimplicialComplex full_simplex(int dim) {
  Face all(dim + 1);
  std::iota(all.begin(), all.end(), 0);
  return SimplicialComplex::from_facets(dim + 1, {all});
}

SimplicialComplex complete_complex(std::int32_t n, int dim) {
  std::vector<Face> facets;
  // all (dim+1)-subsets of [n]
  Face pick(dim + 1);
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == dim + 1) {
      facets.push_back(pick);
      return;
    }
    for (int v = start; v < n; ++v) {
      pick[depth] = v;
      rec(v + 1, depth + 1);
    }
  };
  if (dim >= 0 && n >= dim + 1) rec(0, 0);
  return SimplicialComplex::from_facets(n, facets);
}

}  // namespace scld
