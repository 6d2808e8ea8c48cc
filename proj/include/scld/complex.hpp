#ifndef SCLD_COMPLEX_HPP
#define SCLD_COMPLEX_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "scld/errors.hpp"

namespace scld {

using Face = std::vector<std::int32_t>;

/// Immutable abstract simplicial complex on vertices {0,...,n-1}.
///
/// Faces are stored per dimension as ascending vertex tuples in
/// lexicographic order. Every complex carries all n vertices as 0-faces;
/// downward closure is an invariant of every constructor.
class SimplicialComplex {
public:
  SimplicialComplex() = default;

  /// Downward closure of the given facets plus all n vertices as 0-faces.
  static SimplicialComplex from_facets(std::int32_t n,
                                       const std::vector<Face>& facets);

  /// Faces must already be downward closed and sorted; used by samplers and
  /// constructions that guarantee closure. Validated in debug builds.
  static SimplicialComplex from_closed_faces(
      std::int32_t n, std::vector<std::vector<Face>> faces_by_dim);

  std::int32_t vertex_count() const { return n_; }
  /// -1 for the empty complex.
  int dimension() const { return static_cast<int>(faces_.size()) - 1; }

  const std::vector<Face>& faces(int dim) const;
  /// s_0..s_dim.
  std::vector<std::int64_t> simplex_counts() const;
  std::int64_t count(int dim) const;
  std::int64_t total_faces() const;

  bool contains(const Face& face) const;

  SimplicialComplex skeleton(int max_dim) const;

  /// Number of vertex permutations mapping faces onto faces.
  std::uint64_t automorphism_count() const;

  /// Complex with vertices renamed by perm (perm[v] = new label).
  SimplicialComplex relabel(const std::vector<std::int32_t>& perm) const;

  /// Vertices that appear in at least one face of dimension >= 1.
  std::vector<std::int32_t> support() const;

  /// Deterministic identifier of the isomorphism class (small complexes).
  std::string canonical_key() const;

  /// Maximal faces of dimension >= 1 (isolated vertices are implied by n).
  std::vector<Face> facets() const;

  /// Per-vertex incidence counts by dimension; used as an invariant for
  /// pruning isomorphism search, and exposed for tests.
  std::vector<std::vector<std::int32_t>> degree_profiles() const;

  bool operator==(const SimplicialComplex& other) const;

  std::string to_json() const;
  static SimplicialComplex from_json(const std::string& text);
  static SimplicialComplex read_file(const std::string& path);
  void write_file(const std::string& path) const;

private:
  void check_closed() const;

  std::int32_t n_ = 0;
  std::vector<std::vector<Face>> faces_;  // faces_[d], sorted lex
};

bool are_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b);

/// Convenience builders used all over the tests and the CLI.
SimplicialComplex full_simplex(int dim);
SimplicialComplex complete_complex(std::int32_t n, int dim);

}  // namespace scld

#endif
