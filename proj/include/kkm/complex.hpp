#pragma once

#include "kkm/rational.hpp"

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace kkm {

using Vertex = std::int32_t;

/// Sorted, duplicate-free subset of labels or cover indices.
using IndexSet = std::vector<int>;

/// Sorts and dedupes; throws InvalidInput on negative entries.
IndexSet make_index_set(std::vector<int> values);

/// A non-empty, strictly increasing list of vertex identifiers.
class Simplex {
 public:
  Simplex() = default;
  /// Sorts the input; throws InvalidInput on duplicates, negatives or an
  /// empty list.
  explicit Simplex(std::vector<Vertex> vertices);
  Simplex(std::initializer_list<Vertex> vertices) : Simplex(std::vector<Vertex>(vertices)) {}

  /// Trusts the caller that `sorted` is strictly increasing and non-empty.
  static Simplex from_sorted(std::vector<Vertex> sorted);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  int dim() const { return static_cast<int>(vertices_.size()) - 1; }
  Vertex operator[](std::size_t i) const { return vertices_[i]; }
  auto begin() const { return vertices_.begin(); }
  auto end() const { return vertices_.end(); }

  bool contains(Vertex v) const;
  bool is_face_of(const Simplex& other) const;
  /// Position of `v` in the sorted vertex list, if present.
  std::optional<std::size_t> position(Vertex v) const;
  /// The facet obtained by dropping the vertex at `pos`.
  Simplex without(std::size_t pos) const;
  /// All non-empty faces, including the simplex itself.
  std::vector<Simplex> faces() const;

  auto operator<=>(const Simplex&) const = default;
  bool operator==(const Simplex&) const = default;

 private:
  std::vector<Vertex> vertices_;
};

/// Finite abstract simplicial complex stored by maximal simplices, with the
/// full face closure precomputed and sorted by (dimension, lexicographic).
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Closure of an arbitrary simplex family. Vertex ids may be sparse; the
  /// id bound is max id + 1 unless `vertex_count` is larger.
  static SimplicialComplex from_simplices(std::span<const Simplex> simplices, Vertex vertex_count = 0);

  const std::vector<Simplex>& maximal_simplices() const { return maximal_; }
  const std::vector<Simplex>& simplices() const { return all_; }
  std::span<const Simplex> simplices_of_dim(int d) const;
  int dimension() const { return dim_offsets_.empty() ? -1 : static_cast<int>(dim_offsets_.size()) - 2; }
  /// Bound on vertex identifiers: every id is < vertex_count().
  Vertex vertex_count() const { return vertex_count_; }
  std::vector<Vertex> vertices() const;
  bool empty() const { return all_.empty(); }

  bool contains(const Simplex& s) const;
  /// Index of `s` within simplices(), if present.
  std::optional<std::size_t> index_of(const Simplex& s) const;
  bool is_pure() const;
  /// Every simplex of this complex is a simplex of `other`.
  bool is_subcomplex_of(const SimplicialComplex& other) const;

  bool operator==(const SimplicialComplex& other) const { return maximal_ == other.maximal_; }

 private:
  std::vector<Simplex> maximal_;
  std::vector<Simplex> all_;
  std::vector<std::size_t> dim_offsets_;  // all_[dim_offsets_[d] .. dim_offsets_[d+1]) has dimension d
  Vertex vertex_count_ = 0;
};

/// Canonicalizes a family of vertex lists: faces of other members are
/// dropped. Every id below the vertex count must occur (the count defaults to
/// max id + 1). Throws InvalidInput on duplicates within a list, empty lists,
/// ids out of range or unused ids.
SimplicialComplex build_complex(const std::vector<std::vector<Vertex>>& maximal,
                                std::optional<Vertex> vertex_count = std::nullopt);

/// Pure complex with a +1/-1 sign per top simplex. A sign of +1 means the
/// orientation given by the sorted vertex order.
class OrientedComplex {
 public:
  /// `signs` is aligned with complex.maximal_simplices(). Validates purity,
  /// signs of magnitude one, at most two top simplices per codimension-one
  /// face and opposite induced orientations across shared faces.
  OrientedComplex(SimplicialComplex complex, std::vector<int> signs);

  const SimplicialComplex& complex() const { return complex_; }
  int dimension() const { return complex_.dimension(); }
  const std::vector<Simplex>& top_simplices() const { return complex_.maximal_simplices(); }
  const std::vector<int>& signs() const { return signs_; }
  int sign(const Simplex& top) const;
  OrientedComplex reversed() const;

 private:
  SimplicialComplex complex_;
  std::vector<int> signs_;
};

/// Codimension-one faces selected by an incidence rule, plus their closure.
struct BoundaryComplex {
  std::vector<Simplex> faces;    // sorted
  std::vector<int> incidence;    // number of top simplices containing faces[i]
  SimplicialComplex complex;     // faces together with all their faces

  bool empty() const { return faces.empty(); }
};

/// Faces of the top simplices contained in exactly one top simplex.
BoundaryComplex manifold_boundary(const SimplicialComplex& complex);

/// Faces of the top simplices contained in an odd number of top simplices.
BoundaryComplex bloch_boundary(const SimplicialComplex& complex);

/// Propagates `seed_sign` from the lexicographically smallest top simplex of
/// each strongly connected component. Throws NotOrientable on a conflict and
/// InvalidInput when the complex is not pure or a face has more than two
/// cofaces.
OrientedComplex orient(const SimplicialComplex& complex, int seed_sign = +1);

/// Orientation of the manifold boundary induced by the parent top simplices:
/// a face omitting position i of parent s gets sign(s) * (-1)^i.
OrientedComplex induced_boundary_orientation(const OrientedComplex& manifold);

/// Where a subdivision vertex sits in the original complex: the smallest
/// original simplex containing it and its barycentric weights on that
/// simplex's vertices.
struct VertexProvenance {
  Simplex carrier;
  std::vector<Rational> weights;
};

struct Subdivision {
  SimplicialComplex complex;
  std::vector<VertexProvenance> provenance;  // indexed by vertex id

  /// Barycentric coordinates of vertex `v` over the vertices of `host`,
  /// which must contain the vertex's carrier.
  std::vector<Rational> coordinates_in(Vertex v, const Simplex& host) const;
};

/// Iterated barycentric subdivision. Original vertices keep their ids; the
/// barycenter of each higher simplex gets a fresh id, assigned in the
/// (dimension, lexicographic) order of the simplices being subdivided.
Subdivision barycentric_subdivision(const SimplicialComplex& complex, int depth);

struct OrientedSubdivision {
  Subdivision subdivision;
  OrientedComplex oriented;
};

/// Subdivides and transports the orientation: each new top simplex inherits
/// the sign of its host times the sign of its barycentric-coordinate
/// determinant.
OrientedSubdivision barycentric_subdivision(const OrientedComplex& complex, int depth);

/// "[0,1,2]".
std::string format_simplex(const Simplex& s);

/// Sign of the permutation that sorts `sequence` (0 if it has repeats).
int permutation_sign(std::span<const int> sequence);

}  // namespace kkm
