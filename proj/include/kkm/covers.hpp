#pragma once

#include "kkm/complex.hpp"
#include "kkm/geometry.hpp"
#include "kkm/labeling.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace kkm {

/// Star: each set is an open union of simplex interiors, stored as an
/// upward-closed simplex family. Closed: each set is a subcomplex.
enum class CoverSemantics { Star, Closed };

/// Indexed family of at most 64 simplex sets covering an ambient complex.
class Cover {
 public:
  static constexpr int max_sets = 64;

  /// Closes each set upward (star) or downward (closed) inside `ambient`.
  /// Throws InvalidInput when a simplex is not in the ambient or some ambient
  /// simplex is left uncovered.
  Cover(SimplicialComplex ambient, std::vector<std::vector<Simplex>> sets, CoverSemantics semantics);

  const SimplicialComplex& ambient() const { return ambient_; }
  CoverSemantics semantics() const { return semantics_; }
  int size() const { return set_count_; }
  /// Bit i is set iff ambient().simplices()[index] lies in set i.
  std::uint64_t membership(std::size_t index) const { return membership_[index]; }
  bool in_set(int set, const Simplex& s) const;
  std::vector<Simplex> set(int i) const;

  bool operator==(const Cover& other) const = default;

 private:
  SimplicialComplex ambient_;
  CoverSemantics semantics_ = CoverSemantics::Star;
  int set_count_ = 0;
  std::vector<std::uint64_t> membership_;
};

/// U_l = simplices with at least one vertex labeled l, star semantics.
Cover cover_from_labeling(const SimplicialComplex& complex, const Labeling& labeling);

/// Complex on cover indices; vertices are the non-empty sets.
struct Nerve {
  SimplicialComplex complex;
  int index_count = 0;

  bool contains(const IndexSet& J) const;
};

Nerve nerve(const Cover& cover);

/// A simplex of the ambient lying in every set of J, if any.
std::optional<Simplex> common_simplex(const Cover& cover, const IndexSet& J);

bool total_intersection_empty(const Cover& cover);

/// Per-vertex weights over set indices, indexed by vertex id.
struct PartitionWeights {
  std::vector<std::vector<Rational>> weights;
};

/// Throws InvalidInput unless the weights are non-negative, sum to one at
/// every vertex and are subordinate: weight on set i at u requires the star
/// of u inside set i (open star for star covers, closed star otherwise).
void validate_weights(const Cover& cover, const PartitionWeights& weights);

/// Full weight on the least admissible set at each vertex.
PartitionWeights canonical_weights(const Cover& cover);

/// sum_i phi_i(x) v_i for x given by a carrier simplex and barycentric
/// coordinates on its vertices.
RationalPoint rho_eval(const Cover& cover, const PartitionWeights& weights, std::span<const RationalPoint> V,
                       const Simplex& carrier, std::span<const Rational> barycentric);

/// Maximal nerve simplices J; the image is the union of conv(V_J).
std::vector<IndexSet> image_polyhedron(const Cover& cover, std::span<const RationalPoint> V);

/// Exact test of p against the union of conv(V_J) over the pieces.
bool point_on_image(std::span<const IndexSet> pieces, std::span<const RationalPoint> V, const RationalPoint& p);

struct ComplementVerdict {
  bool in_complement = true;
  std::optional<IndexSet> violating;  // minimal J of cov_V(p) realized by the cover
  std::optional<Simplex> witness;     // ambient simplex in every set of J
};

ComplementVerdict p_in_complement(const Cover& cover, std::span<const RationalPoint> V, const RationalPoint& p);

struct ExtensionDiff {
  int index = 0;
  std::vector<Simplex> missing;  // in S_i but not in F_i
  std::vector<Simplex> extra;    // in F_i restricted to A but not in S_i
};

struct ExtensionVerdict {
  bool extends = true;
  std::vector<ExtensionDiff> diffs;
};

/// F_i restricted to A equals S_i for every i. A is S's ambient. Throws
/// InvalidInput when A is not a subcomplex of F's ambient, the index counts
/// differ or the semantics differ.
ExtensionVerdict extension_check(const Cover& S, const Cover& F);

/// Degree of the canonical map of a cover with dim+2 sets over a closed
/// oriented 1- or 2-dimensional ambient. Star covers use the least-index
/// labeling of the vertices; closed covers label the barycenter of each
/// simplex by the least set containing it.
DegreeReport cover_degree(const Cover& cover, const OrientedComplex& ambient);

/// Same degree for a star cover computed geometrically with the supplied
/// weights: rho maps into the standard simplex and the winding number or
/// surface degree around its barycenter is taken.
long cover_degree_weighted(const Cover& cover, const OrientedComplex& ambient, const PartitionWeights& weights);

/// h(S, V, p) of a cover over a closed oriented 1- or 2-dimensional ambient.
long cover_class_at_point(const Cover& cover, const OrientedComplex& ambient, std::span<const RationalPoint> V,
                          const RationalPoint& p);

/// The labeling that realizes the canonical map: least admissible set per
/// vertex on the ambient (star) or on its first barycentric subdivision
/// (closed). `subdivided` receives the oriented subdivision in the closed case.
Labeling canonical_labeling(const Cover& cover, const OrientedComplex& ambient,
                            std::optional<OrientedComplex>* subdivided = nullptr);

}  // namespace kkm
