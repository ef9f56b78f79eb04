#pragma once

#include "kkm/complex.hpp"
#include "kkm/geometry.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace kkm {

/// Labels in {0..m}, indexed by vertex id.
struct Labeling {
  int m = 0;
  std::vector<int> labels;

  int operator()(Vertex v) const { return labels.at(static_cast<std::size_t>(v)); }
  bool operator==(const Labeling&) const = default;
};

/// Throws InvalidInput when a label is outside {0..m} or m < 0.
Labeling make_labeling(int m, std::vector<int> labels);

/// Throws InvalidInput when some vertex of `complex` has no label.
void require_labels_for(const SimplicialComplex& complex, const Labeling& labeling);

IndexSet label_set(const Simplex& s, const Labeling& labeling);
/// Labels in sorted vertex order.
std::vector<int> label_sequence(const Simplex& s, const Labeling& labeling);

/// Subdivided copy of the m-simplex with corners 0..m, each vertex tagged
/// with the face of the base simplex it lies in.
struct SpernerContext {
  int m = 0;
  std::vector<Simplex> carrier;  // indexed by vertex id
};

/// Reads carriers from subdivision provenance. The original complex must use
/// vertex ids within 0..m (Delta^m itself or a subcomplex such as its boundary).
SpernerContext sperner_context(const Subdivision& subdivision, int m);

struct SpernerViolation {
  Vertex vertex = 0;
  int rule = 0;  // 1: corner mislabeled, 2: label outside the carrier face
  int label = 0;
  Simplex carrier;
};

struct SpernerVerdict {
  bool valid = true;
  std::vector<SpernerViolation> violations;
};

SpernerVerdict validate_sperner(const SpernerContext& context, const Labeling& labeling);

/// Each vertex gets the least corner of its carrier.
Labeling canonical_sperner_labeling(const SpernerContext& context);
/// Each vertex gets a uniformly chosen corner of its carrier.
Labeling random_sperner_labeling(const SpernerContext& context, std::uint64_t seed);

struct MaxLabelVerdict {
  bool ok = true;
  std::vector<Simplex> offenders;  // simplices carrying all m+1 labels
};

MaxLabelVerdict max_label_check(const SimplicialComplex& complex, const Labeling& labeling);

struct FullyLabeledResult {
  std::vector<Simplex> containing;  // label set contains J
  std::vector<Simplex> exact;       // label set equals J
};

FullyLabeledResult fully_labeled(const SimplicialComplex& complex, const Labeling& labeling, const IndexSet& J);

struct DegreeReport {
  long value = 0;
  IndexSet target_used;  // label set of the target face of the boundary sphere
  std::vector<std::pair<IndexSet, long>> cross_checked;
};

/// Degree of f_L from a closed oriented n-pseudomanifold to the boundary of
/// Delta^{n+1}, whose orientation is the one induced from the positive
/// (n+1)-simplex. A target face t = I \ {o} counts
/// sign(s) * sign(labels of s in vertex order) * (-1)^o over top simplices s
/// labeled exactly t. `omitted_label` picks the target (default n+1).
DegreeReport degree_labeling(const OrientedComplex& complex, const Labeling& labeling,
                             std::optional<int> omitted_label = std::nullopt);

/// degree_labeling of the induced boundary orientation; labels must lie in
/// {0..dim M}.
DegreeReport boundary_degree(const OrientedComplex& manifold, const Labeling& labeling,
                             std::optional<int> omitted_label = std::nullopt);

struct FullyLabeledCount {
  long unsigned_count = 0;
  long signed_count = 0;
  std::vector<Simplex> simplices;
};

/// Top simplices of an oriented n-complex carrying every label 0..n.
FullyLabeledCount count_fully_labeled(const OrientedComplex& complex, const Labeling& labeling);

/// Image vertices v_{L(u)} for u in s, in vertex order.
std::vector<RationalPoint> f_LP_image(const Simplex& s, const Labeling& labeling, std::span<const RationalPoint> P);

/// Faces of Bd K whose image does not lie in a single facet of conv(P).
std::vector<Simplex> bloch_boundary_off_polytope(const SimplicialComplex& complex, const Labeling& labeling,
                                                 std::span<const RationalPoint> P);

struct Dg2Report {
  int parity = 0;
  long hits = 0;   // Bd K faces whose image contains the probe
  RationalPoint probe;
  IndexSet facet;  // vertices of P spanning the probed facet
};

/// Mod-2 degree of f_{L,P} on Bloch's boundary. Throws HypothesisFailure when
/// some Bd K face is not mapped into the boundary of conv(P).
Dg2Report dg2(const SimplicialComplex& complex, const Labeling& labeling, std::span<const RationalPoint> P);

struct WindingFixture {
  OrientedComplex cycle;
  Labeling labeling;
};

/// Oriented cycle 0 -> 1 -> ... -> 0 on 3 max(|k|,1) vertices whose labeling
/// into {0,1,2} has degree k.
WindingFixture construct_winding_labeling(long k);

/// h(Q, L, V, p): winding number of the image loop (1-dimensional Q, V in the
/// plane) or the degree of the image surface around p (2-dimensional Q, V in
/// 3-space). Q must be closed. Throws OnImage when p meets the image and
/// Unsupported for other dimensions.
long labeling_class_at_point(const OrientedComplex& complex, const Labeling& labeling,
                             std::span<const RationalPoint> V, const RationalPoint& p);

}  // namespace kkm
