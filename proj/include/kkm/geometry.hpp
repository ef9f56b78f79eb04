#pragma once

#include "kkm/complex.hpp"
#include "kkm/rational.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace kkm {

/// Ordered point set V = {v_0..v_m} with an optional query point p.
struct PointConfig {
  std::vector<RationalPoint> V;
  std::optional<RationalPoint> p;

  /// Shared dimension; throws InvalidInput if the points disagree.
  std::size_t dimension() const;
};

enum class Containment { Inside, Outside };  // Inside means interior or boundary

/// Exact membership p in conv(S) through a Caratheodory reduction: some
/// affinely independent subset of at most d+1 points has non-negative
/// barycentric coordinates for p.
Containment point_in_hull(std::span<const RationalPoint> points, const RationalPoint& p);
bool in_hull(std::span<const RationalPoint> points, const RationalPoint& p);

/// cov_V(p) stored by its inclusion-minimal members.
class CovFamily {
 public:
  CovFamily() = default;
  CovFamily(int index_count, std::vector<IndexSet> minimal);

  int index_count() const { return index_count_; }
  const std::vector<IndexSet>& minimal_sets() const { return minimal_; }
  bool empty() const { return minimal_.empty(); }
  /// Membership in the up-closure.
  bool contains(const IndexSet& indices) const;
  /// Every member of the up-closure, in increasing bitmask order.
  std::vector<IndexSet> up_closure() const;

 private:
  int index_count_ = 0;
  std::vector<IndexSet> minimal_;
};

CovFamily cov_v(std::span<const RationalPoint> V, const RationalPoint& p);
CovFamily cov_v(const PointConfig& config);

enum class RayDirection { PosX, NegX, PosY, NegY };

struct Segment {
  RationalPoint from;
  RationalPoint to;
};

/// Winding number of a closed planar chain around p, by signed crossings of
/// an axis-parallel ray with a half-open vertex rule. Throws OnImage when p
/// lies on a segment.
long winding_number(std::span<const Segment> chain, const RationalPoint& p, RayDirection ray = RayDirection::PosX);
/// The cyclic loop loop[0] -> loop[1] -> ... -> loop[0].
long winding_number(std::span<const RationalPoint> loop, const RationalPoint& p, RayDirection ray = RayDirection::PosX);

struct OrientedTriangle {
  RationalPoint a, b, c;
  int sign = 1;  // +1 keeps the order a, b, c
};

/// Degree of the radial projection from p of a closed oriented triangle
/// chain in 3-space: signed hits of a ray whose direction is chosen to miss
/// every image vertex and edge. Throws OnImage when p lies on a triangle.
long sphere_degree_from_point(std::span<const OrientedTriangle> triangles, const RationalPoint& p);
/// `realization` maps vertex ids of `surface` to points of 3-space.
long sphere_degree_from_point(const OrientedComplex& surface, std::span<const RationalPoint> realization,
                              const RationalPoint& p);

/// Hyperplane normal . x = offset.
struct Hyperplane {
  RationalPoint normal;
  Rational offset;

  Rational evaluate(const RationalPoint& x) const { return dot(normal, x) - offset; }
};

/// A supporting hyperplane of conv(V) with the points of V lying on it.
/// Every point of V satisfies plane.evaluate(v) <= 0.
struct Facet {
  Hyperplane plane;
  IndexSet vertices;
};

/// Hyperplane through d affinely independent points of d-space, scaled so
/// that the first non-zero normal coordinate is +1.
std::optional<Hyperplane> hyperplane_through(std::span<const RationalPoint> points);

/// Facets of a full-dimensional conv(V), found by brute force over d-subsets.
std::vector<Facet> hull_facets(std::span<const RationalPoint> V);

/// Indices I such that the points V[I] all lie on one facet of conv(V).
bool on_common_facet(std::span<const Facet> facets, std::span<const RationalPoint> V, const IndexSet& indices);

/// A point of the relative interior of `facet` that avoids the hull of every
/// (d-1)-subset of its vertices.
RationalPoint generic_facet_point(std::span<const RationalPoint> V, const Facet& facet);

struct PebbleResult {
  std::vector<RationalPoint> points;
  /// For each point, the (d+1)-subsets of V whose simplex contains it.
  std::vector<std::vector<IndexSet>> coverage;
  std::size_t bound = 0;        // |V| - d
  std::size_t cells = 0;        // distinct coverage classes among interior samples
  bool certified = false;       // points.size() >= bound and pairwise disjoint
  std::string failure;          // set when not certified
};

/// Interior points of conv(V), no two inside a common full-dimensional
/// simplex spanned by V. Built from one representative per cell of the
/// arrangement of hyperplanes spanned by d-subsets of V; d must be 2 or 3.
PebbleResult pebble_set(std::span<const RationalPoint> V, int d);

/// (d+1)-subsets J of V, affinely independent, with x in conv(V_J).
std::vector<IndexSet> simplex_coverage(std::span<const RationalPoint> V, const RationalPoint& x);

}  // namespace kkm
