#pragma once

#include "kkm/complex.hpp"
#include "kkm/covers.hpp"
#include "kkm/labeling.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace kkm::fixtures {

/// Delta^m on vertices 0..m.
SimplicialComplex simplex(int m);
/// The boundary of Delta^m.
SimplicialComplex simplex_boundary(int m);
/// Delta^m with sign +1.
OrientedComplex oriented_simplex(int m);
/// Boundary of Delta^m with the orientation induced from the positive Delta^m.
OrientedComplex canonical_sphere(int m);

/// Cycle 0 - 1 - ... - (n-1) - 0, oriented 0 -> 1 -> ... -> 0.
OrientedComplex cycle(int n);

/// Triangulated disk: `rings` concentric n-gons joined by strips, closed by a
/// centre vertex. The boundary is 0..n-1 and the orientation induces the
/// boundary direction 0 -> 1 -> ... -> 0.
OrientedComplex disk(int n_boundary, int rings);

/// Six-triangle Moebius band (non-orientable).
SimplicialComplex mobius_band();
/// Five-triangle Moebius band {i, i+1, i+2} mod 5.
SimplicialComplex mobius_band5();

std::vector<RationalPoint> triangle_points();  // (0,0), (1,0), (0,1)
std::vector<RationalPoint> unit_square();      // v0=(0,0), v1=(1,0), v2=(1,1), v3=(0,1)
/// Affinely regular hexagon with rational vertices.
std::vector<RationalPoint> hexagon();
std::vector<RationalPoint> tetrahedron();  // 0, e1, e2, e3

/// The heptagon labeling 0,1,2,3,2,1,3 (m = 3) on cycle(7).
Labeling heptagon_labeling();

/// Labels for a boundary cycle of n vertices walking `sides` polygon corners
/// |k| times (backwards when k < 0); for k = 0 only corners 0 and 1 are used.
/// Needs n >= sides * |k|.
std::vector<int> polygon_walk(int n, int sides, long k);

/// Boundary labels from `boundary`, every other vertex uniform in {0..m}.
Labeling random_interior(const OrientedComplex& disk, const std::vector<int>& boundary, int m, std::mt19937_64& rng);

/// The manifold boundary complex of `disk`.
SimplicialComplex boundary_of(const OrientedComplex& disk);

/// Star cover of X from a labeling, with random extra simplices of X outside
/// A added to random sets.
Cover random_extension(const SimplicialComplex& X, const SimplicialComplex& A, const Labeling& labeling,
                       std::mt19937_64& rng, int extra = 3);

/// Heptagon chamber samples in the unit square: inside triangle v0 v1 v3,
/// inside triangle v1 v2 v3 and outside the square.
std::vector<RationalPoint> chamber_samples(int chamber, int count, std::uint64_t seed);

struct FinComplex {
  SimplicialComplex complex;
  Labeling labeling;
};

/// Disk over the unit square with fins glued along edges whose image lies in
/// the square's boundary. At least one edge lies in three or more triangles.
FinComplex fin_complex(std::mt19937_64& rng);

/// splitmix64(seed + i).
std::uint64_t split_seed(std::uint64_t seed, std::uint64_t i);

}  // namespace kkm::fixtures
