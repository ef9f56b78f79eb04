#pragma once

// Brute-force references used only by the tests. None of these call the
// library routine they are compared against.

#include "kkm/complex.hpp"
#include "kkm/rational.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

using kkm::Rational;
using kkm::RationalPoint;

/// Feasibility of A x = b, x >= 0 by a phase-one simplex method with Bland's
/// rule in exact arithmetic.
bool lp_feasible(std::vector<std::vector<Rational>> A, std::vector<Rational> b);

/// p in conv(points), as the LP  sum l_i v_i = p, sum l_i = 1, l >= 0.
bool hull_contains(const std::vector<RationalPoint>& points, const RationalPoint& p);

/// Every subset mask J with p in conv(V_J).
std::vector<bool> cov_membership(const std::vector<RationalPoint>& V, const RationalPoint& p);
/// Inclusion-minimal members of cov_membership, as sorted index lists in
/// increasing mask order.
std::vector<std::vector<int>> cov_minimal(const std::vector<RationalPoint>& V, const RationalPoint& p);

/// Winding number of the closed loop around p by quadrant counting. Returns
/// false when p lies on the loop.
bool quadrant_winding(const std::vector<RationalPoint>& loop, const RationalPoint& p, long& winding);

/// Sum over top simplices s with f(s) spanning the target face that omits
/// `omitted`: sign(s) * orientation of the image simplex of the realized
/// boundary of 0, e_1, .., e_{n+1}, compared against the outward normal.
long geometric_degree(const kkm::OrientedComplex& complex, const std::vector<int>& labels, int omitted);

/// Strict interior of a full-dimensional conv(V) through brute-force facets.
bool strictly_interior(const std::vector<RationalPoint>& V, const RationalPoint& p);

/// Star closure (upward) or closed closure (downward) of generators within
/// the given simplex list.
std::vector<kkm::Simplex> close_up(const std::vector<kkm::Simplex>& all, const std::vector<kkm::Simplex>& generators);
std::vector<kkm::Simplex> close_down(const std::vector<kkm::Simplex>& all, const std::vector<kkm::Simplex>& generators);

/// Random rational in [-range, range] with denominator up to `den`.
Rational random_rational(std::mt19937_64& rng, long range, long den);
RationalPoint random_point(std::mt19937_64& rng, std::size_t d, long range, long den);

}  // namespace oracle
