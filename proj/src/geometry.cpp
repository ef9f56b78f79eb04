#include "kkm/geometry.hpp"

#include "kkm/errors.hpp"
#include "linalg.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

namespace kkm {

namespace {

// Calls f(indices) for every k-subset of {0..n-1} in lexicographic order;
// stops early when f returns true.
template <typename F>
bool for_each_combination(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return false;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    if (f(idx)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Unique barycentric coordinates of p over affinely independent points, or
// nothing if the points are dependent or p is off their affine hull.
std::optional<std::vector<Rational>> barycentric(std::span<const RationalPoint> pts, const RationalPoint& p) {
  const std::size_t d = p.dim();
  std::vector<std::vector<Rational>> rows(d + 1, std::vector<Rational>(pts.size()));
  std::vector<Rational> rhs(d + 1);
  for (std::size_t j = 0; j < pts.size(); ++j) {
    for (std::size_t i = 0; i < d; ++i) rows[i][j] = pts[j][i];
    rows[d][j] = 1;
  }
  for (std::size_t i = 0; i < d; ++i) rhs[i] = p[i];
  rhs[d] = 1;
  auto sol = detail::solve_linear(std::move(rows), std::move(rhs));
  if (sol.rank < pts.size() || !sol.consistent) return std::nullopt;
  return sol.x;
}

Rational det3(const RationalPoint& a, const RationalPoint& b, const RationalPoint& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0]);
}

RationalPoint cross(const RationalPoint& a, const RationalPoint& b) {
  return RationalPoint{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

bool is_zero(const RationalPoint& v) {
  return std::all_of(v.coords().begin(), v.coords().end(), [](const Rational& x) { return x == 0; });
}

Rational orient2(const RationalPoint& a, const RationalPoint& b, const RationalPoint& p) {
  return (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0]);
}

bool on_segment2(const RationalPoint& a, const RationalPoint& b, const RationalPoint& p) {
  if (orient2(a, b, p) != 0) return false;
  return std::min(a[0], b[0]) <= p[0] && p[0] <= std::max(a[0], b[0]) && std::min(a[1], b[1]) <= p[1] &&
         p[1] <= std::max(a[1], b[1]);
}

// Rotates the plane so that `ray` becomes the +x direction.
RationalPoint rotate_for(RayDirection ray, const RationalPoint& q) {
  switch (ray) {
    case RayDirection::PosX: return q;
    case RayDirection::NegX: return RationalPoint{-q[0], -q[1]};
    case RayDirection::PosY: return RationalPoint{q[1], -q[0]};
    case RayDirection::NegY: return RationalPoint{-q[1], q[0]};
  }
  return q;
}

void require_dim(const RationalPoint& q, std::size_t d, const char* what) {
  if (q.dim() != d) throw InvalidInput(std::string(what) + ": dimension mismatch");
}

}  // namespace

std::size_t PointConfig::dimension() const {
  std::size_t d = V.empty() ? (p ? p->dim() : 0) : V.front().dim();
  for (const auto& v : V) require_dim(v, d, "point configuration");
  if (p) require_dim(*p, d, "point configuration");
  return d;
}

Containment point_in_hull(std::span<const RationalPoint> points, const RationalPoint& p) {
  for (const auto& q : points) require_dim(q, p.dim(), "point_in_hull");
  const std::size_t kmax = std::min(points.size(), p.dim() + 1);
  std::vector<RationalPoint> subset;
  for (std::size_t k = 1; k <= kmax; ++k) {
    const bool found = for_each_combination(points.size(), k, [&](const std::vector<std::size_t>& idx) {
      subset.clear();
      for (auto i : idx) subset.push_back(points[i]);
      auto coords = barycentric(subset, p);
      return coords && std::all_of(coords->begin(), coords->end(), [](const Rational& x) { return x >= 0; });
    });
    if (found) return Containment::Inside;
  }
  return Containment::Outside;
}

bool in_hull(std::span<const RationalPoint> points, const RationalPoint& p) {
  return point_in_hull(points, p) == Containment::Inside;
}

CovFamily::CovFamily(int index_count, std::vector<IndexSet> minimal)
    : index_count_(index_count), minimal_(std::move(minimal)) {
  std::sort(minimal_.begin(), minimal_.end(), [](const IndexSet& a, const IndexSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
}

bool CovFamily::contains(const IndexSet& indices) const {
  return std::any_of(minimal_.begin(), minimal_.end(), [&](const IndexSet& j) {
    return std::includes(indices.begin(), indices.end(), j.begin(), j.end());
  });
}

std::vector<IndexSet> CovFamily::up_closure() const {
  if (index_count_ > 24) throw InvalidInput("up-closure enumeration limited to 24 indices");
  std::vector<std::uint32_t> generators;
  for (const auto& j : minimal_) {
    std::uint32_t mask = 0;
    for (int i : j) mask |= std::uint32_t{1} << i;
    generators.push_back(mask);
  }
  std::vector<IndexSet> out;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << index_count_); ++mask) {
    if (std::none_of(generators.begin(), generators.end(), [mask](std::uint32_t g) { return (mask & g) == g; })) {
      continue;
    }
    IndexSet set;
    for (int i = 0; i < index_count_; ++i) {
      if (mask >> i & 1) set.push_back(i);
    }
    out.push_back(std::move(set));
  }
  return out;
}

CovFamily cov_v(std::span<const RationalPoint> V, const RationalPoint& p) {
  for (const auto& v : V) require_dim(v, p.dim(), "cov_v");
  if (V.size() > 30) throw InvalidInput("cov_v supports at most 30 points");
  std::vector<std::uint32_t> found;
  std::vector<IndexSet> minimal;
  std::vector<RationalPoint> subset;
  const std::size_t kmax = std::min(V.size(), p.dim() + 1);
  for (std::size_t k = 1; k <= kmax; ++k) {
    for_each_combination(V.size(), k, [&](const std::vector<std::size_t>& idx) {
      std::uint32_t mask = 0;
      for (auto i : idx) mask |= std::uint32_t{1} << i;
      if (std::any_of(found.begin(), found.end(), [mask](std::uint32_t g) { return (mask & g) == g; })) return false;
      subset.clear();
      for (auto i : idx) subset.push_back(V[i]);
      if (in_hull(subset, p)) {
        found.push_back(mask);
        minimal.emplace_back(idx.begin(), idx.end());
      }
      return false;
    });
  }
  return CovFamily(static_cast<int>(V.size()), std::move(minimal));
}

CovFamily cov_v(const PointConfig& config) {
  if (!config.p) throw InvalidInput("cov_v: configuration has no query point p");
  config.dimension();
  return cov_v(config.V, *config.p);
}

long winding_number(std::span<const Segment> chain, const RationalPoint& p, RayDirection ray) {
  require_dim(p, 2, "winding_number");
  for (const auto& s : chain) {
    require_dim(s.from, 2, "winding_number");
    require_dim(s.to, 2, "winding_number");
    if (on_segment2(s.from, s.to, p)) throw OnImage("point " + format_point(p) + " lies on the loop");
  }
  const auto q = rotate_for(ray, p);
  long w = 0;
  for (const auto& s : chain) {
    const auto a = rotate_for(ray, s.from);
    const auto b = rotate_for(ray, s.to);
    // Half-open rule: a vertex exactly at height q.y counts as lying below.
    if (a[1] <= q[1]) {
      if (b[1] > q[1] && orient2(a, b, q) > 0) ++w;
    } else if (b[1] <= q[1] && orient2(a, b, q) < 0) {
      --w;
    }
  }
  return w;
}

long winding_number(std::span<const RationalPoint> loop, const RationalPoint& p, RayDirection ray) {
  std::vector<Segment> chain;
  chain.reserve(loop.size());
  for (std::size_t i = 0; i < loop.size(); ++i) chain.push_back({loop[i], loop[(i + 1) % loop.size()]});
  return winding_number(chain, p, ray);
}

long sphere_degree_from_point(std::span<const OrientedTriangle> triangles, const RationalPoint& p) {
  require_dim(p, 3, "sphere_degree_from_point");
  std::vector<Rational> dets;
  dets.reserve(triangles.size());
  for (const auto& t : triangles) {
    require_dim(t.a, 3, "sphere_degree_from_point");
    require_dim(t.b, 3, "sphere_degree_from_point");
    require_dim(t.c, 3, "sphere_degree_from_point");
    dets.push_back(det3(t.a - p, t.b - p, t.c - p));
    if (dets.back() == 0) {
      const RationalPoint pts[] = {t.a, t.b, t.c};
      if (in_hull(pts, p)) throw OnImage("point " + format_point(p) + " lies on the surface image");
    }
  }

  // Directions (1, k, k^2) lie on the moment curve, which meets each bad
  // plane at most twice and each bad direction at most once.
  auto hits_vertex = [&](const RationalPoint& q, const RationalPoint& r) {
    const auto w = q - p;
    return is_zero(cross(w, r)) && dot(w, r) > 0;
  };
  auto bad_direction = [&](const RationalPoint& r) {
    for (const auto& t : triangles) {
      const RationalPoint* pts[] = {&t.a, &t.b, &t.c};
      for (int i = 0; i < 3; ++i) {
        const auto& a = *pts[i];
        const auto& b = *pts[(i + 1) % 3];
        if (hits_vertex(a, r)) return true;
        const auto n = cross(a - p, b - p);
        if (!is_zero(n) && dot(n, r) == 0) return true;
      }
    }
    return false;
  };
  RationalPoint ray;
  const long attempts = 6 * static_cast<long>(triangles.size()) + 8;
  bool chosen = false;
  for (long k = 1; k <= attempts && !chosen; ++k) {
    ray = RationalPoint{Rational(1), Rational(k), Rational(k * k)};
    chosen = !bad_direction(ray);
  }
  if (!chosen) throw Error("sphere_degree_from_point: no generic ray direction found");

  long degree = 0;
  for (std::size_t i = 0; i < triangles.size(); ++i) {
    const int sd = sign(dets[i]);
    if (sd == 0) continue;
    const auto& t = triangles[i];
    const auto a = t.a - p, b = t.b - p, c = t.c - p;
    if (sign(det3(ray, b, c)) == sd && sign(det3(a, ray, c)) == sd && sign(det3(a, b, ray)) == sd) {
      degree += t.sign * sd;
    }
  }
  return degree;
}

long sphere_degree_from_point(const OrientedComplex& surface, std::span<const RationalPoint> realization,
                              const RationalPoint& p) {
  if (surface.dimension() != 2) throw InvalidInput("sphere_degree_from_point: surface must be 2-dimensional");
  std::vector<OrientedTriangle> triangles;
  const auto& tops = surface.top_simplices();
  for (std::size_t i = 0; i < tops.size(); ++i) {
    const auto& s = tops[i];
    for (Vertex v : s) {
      if (static_cast<std::size_t>(v) >= realization.size()) throw InvalidInput("realization misses a vertex");
    }
    triangles.push_back({realization[s[0]], realization[s[1]], realization[s[2]], surface.signs()[i]});
  }
  return sphere_degree_from_point(triangles, p);
}

std::optional<Hyperplane> hyperplane_through(std::span<const RationalPoint> points) {
  if (points.empty()) return std::nullopt;
  const std::size_t d = points.front().dim();
  if (points.size() != d) throw InvalidInput("hyperplane_through needs exactly d points");
  std::vector<RationalPoint> diffs;
  for (std::size_t i = 1; i < d; ++i) diffs.push_back(points[i] - points[0]);
  std::vector<Rational> normal(d);
  for (std::size_t j = 0; j < d; ++j) {
    std::vector<std::vector<Rational>> minor;
    for (const auto& w : diffs) {
      std::vector<Rational> row;
      for (std::size_t c = 0; c < d; ++c) {
        if (c != j) row.push_back(w[c]);
      }
      minor.push_back(std::move(row));
    }
    normal[j] = (j % 2 == 0 ? 1 : -1) * (d == 1 ? Rational(1) : determinant(std::move(minor)));
  }
  auto lead = std::find_if(normal.begin(), normal.end(), [](const Rational& x) { return x != 0; });
  if (lead == normal.end()) return std::nullopt;
  const Rational scale = *lead;
  for (auto& x : normal) x /= scale;
  Hyperplane h{RationalPoint(std::move(normal)), 0};
  h.offset = dot(h.normal, points[0]);
  return h;
}

std::vector<Facet> hull_facets(std::span<const RationalPoint> V) {
  if (V.empty()) throw InvalidInput("hull_facets: empty point set");
  const std::size_t d = V.front().dim();
  for (const auto& v : V) require_dim(v, d, "hull_facets");
  std::vector<Facet> facets;
  std::vector<RationalPoint> subset;
  bool any_plane = false;
  for_each_combination(V.size(), d, [&](const std::vector<std::size_t>& idx) {
    subset.clear();
    for (auto i : idx) subset.push_back(V[i]);
    auto plane = hyperplane_through(subset);
    if (!plane) return false;
    any_plane = true;
    int lo = 0, hi = 0;
    IndexSet on;
    for (std::size_t i = 0; i < V.size(); ++i) {
      const int s = sign(plane->evaluate(V[i]));
      lo += s < 0;
      hi += s > 0;
      if (s == 0) on.push_back(static_cast<int>(i));
    }
    if (lo == 0 && hi == 0) throw InvalidInput("hull_facets: points are not full-dimensional");
    if (lo > 0 && hi > 0) return false;
    if (hi > 0) {
      plane->normal = plane->normal * Rational(-1);
      plane->offset = -plane->offset;
    }
    if (std::none_of(facets.begin(), facets.end(), [&](const Facet& f) { return f.vertices == on; })) {
      facets.push_back({*plane, std::move(on)});
    }
    return false;
  });
  if (!any_plane) throw InvalidInput("hull_facets: points are not full-dimensional");
  return facets;
}

bool on_common_facet(std::span<const Facet> facets, std::span<const RationalPoint> V, const IndexSet& indices) {
  return std::any_of(facets.begin(), facets.end(), [&](const Facet& f) {
    return std::all_of(indices.begin(), indices.end(), [&](int i) {
      return f.plane.evaluate(V[static_cast<std::size_t>(i)]) == 0;
    });
  });
}

RationalPoint generic_facet_point(std::span<const RationalPoint> V, const Facet& facet) {
  const std::size_t d = V.front().dim();
  std::vector<RationalPoint> W;
  for (int i : facet.vertices) W.push_back(V[static_cast<std::size_t>(i)]);
  for (long t = 1; t <= 64; ++t) {
    std::vector<Rational> weights;
    Rational total = 0;
    for (std::size_t i = 0; i < W.size(); ++i) {
      Rational w = 1;
      for (long e = 0; e < t; ++e) w *= Rational(static_cast<long>(i) + 2);
      w = w / Rational(static_cast<long>(i) + t + 1) + 1;
      weights.push_back(w);
      total += w;
    }
    for (auto& w : weights) w /= total;
    const auto x = combine(W, weights);
    std::vector<RationalPoint> subset;
    const bool blocked = d >= 2 && for_each_combination(W.size(), d - 1, [&](const std::vector<std::size_t>& idx) {
      subset.clear();
      for (auto i : idx) subset.push_back(W[i]);
      return in_hull(subset, x);
    });
    if (!blocked) return x;
  }
  throw Error("generic_facet_point: no generic point found");
}

std::vector<IndexSet> simplex_coverage(std::span<const RationalPoint> V, const RationalPoint& x) {
  const std::size_t d = x.dim();
  std::vector<IndexSet> out;
  std::vector<RationalPoint> subset;
  for_each_combination(V.size(), d + 1, [&](const std::vector<std::size_t>& idx) {
    subset.clear();
    for (auto i : idx) subset.push_back(V[i]);
    auto coords = barycentric(subset, x);
    if (coords && std::all_of(coords->begin(), coords->end(), [](const Rational& w) { return w >= 0; })) {
      out.emplace_back(idx.begin(), idx.end());
    }
    return false;
  });
  return out;
}

}  // namespace kkm
