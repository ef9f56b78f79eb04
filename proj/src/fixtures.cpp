#include "kkm/fixtures.hpp"

#include "kkm/errors.hpp"

#include <algorithm>
#include <map>

namespace kkm::fixtures {

namespace {

std::vector<Vertex> iota_vertices(int count) {
  std::vector<Vertex> v(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) v[static_cast<std::size_t>(i)] = i;
  return v;
}

}  // namespace

SimplicialComplex simplex(int m) {
  if (m < 0) throw InvalidInput("simplex dimension must be non-negative");
  std::vector<Simplex> tops{Simplex::from_sorted(iota_vertices(m + 1))};
  return SimplicialComplex::from_simplices(tops);
}

SimplicialComplex simplex_boundary(int m) {
  if (m < 1) throw InvalidInput("boundary sphere needs m >= 1");
  const auto full = Simplex::from_sorted(iota_vertices(m + 1));
  std::vector<Simplex> faces;
  for (std::size_t i = 0; i < full.size(); ++i) faces.push_back(full.without(i));
  return SimplicialComplex::from_simplices(faces, m + 1);
}

OrientedComplex oriented_simplex(int m) { return OrientedComplex(simplex(m), {1}); }

OrientedComplex canonical_sphere(int m) { return induced_boundary_orientation(oriented_simplex(m)); }

OrientedComplex cycle(int n) {
  if (n < 3) throw InvalidInput("a cycle needs at least 3 vertices");
  std::vector<Simplex> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back(Simplex{i, i + 1});
  edges.push_back(Simplex{0, n - 1});
  auto complex = SimplicialComplex::from_simplices(edges);
  std::vector<int> signs;
  for (const auto& e : complex.maximal_simplices()) signs.push_back(e[0] == 0 && e[1] == n - 1 ? -1 : 1);
  return OrientedComplex(std::move(complex), std::move(signs));
}

OrientedComplex disk(int n, int rings) {
  if (n < 3 || rings < 1) throw InvalidInput("disk needs n >= 3 and rings >= 1");
  std::vector<Simplex> tris;
  for (int r = 0; r + 1 < rings; ++r) {
    for (int j = 0; j < n; ++j) {
      const int a = r * n + j, a1 = r * n + (j + 1) % n;
      const int b = (r + 1) * n + j, b1 = (r + 1) * n + (j + 1) % n;
      tris.push_back(Simplex{a, a1, b});
      tris.push_back(Simplex{a1, b1, b});
    }
  }
  const int centre = rings * n;
  const int last = (rings - 1) * n;
  for (int j = 0; j < n; ++j) tris.push_back(Simplex{last + j, last + (j + 1) % n, centre});
  auto oriented = orient(SimplicialComplex::from_simplices(tris), +1);
  const auto boundary = induced_boundary_orientation(oriented);
  return boundary.sign(Simplex{0, 1}) > 0 ? oriented : oriented.reversed();
}

SimplicialComplex mobius_band() {
  // t0 t1 t2 = 0 1 2, b0 b1 b2 = 3 4 5
  return build_complex({{0, 1, 3}, {1, 3, 4}, {1, 2, 4}, {2, 4, 5}, {2, 3, 5}, {0, 3, 5}});
}

SimplicialComplex mobius_band5() {
  std::vector<std::vector<Vertex>> tris;
  for (int i = 0; i < 5; ++i) tris.push_back({i, (i + 1) % 5, (i + 2) % 5});
  return build_complex(tris);
}

std::vector<RationalPoint> triangle_points() { return {{0, 0}, {1, 0}, {0, 1}}; }

std::vector<RationalPoint> unit_square() { return {{0, 0}, {1, 0}, {1, 1}, {0, 1}}; }

std::vector<RationalPoint> hexagon() { return {{2, 0}, {1, 1}, {-1, 1}, {-2, 0}, {-1, -1}, {1, -1}}; }

std::vector<RationalPoint> tetrahedron() { return {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}; }

Labeling heptagon_labeling() { return Labeling{3, {0, 1, 2, 3, 2, 1, 3}}; }

std::vector<int> polygon_walk(int n, int sides, long k) {
  if (sides < 2 || n < 2) throw InvalidInput("polygon walk needs sides >= 2 and n >= 2");
  const long reach = static_cast<long>(sides) * std::labs(k);
  if (n < reach) throw InvalidInput("polygon walk needs at least sides * |k| vertices");
  std::vector<int> out;
  for (long j = 0; j < n; ++j) {
    if (k == 0) {
      out.push_back(j < n / 2 ? 0 : 1);
      continue;
    }
    const long t = (reach * j / n) % sides;
    out.push_back(static_cast<int>(k > 0 ? t : (sides - t) % sides));
  }
  return out;
}

Labeling random_interior(const OrientedComplex& disk, const std::vector<int>& boundary, int m, std::mt19937_64& rng) {
  std::vector<int> labels(static_cast<std::size_t>(disk.complex().vertex_count()));
  for (std::size_t v = 0; v < labels.size(); ++v) {
    labels[v] = v < boundary.size() ? boundary[v] : static_cast<int>(rng() % static_cast<std::uint64_t>(m + 1));
  }
  return Labeling{m, std::move(labels)};
}

SimplicialComplex boundary_of(const OrientedComplex& disk) { return manifold_boundary(disk.complex()).complex; }

Cover random_extension(const SimplicialComplex& X, const SimplicialComplex& A, const Labeling& labeling,
                       std::mt19937_64& rng, int extra) {
  std::vector<std::vector<Simplex>> sets(static_cast<std::size_t>(labeling.m) + 1);
  for (Vertex v : X.vertices()) sets[static_cast<std::size_t>(labeling(v))].push_back(Simplex{v});
  std::vector<Simplex> outside;
  for (const auto& s : X.simplices()) {
    if (!A.contains(s)) outside.push_back(s);
  }
  for (int e = 0; e < extra && !outside.empty(); ++e) {
    const auto& s = outside[rng() % outside.size()];
    sets[rng() % sets.size()].push_back(s);
  }
  return Cover(X, std::move(sets), CoverSemantics::Star);
}

std::vector<RationalPoint> chamber_samples(int chamber, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const long D = 997;
  std::vector<RationalPoint> out;
  while (static_cast<int>(out.size()) < count) {
    const long i = 1 + static_cast<long>(rng() % (D - 1));
    const long j = 1 + static_cast<long>(rng() % (D - 1));
    if (chamber == 2) {
      // Outside the square: push one coordinate beyond [0, 1].
      const Rational x(i, D / 3), y(j, D);
      out.push_back(rng() % 2 ? RationalPoint{Rational(1) + x, y} : RationalPoint{y, -x});
      continue;
    }
    if (i + j >= D) continue;
    const Rational a(i, D), b(j, D);
    out.push_back(chamber == 0 ? RationalPoint{a, b} : RationalPoint{Rational(1) - a, Rational(1) - b});
  }
  return out;
}

FinComplex fin_complex(std::mt19937_64& rng) {
  const int n = 8;
  const auto base = disk(n, 2);
  auto adjacent = [](int a, int b) {
    const int diff = ((a - b) % 4 + 4) % 4;
    return diff != 2;
  };
  while (true) {
    std::vector<int> boundary(n);
    boundary[0] = static_cast<int>(rng() % 4);
    for (int j = 1; j < n; ++j) boundary[static_cast<std::size_t>(j)] = (boundary[static_cast<std::size_t>(j) - 1] + static_cast<int>(rng() % 3) + 3) % 4;
    if (!adjacent(boundary.back(), boundary.front())) continue;
    auto labeling = random_interior(base, boundary, 3, rng);

    std::vector<Simplex> tris = base.top_simplices();
    std::map<Simplex, int> incidence;
    for (const auto& t : tris) {
      for (std::size_t i = 0; i < 3; ++i) ++incidence[t.without(i)];
    }
    std::vector<Simplex> candidates;
    for (const auto& [edge, count] : incidence) {
      if (count == 2 && adjacent(labeling(edge[0]), labeling(edge[1]))) candidates.push_back(edge);
    }
    if (candidates.empty()) continue;
    const int fins = 1 + static_cast<int>(rng() % 3);
    for (int f = 0; f < fins; ++f) {
      const auto& edge = candidates[rng() % candidates.size()];
      const Vertex tip = static_cast<Vertex>(labeling.labels.size());
      labeling.labels.push_back(labeling(edge[rng() % 2]));
      tris.push_back(Simplex{edge[0], edge[1], tip});
    }
    return {SimplicialComplex::from_simplices(tris), std::move(labeling)};
  }
}

std::uint64_t split_seed(std::uint64_t seed, std::uint64_t i) {
  std::uint64_t z = seed + i + 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace kkm::fixtures
