#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "kkm/covers.hpp"
#include "kkm/errors.hpp"
#include "kkm/fixtures.hpp"
#include "oracles.hpp"

#include <random>
#include <set>

using namespace kkm;
namespace fx = kkm::fixtures;

namespace {

std::vector<std::vector<Simplex>> random_generators(const SimplicialComplex& K, int sets, std::mt19937_64& rng) {
  std::vector<std::vector<Simplex>> gens(static_cast<std::size_t>(sets));
  const auto& all = K.simplices();
  // Guarantee coverage by seeding each vertex and each top simplex.
  for (Vertex v : K.vertices()) gens[rng() % gens.size()].push_back(Simplex{v});
  for (const auto& t : K.maximal_simplices()) gens[rng() % gens.size()].push_back(t);
  for (int extra = 0; extra < 4; ++extra) gens[rng() % gens.size()].push_back(all[rng() % all.size()]);
  return gens;
}

std::vector<std::vector<Simplex>> oracle_sets(const SimplicialComplex& K, const std::vector<std::vector<Simplex>>& gens,
                                              CoverSemantics semantics) {
  std::vector<std::vector<Simplex>> out;
  for (const auto& g : gens) {
    out.push_back(semantics == CoverSemantics::Star ? oracle::close_up(K.simplices(), g)
                                                    : oracle::close_down(K.simplices(), g));
  }
  return out;
}

bool oracle_common(const SimplicialComplex& K, const std::vector<std::vector<Simplex>>& sets, const IndexSet& J) {
  for (const auto& s : K.simplices()) {
    bool all = true;
    for (int j : J) all = all && std::count(sets[static_cast<std::size_t>(j)].begin(), sets[static_cast<std::size_t>(j)].end(), s);
    if (all) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("cover closure matches upward and downward closure of generators") {
  std::mt19937_64 rng(41);
  const auto K = barycentric_subdivision(fx::simplex(2), 1).complex;
  for (auto semantics : {CoverSemantics::Star, CoverSemantics::Closed}) {
    for (int trial = 0; trial < 40; ++trial) {
      const auto gens = random_generators(K, 4, rng);
      std::optional<Cover> cover;
      const auto expected = oracle_sets(K, gens, semantics);
      bool covered = true;
      for (const auto& s : K.simplices()) {
        bool any = false;
        for (const auto& set : expected) any = any || std::count(set.begin(), set.end(), s);
        covered = covered && any;
      }
      if (!covered) {
        CHECK_THROWS_AS(Cover(K, gens, semantics), InvalidInput);
        continue;
      }
      cover.emplace(K, gens, semantics);
      for (int i = 0; i < 4; ++i) CHECK(cover->set(i) == expected[static_cast<std::size_t>(i)]);
    }
  }
  CHECK_THROWS_AS(Cover(K, {{Simplex{0, 9}}}, CoverSemantics::Star), InvalidInput);
  CHECK_THROWS_AS(Cover(K, {}, CoverSemantics::Star), InvalidInput);
}

TEST_CASE("nerve matches brute-force intersection over every index set") {
  std::mt19937_64 rng(42);
  const auto K = fx::disk(6, 2).complex();
  for (auto semantics : {CoverSemantics::Star, CoverSemantics::Closed}) {
    int tested = 0;
    for (int trial = 0; trial < 60 && tested < 25; ++trial) {
      const auto gens = random_generators(K, 5, rng);
      const auto expected = oracle_sets(K, gens, semantics);
      std::optional<Cover> cover;
      try {
        cover.emplace(K, gens, semantics);
      } catch (const InvalidInput&) {
        continue;
      }
      ++tested;
      const auto N = nerve(*cover);
      for (int mask = 1; mask < 32; ++mask) {
        IndexSet J;
        for (int i = 0; i < 5; ++i) {
          if (mask >> i & 1) J.push_back(i);
        }
        const bool meets = oracle_common(K, expected, J);
        CHECK(N.contains(J) == meets);
        CHECK(common_simplex(*cover, J).has_value() == meets);
      }
    }
    CHECK(tested >= 10);
  }
}

TEST_CASE("cover from a labeling") {
  std::mt19937_64 rng(43);
  const auto K = fx::disk(7, 2).complex();
  std::vector<int> labels(static_cast<std::size_t>(K.vertex_count()));
  for (auto& l : labels) l = static_cast<int>(rng() % 3);
  const Labeling L{2, labels};
  const auto cover = cover_from_labeling(K, L);
  CHECK(cover.size() == 3);
  for (const auto& s : K.simplices()) {
    for (int l = 0; l < 3; ++l) {
      bool has = false;
      for (Vertex v : s) has = has || L(v) == l;
      CHECK(cover.in_set(l, s) == has);
    }
  }
}

TEST_CASE("extension check reports differences on A") {
  std::mt19937_64 rng(44);
  const auto disk = fx::disk(9, 2);
  const auto A = fx::boundary_of(disk);
  const auto L = fx::random_interior(disk, fx::polygon_walk(9, 3, 1), 2, rng);
  const auto S = cover_from_labeling(A, L);
  const auto F = fx::random_extension(disk.complex(), A, L, rng);
  CHECK(extension_check(S, F).extends);
  auto L2 = L;
  L2.labels[0] = (L2.labels[0] + 1) % 3;
  const auto bad = extension_check(S, cover_from_labeling(disk.complex(), L2));
  CHECK_FALSE(bad.extends);
  REQUIRE_FALSE(bad.diffs.empty());
  for (const auto& d : bad.diffs) {
    for (const auto& s : d.missing) CHECK(s.contains(0));
    for (const auto& s : d.extra) CHECK(s.contains(0));
  }
  CHECK_THROWS_AS(extension_check(S, cover_from_labeling(disk.complex(), Labeling{3, std::vector<int>(19, 0)})),
                  InvalidInput);
}

TEST_CASE("cover degree equals labeling degree on winding cycles") {
  for (long k = -5; k <= 5; ++k) {
    const auto fixture = construct_winding_labeling(k);
    const auto cover = cover_from_labeling(fixture.cycle.complex(), fixture.labeling);
    CHECK(cover_degree(cover, fixture.cycle).value == degree_labeling(fixture.cycle, fixture.labeling).value);
    CHECK(cover_degree_weighted(cover, fixture.cycle, canonical_weights(cover)) == k);
  }
}

TEST_CASE("closed cover of a triangle boundary by its edges has degree 1") {
  // C_0 = [0,1], C_1 = [1,2], C_2 = [0,2]. The barycentric labels around the
  // cycle read 0,0,0,1,1,2, one turn around the triangle.
  const auto cyc = fx::cycle(3);
  const Cover cover(cyc.complex(), {{Simplex{0, 1}}, {Simplex{1, 2}}, {Simplex{0, 2}}}, CoverSemantics::Closed);
  CHECK(cover_degree(cover, cyc).value == 1);
  CHECK(cover_degree(cover, cyc.reversed()).value == -1);
  CHECK(nerve(cover).complex.maximal_simplices() == std::vector<Simplex>{{0, 1}, {0, 2}, {1, 2}});
  CHECK(total_intersection_empty(cover));
}

TEST_CASE("closed facet cover of a tetrahedron boundary") {
  const auto sphere = fx::canonical_sphere(3);
  std::vector<std::vector<Simplex>> sets;
  for (int j = 0; j < 4; ++j) {
    std::vector<Vertex> face;
    for (int v = 0; v < 4; ++v) {
      if (v != j) face.push_back(v);
    }
    sets.push_back({Simplex(face)});
  }
  const Cover cover(sphere.complex(), sets, CoverSemantics::Closed);
  std::optional<OrientedComplex> sub;
  const auto L = canonical_labeling(cover, sphere, &sub);
  REQUIRE(sub);
  // Independent labels: a barycenter of sigma gets the least j not in sigma.
  const auto subdivision = barycentric_subdivision(sphere, 1);
  std::vector<int> expected;
  for (const auto& prov : subdivision.subdivision.provenance) {
    int j = 0;
    while (prov.carrier.contains(j)) ++j;
    expected.push_back(j);
  }
  CHECK(L.labels == expected);
  const long deg = cover_degree(cover, sphere).value;
  CHECK(deg == oracle::geometric_degree(*sub, expected, 3));
  CHECK(std::labs(deg) == 1);
}

TEST_CASE("partition weights") {
  const auto fixture = construct_winding_labeling(2);
  const auto cover = cover_from_labeling(fixture.cycle.complex(), fixture.labeling);
  const auto w = canonical_weights(cover);
  CHECK_NOTHROW(validate_weights(cover, w));
  const auto V = fx::triangle_points();
  for (Vertex u : fixture.cycle.complex().vertices()) {
    const std::vector<Rational> one{Rational(1)};
    CHECK(rho_eval(cover, w, V, Simplex{u}, one) == V[static_cast<std::size_t>(fixture.labeling(u))]);
  }
  auto bad = w;
  bad.weights[0] = {Rational(1, 2), Rational(1, 2), Rational(0)};
  if (fixture.labeling(0) != 1) {
    CHECK_THROWS_AS(validate_weights(cover, bad), InvalidInput);
  }
  bad = w;
  bad.weights[1][static_cast<std::size_t>(fixture.labeling(1))] = Rational(1, 2);
  CHECK_THROWS_AS(validate_weights(cover, bad), InvalidInput);
  bad = w;
  bad.weights[2].pop_back();
  CHECK_THROWS_AS(validate_weights(cover, bad), InvalidInput);
  // Midpoint of an edge maps to the midpoint of the labels' corners.
  const Simplex e{0, 1};
  const std::vector<Rational> half{Rational(1, 2), Rational(1, 2)};
  CHECK(rho_eval(cover, w, V, e, half) ==
        (V[static_cast<std::size_t>(fixture.labeling(0))] + V[static_cast<std::size_t>(fixture.labeling(1))]) * Rational(1, 2));
}

TEST_CASE("p_in_complement agrees with the exact image test") {
  std::mt19937_64 rng(45);
  const auto K = fx::disk(6, 2).complex();
  int tested = 0, on_image = 0;
  for (int trial = 0; trial < 200 && tested < 80; ++trial) {
    const int sets = 3 + static_cast<int>(rng() % 3);
    const auto gens = random_generators(K, sets, rng);
    std::optional<Cover> cover;
    try {
      cover.emplace(K, gens, trial % 2 ? CoverSemantics::Star : CoverSemantics::Closed);
    } catch (const InvalidInput&) {
      continue;
    }
    ++tested;
    std::vector<RationalPoint> V;
    for (int i = 0; i < sets; ++i) V.push_back(oracle::random_point(rng, 2, 2, 1));
    const auto p = oracle::random_point(rng, 2, 2, 3);
    // Image = union over nerve simplices J of conv(V_J).
    const auto N = nerve(*cover);
    bool image = false;
    for (const auto& s : N.complex.simplices()) {
      std::vector<RationalPoint> pts;
      for (Vertex j : s) pts.push_back(V[static_cast<std::size_t>(j)]);
      image = image || oracle::hull_contains(pts, p);
    }
    const auto verdict = p_in_complement(*cover, V, p);
    CHECK(verdict.in_complement == !image);
    CHECK(point_on_image(image_polyhedron(*cover, V), V, p) == image);
    if (verdict.violating) {
      std::vector<RationalPoint> pts;
      for (int j : *verdict.violating) pts.push_back(V[static_cast<std::size_t>(j)]);
      CHECK(oracle::hull_contains(pts, p));
      REQUIRE(verdict.witness);
      for (int j : *verdict.violating) CHECK(cover->in_set(j, *verdict.witness));
    }
    on_image += image;
  }
  CHECK(tested >= 40);
  CHECK(on_image > 0);
  CHECK(on_image < tested);
}
