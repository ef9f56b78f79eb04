// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.
#include "kkm/errors.hpp"
#include "kkm/fixtures.hpp"
#include "kkm/theorems.hpp"
#include "oracles.hpp"

#include <chrono>
#include <climits>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

using namespace kkm;
namespace fx = kkm::fixtures;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream detail;
  int failures = 0;

  void expect(bool cond, const std::string& what) {
    if (cond) return;
    ok = false;
    if (failures++ < 3) detail << " [" << what << "]";
  }
};

using Criterion = std::function<void(Check&)>;

void sphere_degree(Check& c) {
  const auto start = std::chrono::steady_clock::now();
  int runs = 0;
  for (int m = 2; m <= 3; ++m) {
    for (int depth = 1; depth <= 3; ++depth) {
      const auto sub = barycentric_subdivision(fx::canonical_sphere(m), depth);
      const auto L = canonical_sperner_labeling(sperner_context(sub.subdivision, m));
      const auto r = degree_labeling(sub.oriented, L);
      c.expect(r.value == 1, "m=" + std::to_string(m) + " depth=" + std::to_string(depth) + " degree " + std::to_string(r.value));
      c.expect(r.cross_checked.size() == static_cast<std::size_t>(m), "cross-check count");
      for (const auto& [face, value] : r.cross_checked) c.expect(value == 1, "cross-check disagrees");
      ++runs;
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.expect(secs < 5.0, "runtime " + std::to_string(secs) + " s");
  c.detail << " " << runs << " spheres, degree 1, " << secs << " s";
}

void sperner_lemma(Check& c) {
  const auto sub = barycentric_subdivision(fx::oriented_simplex(2), 2);
  const auto ctx = sperner_context(sub.subdivision, 2);
  long min_count = LONG_MAX;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto L = random_sperner_labeling(ctx, fx::split_seed(2024, seed));
    c.expect(validate_sperner(ctx, L).valid, "invalid Sperner labeling");
    const auto count = count_fully_labeled(sub.oriented, L);
    // Independent recount from the triangle list.
    long direct = 0;
    for (const auto& t : sub.oriented.top_simplices()) {
      int mask = 0;
      for (Vertex v : t) mask |= 1 << L(v);
      direct += mask == 7;
    }
    c.expect(direct == count.unsigned_count, "count disagrees with direct scan");
    c.expect(count.unsigned_count % 2 == 1, "even count");
    c.expect(count.signed_count == 1, "signed count " + std::to_string(count.signed_count));
    min_count = std::min(min_count, count.unsigned_count);
  }
  c.detail << " 100 labelings, min count " << min_count << ", signed count 1";
}

void heptagon(Check& c) {
  const auto cyc = fx::cycle(7);
  const auto L = fx::heptagon_labeling();
  const auto V = fx::unit_square();
  const auto disk = fx::disk(7, 2);
  std::mt19937_64 rng(7);
  const auto A = fx::boundary_of(disk);
  const auto LX = fx::random_interior(disk, L.labels, 3, rng);
  const auto S = cover_from_labeling(A, LX);
  const auto F = fx::random_extension(disk.complex(), A, LX, rng);
  std::vector<RationalPoint> loop;
  for (int l : L.labels) loop.push_back(V[static_cast<std::size_t>(l)]);
  int points = 0;
  for (int chamber = 0; chamber < 3; ++chamber) {
    const long expected = chamber == 0 ? 1 : 0;
    for (const auto& p : fx::chamber_samples(chamber, 20, 100 + static_cast<std::uint64_t>(chamber))) {
      long w = 0;
      c.expect(oracle::quadrant_winding(loop, p, w) && w == expected, "oracle disagrees with chamber");
      c.expect(labeling_class_at_point(cyc, L, V, p) == expected, "class at " + format_point(p));
      const auto r = generalized_kkm_verify(S, F, V, p);
      c.expect(r.counts.at("h") == expected, "h at " + format_point(p));
      c.expect((r.verdict == Verdict::Verified) == (expected != 0), "verdict at " + format_point(p));
      ++points;
    }
  }
  const std::vector<RationalPoint> on_image{{Rational(1, 2), Rational(1, 2)}, {Rational(1, 3), Rational(2, 3)},
                                            {Rational(0), Rational(0)},       {Rational(1), Rational(2, 5)},
                                            {Rational(1, 7), Rational(0)},    {Rational(0), Rational(5, 9)}};
  for (const auto& p : on_image) {
    bool raised = false;
    try {
      labeling_class_at_point(cyc, L, V, p);
    } catch (const OnImage&) {
      raised = true;
    }
    c.expect(raised, "no on-image error at " + format_point(p));
    c.expect(!p_in_complement(S, V, p).in_complement, "complement test at " + format_point(p));
  }
  c.detail << " " << points << " chamber points (h=1 in v0v1v3, 0 elsewhere), " << on_image.size() << " on-image points";
}

void degree_bound(Check& c) {
  std::mt19937_64 rng(4);
  const auto disk = fx::disk(12, 3);
  long worst_slack = LONG_MAX;
  for (int trial = 0; trial < 500; ++trial) {
    const long k = static_cast<long>(trial % 7) - 3;
    const auto L = fx::random_interior(disk, fx::polygon_walk(12, 3, k), 2, rng);
    const auto r = deg_lower_bound_verify(disk, L);
    c.expect(r.counts.at("degree") == k, "boundary degree");
    const auto count = count_fully_labeled(disk, L);
    c.expect(count.unsigned_count >= std::labs(k), "count below |k|");
    c.expect(count.signed_count == k, "signed count != k");
    worst_slack = std::min(worst_slack, count.unsigned_count - std::labs(k));
  }
  c.detail << " 500 disks, k in -3..3, min slack " << worst_slack;
}

void polytope(Check& c) {
  const auto P = fx::hexagon();
  const auto peb = pebble_set(P, 2);
  c.expect(peb.certified, "pebble set not certified");
  c.expect(peb.points.size() >= 4, "pebble set too small");
  for (const auto& x : peb.points) c.expect(oracle::strictly_interior(P, x), "pebble not interior");
  std::mt19937_64 rng(5);
  const auto disk = fx::disk(12, 2);
  long min_full = LONG_MAX;
  for (int trial = 0; trial < 100; ++trial) {
    const auto L = fx::random_interior(disk, fx::polygon_walk(12, 6, 1), 5, rng);
    const auto r = polytope_sperner_verify(disk, L, P);
    c.expect(r.verdict == Verdict::Verified, "not verified");
    c.expect(r.counts.at("fully_labeled") >= 4, "fewer than 4 fully labeled");
    min_full = std::min(min_full, r.counts.at("fully_labeled"));
  }
  c.detail << " pebbles " << peb.points.size() << " certified, 100 labelings, min fully labeled " << min_full;
}

void bloch(Check& c) {
  const auto P = fx::unit_square();
  std::mt19937_64 rng(6);
  int odd = 0, even = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const auto fin = fx::fin_complex(rng);
    const auto r = bloch_sperner_verify(fin.complex, fin.labeling, P);
    if (r.counts.at("dg2") % 2 == 1) {
      ++odd;
      c.expect(r.verdict == Verdict::Verified, "odd dg2 not verified");
      c.expect(r.counts.at("fully_labeled") >= static_cast<long>(P.size()) - 2, "fewer than m-2 fully labeled");
    } else {
      ++even;
      c.expect(r.verdict == Verdict::HypothesisFailure, "claim made for even dg2");
    }
  }
  c.expect(odd > 0, "no odd instances in corpus");
  c.detail << " 50 complexes, " << odd << " odd (claim holds), " << even << " even (no claim)";
}

void cov_oracle(Check& c) {
  std::mt19937_64 rng(7);
  long queries = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = 1 + static_cast<std::size_t>(trial % 3);
    const std::size_t count = 1 + static_cast<std::size_t>(rng() % 7);
    std::vector<RationalPoint> V;
    for (std::size_t i = 0; i < count; ++i) V.push_back(oracle::random_point(rng, d, 2, 2));
    const auto p = oracle::random_point(rng, d, 1, 2);
    const auto family = cov_v(V, p);
    auto got = family.minimal_sets();
    auto expected = oracle::cov_minimal(V, p);
    std::sort(got.begin(), got.end());
    std::sort(expected.begin(), expected.end());
    c.expect(got == expected, "minimal sets differ");
    const auto member = oracle::cov_membership(V, p);
    for (std::size_t mask = 1; mask < member.size(); ++mask) {
      IndexSet J;
      for (std::size_t i = 0; i < count; ++i) {
        if (mask >> i & 1) J.push_back(static_cast<int>(i));
      }
      c.expect(family.contains(J) == member[mask], "membership query differs");
      ++queries;
    }
  }
  c.detail << " 200 configs, " << queries << " up-set queries";
}

void coherence(Check& c) {
  int fixtures = 0;
  for (long k = -5; k <= 5; ++k) {
    const auto w = construct_winding_labeling(k);
    const long a = cover_degree(cover_from_labeling(w.cycle.complex(), w.labeling), w.cycle).value;
    const long b = degree_labeling(w.cycle, w.labeling).value;
    c.expect(a == b && b == k, "winding k=" + std::to_string(k));
    ++fixtures;
  }
  std::mt19937_64 rng(8);
  for (int n = 3; n <= 12; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      const auto cyc = trial % 2 ? fx::cycle(n).reversed() : fx::cycle(n);
      std::vector<int> labels(static_cast<std::size_t>(n));
      for (auto& l : labels) l = static_cast<int>(rng() % 3);
      const Labeling L{2, labels};
      const long a = cover_degree(cover_from_labeling(cyc.complex(), L), cyc).value;
      c.expect(a == degree_labeling(cyc, L).value, "cycle " + std::to_string(n));
      c.expect(a == oracle::geometric_degree(cyc, labels, 2), "oracle cycle " + std::to_string(n));
      ++fixtures;
    }
  }
  const auto disk_bd = induced_boundary_orientation(fx::disk(9, 2));
  std::vector<int> walk = fx::polygon_walk(9, 3, -1);
  std::vector<int> labels(static_cast<std::size_t>(disk_bd.complex().vertex_count()), 0);
  for (std::size_t i = 0; i < walk.size(); ++i) labels[i] = walk[i];
  const Labeling L{2, labels};
  c.expect(cover_degree(cover_from_labeling(disk_bd.complex(), L), disk_bd).value == degree_labeling(disk_bd, L).value,
           "disk boundary");
  ++fixtures;
  c.detail << " " << fixtures << " one-dimensional fixtures";
}

void tucker(Check& c) {
  static constexpr int arc_index[] = {0, 2, 1, 3};
  std::mt19937_64 rng(9);
  const auto disk = fx::disk(8, 2);
  const auto A = fx::boundary_of(disk);
  auto walk = fx::polygon_walk(8, 4, 1);
  for (auto& l : walk) l = arc_index[l];
  int found = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto L = fx::random_interior(disk, walk, 3, rng);
    const auto S = cover_from_labeling(A, L);
    const auto F = fx::random_extension(disk.complex(), A, L, rng);
    const auto r = tucker_bacon_verify(S, F);
    c.expect(r.counts.at("h") != 0, "h is zero");
    if (r.verdict != Verdict::Verified || !r.witness_indices || !r.witness_simplex) {
      c.expect(false, "no complementary pair");
      continue;
    }
    const int i = (*r.witness_indices)[0];
    const int j = (*r.witness_indices)[1];
    const bool pair = j == i + 1 && i % 2 == 0 && F.in_set(i, *r.witness_simplex) && F.in_set(j, *r.witness_simplex);
    c.expect(pair, "witness is not a complementary pair");
    found += pair;
  }
  c.detail << " complementary pair in " << found << "/100 extensions";
}

bool image_contains(const Cover& cover, const std::vector<RationalPoint>& V, const RationalPoint& p) {
  const auto N = nerve(cover);
  for (const auto& s : N.complex.simplices()) {
    std::vector<RationalPoint> pts;
    for (Vertex j : s) pts.push_back(V[static_cast<std::size_t>(j)]);
    if (oracle::hull_contains(pts, p)) return true;
  }
  return false;
}

void complement(Check& c) {
  long cases = 0;
  auto compare = [&](const Cover& cover, const std::vector<RationalPoint>& V, const RationalPoint& p) {
    const bool in = p_in_complement(cover, V, p).in_complement;
    const bool on = point_on_image(image_polyhedron(cover, V), V, p);
    c.expect(in == !on, "disagreement at " + format_point(p));
    c.expect(on == image_contains(cover, V, p), "oracle disagreement at " + format_point(p));
    ++cases;
  };
  // Fixtures: the heptagon cover and winding covers.
  const auto V4 = fx::unit_square();
  const auto hept = cover_from_labeling(fx::cycle(7).complex(), fx::heptagon_labeling());
  for (int chamber = 0; chamber < 3; ++chamber) {
    for (const auto& p : fx::chamber_samples(chamber, 5, 50 + static_cast<std::uint64_t>(chamber))) compare(hept, V4, p);
  }
  compare(hept, V4, {Rational(1, 2), Rational(1, 2)});
  compare(hept, V4, {Rational(1), Rational(1, 3)});
  const auto T = fx::triangle_points();
  for (long k = -5; k <= 5; ++k) {
    const auto w = construct_winding_labeling(k);
    const auto cover = cover_from_labeling(w.cycle.complex(), w.labeling);
    for (const RationalPoint& p : std::vector<RationalPoint>{{Rational(1, 3), Rational(1, 3)}, {Rational(1, 2), Rational(0)}, {Rational(2), Rational(2)}}) {
      compare(cover, T, p);
    }
  }
  // Random configurations over a disk cover.
  std::mt19937_64 rng(10);
  const auto K = fx::disk(6, 2).complex();
  int random = 0;
  while (random < 100) {
    const int sets = 3 + static_cast<int>(rng() % 3);
    std::vector<std::vector<Simplex>> gens(static_cast<std::size_t>(sets));
    for (Vertex v : K.vertices()) gens[rng() % gens.size()].push_back(Simplex{v});
    for (const auto& t : K.maximal_simplices()) gens[rng() % gens.size()].push_back(t);
    const auto semantics = random % 2 ? CoverSemantics::Star : CoverSemantics::Closed;
    std::optional<Cover> cover;
    try {
      cover.emplace(K, gens, semantics);
    } catch (const InvalidInput&) {
      continue;
    }
    std::vector<RationalPoint> V;
    for (int i = 0; i < sets; ++i) V.push_back(oracle::random_point(rng, 2, 2, 1));
    compare(*cover, V, oracle::random_point(rng, 2, 2, 3));
    ++random;
  }
  c.detail << " " << cases << " cases (fixtures + 100 random configs)";
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, Criterion>> criteria{
      {"sphere Sperner degree", sphere_degree},
      {"Sperner lemma", sperner_lemma},
      {"heptagon chambers", heptagon},
      {"degree lower bound", degree_bound},
      {"polytope bound", polytope},
      {"Bloch variant", bloch},
      {"cov oracle equivalence", cov_oracle},
      {"cover/labeling coherence", coherence},
      {"Tucker complementary pair", tucker},
      {"complement equivalence", complement},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail << " exception: " << e.what();
    }
    failed += !c.ok;
    std::printf("criterion %zu: %s - %s:%s\n", i + 1, c.ok ? "PASS" : "FAIL", criteria[i].first, c.detail.str().c_str());
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
  return failed ? 1 : 0;
}
