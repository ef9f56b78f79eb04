#include "kkm/fuzz.hpp"

#include "kkm/errors.hpp"
#include "kkm/fixtures.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <random>
#include <thread>

namespace kkm {

namespace {

namespace fx = fixtures;

TheoremReport sperner_case(std::mt19937_64& rng) {
  static const auto sub = barycentric_subdivision(fx::oriented_simplex(2), 2);
  const auto ctx = sperner_context(sub.subdivision, 2);
  return deg_lower_bound_verify(sub.oriented, random_sperner_labeling(ctx, rng()));
}

TheoremReport degbound_case(std::mt19937_64& rng) {
  static const auto disk = fx::disk(12, 2);
  const long k = static_cast<long>(rng() % 7) - 3;
  return deg_lower_bound_verify(disk, fx::random_interior(disk, fx::polygon_walk(12, 3, k), 2, rng));
}

TheoremReport polytope_case(std::mt19937_64& rng) {
  static const auto disk = fx::disk(12, 2);
  static const auto P = fx::hexagon();
  return polytope_sperner_verify(disk, fx::random_interior(disk, fx::polygon_walk(12, 6, 1), 5, rng), P);
}

TheoremReport bloch_case(std::mt19937_64& rng) {
  static const auto P = fx::unit_square();
  auto fin = fx::fin_complex(rng);
  return bloch_sperner_verify(fin.complex, fin.labeling, P);
}

struct CoverPair {
  Cover S;
  Cover F;
};

CoverPair boundary_cover_pair(const OrientedComplex& disk, const Labeling& labeling, std::mt19937_64& rng) {
  const auto A = fx::boundary_of(disk);
  return {cover_from_labeling(A, labeling), fx::random_extension(disk.complex(), A, labeling, rng)};
}

TheoremReport kkm_case(std::mt19937_64& rng) {
  static const auto disk = fx::disk(9, 2);
  const long k = static_cast<long>(rng() % 5) - 2;
  const auto labeling = fx::random_interior(disk, fx::polygon_walk(9, 3, k), 2, rng);
  auto pair = boundary_cover_pair(disk, labeling, rng);
  return kkm_verify(pair.S, pair.F);
}

std::vector<int> heptagon_boundary() { return fx::heptagon_labeling().labels; }

TheoremReport gkkm_case(std::mt19937_64& rng) {
  static const auto disk = fx::disk(7, 2);
  static const auto V = fx::unit_square();
  const auto labeling = fx::random_interior(disk, heptagon_boundary(), 3, rng);
  auto pair = boundary_cover_pair(disk, labeling, rng);
  const auto p = fx::chamber_samples(static_cast<int>(rng() % 2), 1, rng()).front();
  return generalized_kkm_verify(pair.S, pair.F, V, p);
}

TheoremReport gsperner_case(std::mt19937_64& rng) {
  static const auto disk = fx::disk(7, 2);
  static const auto V = fx::unit_square();
  const auto labeling = fx::random_interior(disk, heptagon_boundary(), 3, rng);
  const auto p = fx::chamber_samples(static_cast<int>(rng() % 2), 1, rng()).front();
  return generalized_sperner_verify(disk.complex(), fx::boundary_of(disk), labeling, V, p);
}

TheoremReport tucker_case(std::mt19937_64& rng) {
  static const auto disk = fx::disk(8, 2);
  // Arcs +1, +2, -1, -2 in cyclic order.
  static constexpr int arc_index[] = {0, 2, 1, 3};
  auto walk = fx::polygon_walk(8, 4, 1);
  for (auto& l : walk) l = arc_index[l];
  const auto labeling = fx::random_interior(disk, walk, 3, rng);
  auto pair = boundary_cover_pair(disk, labeling, rng);
  return tucker_bacon_verify(pair.S, pair.F);
}

using CaseFn = TheoremReport (*)(std::mt19937_64&);

CaseFn lookup(const std::string& family) {
  if (family == "sperner") return sperner_case;
  if (family == "degbound") return degbound_case;
  if (family == "polytope") return polytope_case;
  if (family == "bloch") return bloch_case;
  if (family == "kkm") return kkm_case;
  if (family == "gkkm") return gkkm_case;
  if (family == "gsperner") return gsperner_case;
  if (family == "tucker") return tucker_case;
  throw InvalidInput("unknown fuzz family '" + family + "'");
}

}  // namespace

const std::vector<std::string>& fuzz_families() {
  static const std::vector<std::string> names{"sperner", "degbound", "polytope", "bloch",
                                              "kkm",     "gkkm",     "gsperner", "tucker"};
  return names;
}

TheoremReport fuzz_instance(const std::string& family, std::uint64_t instance_seed) {
  std::mt19937_64 rng(instance_seed);
  return lookup(family)(rng);
}

FuzzSummary run_fuzz(const std::string& family, long count, std::uint64_t seed, unsigned threads) {
  lookup(family);
  if (count < 0) throw InvalidInput("fuzz count must be non-negative");
  std::vector<TheoremReport> reports(static_cast<std::size_t>(count));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(count));
  std::atomic<long> next{0};
  auto worker = [&] {
    for (long i = next++; i < count; i = next++) {
      try {
        reports[static_cast<std::size_t>(i)] =
            fuzz_instance(family, fixtures::split_seed(seed, static_cast<std::uint64_t>(i)));
      } catch (...) {
        errors[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<long>(count, 1))));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  FuzzSummary summary;
  summary.family = family;
  summary.instances = count;
  for (long i = 0; i < count; ++i) {
    const auto& r = reports[static_cast<std::size_t>(i)];
    switch (r.verdict) {
      case Verdict::Verified: ++summary.verified; break;
      case Verdict::HypothesisFailure: ++summary.hypothesis_failures; break;
      case Verdict::NoWitness:
        ++summary.alarms;
        summary.alarm_details.push_back("instance " + std::to_string(i) + " seed " +
                                        std::to_string(fixtures::split_seed(seed, static_cast<std::uint64_t>(i))) +
                                        ": " + r.note);
        break;
    }
  }
  return summary;
}

}  // namespace kkm
