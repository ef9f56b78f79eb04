#include "kkm/errors.hpp"
#include "kkm/geometry.hpp"
#include "linalg.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>

namespace kkm {

namespace {

using Bits = std::vector<std::uint64_t>;

bool disjoint(const Bits& a, const Bits& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] & b[i]) return false;
  }
  return true;
}

bool subset_of(const Bits& a, const Bits& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] & ~b[i]) return false;
  }
  return true;
}

std::size_t popcount(const Bits& a) {
  std::size_t n = 0;
  for (auto w : a) n += static_cast<std::size_t>(__builtin_popcountll(w));
  return n;
}

struct Line2 {
  Rational a, b, c;  // a*u + b*v = c
};

std::vector<Rational> sorted_unique(std::vector<Rational> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

std::vector<Rational> midpoints(const std::vector<Rational>& xs) {
  std::vector<Rational> out;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) out.push_back((xs[i] + xs[i + 1]) / 2);
  return out;
}

// One sample point (u, v) inside every bounded cell of a planar line
// arrangement, found by sweeping slab midpoints.
std::vector<std::pair<Rational, Rational>> sample_plane(const std::vector<Line2>& lines) {
  std::vector<Rational> us;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const auto& l = lines[i];
      const auto& m = lines[j];
      const Rational det = l.a * m.b - l.b * m.a;
      if (det == 0) continue;
      us.push_back((l.c * m.b - l.b * m.c) / det);
    }
  }
  std::vector<std::pair<Rational, Rational>> out;
  for (const auto& u : midpoints(sorted_unique(std::move(us)))) {
    std::vector<Rational> vs;
    for (const auto& l : lines) {
      if (l.b != 0) vs.push_back((l.c - l.a * u) / l.b);
    }
    for (const auto& v : midpoints(sorted_unique(std::move(vs)))) out.emplace_back(u, v);
  }
  return out;
}

std::vector<RationalPoint> arrangement_samples(const std::vector<Hyperplane>& planes, int d) {
  std::vector<RationalPoint> out;
  if (d == 2) {
    std::vector<Line2> lines;
    for (const auto& h : planes) lines.push_back({h.normal[0], h.normal[1], h.offset});
    for (auto& [u, v] : sample_plane(lines)) out.push_back(RationalPoint{u, v});
    return out;
  }
  std::vector<Rational> xs;
  for (std::size_t i = 0; i < planes.size(); ++i) {
    for (std::size_t j = i + 1; j < planes.size(); ++j) {
      for (std::size_t k = j + 1; k < planes.size(); ++k) {
        std::vector<std::vector<Rational>> rows;
        std::vector<Rational> rhs;
        for (auto idx : {i, j, k}) {
          rows.push_back(planes[idx].normal.coords());
          rhs.push_back(planes[idx].offset);
        }
        auto sol = detail::solve_linear(std::move(rows), std::move(rhs));
        if (sol.rank == 3) xs.push_back(sol.x[0]);
      }
    }
  }
  for (const auto& x : midpoints(sorted_unique(std::move(xs)))) {
    std::vector<Line2> lines;
    for (const auto& h : planes) {
      if (h.normal[1] == 0 && h.normal[2] == 0) continue;
      lines.push_back({h.normal[1], h.normal[2], h.offset - h.normal[0] * x});
    }
    for (auto& [y, z] : sample_plane(lines)) out.push_back(RationalPoint{x, y, z});
  }
  return out;
}

// A full-dimensional simplex spanned by V: x lies in its interior iff x is
// on the same side of each facet plane as the opposite vertex.
struct SimplexTest {
  IndexSet indices;
  std::vector<std::pair<Hyperplane, int>> sides;

  bool contains(const RationalPoint& x) const {
    return std::all_of(sides.begin(), sides.end(),
                       [&](const auto& s) { return sign(s.first.evaluate(x)) == s.second; });
  }
};

// Largest family of pairwise disjoint sets, stopping once `target` is met.
class IndependentSearch {
 public:
  IndependentSearch(const std::vector<Bits>& sets, std::size_t target, std::size_t node_limit)
      : sets_(sets), target_(target), node_limit_(node_limit) {}

  std::vector<std::size_t> run() {
    std::vector<std::size_t> chosen;
    std::vector<std::size_t> candidates(sets_.size());
    std::iota(candidates.begin(), candidates.end(), 0);
    recurse(chosen, candidates);
    return best_;
  }

  bool exhausted() const { return nodes_ >= node_limit_; }

 private:
  bool recurse(std::vector<std::size_t>& chosen, const std::vector<std::size_t>& candidates) {
    if (chosen.size() > best_.size()) best_ = chosen;
    if (best_.size() >= target_) return true;
    if (++nodes_ >= node_limit_) return true;
    if (chosen.size() + candidates.size() <= best_.size()) return false;
    for (std::size_t pos = 0; pos < candidates.size(); ++pos) {
      if (chosen.size() + (candidates.size() - pos) <= best_.size()) return false;
      const auto pick = candidates[pos];
      std::vector<std::size_t> rest;
      for (std::size_t q = pos + 1; q < candidates.size(); ++q) {
        if (disjoint(sets_[pick], sets_[candidates[q]])) rest.push_back(candidates[q]);
      }
      chosen.push_back(pick);
      const bool stop = recurse(chosen, rest);
      chosen.pop_back();
      if (stop) return true;
    }
    return false;
  }

  const std::vector<Bits>& sets_;
  std::size_t target_;
  std::size_t node_limit_;
  std::size_t nodes_ = 0;
  std::vector<std::size_t> best_;
};

}  // namespace

PebbleResult pebble_set(std::span<const RationalPoint> V, int d) {
  if (d != 2 && d != 3) throw Unsupported("pebble_set supports dimensions 2 and 3");
  for (const auto& v : V) {
    if (v.dim() != static_cast<std::size_t>(d)) throw InvalidInput("pebble_set: point dimension differs from d");
  }
  if (V.size() < static_cast<std::size_t>(d) + 1) throw InvalidInput("pebble_set: need at least d+1 points");
  const auto facets = hull_facets(V);

  PebbleResult result;
  result.bound = V.size() - static_cast<std::size_t>(d);

  std::set<std::pair<std::vector<Rational>, Rational>> seen;
  std::vector<Hyperplane> planes;
  std::vector<SimplexTest> simplices;
  std::vector<std::size_t> idx(static_cast<std::size_t>(d) + 1);
  std::iota(idx.begin(), idx.end(), 0);
  const std::size_t n = V.size();
  const std::size_t k = idx.size();
  while (true) {
    SimplexTest test;
    for (auto i : idx) test.indices.push_back(static_cast<int>(i));
    bool independent = true;
    for (std::size_t drop = 0; drop < k && independent; ++drop) {
      std::vector<RationalPoint> face;
      for (std::size_t j = 0; j < k; ++j) {
        if (j != drop) face.push_back(V[idx[j]]);
      }
      auto h = hyperplane_through(face);
      const int side = h ? sign(h->evaluate(V[idx[drop]])) : 0;
      if (side == 0) {
        independent = false;
        break;
      }
      if (seen.emplace(h->normal.coords(), h->offset).second) planes.push_back(*h);
      test.sides.emplace_back(*h, side);
    }
    if (independent) simplices.push_back(std::move(test));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  // Spanning hyperplanes of dependent d-subsets still cut cells apart.
  std::vector<std::size_t> sub(static_cast<std::size_t>(d));
  std::iota(sub.begin(), sub.end(), 0);
  while (true) {
    std::vector<RationalPoint> face;
    for (auto i : sub) face.push_back(V[i]);
    if (auto h = hyperplane_through(face); h && seen.emplace(h->normal.coords(), h->offset).second) {
      planes.push_back(*h);
    }
    std::size_t i = sub.size();
    while (i > 0 && sub[i - 1] == n - sub.size() + i - 1) --i;
    if (i == 0) break;
    ++sub[i - 1];
    for (std::size_t j = i; j < sub.size(); ++j) sub[j] = sub[j - 1] + 1;
  }

  const std::size_t words = (simplices.size() + 63) / 64;
  std::map<Bits, RationalPoint> classes;
  for (auto& x : arrangement_samples(planes, d)) {
    const bool interior =
        std::all_of(facets.begin(), facets.end(), [&](const Facet& f) { return f.plane.evaluate(x) < 0; });
    if (!interior) continue;
    Bits bits(words, 0);
    for (std::size_t s = 0; s < simplices.size(); ++s) {
      if (simplices[s].contains(x)) bits[s / 64] |= std::uint64_t{1} << (s % 64);
    }
    classes.emplace(std::move(bits), std::move(x));
  }
  result.cells = classes.size();

  // A class whose coverage contains another's is never a better choice.
  std::vector<const std::pair<const Bits, RationalPoint>*> minimal;
  for (const auto& entry : classes) {
    bool dominated = false;
    for (const auto& other : classes) {
      if (&other != &entry && subset_of(other.first, entry.first) && other.first != entry.first) {
        dominated = true;
        break;
      }
    }
    if (!dominated) minimal.push_back(&entry);
  }
  std::stable_sort(minimal.begin(), minimal.end(),
                   [](auto* a, auto* b) { return popcount(a->first) < popcount(b->first); });

  std::vector<std::size_t> picked;
  for (std::size_t i = 0; i < minimal.size() && picked.size() < result.bound; ++i) {
    if (std::all_of(picked.begin(), picked.end(),
                    [&](std::size_t j) { return disjoint(minimal[i]->first, minimal[j]->first); })) {
      picked.push_back(i);
    }
  }
  bool exhausted = false;
  if (picked.size() < result.bound) {
    std::vector<Bits> sets;
    for (auto* e : minimal) sets.push_back(e->first);
    IndependentSearch search(sets, result.bound, 2'000'000);
    auto best = search.run();
    exhausted = search.exhausted();
    if (best.size() > picked.size()) picked = std::move(best);
  }

  for (auto i : picked) {
    result.points.push_back(minimal[i]->second);
    std::vector<IndexSet> cover;
    for (std::size_t s = 0; s < simplices.size(); ++s) {
      if (minimal[i]->first[s / 64] >> (s % 64) & 1) cover.push_back(simplices[s].indices);
    }
    result.coverage.push_back(std::move(cover));
  }
  result.certified = result.points.size() >= result.bound;
  if (!result.certified) {
    result.failure = "found " + std::to_string(result.points.size()) + " pairwise separated points, need " +
                     std::to_string(result.bound) + (exhausted ? " (search budget exhausted)" : " (search complete)");
  }
  return result;
}

}  // namespace kkm
