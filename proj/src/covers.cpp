#include "kkm/covers.hpp"

#include "kkm/errors.hpp"

#include <algorithm>
#include <bit>

namespace kkm {

namespace {

std::uint64_t mask_of(const IndexSet& J, int set_count) {
  std::uint64_t mask = 0;
  for (int j : J) {
    if (j < 0 || j >= set_count) throw InvalidInput("cover index " + std::to_string(j) + " out of range");
    mask |= std::uint64_t{1} << j;
  }
  return mask;
}

IndexSet indices_of(std::uint64_t mask) {
  IndexSet out;
  for (int i = 0; mask; ++i, mask >>= 1) {
    if (mask & 1) out.push_back(i);
  }
  return out;
}

void require_same_ambient(const Cover& cover, const OrientedComplex& ambient) {
  if (!(cover.ambient() == ambient.complex())) throw InvalidInput("orientation is for a different ambient complex");
}

// Every ambient simplex having u as a vertex.
std::vector<std::size_t> closed_star(const SimplicialComplex& complex, Vertex u) {
  std::vector<std::size_t> out;
  const auto& all = complex.simplices();
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i].contains(u)) out.push_back(i);
  }
  return out;
}

}  // namespace

Cover::Cover(SimplicialComplex ambient, std::vector<std::vector<Simplex>> sets, CoverSemantics semantics)
    : ambient_(std::move(ambient)), semantics_(semantics), set_count_(static_cast<int>(sets.size())) {
  if (sets.empty() || sets.size() > static_cast<std::size_t>(max_sets)) {
    throw InvalidInput("a cover needs between 1 and 64 sets");
  }
  const auto& all = ambient_.simplices();
  membership_.assign(all.size(), 0);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (const auto& s : sets[i]) {
      auto idx = ambient_.index_of(s);
      if (!idx) throw InvalidInput("set " + std::to_string(i) + ": simplex " + format_simplex(s) + " not in ambient");
      membership_[*idx] |= std::uint64_t{1} << i;
    }
  }
  // simplices() is sorted by dimension, so one pass in each direction closes.
  if (semantics_ == CoverSemantics::Star) {
    for (std::size_t t = 0; t < all.size(); ++t) {
      if (all[t].size() < 2) continue;
      for (std::size_t k = 0; k < all[t].size(); ++k) membership_[t] |= membership_[*ambient_.index_of(all[t].without(k))];
    }
  } else {
    for (std::size_t t = all.size(); t-- > 0;) {
      if (all[t].size() < 2) continue;
      for (std::size_t k = 0; k < all[t].size(); ++k) membership_[*ambient_.index_of(all[t].without(k))] |= membership_[t];
    }
  }
  for (std::size_t t = 0; t < all.size(); ++t) {
    if (membership_[t] == 0) throw InvalidInput("simplex " + format_simplex(all[t]) + " is not covered");
  }
}

bool Cover::in_set(int set, const Simplex& s) const {
  auto idx = ambient_.index_of(s);
  return idx && (membership_[*idx] >> set & 1);
}

std::vector<Simplex> Cover::set(int i) const {
  std::vector<Simplex> out;
  const auto& all = ambient_.simplices();
  for (std::size_t t = 0; t < all.size(); ++t) {
    if (membership_[t] >> i & 1) out.push_back(all[t]);
  }
  return out;
}

Cover cover_from_labeling(const SimplicialComplex& complex, const Labeling& labeling) {
  require_labels_for(complex, labeling);
  std::vector<std::vector<Simplex>> sets(static_cast<std::size_t>(labeling.m) + 1);
  for (Vertex v : complex.vertices()) sets[static_cast<std::size_t>(labeling(v))].push_back(Simplex{v});
  return Cover(complex, std::move(sets), CoverSemantics::Star);
}

bool Nerve::contains(const IndexSet& J) const {
  if (J.empty()) return true;
  return complex.contains(Simplex(std::vector<Vertex>(J.begin(), J.end())));
}

Nerve nerve(const Cover& cover) {
  std::vector<std::uint64_t> masks;
  for (std::size_t t = 0; t < cover.ambient().simplices().size(); ++t) masks.push_back(cover.membership(t));
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  std::vector<Simplex> generators;
  for (auto m : masks) {
    auto J = indices_of(m);
    generators.push_back(Simplex::from_sorted(std::vector<Vertex>(J.begin(), J.end())));
  }
  return Nerve{SimplicialComplex::from_simplices(generators, cover.size()), cover.size()};
}

std::optional<Simplex> common_simplex(const Cover& cover, const IndexSet& J) {
  const auto want = mask_of(J, cover.size());
  const auto& all = cover.ambient().simplices();
  for (std::size_t t = 0; t < all.size(); ++t) {
    if ((cover.membership(t) & want) == want) return all[t];
  }
  return std::nullopt;
}

bool total_intersection_empty(const Cover& cover) {
  IndexSet all(static_cast<std::size_t>(cover.size()));
  for (int i = 0; i < cover.size(); ++i) all[static_cast<std::size_t>(i)] = i;
  return !common_simplex(cover, all);
}

void validate_weights(const Cover& cover, const PartitionWeights& weights) {
  const auto& K = cover.ambient();
  if (weights.weights.size() < static_cast<std::size_t>(K.vertex_count())) {
    throw InvalidInput("partition weights miss vertices");
  }
  for (Vertex u : K.vertices()) {
    const auto& row = weights.weights[static_cast<std::size_t>(u)];
    if (row.size() != static_cast<std::size_t>(cover.size())) {
      throw InvalidInput("vertex " + std::to_string(u) + ": weight vector length differs from the set count");
    }
    Rational total = 0;
    for (int i = 0; i < cover.size(); ++i) {
      const auto& w = row[static_cast<std::size_t>(i)];
      if (w < 0) throw InvalidInput("vertex " + std::to_string(u) + ": negative weight");
      total += w;
      if (w == 0) continue;
      bool ok = true;
      if (cover.semantics() == CoverSemantics::Star) {
        ok = cover.in_set(i, Simplex{u});
      } else {
        const auto star = closed_star(K, u);
        ok = std::all_of(star.begin(), star.end(), [&](std::size_t t) { return cover.membership(t) >> i & 1; });
      }
      if (!ok) {
        throw InvalidInput("vertex " + std::to_string(u) + ": weight on set " + std::to_string(i) +
                           " is not subordinate to the cover");
      }
    }
    if (total != 1) throw InvalidInput("vertex " + std::to_string(u) + ": weights do not sum to 1");
  }
}

PartitionWeights canonical_weights(const Cover& cover) {
  const auto& K = cover.ambient();
  PartitionWeights out;
  out.weights.assign(static_cast<std::size_t>(K.vertex_count()),
                     std::vector<Rational>(static_cast<std::size_t>(cover.size()), Rational(0)));
  for (Vertex u : K.vertices()) {
    std::uint64_t admissible = 0;
    if (cover.semantics() == CoverSemantics::Star) {
      admissible = cover.membership(*K.index_of(Simplex{u}));
    } else {
      admissible = ~std::uint64_t{0};
      for (auto t : closed_star(K, u)) admissible &= cover.membership(t);
    }
    if (admissible == 0) {
      throw InvalidInput("vertex " + std::to_string(u) + ": no set contains its closed star");
    }
    out.weights[static_cast<std::size_t>(u)][static_cast<std::size_t>(std::countr_zero(admissible))] = 1;
  }
  return out;
}

RationalPoint rho_eval(const Cover& cover, const PartitionWeights& weights, std::span<const RationalPoint> V,
                       const Simplex& carrier, std::span<const Rational> barycentric) {
  if (!cover.ambient().contains(carrier)) throw InvalidInput("carrier " + format_simplex(carrier) + " not in ambient");
  if (barycentric.size() != carrier.size()) throw InvalidInput("barycentric coordinates do not match the carrier");
  if (V.size() < static_cast<std::size_t>(cover.size())) throw InvalidInput("V has fewer points than sets");
  Rational total = 0;
  for (const auto& b : barycentric) {
    if (b < 0) throw InvalidInput("negative barycentric coordinate");
    total += b;
  }
  if (total != 1) throw InvalidInput("barycentric coordinates do not sum to 1");
  std::vector<Rational> phi(static_cast<std::size_t>(cover.size()), Rational(0));
  for (std::size_t k = 0; k < carrier.size(); ++k) {
    const auto& row = weights.weights.at(static_cast<std::size_t>(carrier[k]));
    for (std::size_t i = 0; i < phi.size(); ++i) phi[i] += barycentric[k] * row.at(i);
  }
  return combine(V.first(phi.size()), phi);
}

std::vector<IndexSet> image_polyhedron(const Cover& cover, std::span<const RationalPoint> V) {
  if (V.size() < static_cast<std::size_t>(cover.size())) throw InvalidInput("V has fewer points than sets");
  std::vector<IndexSet> pieces;
  const auto N = nerve(cover);
  for (const auto& s : N.complex.maximal_simplices()) pieces.emplace_back(s.begin(), s.end());
  return pieces;
}

bool point_on_image(std::span<const IndexSet> pieces, std::span<const RationalPoint> V, const RationalPoint& p) {
  std::vector<RationalPoint> pts;
  for (const auto& J : pieces) {
    pts.clear();
    for (int j : J) pts.push_back(V[static_cast<std::size_t>(j)]);
    if (in_hull(pts, p)) return true;
  }
  return false;
}

ComplementVerdict p_in_complement(const Cover& cover, std::span<const RationalPoint> V, const RationalPoint& p) {
  if (V.size() != static_cast<std::size_t>(cover.size())) throw InvalidInput("V must have one point per set");
  ComplementVerdict verdict;
  const auto cov = cov_v(V, p);
  for (const auto& J : cov.minimal_sets()) {
    if (auto s = common_simplex(cover, J)) {
      verdict.in_complement = false;
      verdict.violating = J;
      verdict.witness = *s;
      break;
    }
  }
  return verdict;
}

ExtensionVerdict extension_check(const Cover& S, const Cover& F) {
  if (S.size() != F.size()) throw InvalidInput("covers have different index counts");
  if (S.semantics() != F.semantics()) throw InvalidInput("covers have different semantics");
  if (!S.ambient().is_subcomplex_of(F.ambient())) throw InvalidInput("A is not a subcomplex of X");
  ExtensionVerdict verdict;
  for (int i = 0; i < S.size(); ++i) {
    ExtensionDiff diff{i, {}, {}};
    for (const auto& a : S.ambient().simplices()) {
      const bool in_s = S.in_set(i, a);
      const bool in_f = F.in_set(i, a);
      if (in_s && !in_f) diff.missing.push_back(a);
      if (in_f && !in_s) diff.extra.push_back(a);
    }
    if (!diff.missing.empty() || !diff.extra.empty()) verdict.diffs.push_back(std::move(diff));
  }
  verdict.extends = verdict.diffs.empty();
  return verdict;
}

Labeling canonical_labeling(const Cover& cover, const OrientedComplex& ambient, std::optional<OrientedComplex>* subdivided) {
  require_same_ambient(cover, ambient);
  const auto& K = cover.ambient();
  const int m = cover.size() - 1;
  if (cover.semantics() == CoverSemantics::Star) {
    std::vector<int> labels(static_cast<std::size_t>(K.vertex_count()), 0);
    for (Vertex u : K.vertices()) {
      labels[static_cast<std::size_t>(u)] = std::countr_zero(cover.membership(*K.index_of(Simplex{u})));
    }
    return Labeling{m, std::move(labels)};
  }
  auto sub = barycentric_subdivision(ambient, 1);
  std::vector<int> labels;
  for (const auto& prov : sub.subdivision.provenance) {
    auto idx = K.index_of(prov.carrier);
    labels.push_back(idx ? std::countr_zero(cover.membership(*idx)) : 0);
  }
  if (subdivided) *subdivided = sub.oriented;
  return Labeling{m, std::move(labels)};
}

DegreeReport cover_degree(const Cover& cover, const OrientedComplex& ambient) {
  const int n = ambient.dimension();
  if (n != 1 && n != 2) throw Unsupported("unsupported class representation: cover degree needs a 1- or 2-dimensional ambient");
  if (cover.size() != n + 2) {
    throw Unsupported("unsupported class representation: a " + std::to_string(n) + "-dimensional ambient needs " +
                      std::to_string(n + 2) + " sets");
  }
  if (!total_intersection_empty(cover)) throw HypothesisFailure("the sets of the cover have a common simplex");
  std::optional<OrientedComplex> sub;
  auto labeling = canonical_labeling(cover, ambient, &sub);
  return degree_labeling(sub ? *sub : ambient, labeling);
}

long cover_degree_weighted(const Cover& cover, const OrientedComplex& ambient, const PartitionWeights& weights) {
  require_same_ambient(cover, ambient);
  if (cover.semantics() != CoverSemantics::Star) throw Unsupported("weighted cover degree is implemented for star covers");
  const int n = ambient.dimension();
  if (n != 1 && n != 2) throw Unsupported("unsupported class representation: cover degree needs a 1- or 2-dimensional ambient");
  if (cover.size() != n + 2) throw Unsupported("unsupported class representation: wrong number of sets");
  if (!total_intersection_empty(cover)) throw HypothesisFailure("the sets of the cover have a common simplex");
  if (!manifold_boundary(ambient.complex()).empty()) throw HypothesisFailure("cover degree needs a closed ambient");
  validate_weights(cover, weights);

  std::vector<RationalPoint> V;
  const std::size_t d = static_cast<std::size_t>(n) + 1;
  V.emplace_back(std::vector<Rational>(d, Rational(0)));
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<Rational> e(d, Rational(0));
    e[i] = 1;
    V.emplace_back(std::move(e));
  }
  const RationalPoint center(std::vector<Rational>(d, Rational(1, static_cast<long>(d) + 1)));
  auto image = [&](Vertex u) {
    const auto& row = weights.weights[static_cast<std::size_t>(u)];
    return combine(V, row);
  };
  const auto& tops = ambient.top_simplices();
  if (n == 1) {
    std::vector<Segment> chain;
    for (std::size_t i = 0; i < tops.size(); ++i) {
      auto a = image(tops[i][0]), b = image(tops[i][1]);
      if (ambient.signs()[i] < 0) std::swap(a, b);
      chain.push_back({a, b});
    }
    return winding_number(chain, center);
  }
  std::vector<OrientedTriangle> triangles;
  for (std::size_t i = 0; i < tops.size(); ++i) {
    triangles.push_back({image(tops[i][0]), image(tops[i][1]), image(tops[i][2]), ambient.signs()[i]});
  }
  return sphere_degree_from_point(triangles, center);
}

long cover_class_at_point(const Cover& cover, const OrientedComplex& ambient, std::span<const RationalPoint> V,
                          const RationalPoint& p) {
  if (V.size() != static_cast<std::size_t>(cover.size())) throw InvalidInput("V must have one point per set");
  std::optional<OrientedComplex> sub;
  auto labeling = canonical_labeling(cover, ambient, &sub);
  return labeling_class_at_point(sub ? *sub : ambient, labeling, V, p);
}

}  // namespace kkm
