#include "kkm/labeling.hpp"

#include "kkm/errors.hpp"

#include <algorithm>
#include <random>

namespace kkm {

namespace {

int parity_sign(int k) { return k % 2 == 0 ? 1 : -1; }

bool is_closed(const SimplicialComplex& complex) { return manifold_boundary(complex).empty(); }

}  // namespace

Labeling make_labeling(int m, std::vector<int> labels) {
  if (m < 0) throw InvalidInput("labeling: m must be non-negative");
  for (std::size_t v = 0; v < labels.size(); ++v) {
    if (labels[v] < 0 || labels[v] > m) {
      throw InvalidInput("labeling: label " + std::to_string(labels[v]) + " of vertex " + std::to_string(v) +
                         " outside 0.." + std::to_string(m));
    }
  }
  return Labeling{m, std::move(labels)};
}

void require_labels_for(const SimplicialComplex& complex, const Labeling& labeling) {
  if (static_cast<std::size_t>(complex.vertex_count()) > labeling.labels.size()) {
    throw InvalidInput("labeling has " + std::to_string(labeling.labels.size()) + " labels but the complex needs " +
                       std::to_string(complex.vertex_count()));
  }
}

IndexSet label_set(const Simplex& s, const Labeling& labeling) {
  IndexSet out = label_sequence(s, labeling);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<int> label_sequence(const Simplex& s, const Labeling& labeling) {
  std::vector<int> out;
  out.reserve(s.size());
  for (Vertex v : s) out.push_back(labeling(v));
  return out;
}

SpernerContext sperner_context(const Subdivision& subdivision, int m) {
  SpernerContext ctx;
  ctx.m = m;
  for (const auto& prov : subdivision.provenance) {
    for (Vertex v : prov.carrier) {
      if (v < 0 || v > m) throw InvalidInput("sperner context: carrier vertex outside the base simplex");
    }
    ctx.carrier.push_back(prov.carrier);
  }
  return ctx;
}

SpernerVerdict validate_sperner(const SpernerContext& context, const Labeling& labeling) {
  SpernerVerdict verdict;
  if (labeling.labels.size() < context.carrier.size()) throw InvalidInput("labeling misses subdivision vertices");
  for (std::size_t v = 0; v < context.carrier.size(); ++v) {
    const auto& carrier = context.carrier[v];
    const int label = labeling.labels[v];
    if (carrier.size() == 1 && label != carrier[0]) {
      verdict.violations.push_back({static_cast<Vertex>(v), 1, label, carrier});
    } else if (!carrier.contains(label)) {
      verdict.violations.push_back({static_cast<Vertex>(v), 2, label, carrier});
    }
  }
  verdict.valid = verdict.violations.empty();
  return verdict;
}

Labeling canonical_sperner_labeling(const SpernerContext& context) {
  std::vector<int> labels;
  for (const auto& c : context.carrier) labels.push_back(c[0]);
  return Labeling{context.m, std::move(labels)};
}

Labeling random_sperner_labeling(const SpernerContext& context, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<int> labels;
  for (const auto& c : context.carrier) labels.push_back(c[static_cast<std::size_t>(rng() % c.size())]);
  return Labeling{context.m, std::move(labels)};
}

MaxLabelVerdict max_label_check(const SimplicialComplex& complex, const Labeling& labeling) {
  require_labels_for(complex, labeling);
  MaxLabelVerdict verdict;
  for (int d = labeling.m; d <= complex.dimension(); ++d) {
    for (const auto& s : complex.simplices_of_dim(d)) {
      if (static_cast<int>(label_set(s, labeling).size()) == labeling.m + 1) verdict.offenders.push_back(s);
    }
  }
  verdict.ok = verdict.offenders.empty();
  return verdict;
}

FullyLabeledResult fully_labeled(const SimplicialComplex& complex, const Labeling& labeling, const IndexSet& J) {
  require_labels_for(complex, labeling);
  FullyLabeledResult out;
  for (const auto& s : complex.simplices()) {
    const auto labels = label_set(s, labeling);
    if (!std::includes(labels.begin(), labels.end(), J.begin(), J.end())) continue;
    out.containing.push_back(s);
    if (labels == J) out.exact.push_back(s);
  }
  return out;
}

DegreeReport degree_labeling(const OrientedComplex& complex, const Labeling& labeling, std::optional<int> omitted_label) {
  const int n = complex.dimension();
  if (n < 1) throw Unsupported("unsupported class representation: domain dimension must be at least 1");
  if (labeling.m != n + 1) {
    throw Unsupported("unsupported class representation: labels into 0.." + std::to_string(labeling.m) +
                      " on a " + std::to_string(n) + "-dimensional domain have no integer degree");
  }
  require_labels_for(complex.complex(), labeling);
  if (!is_closed(complex.complex())) throw HypothesisFailure("degree needs a closed domain");
  if (auto check = max_label_check(complex.complex(), labeling); !check.ok) {
    throw HypothesisFailure("simplex " + format_simplex(check.offenders.front()) + " carries every label");
  }
  const int target = omitted_label.value_or(n + 1);
  if (target < 0 || target > n + 1) throw InvalidInput("target face omits a label outside 0.." + std::to_string(n + 1));

  std::vector<long> per_target(static_cast<std::size_t>(n) + 2, 0);
  const auto& tops = complex.top_simplices();
  for (std::size_t i = 0; i < tops.size(); ++i) {
    const auto seq = label_sequence(tops[i], labeling);
    const int perm = permutation_sign(seq);
    if (perm == 0) continue;
    // n+1 distinct labels out of n+2: exactly one is missing.
    const auto set = label_set(tops[i], labeling);
    int omitted = n + 1;
    for (int l = 0; l <= n; ++l) {
      if (set[static_cast<std::size_t>(l)] != l) {
        omitted = l;
        break;
      }
    }
    per_target[static_cast<std::size_t>(omitted)] += complex.signs()[i] * perm * parity_sign(omitted);
  }

  auto face_of = [n](int omitted) {
    IndexSet t;
    for (int l = 0; l <= n + 1; ++l) {
      if (l != omitted) t.push_back(l);
    }
    return t;
  };
  DegreeReport report;
  report.value = per_target[static_cast<std::size_t>(target)];
  report.target_used = face_of(target);
  for (int o = 0; o <= n + 1; ++o) {
    if (o == target) continue;
    const long v = per_target[static_cast<std::size_t>(o)];
    if (v != report.value) {
      throw HypothesisFailure("target faces disagree (" + std::to_string(report.value) + " vs " + std::to_string(v) +
                              "); the domain is not a closed oriented pseudomanifold");
    }
    report.cross_checked.emplace_back(face_of(o), v);
  }
  return report;
}

DegreeReport boundary_degree(const OrientedComplex& manifold, const Labeling& labeling, std::optional<int> omitted_label) {
  if (labeling.m != manifold.dimension()) {
    throw Unsupported("unsupported class representation: boundary degree needs labels in 0.." +
                      std::to_string(manifold.dimension()));
  }
  return degree_labeling(induced_boundary_orientation(manifold), labeling, omitted_label);
}

FullyLabeledCount count_fully_labeled(const OrientedComplex& complex, const Labeling& labeling) {
  require_labels_for(complex.complex(), labeling);
  FullyLabeledCount out;
  const int n = complex.dimension();
  const auto& tops = complex.top_simplices();
  for (std::size_t i = 0; i < tops.size(); ++i) {
    const auto seq = label_sequence(tops[i], labeling);
    const int perm = permutation_sign(seq);
    if (perm == 0 || *std::max_element(seq.begin(), seq.end()) != n) continue;
    ++out.unsigned_count;
    out.signed_count += complex.signs()[i] * perm;
    out.simplices.push_back(tops[i]);
  }
  return out;
}

std::vector<RationalPoint> f_LP_image(const Simplex& s, const Labeling& labeling, std::span<const RationalPoint> P) {
  std::vector<RationalPoint> out;
  for (Vertex v : s) {
    const int l = labeling(v);
    if (l < 0 || static_cast<std::size_t>(l) >= P.size()) {
      throw InvalidInput("label " + std::to_string(l) + " has no polytope vertex");
    }
    out.push_back(P[static_cast<std::size_t>(l)]);
  }
  return out;
}

std::vector<Simplex> bloch_boundary_off_polytope(const SimplicialComplex& complex, const Labeling& labeling,
                                                 std::span<const RationalPoint> P) {
  require_labels_for(complex, labeling);
  const auto facets = hull_facets(P);
  std::vector<Simplex> off;
  const auto bd = bloch_boundary(complex);
  for (const auto& face : bd.faces) {
    f_LP_image(face, labeling, P);
    if (!on_common_facet(facets, P, label_set(face, labeling))) off.push_back(face);
  }
  return off;
}

Dg2Report dg2(const SimplicialComplex& complex, const Labeling& labeling, std::span<const RationalPoint> P) {
  if (P.empty() || static_cast<int>(P.front().dim()) != complex.dimension()) {
    throw InvalidInput("dg2: polytope dimension must equal the complex dimension");
  }
  if (auto off = bloch_boundary_off_polytope(complex, labeling, P); !off.empty()) {
    throw HypothesisFailure("Bd K face " + format_simplex(off.front()) + " is not mapped into the polytope boundary");
  }
  const auto facets = hull_facets(P);
  Dg2Report report;
  report.facet = facets.front().vertices;
  report.probe = generic_facet_point(P, facets.front());
  const auto bd = bloch_boundary(complex);
  for (const auto& face : bd.faces) {
    const auto image = f_LP_image(face, labeling, P);
    if (in_hull(image, report.probe)) ++report.hits;
  }
  report.parity = static_cast<int>(report.hits % 2);
  return report;
}

WindingFixture construct_winding_labeling(long k) {
  const long reps = std::max<long>(std::labs(k), 1);
  const long n = 3 * reps;
  std::vector<Simplex> edges;
  std::vector<int> signs;
  for (long i = 0; i + 1 < n; ++i) edges.push_back(Simplex{static_cast<Vertex>(i), static_cast<Vertex>(i + 1)});
  edges.push_back(Simplex{0, static_cast<Vertex>(n - 1)});
  auto complex = SimplicialComplex::from_simplices(edges);
  for (const auto& e : complex.maximal_simplices()) signs.push_back(e[0] == 0 && e[1] == n - 1 ? -1 : 1);
  std::vector<int> labels;
  static constexpr int forward[] = {0, 1, 2};
  static constexpr int backward[] = {0, 2, 1};
  static constexpr int flat[] = {0, 1, 1};
  const int* pattern = k > 0 ? forward : (k < 0 ? backward : flat);
  for (long i = 0; i < n; ++i) labels.push_back(pattern[i % 3]);
  return {OrientedComplex(std::move(complex), std::move(signs)), Labeling{2, std::move(labels)}};
}

long labeling_class_at_point(const OrientedComplex& complex, const Labeling& labeling,
                             std::span<const RationalPoint> V, const RationalPoint& p) {
  const int n = complex.dimension();
  require_labels_for(complex.complex(), labeling);
  if (V.size() < static_cast<std::size_t>(labeling.m) + 1) throw InvalidInput("V has fewer points than labels");
  if (n != 1 && n != 2) {
    throw Unsupported("unsupported class representation: only 1- and 2-dimensional domains are computed");
  }
  if (p.dim() != static_cast<std::size_t>(n) + 1) throw InvalidInput("V and p must live in dimension dim Q + 1");
  for (const auto& v : V) {
    if (v.dim() != p.dim()) throw InvalidInput("V and p must share the dimension");
  }
  if (!is_closed(complex.complex())) throw Unsupported("unsupported class representation: domain is not closed");
  const auto& tops = complex.top_simplices();
  auto at = [&](Vertex v) { return V[static_cast<std::size_t>(labeling(v))]; };
  if (n == 1) {
    std::vector<Segment> chain;
    for (std::size_t i = 0; i < tops.size(); ++i) {
      if (complex.signs()[i] > 0) {
        chain.push_back({at(tops[i][0]), at(tops[i][1])});
      } else {
        chain.push_back({at(tops[i][1]), at(tops[i][0])});
      }
    }
    return winding_number(chain, p);
  }
  std::vector<OrientedTriangle> triangles;
  for (std::size_t i = 0; i < tops.size(); ++i) {
    triangles.push_back({at(tops[i][0]), at(tops[i][1]), at(tops[i][2]), complex.signs()[i]});
  }
  return sphere_degree_from_point(triangles, p);
}

}  // namespace kkm
