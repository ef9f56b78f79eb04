#include "kkm/theorems.hpp"

#include "kkm/errors.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace kkm {

namespace {

class Checklist {
 public:
  explicit Checklist(TheoremReport& report) : report_(report) {}

  void add(std::string name, ItemStatus status, std::string evidence) {
    report_.hypotheses.push_back({std::move(name), status, std::move(evidence)});
  }
  void check(std::string name, bool ok, std::string ok_evidence, std::string bad_evidence) {
    add(std::move(name), ok ? ItemStatus::Satisfied : ItemStatus::Violated, ok ? std::move(ok_evidence) : std::move(bad_evidence));
  }

 private:
  TheoremReport& report_;
};

// How (X, A) enters the theorem, plus an orientation of A when one exists.
struct PairInfo {
  bool manifold_boundary = false;
  std::optional<OrientedComplex> boundary;
  std::string evidence;
};

PairInfo analyze_pair(const SimplicialComplex& X, const SimplicialComplex& A) {
  PairInfo info;
  try {
    auto oriented = orient(X, +1);
    auto mb = manifold_boundary(X);
    if (!mb.empty() && mb.complex == A) {
      info.manifold_boundary = true;
      info.boundary = induced_boundary_orientation(oriented);
      info.evidence = "X is an oriented pseudomanifold with boundary A";
    } else {
      info.evidence = "A is not the manifold boundary of X";
    }
  } catch (const Error& e) {
    info.evidence = std::string("X is not an oriented pseudomanifold: ") + e.what();
  }
  if (!info.boundary) {
    try {
      if (A.dimension() >= 1 && manifold_boundary(A).empty()) info.boundary = orient(A, +1);
    } catch (const Error&) {
    }
  }
  return info;
}

void ep_item(Checklist& list, const PairInfo& pair, const VerifyOptions& options) {
  if (pair.manifold_boundary) {
    list.add("ep_pair", ItemStatus::Satisfied, pair.evidence);
  } else if (options.assert_ep) {
    list.add("ep_pair", ItemStatus::Asserted, "asserted by caller, not computed (" + pair.evidence + ")");
  } else {
    list.add("ep_pair", ItemStatus::Violated, pair.evidence + "; assert the pair to proceed");
  }
}

// Evaluates a class that should be non-zero. Returns the value when computed.
std::optional<long> class_item(Checklist& list, const std::string& name, const VerifyOptions& options,
                               const std::function<long()>& compute) {
  try {
    const long value = compute();
    list.check(name, value != 0, "class = " + std::to_string(value), "class = 0");
    return value;
  } catch (const Unsupported& e) {
    if (options.assert_class_nonzero) {
      list.add(name, ItemStatus::Asserted, std::string("asserted, not computed: ") + e.what());
    } else {
      list.add(name, ItemStatus::Violated, std::string("not computable (") + e.what() + "); assert it to proceed");
    }
  } catch (const Error& e) {
    list.add(name, ItemStatus::Violated, e.what());
  }
  return std::nullopt;
}

std::optional<long> class_item_on(Checklist& list, const std::string& name, const VerifyOptions& options,
                                  const PairInfo& pair, const std::function<long(const OrientedComplex&)>& compute) {
  return class_item(list, name, options, [&]() -> long {
    if (!pair.boundary) throw Unsupported("unsupported class representation: A is not a closed oriented pseudomanifold");
    return compute(*pair.boundary);
  });
}

void extension_item(Checklist& list, const Cover& S, const Cover& F) {
  try {
    auto verdict = extension_check(S, F);
    std::string bad;
    if (!verdict.extends) {
      const auto& d = verdict.diffs.front();
      bad = "set " + std::to_string(d.index) + " differs on A";
      if (!d.missing.empty()) bad += ", missing " + format_simplex(d.missing.front());
      if (!d.extra.empty()) bad += ", extra " + format_simplex(d.extra.front());
    }
    list.check("extension", verdict.extends, "F restricted to A equals S", bad);
  } catch (const InvalidInput& e) {
    list.add("extension", ItemStatus::Violated, e.what());
  }
}

void finish(TheoremReport& report, bool witnessed, std::string alarm) {
  if (!report.hypotheses_hold()) {
    report.verdict = Verdict::HypothesisFailure;
    return;
  }
  report.verdict = witnessed ? Verdict::Verified : Verdict::NoWitness;
  if (!witnessed) report.note = std::move(alarm);
}

std::string join(const IndexSet& J) {
  std::string out = "{";
  for (std::size_t i = 0; i < J.size(); ++i) out += (i ? "," : "") + std::to_string(J[i]);
  return out + "}";
}

Rational orientation_det(const std::vector<RationalPoint>& pts) {
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 1; i < pts.size(); ++i) rows.push_back((pts[i] - pts[0]).coords());
  return determinant(std::move(rows));
}

// Items shared by the polytope verifiers.
bool polytope_items(Checklist& list, int d, const Labeling& L, std::span<const RationalPoint> P) {
  const bool dim_ok = (d == 2 || d == 3) && !P.empty() &&
                      std::all_of(P.begin(), P.end(), [d](const RationalPoint& v) { return v.dim() == static_cast<std::size_t>(d); });
  list.check("dimension", dim_ok, "d = " + std::to_string(d), "need d in {2,3} with P in d-space");
  const bool labels_ok = L.m + 1 <= static_cast<int>(P.size());
  list.check("labels", labels_ok, "labels index the vertices of P", "labels exceed the number of polytope vertices");
  if (!dim_ok) return false;
  bool convex = P.size() >= static_cast<std::size_t>(d) + 1;
  std::string bad = "P needs at least d+1 vertices";
  for (std::size_t i = 0; convex && i < P.size(); ++i) {
    std::vector<RationalPoint> others;
    for (std::size_t j = 0; j < P.size(); ++j) {
      if (j != i) others.push_back(P[j]);
    }
    if (in_hull(others, P[i])) {
      convex = false;
      bad = "point " + std::to_string(i) + " is not a vertex of conv(P)";
    }
  }
  if (convex) {
    try {
      hull_facets(P);
    } catch (const InvalidInput& e) {
      convex = false;
      bad = e.what();
    }
  }
  list.check("convex_position", convex, "every point is a vertex of conv(P)", bad);
  return convex && labels_ok;
}

RationalPoint centroid(std::span<const RationalPoint> P) {
  std::vector<Rational> w(P.size(), Rational(1, static_cast<long>(P.size())));
  return combine(P, w);
}

}  // namespace

bool TheoremReport::hypotheses_hold() const {
  return std::none_of(hypotheses.begin(), hypotheses.end(),
                      [](const HypothesisItem& h) { return h.status == ItemStatus::Violated; });
}

const char* to_string(ItemStatus status) {
  switch (status) {
    case ItemStatus::Satisfied: return "satisfied";
    case ItemStatus::Violated: return "violated";
    case ItemStatus::Asserted: return "asserted";
  }
  return "?";
}

const char* to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Verified: return "verified";
    case Verdict::HypothesisFailure: return "hypothesis_failure";
    case Verdict::NoWitness: return "no_witness";
  }
  return "?";
}

TheoremReport kkm_verify(const Cover& S, const Cover& F, const VerifyOptions& options) {
  TheoremReport report;
  report.theorem = "kkm";
  Checklist list(report);
  extension_item(list, S, F);
  list.check("total_intersection_empty", total_intersection_empty(S), "the sets of S have no common simplex",
             "the sets of S share a simplex");
  const auto pair = analyze_pair(F.ambient(), S.ambient());
  ep_item(list, pair, options);
  if (auto deg = class_item_on(list, "class_nonzero", options, pair,
                               [&](const OrientedComplex& A) { return cover_degree(S, A).value; })) {
    report.counts["degree"] = *deg;
  }
  if (!report.hypotheses_hold()) {
    report.verdict = Verdict::HypothesisFailure;
    return report;
  }
  IndexSet all(static_cast<std::size_t>(F.size()));
  for (int i = 0; i < F.size(); ++i) all[static_cast<std::size_t>(i)] = i;
  report.witness_simplex = common_simplex(F, all);
  if (report.witness_simplex) report.witness_indices = all;
  finish(report, report.witness_simplex.has_value(), "no simplex of X lies in every F_i");
  return report;
}

TheoremReport generalized_kkm_verify(const Cover& S, const Cover& F, std::span<const RationalPoint> V,
                                     const RationalPoint& p, const VerifyOptions& options) {
  TheoremReport report;
  report.theorem = "generalized_kkm";
  Checklist list(report);
  extension_item(list, S, F);
  const auto comp = p_in_complement(S, V, p);
  list.check("complement", comp.in_complement, "no J in cov_V(p) has a common simplex in S",
             comp.violating ? "J = " + join(*comp.violating) + " meets in " + format_simplex(*comp.witness) : "");
  const auto pair = analyze_pair(F.ambient(), S.ambient());
  ep_item(list, pair, options);
  if (comp.in_complement) {
    if (auto h = class_item_on(list, "class_nonzero", options, pair,
                               [&](const OrientedComplex& A) { return cover_class_at_point(S, A, V, p); })) {
      report.counts["h"] = *h;
    }
  } else {
    list.add("class_nonzero", ItemStatus::Violated, "p lies on the image; h is undefined");
  }
  if (!report.hypotheses_hold()) {
    report.verdict = Verdict::HypothesisFailure;
    return report;
  }
  const auto cov = cov_v(V, p);
  for (const auto& J : cov.minimal_sets()) {
    if (auto s = common_simplex(F, J)) {
      report.witness_indices = J;
      report.witness_simplex = *s;
      break;
    }
  }
  finish(report, report.witness_simplex.has_value(), "no minimal J of cov_V(p) has a common simplex in F");
  return report;
}

TheoremReport generalized_sperner_verify(const SimplicialComplex& K, const SimplicialComplex& Q, const Labeling& L,
                                         std::span<const RationalPoint> V, const RationalPoint& p,
                                         const VerifyOptions& options) {
  TheoremReport report;
  report.theorem = "generalized_sperner";
  Checklist list(report);
  require_labels_for(K, L);
  if (V.size() != static_cast<std::size_t>(L.m) + 1) throw InvalidInput("V must have one point per label");
  list.check("subcomplex", Q.is_subcomplex_of(K), "Q is a subcomplex of K", "Q is not a subcomplex of K");
  const auto cov = cov_v(V, p);
  std::string offender;
  for (const auto& J : cov.minimal_sets()) {
    auto hits = fully_labeled(Q, L, J);
    if (!hits.containing.empty()) {
      offender = format_simplex(hits.containing.front()) + " carries J = " + join(J);
      break;
    }
  }
  list.check("no_cov_labels_on_Q", offender.empty(), "no simplex of Q carries a J in cov_V(p)", offender);
  const auto pair = analyze_pair(K, Q);
  ep_item(list, pair, options);
  if (offender.empty()) {
    if (auto h = class_item_on(list, "class_nonzero", options, pair,
                               [&](const OrientedComplex& A) { return labeling_class_at_point(A, L, V, p); })) {
      report.counts["h"] = *h;
    }
  } else {
    list.add("class_nonzero", ItemStatus::Violated, "p lies on the image of Q; h is undefined");
  }
  if (!report.hypotheses_hold()) {
    report.verdict = Verdict::HypothesisFailure;
    return report;
  }
  for (const auto& J : cov.minimal_sets()) {
    auto hits = fully_labeled(K, L, J);
    if (!hits.exact.empty()) {
      report.witness_indices = J;
      report.witness_simplex = hits.exact.front();
      break;
    }
  }
  finish(report, report.witness_simplex.has_value(), "no simplex of K is labeled by a minimal J of cov_V(p)");
  return report;
}

TheoremReport deg_lower_bound_verify(const OrientedComplex& M, const Labeling& L) {
  TheoremReport report;
  report.theorem = "degree_lower_bound";
  Checklist list(report);
  require_labels_for(M.complex(), L);
  const int n = M.dimension();
  list.check("labels", L.m == n, "labels in 0.." + std::to_string(n), "labels must range over 0..dim M");
  const bool has_boundary = !manifold_boundary(M.complex()).empty();
  list.check("boundary", has_boundary, "M has non-empty boundary", "M is closed");
  long degree = 0;
  if (L.m == n && has_boundary) {
    try {
      degree = boundary_degree(M, L).value;
      list.add("boundary_degree", ItemStatus::Satisfied, "deg = " + std::to_string(degree));
    } catch (const Error& e) {
      list.add("boundary_degree", ItemStatus::Violated, e.what());
    }
  }
  if (!report.hypotheses_hold()) {
    report.verdict = Verdict::HypothesisFailure;
    return report;
  }
  const auto count = count_fully_labeled(M, L);
  report.counts["degree"] = degree;
  report.counts["fully_labeled"] = count.unsigned_count;
  report.counts["signed"] = count.signed_count;
  if (!count.simplices.empty()) report.witness_simplex = count.simplices.front();
  const bool ok = count.unsigned_count >= std::labs(degree) && count.signed_count == degree;
  finish(report, ok, "fully labeled count below |deg| or signed count differs from deg");
  return report;
}

TheoremReport polytope_sperner_verify(const OrientedComplex& M, const Labeling& L, std::span<const RationalPoint> P) {
  TheoremReport report;
  report.theorem = "polytope_sperner";
  Checklist list(report);
  require_labels_for(M.complex(), L);
  const int d = M.dimension();
  const bool base_ok = polytope_items(list, d, L, P);
  const auto mb = manifold_boundary(M.complex());
  list.check("boundary", !mb.empty(), "M has non-empty boundary", "M is closed");
  if (base_ok && !mb.empty()) {
    const auto facets = hull_facets(P);
    std::string off;
    for (const auto& face : mb.faces) {
      if (!on_common_facet(facets, P, label_set(face, L))) {
        off = "boundary face " + format_simplex(face) + " maps off the polytope boundary";
        break;
      }
    }
    list.check("boundary_in_polytope_boundary", off.empty(), "f(boundary of M) lies in the boundary of P", off);
  }
  if (!report.hypotheses_hold()) {
    report.verdict = Verdict::HypothesisFailure;
    return report;
  }

  const long degree = labeling_class_at_point(induced_boundary_orientation(M), L, P, centroid(P));
  const auto pebbles = pebble_set(P, d);
  report.points = pebbles.points;
  const long m = static_cast<long>(P.size());
  const long bound = (m - d) * std::labs(degree);
  report.counts["degree"] = degree;
  report.counts["pebbles"] = static_cast<long>(pebbles.points.size());
  report.counts["bound"] = bound;
  if (!pebbles.certified) {
    report.verdict = Verdict::NoWitness;
    report.note = "pebble set not certified: " + pebbles.failure;
    return report;
  }

  const auto& tops = M.top_simplices();
  std::set<Simplex> counted;
  bool per_pebble_ok = true;
  long min_signed = 0;
  for (std::size_t k = 0; k < pebbles.points.size(); ++k) {
    long signed_count = 0;
    for (std::size_t i = 0; i < tops.size(); ++i) {
      const auto image = f_LP_image(tops[i], L, P);
      if (!in_hull(image, pebbles.points[k])) continue;
      signed_count += M.signs()[i] * sign(orientation_det(image));
      counted.insert(tops[i]);
    }
    if (signed_count != degree) per_pebble_ok = false;
    min_signed = k == 0 ? signed_count : std::min(min_signed, signed_count);
  }
  long fully = 0;
  for (const auto& s : tops) fully += static_cast<long>(label_set(s, L).size()) == d + 1;
  report.counts["pebble_preimages"] = static_cast<long>(counted.size());
  report.counts["fully_labeled"] = fully;
  if (!counted.empty()) report.witness_simplex = *counted.begin();
  finish(report, per_pebble_ok && fully >= bound && static_cast<long>(counted.size()) >= bound,
         "per-pebble signed preimage count differs from deg or the count is below (m-d)|deg|");
  return report;
}

TheoremReport bloch_sperner_verify(const SimplicialComplex& K, const Labeling& L, std::span<const RationalPoint> P) {
  TheoremReport report;
  report.theorem = "bloch_sperner";
  Checklist list(report);
  require_labels_for(K, L);
  const int d = K.dimension();
  list.check("pure", K.is_pure(), "K is pure", "K is not pure");
  const bool base_ok = polytope_items(list, d, L, P) && K.is_pure();
  std::optional<Dg2Report> parity;
  if (base_ok) {
    auto off = bloch_boundary_off_polytope(K, L, P);
    list.check("boundary_in_polytope_boundary", off.empty(), "f(Bd K) lies in the boundary of P",
               off.empty() ? "" : "Bd K face " + format_simplex(off.front()) + " maps off the polytope boundary");
    if (off.empty()) {
      parity = dg2(K, L, P);
      report.counts["dg2"] = parity->parity;
      list.check("dg2_odd", parity->parity == 1, "dg2 = 1", "dg2 = 0; no claim");
    }
  }
  if (!report.hypotheses_hold()) {
    report.verdict = Verdict::HypothesisFailure;
    return report;
  }

  const auto pebbles = pebble_set(P, d);
  report.points = pebbles.points;
  const long bound = static_cast<long>(P.size()) - d;
  report.counts["pebbles"] = static_cast<long>(pebbles.points.size());
  report.counts["bound"] = bound;
  if (!pebbles.certified) {
    report.verdict = Verdict::NoWitness;
    report.note = "pebble set not certified: " + pebbles.failure;
    return report;
  }
  const auto tops = K.simplices_of_dim(d);
  std::set<Simplex> counted;
  bool parity_ok = true;
  for (const auto& x : pebbles.points) {
    long hits = 0;
    for (const auto& s : tops) {
      if (!in_hull(f_LP_image(s, L, P), x)) continue;
      ++hits;
      counted.insert(s);
    }
    if (hits % 2 != 1) parity_ok = false;
  }
  long fully = 0;
  for (const auto& s : tops) fully += static_cast<long>(label_set(s, L).size()) == d + 1;
  report.counts["pebble_preimages"] = static_cast<long>(counted.size());
  report.counts["fully_labeled"] = fully;
  if (!counted.empty()) report.witness_simplex = *counted.begin();
  finish(report, parity_ok && fully >= bound && static_cast<long>(counted.size()) >= bound,
         "a pebble has even preimage parity or the count is below m-d");
  return report;
}

std::vector<RationalPoint> tucker_points(int n) {
  std::vector<RationalPoint> V;
  for (int i = 0; i < n; ++i) {
    for (int s : {1, -1}) {
      std::vector<Rational> e(static_cast<std::size_t>(n), Rational(0));
      e[static_cast<std::size_t>(i)] = s;
      V.emplace_back(std::move(e));
    }
  }
  return V;
}

TheoremReport tucker_bacon_verify(const Cover& S, const Cover& F, const VerifyOptions& options) {
  if (S.size() % 2 != 0 || S.size() < 2) throw InvalidInput("a Tucker cover needs 2n sets");
  const int n = S.size() / 2;
  TheoremReport report;
  report.theorem = "tucker_bacon";
  Checklist list(report);
  extension_item(list, S, F);
  std::string meet;
  for (int i = 0; i < n && meet.empty(); ++i) {
    if (auto s = common_simplex(S, {2 * i, 2 * i + 1})) {
      meet = "S_" + std::to_string(i + 1) + " and S_-" + std::to_string(i + 1) + " share " + format_simplex(*s);
    }
  }
  list.check("antipodal_disjoint", meet.empty(), "S_i and S_-i are disjoint for all i", meet);
  const auto pair = analyze_pair(F.ambient(), S.ambient());
  ep_item(list, pair, options);
  const auto V = tucker_points(n);
  const RationalPoint origin(std::vector<Rational>(static_cast<std::size_t>(n), Rational(0)));
  if (meet.empty()) {
    if (auto h = class_item_on(list, "class_nonzero", options, pair,
                               [&](const OrientedComplex& A) { return cover_class_at_point(S, A, V, origin); })) {
      report.counts["h"] = *h;
    }
  } else {
    list.add("class_nonzero", ItemStatus::Violated, "the origin lies on the image; h is undefined");
  }
  if (!report.hypotheses_hold()) {
    report.verdict = Verdict::HypothesisFailure;
    return report;
  }
  for (int i = 0; i < n; ++i) {
    if (auto s = common_simplex(F, {2 * i, 2 * i + 1})) {
      report.witness_indices = IndexSet{2 * i, 2 * i + 1};
      report.witness_simplex = *s;
      report.counts["i"] = i + 1;
      break;
    }
  }
  finish(report, report.witness_simplex.has_value(), "no F_i meets F_-i");
  return report;
}

}  // namespace kkm
