#pragma once

#include "kkm/covers.hpp"
#include "kkm/geometry.hpp"
#include "kkm/labeling.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace kkm {

enum class ItemStatus { Satisfied, Violated, Asserted };

struct HypothesisItem {
  std::string name;
  ItemStatus status = ItemStatus::Satisfied;
  std::string evidence;
};

enum class Verdict {
  Verified,           // hypotheses hold and the conclusion was witnessed
  HypothesisFailure,  // some hypothesis item is violated; no claim is made
  NoWitness,          // hypotheses hold but no witness exists: falsification alarm
};

struct TheoremReport {
  std::string theorem;
  std::vector<HypothesisItem> hypotheses;
  Verdict verdict = Verdict::HypothesisFailure;
  std::optional<Simplex> witness_simplex;
  std::optional<IndexSet> witness_indices;
  std::map<std::string, long> counts;
  std::vector<RationalPoint> points;
  std::string note;

  bool hypotheses_hold() const;
};

const char* to_string(ItemStatus status);
const char* to_string(Verdict verdict);

struct VerifyOptions {
  /// (X, A) is in EP_n by the caller's word (for instance a ball and its
  /// boundary sphere with pi_k(S^n) non-zero).
  bool assert_ep = false;
  /// The class of the boundary data is non-zero by the caller's word, for
  /// domains whose class is not computed.
  bool assert_class_nonzero = false;
};

/// All F_i share a simplex when S has empty total intersection and non-zero
/// degree and F extends S.
TheoremReport kkm_verify(const Cover& S, const Cover& F, const VerifyOptions& options = {});

/// Some minimal J of cov_V(p) has a common simplex in F.
TheoremReport generalized_kkm_verify(const Cover& S, const Cover& F, std::span<const RationalPoint> V,
                                     const RationalPoint& p, const VerifyOptions& options = {});

/// Some simplex of K has labels exactly J for a minimal J of cov_V(p).
TheoremReport generalized_sperner_verify(const SimplicialComplex& K, const SimplicialComplex& Q, const Labeling& L,
                                         std::span<const RationalPoint> V, const RationalPoint& p,
                                         const VerifyOptions& options = {});

/// At least |deg(L, boundary)| fully labeled top simplices; the signed count
/// equals the degree.
TheoremReport deg_lower_bound_verify(const OrientedComplex& M, const Labeling& L);

/// At least (m - d) |deg| fully labeled d-simplices, counted per pebble.
TheoremReport polytope_sperner_verify(const OrientedComplex& M, const Labeling& L, std::span<const RationalPoint> P);

/// With odd dg2 on Bloch's boundary, at least m - d fully labeled d-simplices.
TheoremReport bloch_sperner_verify(const SimplicialComplex& K, const Labeling& L, std::span<const RationalPoint> P);

/// Sets 2(i-1) and 2(i-1)+1 stand for +i and -i, i = 1..n, with V the points
/// +e_i and -e_i in the same order. Some F_i meets F_{-i}.
TheoremReport tucker_bacon_verify(const Cover& S, const Cover& F, const VerifyOptions& options = {});

/// V = {+e_1, -e_1, ..., +e_n, -e_n} in the index order used above.
std::vector<RationalPoint> tucker_points(int n);

}  // namespace kkm
