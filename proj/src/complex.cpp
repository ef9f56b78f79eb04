#include "kkm/complex.hpp"

#include "kkm/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <string>

namespace kkm {

namespace {

bool dim_lex_less(const Simplex& a, const Simplex& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::string describe(const Simplex& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out + "]";
}

struct Coface {
  std::size_t top;
  std::size_t position;
};

// Codimension-one faces of the top simplices with their cofaces.
std::map<Simplex, std::vector<Coface>> facet_incidence(const std::vector<Simplex>& tops) {
  std::map<Simplex, std::vector<Coface>> incidence;
  for (std::size_t t = 0; t < tops.size(); ++t) {
    if (tops[t].size() < 2) continue;
    for (std::size_t i = 0; i < tops[t].size(); ++i) incidence[tops[t].without(i)].push_back({t, i});
  }
  return incidence;
}

int parity_sign(std::size_t k) { return k % 2 == 0 ? 1 : -1; }

void require_pure(const SimplicialComplex& complex, const char* what) {
  if (!complex.is_pure()) throw InvalidInput(std::string(what) + ": complex is not pure");
}

BoundaryComplex boundary_by_rule(const SimplicialComplex& complex, bool odd_rule) {
  require_pure(complex, "boundary");
  BoundaryComplex out;
  if (complex.dimension() < 1) return out;
  for (const auto& [face, cofaces] : facet_incidence(complex.maximal_simplices())) {
    const auto n = cofaces.size();
    if (odd_rule ? n % 2 == 1 : n == 1) {
      out.faces.push_back(face);
      out.incidence.push_back(static_cast<int>(n));
    }
  }
  out.complex = SimplicialComplex::from_simplices(out.faces, complex.vertex_count());
  return out;
}

}  // namespace

IndexSet make_index_set(std::vector<int> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  if (!values.empty() && values.front() < 0) throw InvalidInput("index sets cannot contain negative entries");
  return values;
}

Simplex::Simplex(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw InvalidInput("simplex must be non-empty");
  std::sort(vertices_.begin(), vertices_.end());
  if (vertices_.front() < 0) throw InvalidInput("negative vertex id in simplex");
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
    throw InvalidInput("duplicate vertex in simplex " + describe(Simplex::from_sorted(vertices_)));
  }
}

Simplex Simplex::from_sorted(std::vector<Vertex> sorted) {
  Simplex s;
  s.vertices_ = std::move(sorted);
  return s;
}

bool Simplex::contains(Vertex v) const { return std::binary_search(vertices_.begin(), vertices_.end(), v); }

bool Simplex::is_face_of(const Simplex& other) const {
  return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(), vertices_.end());
}

std::optional<std::size_t> Simplex::position(Vertex v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

Simplex Simplex::without(std::size_t pos) const {
  std::vector<Vertex> out;
  out.reserve(vertices_.size() - 1);
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (i != pos) out.push_back(vertices_[i]);
  }
  return from_sorted(std::move(out));
}

std::vector<Simplex> Simplex::faces() const {
  const std::size_t n = vertices_.size();
  std::vector<Simplex> out;
  out.reserve((std::size_t{1} << n) - 1);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<Vertex> face;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) face.push_back(vertices_[i]);
    }
    out.push_back(from_sorted(std::move(face)));
  }
  return out;
}

SimplicialComplex SimplicialComplex::from_simplices(std::span<const Simplex> simplices, Vertex vertex_count) {
  SimplicialComplex k;
  for (const auto& s : simplices) {
    for (auto& f : s.faces()) k.all_.push_back(std::move(f));
  }
  std::sort(k.all_.begin(), k.all_.end(), dim_lex_less);
  k.all_.erase(std::unique(k.all_.begin(), k.all_.end()), k.all_.end());

  k.vertex_count_ = vertex_count;
  if (!k.all_.empty()) {
    const int dim = static_cast<int>(k.all_.back().size()) - 1;
    k.dim_offsets_.assign(dim + 2, 0);
    for (const auto& s : k.all_) ++k.dim_offsets_[s.size()];
    std::partial_sum(k.dim_offsets_.begin(), k.dim_offsets_.end(), k.dim_offsets_.begin());
    for (const auto& s : k.simplices_of_dim(0)) k.vertex_count_ = std::max(k.vertex_count_, s[0] + 1);
  }

  std::vector<char> maximal(k.all_.size(), 1);
  for (const auto& s : k.all_) {
    if (s.size() < 2) continue;
    for (std::size_t i = 0; i < s.size(); ++i) maximal[*k.index_of(s.without(i))] = 0;
  }
  for (std::size_t i = 0; i < k.all_.size(); ++i) {
    if (maximal[i]) k.maximal_.push_back(k.all_[i]);
  }
  return k;
}

std::span<const Simplex> SimplicialComplex::simplices_of_dim(int d) const {
  if (d < 0 || d > dimension()) return {};
  return std::span<const Simplex>(all_).subspan(dim_offsets_[d], dim_offsets_[d + 1] - dim_offsets_[d]);
}

std::vector<Vertex> SimplicialComplex::vertices() const {
  std::vector<Vertex> out;
  for (const auto& s : simplices_of_dim(0)) out.push_back(s[0]);
  return out;
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& s) const {
  const int d = s.dim();
  if (d < 0 || d > dimension()) return std::nullopt;
  auto slice = simplices_of_dim(d);
  auto it = std::lower_bound(slice.begin(), slice.end(), s);
  if (it == slice.end() || *it != s) return std::nullopt;
  return dim_offsets_[d] + static_cast<std::size_t>(it - slice.begin());
}

bool SimplicialComplex::contains(const Simplex& s) const { return index_of(s).has_value(); }

bool SimplicialComplex::is_pure() const {
  const int d = dimension();
  return std::all_of(maximal_.begin(), maximal_.end(), [d](const Simplex& s) { return s.dim() == d; });
}

bool SimplicialComplex::is_subcomplex_of(const SimplicialComplex& other) const {
  return std::all_of(maximal_.begin(), maximal_.end(), [&](const Simplex& s) { return other.contains(s); });
}

SimplicialComplex build_complex(const std::vector<std::vector<Vertex>>& maximal, std::optional<Vertex> vertex_count) {
  std::vector<Simplex> simplices;
  simplices.reserve(maximal.size());
  for (const auto& list : maximal) simplices.emplace_back(list);
  auto k = SimplicialComplex::from_simplices(simplices);
  const Vertex bound = vertex_count.value_or(k.vertex_count());
  if (k.vertex_count() > bound) {
    throw InvalidInput("vertex id " + std::to_string(k.vertex_count() - 1) + " exceeds vertex count " +
                       std::to_string(bound));
  }
  if (static_cast<Vertex>(k.simplices_of_dim(0).size()) != bound) {
    throw InvalidInput("every vertex id below " + std::to_string(bound) + " must occur in some simplex");
  }
  return k;
}

OrientedComplex::OrientedComplex(SimplicialComplex complex, std::vector<int> signs)
    : complex_(std::move(complex)), signs_(std::move(signs)) {
  if (!complex_.is_pure()) throw InvalidInput("oriented complex must be pure");
  const auto& tops = complex_.maximal_simplices();
  if (signs_.size() != tops.size()) throw InvalidInput("one orientation sign per top simplex is required");
  for (int s : signs_) {
    if (s != 1 && s != -1) throw InvalidInput("orientation signs must be +1 or -1");
  }
  for (const auto& [face, cofaces] : facet_incidence(tops)) {
    if (cofaces.size() > 2) throw InvalidInput("face " + describe(face) + " lies in more than two top simplices");
    if (cofaces.size() == 2) {
      const int a = signs_[cofaces[0].top] * parity_sign(cofaces[0].position);
      const int b = signs_[cofaces[1].top] * parity_sign(cofaces[1].position);
      if (a != -b) throw InvalidInput("inconsistent orientation across face " + describe(face));
    }
  }
}

int OrientedComplex::sign(const Simplex& top) const {
  const auto& tops = complex_.maximal_simplices();
  auto it = std::lower_bound(tops.begin(), tops.end(), top);
  if (it == tops.end() || *it != top) throw InvalidInput("not a top simplex: " + describe(top));
  return signs_[static_cast<std::size_t>(it - tops.begin())];
}

OrientedComplex OrientedComplex::reversed() const {
  auto flipped = signs_;
  for (int& s : flipped) s = -s;
  return OrientedComplex(complex_, std::move(flipped));
}

BoundaryComplex manifold_boundary(const SimplicialComplex& complex) { return boundary_by_rule(complex, false); }

BoundaryComplex bloch_boundary(const SimplicialComplex& complex) { return boundary_by_rule(complex, true); }

OrientedComplex orient(const SimplicialComplex& complex, int seed_sign) {
  require_pure(complex, "orient");
  if (seed_sign != 1 && seed_sign != -1) throw InvalidInput("seed sign must be +1 or -1");
  const auto& tops = complex.maximal_simplices();
  const auto incidence = facet_incidence(tops);

  std::vector<std::vector<std::pair<std::size_t, int>>> neighbours(tops.size());
  for (const auto& [face, cofaces] : incidence) {
    if (cofaces.size() > 2) throw InvalidInput("orient: face " + describe(face) + " lies in more than two top simplices");
    if (cofaces.size() == 2) {
      // s2 = -s1 * (-1)^(i1 + i2) makes the induced face orientations cancel.
      const int relation = -parity_sign(cofaces[0].position + cofaces[1].position);
      neighbours[cofaces[0].top].push_back({cofaces[1].top, relation});
      neighbours[cofaces[1].top].push_back({cofaces[0].top, relation});
    }
  }

  std::vector<int> signs(tops.size(), 0);
  for (std::size_t seed = 0; seed < tops.size(); ++seed) {
    if (signs[seed] != 0) continue;
    signs[seed] = seed_sign;
    std::deque<std::size_t> queue{seed};
    while (!queue.empty()) {
      const auto t = queue.front();
      queue.pop_front();
      for (auto [n, relation] : neighbours[t]) {
        const int wanted = signs[t] * relation;
        if (signs[n] == 0) {
          signs[n] = wanted;
          queue.push_back(n);
        } else if (signs[n] != wanted) {
          throw NotOrientable("orientation conflict between " + describe(tops[t]) + " and " + describe(tops[n]));
        }
      }
    }
  }
  return OrientedComplex(complex, std::move(signs));
}

OrientedComplex induced_boundary_orientation(const OrientedComplex& manifold) {
  const auto& tops = manifold.top_simplices();
  std::vector<Simplex> faces;
  std::vector<int> signs;
  for (const auto& [face, cofaces] : facet_incidence(tops)) {
    if (cofaces.size() != 1) continue;
    faces.push_back(face);
    signs.push_back(manifold.signs()[cofaces[0].top] * parity_sign(cofaces[0].position));
  }
  if (faces.empty()) throw HypothesisFailure("complex has empty manifold boundary");
  // facet_incidence iterates faces in sorted order, matching maximal_simplices().
  return OrientedComplex(SimplicialComplex::from_simplices(faces, manifold.complex().vertex_count()),
                         std::move(signs));
}

std::vector<Rational> Subdivision::coordinates_in(Vertex v, const Simplex& host) const {
  const auto& prov = provenance.at(static_cast<std::size_t>(v));
  std::vector<Rational> out(host.size());
  for (std::size_t i = 0; i < prov.carrier.size(); ++i) {
    auto pos = host.position(prov.carrier[i]);
    if (!pos) throw InvalidInput("vertex carrier is not a face of the host simplex");
    out[*pos] = prov.weights[i];
  }
  return out;
}

namespace {

Subdivision subdivide_once(const Subdivision& in) {
  const auto& k = in.complex;
  std::map<Simplex, Vertex> barycenter_id;
  Vertex next = k.vertex_count();
  Subdivision out;
  out.provenance = in.provenance;

  for (const auto& s : k.simplices()) {
    if (s.size() == 1) {
      barycenter_id[s] = s[0];
      continue;
    }
    barycenter_id[s] = next++;
    // Average the original-space weights of the simplex's vertices.
    std::map<Vertex, Rational> accum;
    const Rational share(1, static_cast<long>(s.size()));
    for (Vertex v : s) {
      const auto& p = in.provenance[static_cast<std::size_t>(v)];
      for (std::size_t i = 0; i < p.carrier.size(); ++i) accum[p.carrier[i]] += p.weights[i] * share;
    }
    VertexProvenance prov;
    std::vector<Vertex> carrier;
    for (auto& [vertex, weight] : accum) {
      carrier.push_back(vertex);
      prov.weights.push_back(weight);
    }
    prov.carrier = Simplex::from_sorted(std::move(carrier));
    out.provenance.push_back(std::move(prov));
  }

  std::vector<Simplex> tops;
  for (const auto& top : k.maximal_simplices()) {
    std::vector<Vertex> perm = top.vertices();
    do {
      std::vector<Vertex> chain;
      std::vector<Vertex> prefix;
      for (Vertex v : perm) {
        prefix.insert(std::lower_bound(prefix.begin(), prefix.end(), v), v);
        chain.push_back(barycenter_id.at(Simplex::from_sorted(prefix)));
      }
      tops.emplace_back(std::move(chain));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  out.complex = SimplicialComplex::from_simplices(tops, next);
  return out;
}

}  // namespace

Subdivision barycentric_subdivision(const SimplicialComplex& complex, int depth) {
  if (depth < 0) throw InvalidInput("subdivision depth must be non-negative");
  Subdivision current;
  current.complex = complex;
  current.provenance.resize(static_cast<std::size_t>(complex.vertex_count()));
  for (Vertex v : complex.vertices()) {
    current.provenance[static_cast<std::size_t>(v)] = {Simplex::from_sorted({v}), {Rational(1)}};
  }
  for (int i = 0; i < depth; ++i) current = subdivide_once(current);
  return current;
}

OrientedSubdivision barycentric_subdivision(const OrientedComplex& complex, int depth) {
  auto sub = barycentric_subdivision(complex.complex(), depth);
  std::vector<int> signs;
  signs.reserve(sub.complex.maximal_simplices().size());
  for (const auto& top : sub.complex.maximal_simplices()) {
    std::vector<Vertex> host_vertices;
    for (Vertex v : top) {
      const auto& c = sub.provenance[static_cast<std::size_t>(v)].carrier;
      host_vertices.insert(host_vertices.end(), c.begin(), c.end());
    }
    std::sort(host_vertices.begin(), host_vertices.end());
    host_vertices.erase(std::unique(host_vertices.begin(), host_vertices.end()), host_vertices.end());
    const auto host = Simplex::from_sorted(std::move(host_vertices));
    std::vector<std::vector<Rational>> rows;
    for (Vertex v : top) rows.push_back(sub.coordinates_in(v, host));
    signs.push_back(complex.sign(host) * sign(determinant(std::move(rows))));
  }
  OrientedComplex oriented(sub.complex, std::move(signs));
  return {std::move(sub), std::move(oriented)};
}

std::string format_simplex(const Simplex& s) { return describe(s); }

int permutation_sign(std::span<const int> sequence) {
  int inversions = 0;
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    for (std::size_t j = i + 1; j < sequence.size(); ++j) {
      if (sequence[i] == sequence[j]) return 0;
      if (sequence[i] > sequence[j]) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace kkm
