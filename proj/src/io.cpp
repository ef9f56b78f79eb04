#include "kkm/io.hpp"

#include "kkm/errors.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace kkm::io {

namespace {

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
  throw InvalidInput("schema: " + where + ": " + what);
}

std::string at(const std::string& where, std::size_t i) { return where + "[" + std::to_string(i) + "]"; }
std::string field(const std::string& where, const char* name) { return where + "." + name; }

const Json& require_array(const Json& value, const std::string& where) {
  if (!value.is_array()) schema_error(where, "expected an array");
  return value;
}

const Json& require_field(const Json& obj, const char* name, const std::string& where) {
  if (!obj.is_object()) schema_error(where, "expected an object");
  auto it = obj.find(name);
  if (it == obj.end()) schema_error(field(where, name), "missing field");
  return *it;
}

const Json* optional_field(const Json& obj, const char* name) {
  auto it = obj.find(name);
  return it == obj.end() || it->is_null() ? nullptr : &*it;
}

void reject_unknown(const Json& obj, std::initializer_list<const char*> known, const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (std::none_of(known.begin(), known.end(), [&](const char* k) { return it.key() == k; })) {
      schema_error(where + "." + it.key(), "unknown field");
    }
  }
}

long long integer_from_json(const Json& value, const std::string& where) {
  if (!value.is_number_integer()) schema_error(where, "expected an integer");
  if (value.is_number_unsigned() && value.get<unsigned long long>() > 1ULL << 62) schema_error(where, "integer too large");
  return value.get<long long>();
}

int small_int(const Json& value, const std::string& where) {
  const long long v = integer_from_json(value, where);
  if (v < -(1LL << 30) || v > (1LL << 30)) schema_error(where, "integer out of range");
  return static_cast<int>(v);
}

std::vector<int> int_list(const Json& value, const std::string& where) {
  require_array(value, where);
  std::vector<int> out;
  for (std::size_t i = 0; i < value.size(); ++i) out.push_back(small_int(value[i], at(where, i)));
  return out;
}

template <class T, class F>
std::vector<T> list_of(const Json& value, const std::string& where, F&& parse) {
  require_array(value, where);
  std::vector<T> out;
  out.reserve(value.size());
  for (std::size_t i = 0; i < value.size(); ++i) out.push_back(parse(value[i], at(where, i)));
  return out;
}

Json index_list(const std::vector<int>& values) { return Json(values); }

Json simplex_list(std::span<const Simplex> simplices) {
  Json out = Json::array();
  for (const auto& s : simplices) out.push_back(simplex_to_json(s));
  return out;
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

Json parse_json(std::string_view text, const std::string& source) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    // e.byte is the 1-based offset of the offending character.
    const std::size_t upto = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < upto; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string what = e.what();
    if (auto pos = what.find(": "); pos != std::string::npos) what = what.substr(pos + 2);
    throw InvalidInput("parse error in " + source + " at line " + std::to_string(line) + ", column " +
                       std::to_string(column) + ": " + what);
  }
}

Json read_json_file(const std::filesystem::path& path) { return parse_json(read_text(path), path.string()); }

std::string dump(const Json& value) { return value.dump(2) + "\n"; }

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw InvalidInput("write failed for '" + path.string() + "'");
}

Rational rational_from_json(const Json& value, const std::string& where) {
  if (value.is_number_integer()) return Rational(integer_from_json(value, where));
  if (!value.is_string()) schema_error(where, "expected a rational as \"p/q\" or an integer");
  try {
    return parse_rational(value.get<std::string>());
  } catch (const InvalidInput& e) {
    schema_error(where, e.what());
  }
}

Json rational_to_json(const Rational& value) { return format_rational(value); }

RationalPoint point_from_json(const Json& value, const std::string& where) {
  auto coords = list_of<Rational>(value, where, [](const Json& v, const std::string& w) { return rational_from_json(v, w); });
  if (coords.empty()) schema_error(where, "a point needs at least one coordinate");
  return RationalPoint(std::move(coords));
}

Json point_to_json(const RationalPoint& point) {
  Json out = Json::array();
  for (const auto& c : point.coords()) out.push_back(rational_to_json(c));
  return out;
}

std::vector<RationalPoint> points_from_json(const Json& value, const std::string& where) {
  auto points = list_of<RationalPoint>(value, where, [](const Json& v, const std::string& w) { return point_from_json(v, w); });
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i].dim() != points[0].dim()) schema_error(at(where, i), "dimension differs from the first point");
  }
  return points;
}

Json points_to_json(std::span<const RationalPoint> points) {
  Json out = Json::array();
  for (const auto& p : points) out.push_back(point_to_json(p));
  return out;
}

Simplex simplex_from_json(const Json& value, const std::string& where) {
  auto ids = int_list(value, where);
  try {
    return Simplex(std::vector<Vertex>(ids.begin(), ids.end()));
  } catch (const InvalidInput& e) {
    schema_error(where, e.what());
  }
}

Json simplex_to_json(const Simplex& s) { return Json(s.vertices()); }

IndexSet index_set_from_json(const Json& value, const std::string& where) {
  auto ids = int_list(value, where);
  try {
    return make_index_set(std::move(ids));
  } catch (const InvalidInput& e) {
    schema_error(where, e.what());
  }
}

OrientedComplex ComplexFile::oriented(int seed_sign) const {
  if (orientation) return OrientedComplex(complex, *orientation);
  return orient(complex, seed_sign);
}

ComplexFile complex_from_json(const Json& value, const std::string& where) {
  if (!value.is_object()) schema_error(where, "expected a complex object");
  reject_unknown(value, {"vertices", "maximal_simplices", "orientation", "carriers"}, where);
  const long long n = integer_from_json(require_field(value, "vertices", where), field(where, "vertices"));
  if (n < 0 || n > (1LL << 24)) schema_error(field(where, "vertices"), "vertex count out of range");
  const std::string ms_where = field(where, "maximal_simplices");
  const auto listed = list_of<Simplex>(require_field(value, "maximal_simplices", where), ms_where,
                                       [](const Json& v, const std::string& w) { return simplex_from_json(v, w); });
  for (std::size_t i = 0; i < listed.size(); ++i) {
    if (listed[i].vertices().back() >= n) {
      schema_error(at(ms_where, i), "vertex id " + std::to_string(listed[i].vertices().back()) + " not below " +
                                        std::to_string(n));
    }
  }
  ComplexFile file;
  file.complex = SimplicialComplex::from_simplices(listed, static_cast<Vertex>(n));

  if (const Json* o = optional_field(value, "orientation")) {
    const std::string o_where = field(where, "orientation");
    const auto signs = int_list(*o, o_where);
    if (signs.size() != listed.size()) schema_error(o_where, "needs one sign per listed maximal simplex");
    std::map<Simplex, int> by_simplex;
    for (std::size_t i = 0; i < listed.size(); ++i) {
      if (signs[i] != 1 && signs[i] != -1) schema_error(at(o_where, i), "sign must be 1 or -1");
      auto [it, inserted] = by_simplex.emplace(listed[i], signs[i]);
      if (!inserted && it->second != signs[i]) schema_error(at(o_where, i), "conflicting signs for a repeated simplex");
    }
    std::vector<int> aligned;
    for (const auto& top : file.complex.maximal_simplices()) {
      auto it = by_simplex.find(top);
      if (it == by_simplex.end()) schema_error(o_where, "signs given for a simplex that is not maximal");
      aligned.push_back(it->second);
    }
    try {
      OrientedComplex(file.complex, aligned);
    } catch (const Error& e) {
      schema_error(o_where, e.what());
    }
    file.orientation = std::move(aligned);
  }

  if (const Json* c = optional_field(value, "carriers")) {
    const std::string c_where = field(where, "carriers");
    auto carriers = list_of<Simplex>(*c, c_where, [](const Json& v, const std::string& w) { return simplex_from_json(v, w); });
    if (static_cast<long long>(carriers.size()) != n) schema_error(c_where, "needs one carrier per vertex");
    file.carriers = std::move(carriers);
  }
  return file;
}

Json complex_to_json(const SimplicialComplex& complex) {
  Json out;
  out["vertices"] = complex.vertex_count();
  out["maximal_simplices"] = simplex_list(complex.maximal_simplices());
  return out;
}

Json complex_to_json(const ComplexFile& file) {
  Json out = complex_to_json(file.complex);
  if (file.orientation) out["orientation"] = *file.orientation;
  if (file.carriers) out["carriers"] = simplex_list(*file.carriers);
  return out;
}

Json complex_to_json(const OrientedComplex& complex) {
  Json out = complex_to_json(complex.complex());
  out["orientation"] = complex.signs();
  return out;
}

Labeling labeling_from_json(const Json& value, const std::string& where) {
  if (!value.is_object()) schema_error(where, "expected a labeling object");
  reject_unknown(value, {"m", "labels"}, where);
  const int m = small_int(require_field(value, "m", where), field(where, "m"));
  if (m < 0) schema_error(field(where, "m"), "must be non-negative");
  const std::string l_where = field(where, "labels");
  auto labels = int_list(require_field(value, "labels", where), l_where);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] < 0 || labels[i] > m) schema_error(at(l_where, i), "label outside 0.." + std::to_string(m));
  }
  return Labeling{m, std::move(labels)};
}

Json labeling_to_json(const Labeling& labeling) {
  Json out;
  out["m"] = labeling.m;
  out["labels"] = labeling.labels;
  return out;
}

std::vector<RationalPoint> ConfigFile::loop_points() const {
  if (loop) return *loop;
  if (!loop_labels) throw InvalidInput("config has neither 'loop' nor 'loop_labels'");
  std::vector<RationalPoint> out;
  for (int l : *loop_labels) out.push_back(config.V.at(static_cast<std::size_t>(l)));
  return out;
}

ConfigFile config_from_json(const Json& value, const std::string& where) {
  if (!value.is_object()) schema_error(where, "expected a config object");
  reject_unknown(value, {"V", "p", "loop", "loop_labels"}, where);
  ConfigFile file;
  file.config.V = points_from_json(require_field(value, "V", where), field(where, "V"));
  if (file.config.V.empty()) schema_error(field(where, "V"), "needs at least one point");
  const std::size_t d = file.config.V.front().dim();
  if (const Json* p = optional_field(value, "p")) {
    file.config.p = point_from_json(*p, field(where, "p"));
    if (file.config.p->dim() != d) schema_error(field(where, "p"), "dimension differs from V");
  }
  if (const Json* loop = optional_field(value, "loop")) {
    file.loop = points_from_json(*loop, field(where, "loop"));
    if (!file.loop->empty() && file.loop->front().dim() != d) schema_error(field(where, "loop"), "dimension differs from V");
  }
  if (const Json* ll = optional_field(value, "loop_labels")) {
    const std::string ll_where = field(where, "loop_labels");
    auto labels = int_list(*ll, ll_where);
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i] < 0 || static_cast<std::size_t>(labels[i]) >= file.config.V.size()) {
        schema_error(at(ll_where, i), "index outside V");
      }
    }
    file.loop_labels = std::move(labels);
  }
  return file;
}

Json config_to_json(const ConfigFile& file) {
  Json out;
  out["V"] = points_to_json(file.config.V);
  if (file.config.p) out["p"] = point_to_json(*file.config.p);
  if (file.loop) out["loop"] = points_to_json(*file.loop);
  if (file.loop_labels) out["loop_labels"] = *file.loop_labels;
  return out;
}

CoverFile cover_from_json(const Json& value, const std::filesystem::path& base_dir, const std::string& where) {
  if (!value.is_object()) schema_error(where, "expected a cover object");
  reject_unknown(value, {"ambient", "semantics", "sets", "weights"}, where);
  const Json& amb = require_field(value, "ambient", where);
  ComplexFile ambient;
  if (amb.is_string()) {
    const auto path = base_dir / amb.get<std::string>();
    ambient = complex_from_json(read_json_file(path), path.string());
  } else {
    ambient = complex_from_json(amb, field(where, "ambient"));
  }

  const Json& sem = require_field(value, "semantics", where);
  if (!sem.is_string() || (sem != "star" && sem != "closed")) {
    schema_error(field(where, "semantics"), "expected \"star\" or \"closed\"");
  }
  const auto semantics = sem == "star" ? CoverSemantics::Star : CoverSemantics::Closed;

  const std::string s_where = field(where, "sets");
  auto sets = list_of<std::vector<Simplex>>(require_field(value, "sets", where), s_where, [](const Json& v, const std::string& w) {
    return list_of<Simplex>(v, w, [](const Json& s, const std::string& sw) { return simplex_from_json(s, sw); });
  });
  if (sets.size() > static_cast<std::size_t>(Cover::max_sets)) schema_error(s_where, "at most 64 sets");
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = 0; j < sets[i].size(); ++j) {
      if (!ambient.complex.contains(sets[i][j])) schema_error(at(at(s_where, i), j), "simplex not in the ambient");
    }
  }

  std::optional<Cover> cover;
  try {
    cover.emplace(ambient.complex, std::move(sets), semantics);
  } catch (const InvalidInput& e) {
    schema_error(s_where, e.what());
  }
  CoverFile file{std::move(*cover), std::move(ambient), std::nullopt};

  if (const Json* w = optional_field(value, "weights")) {
    const std::string w_where = field(where, "weights");
    PartitionWeights weights;
    weights.weights = list_of<std::vector<Rational>>(*w, w_where, [](const Json& row, const std::string& rw) {
      return list_of<Rational>(row, rw, [](const Json& q, const std::string& qw) { return rational_from_json(q, qw); });
    });
    try {
      validate_weights(file.cover, weights);
    } catch (const InvalidInput& e) {
      schema_error(w_where, e.what());
    }
    file.weights = std::move(weights);
  }
  return file;
}

Json cover_to_json(const Cover& cover, const std::optional<PartitionWeights>& weights) {
  Json out;
  out["ambient"] = complex_to_json(cover.ambient());
  out["semantics"] = cover.semantics() == CoverSemantics::Star ? "star" : "closed";
  Json sets = Json::array();
  for (int i = 0; i < cover.size(); ++i) {
    const auto members = cover.set(i);
    std::vector<Simplex> generators;
    for (const auto& s : members) {
      const bool redundant = std::any_of(members.begin(), members.end(), [&](const Simplex& t) {
        if (t == s) return false;
        return cover.semantics() == CoverSemantics::Star ? t.is_face_of(s) : s.is_face_of(t);
      });
      if (!redundant) generators.push_back(s);
    }
    sets.push_back(simplex_list(generators));
  }
  out["sets"] = std::move(sets);
  if (weights) {
    Json rows = Json::array();
    for (const auto& row : weights->weights) {
      Json r = Json::array();
      for (const auto& q : row) r.push_back(rational_to_json(q));
      rows.push_back(std::move(r));
    }
    out["weights"] = std::move(rows);
  }
  return out;
}

ComplexFile read_complex(const std::filesystem::path& path) { return complex_from_json(read_json_file(path), path.string()); }

Labeling read_labeling(const std::filesystem::path& path) { return labeling_from_json(read_json_file(path), path.string()); }

ConfigFile read_config(const std::filesystem::path& path) { return config_from_json(read_json_file(path), path.string()); }

CoverFile read_cover(const std::filesystem::path& path) {
  return cover_from_json(read_json_file(path), path.parent_path(), path.string());
}

Json to_json(const TheoremReport& report) {
  Json out;
  out["theorem"] = report.theorem;
  out["verdict"] = to_string(report.verdict);
  Json items = Json::array();
  for (const auto& h : report.hypotheses) {
    items.push_back(Json{{"name", h.name}, {"status", to_string(h.status)}, {"evidence", h.evidence}});
  }
  out["hypotheses"] = std::move(items);
  out["witness_simplex"] = report.witness_simplex ? simplex_to_json(*report.witness_simplex) : Json(nullptr);
  out["witness_indices"] = report.witness_indices ? index_list(*report.witness_indices) : Json(nullptr);
  Json counts = Json::object();
  for (const auto& [k, v] : report.counts) counts[k] = v;
  out["counts"] = std::move(counts);
  out["points"] = points_to_json(report.points);
  out["note"] = report.note;
  return out;
}

Json to_json(const DegreeReport& report) {
  Json out;
  out["degree"] = report.value;
  out["target"] = index_list(report.target_used);
  Json checks = Json::array();
  for (const auto& [face, value] : report.cross_checked) checks.push_back(Json{{"target", index_list(face)}, {"degree", value}});
  out["cross_checked"] = std::move(checks);
  return out;
}

Json to_json(const SpernerVerdict& verdict) {
  Json out;
  out["valid"] = verdict.valid;
  Json list = Json::array();
  for (const auto& v : verdict.violations) {
    list.push_back(Json{{"vertex", v.vertex}, {"rule", v.rule}, {"label", v.label}, {"carrier", simplex_to_json(v.carrier)}});
  }
  out["violations"] = std::move(list);
  return out;
}

Json to_json(const ComplementVerdict& verdict) {
  Json out;
  out["in_complement"] = verdict.in_complement;
  out["violating"] = verdict.violating ? index_list(*verdict.violating) : Json(nullptr);
  out["witness"] = verdict.witness ? simplex_to_json(*verdict.witness) : Json(nullptr);
  return out;
}

Json to_json(const ExtensionVerdict& verdict) {
  Json out;
  out["extends"] = verdict.extends;
  Json diffs = Json::array();
  for (const auto& d : verdict.diffs) {
    diffs.push_back(Json{{"index", d.index}, {"missing", simplex_list(d.missing)}, {"extra", simplex_list(d.extra)}});
  }
  out["diffs"] = std::move(diffs);
  return out;
}

Json to_json(const PebbleResult& result) {
  Json out;
  out["bound"] = result.bound;
  out["certified"] = result.certified;
  out["cells"] = result.cells;
  Json pebbles = Json::array();
  for (std::size_t i = 0; i < result.points.size(); ++i) {
    Json cov = Json::array();
    for (const auto& J : result.coverage[i]) cov.push_back(index_list(J));
    pebbles.push_back(Json{{"point", point_to_json(result.points[i])}, {"coverage", std::move(cov)}});
  }
  out["pebbles"] = std::move(pebbles);
  out["failure"] = result.failure;
  return out;
}

Json to_json(const FuzzSummary& summary) {
  Json out;
  out["family"] = summary.family;
  out["instances"] = summary.instances;
  out["verified"] = summary.verified;
  out["hypothesis_failures"] = summary.hypothesis_failures;
  out["alarms"] = summary.alarms;
  out["alarm_details"] = summary.alarm_details;
  return out;
}

Json to_json(const CovFamily& family) {
  Json out;
  out["index_count"] = family.index_count();
  Json sets = Json::array();
  for (const auto& J : family.minimal_sets()) sets.push_back(index_list(J));
  out["minimal_sets"] = std::move(sets);
  return out;
}

Json to_json(const Nerve& nerve) {
  Json out;
  out["index_count"] = nerve.index_count;
  out["maximal_simplices"] = simplex_list(nerve.complex.maximal_simplices());
  return out;
}

Json to_json(const FullyLabeledResult& result) {
  Json out;
  out["containing"] = simplex_list(result.containing);
  out["exact"] = simplex_list(result.exact);
  return out;
}

Json to_json(const FullyLabeledCount& count) {
  Json out;
  out["unsigned_count"] = count.unsigned_count;
  out["signed_count"] = count.signed_count;
  out["simplices"] = simplex_list(count.simplices);
  return out;
}

Json to_json(const Dg2Report& report) {
  Json out;
  out["dg2"] = report.parity;
  out["hits"] = report.hits;
  out["probe"] = point_to_json(report.probe);
  out["facet"] = index_list(report.facet);
  return out;
}

}  // namespace kkm::io
