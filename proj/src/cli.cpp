#include "kkm/cli.hpp"

#include "kkm/errors.hpp"
#include "kkm/fixtures.hpp"
#include "kkm/io.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <functional>
#include <set>

namespace kkm::cli {

namespace {

using io::Json;

struct CommandInfo {
  std::vector<std::string> required_inputs;
  std::vector<std::string> optional_inputs;
  std::vector<std::string> options;
};

const std::map<std::string, CommandInfo>& table() {
  static const std::map<std::string, CommandInfo> t{
      {"build", {{}, {"complex"}, {"fixture", "simplices", "orient"}}},
      {"subdivide", {{"complex"}, {}, {"depth", "orient", "labels-out"}}},
      {"sperner-check", {{"complex", "labels"}, {}, {}}},
      {"degree", {{"complex", "labels"}, {}, {"target", "seed-sign"}}},
      {"boundary-degree", {{"complex", "labels"}, {}, {"target", "seed-sign"}}},
      {"winding", {{"config"}, {}, {"p", "ray"}}},
      {"cov", {{"config"}, {}, {"p", "query"}}},
      {"complement-check", {{"cover", "config"}, {}, {"p"}}},
      {"nerve", {{"cover"}, {}, {}}},
      {"cover-degree", {{"cover"}, {}, {"seed-sign"}}},
      {"extension-check", {{"cover-a", "cover-x"}, {}, {}}},
      {"fully-labeled", {{"complex", "labels"}, {}, {"J"}}},
      {"pebble", {{"V"}, {}, {}}},
      {"bloch", {{"complex", "labels", "P"}, {}, {}}},
      {"dg2", {{"complex", "labels", "P"}, {}, {}}},
      {"verify-kkm", {{"cover-a", "cover-x"}, {}, {"assert-ep", "assert-class"}}},
      {"verify-gkkm", {{"cover-a", "cover-x", "config"}, {}, {"p", "assert-ep", "assert-class"}}},
      {"verify-sperner", {{"complex", "subcomplex", "labels", "config"}, {}, {"p", "assert-ep", "assert-class"}}},
      {"verify-degbound", {{"complex", "labels"}, {}, {"seed-sign"}}},
      {"verify-polytope", {{"complex", "labels", "P"}, {}, {"seed-sign"}}},
      {"verify-bloch", {{"complex", "labels", "P"}, {}, {}}},
      {"verify-tucker", {{"cover-a", "cover-x"}, {}, {"assert-ep", "assert-class"}}},
      {"fuzz", {{}, {}, {"family", "fuzz-count", "seed", "threads"}}},
  };
  return t;
}

class Job {
 public:
  explicit Job(const JobSpec& spec) : spec_(spec) {}

  std::filesystem::path input(const std::string& role) const {
    auto it = spec_.inputs.find(role);
    if (it == spec_.inputs.end()) throw InvalidInput("missing input --" + role);
    return it->second;
  }
  bool has_input(const std::string& role) const { return spec_.inputs.count(role) != 0; }
  bool has(const std::string& option) const { return spec_.options.count(option) != 0; }
  std::string option(const std::string& name, const std::string& fallback) const {
    auto it = spec_.options.find(name);
    return it == spec_.options.end() ? fallback : it->second;
  }
  bool flag(const std::string& name) const { return has(name) && option(name, "") != "0" && option(name, "") != "false"; }

  long long integer(const std::string& name, long long fallback) const {
    if (!has(name)) return fallback;
    const std::string text = option(name, "");
    long long value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
      throw InvalidInput("option --" + name + ": expected an integer, got '" + text + "'");
    }
    return value;
  }
  std::uint64_t unsigned_integer(const std::string& name, std::uint64_t fallback) const {
    if (!has(name)) return fallback;
    const std::string text = option(name, "");
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
      throw InvalidInput("option --" + name + ": expected a non-negative integer, got '" + text + "'");
    }
    return value;
  }
  int seed_sign() const {
    const long long s = integer("seed-sign", 1);
    if (s != 1 && s != -1) throw InvalidInput("option --seed-sign: expected 1 or -1");
    return static_cast<int>(s);
  }
  std::optional<int> target() const {
    if (!has("target")) return std::nullopt;
    return static_cast<int>(integer("target", 0));
  }
  IndexSet index_list(const std::string& name) const {
    std::vector<int> values;
    const std::string text = option(name, "");
    std::size_t start = 0;
    while (start <= text.size()) {
      const std::size_t end = std::min(text.find(',', start), text.size());
      const std::string piece = text.substr(start, end - start);
      int v = 0;
      auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
      if (piece.empty() || ec != std::errc() || ptr != piece.data() + piece.size()) {
        throw InvalidInput("option --" + name + ": expected comma-separated integers, got '" + text + "'");
      }
      values.push_back(v);
      start = end + 1;
    }
    return make_index_set(std::move(values));
  }
  VerifyOptions verify_options() const { return {flag("assert-ep"), flag("assert-class")}; }

  io::ComplexFile complex(const std::string& role = "complex") const { return io::read_complex(input(role)); }
  Labeling labels() const { return io::read_labeling(input("labels")); }
  io::ConfigFile config(const std::string& role = "config") const { return io::read_config(input(role)); }
  io::CoverFile cover(const std::string& role = "cover") const { return io::read_cover(input(role)); }

  /// --p overrides the config's p; one of them must be present.
  RationalPoint query_point(const io::ConfigFile& file) const {
    RationalPoint p;
    if (has("p")) {
      p = parse_point(option("p", ""));
    } else if (file.config.p) {
      p = *file.config.p;
    } else {
      throw InvalidInput("no query point: pass --p or set \"p\" in the config");
    }
    if (p.dim() != file.config.dimension()) throw InvalidInput("query point dimension differs from V");
    return p;
  }

 private:
  const JobSpec& spec_;
};

struct Outcome {
  Json report;
  int exit_code = Ok;
};

int exit_for(Verdict v) {
  switch (v) {
    case Verdict::Verified: return Ok;
    case Verdict::HypothesisFailure: return HypothesisViolation;
    case Verdict::NoWitness: return Alarm;
  }
  return Alarm;
}

Outcome theorem(const TheoremReport& report) { return {io::to_json(report), exit_for(report.verdict)}; }

// "simplex:m", "sphere:m", "cycle:n", "disk:n:rings", "winding:k", "mobius", "mobius5".
Json build_fixture(const std::string& spec) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = spec.find(':', start);
    parts.push_back(spec.substr(start, end == std::string::npos ? std::string::npos : end - start));
    if (end == std::string::npos) break;
    start = end + 1;
  }
  auto arg = [&](std::size_t i) {
    if (i >= parts.size()) throw InvalidInput("fixture '" + spec + "' needs more parameters");
    long v = 0;
    const auto& s = parts[i];
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) throw InvalidInput("fixture '" + spec + "': bad parameter '" + s + "'");
    return v;
  };
  auto arity = [&](std::size_t n) {
    if (parts.size() != n + 1) throw InvalidInput("fixture '" + parts[0] + "' takes " + std::to_string(n) + " parameter(s)");
  };
  const std::string& name = parts[0];
  if (name == "simplex") {
    arity(1);
    return io::complex_to_json(fixtures::oriented_simplex(static_cast<int>(arg(1))));
  }
  if (name == "sphere") {
    arity(1);
    return io::complex_to_json(fixtures::canonical_sphere(static_cast<int>(arg(1))));
  }
  if (name == "cycle") {
    arity(1);
    return io::complex_to_json(fixtures::cycle(static_cast<int>(arg(1))));
  }
  if (name == "disk") {
    arity(2);
    return io::complex_to_json(fixtures::disk(static_cast<int>(arg(1)), static_cast<int>(arg(2))));
  }
  if (name == "winding") {
    arity(1);
    const auto w = construct_winding_labeling(arg(1));
    Json out = io::complex_to_json(w.cycle);
    return Json{{"complex", out}, {"labeling", io::labeling_to_json(w.labeling)}};
  }
  if (name == "mobius") {
    arity(0);
    return io::complex_to_json(fixtures::mobius_band());
  }
  if (name == "mobius5") {
    arity(0);
    return io::complex_to_json(fixtures::mobius_band5());
  }
  throw InvalidInput("unknown fixture '" + name + "'");
}

Outcome cmd_build(const Job& job) {
  if (job.has("fixture") + job.has("simplices") + job.has_input("complex") != 1) {
    throw InvalidInput("build: pass exactly one of --fixture, --simplices and --complex");
  }
  Json complex;
  if (job.has("fixture")) {
    complex = build_fixture(job.option("fixture", ""));
    if (job.has("orient")) {
      // Fixtures with a canonical orientation keep it, times the sign.
      const int sign = static_cast<int>(job.integer("orient", 1));
      if (sign != 1 && sign != -1) throw InvalidInput("option --orient: expected 1 or -1");
      Json& target = complex.contains("labeling") ? complex["complex"] : complex;
      if (target.contains("orientation")) {
        for (auto& o : target["orientation"]) o = o.get<int>() * sign;
      } else {
        target = io::complex_to_json(orient(io::complex_from_json(target).complex, sign));
      }
    }
  } else {
    SimplicialComplex K;
    if (job.has("simplices")) {
      const Json list = io::parse_json(job.option("simplices", ""), "--simplices");
      std::vector<std::vector<Vertex>> tops;
      if (!list.is_array()) throw InvalidInput("schema: --simplices: expected an array of vertex lists");
      for (std::size_t i = 0; i < list.size(); ++i) {
        const auto s = io::simplex_from_json(list[i], "--simplices[" + std::to_string(i) + "]");
        tops.push_back(s.vertices());
      }
      K = build_complex(tops);
    } else {
      K = job.complex().complex;
    }
    complex = job.has("orient") ? io::complex_to_json(orient(K, static_cast<int>(job.integer("orient", 1))))
                                : io::complex_to_json(K);
  }
  return {complex, Ok};
}

Outcome cmd_subdivide(const Job& job) {
  const auto file = job.complex();
  const long long depth = job.integer("depth", 1);
  if (depth < 0 || depth > 6) throw InvalidInput("option --depth: expected 0..6");
  io::ComplexFile out;
  Subdivision sub;
  if (file.orientation || job.has("orient")) {
    const int seed = static_cast<int>(job.integer("orient", 1));
    auto result = barycentric_subdivision(file.oriented(seed), static_cast<int>(depth));
    out.orientation = result.oriented.signs();
    sub = std::move(result.subdivision);
  } else {
    sub = barycentric_subdivision(file.complex, static_cast<int>(depth));
  }
  out.complex = sub.complex;
  out.carriers.emplace();
  for (const auto& prov : sub.provenance) out.carriers->push_back(prov.carrier);
  if (job.has("labels-out")) {
    const int m = file.complex.vertex_count() - 1;
    const auto labeling = canonical_sperner_labeling(sperner_context(sub, m));
    io::write_text_file(job.option("labels-out", ""), io::dump(io::labeling_to_json(labeling)));
  }
  return {io::complex_to_json(out), Ok};
}

Outcome cmd_sperner_check(const Job& job) {
  const auto file = job.complex();
  const auto labeling = job.labels();
  if (!file.carriers) throw InvalidInput("schema: " + job.input("complex").string() + ": sperner-check needs \"carriers\"");
  SpernerContext ctx{labeling.m, *file.carriers};
  for (std::size_t v = 0; v < ctx.carrier.size(); ++v) {
    if (ctx.carrier[v].vertices().back() > labeling.m) {
      throw InvalidInput("carrier of vertex " + std::to_string(v) + " leaves the base simplex 0.." + std::to_string(labeling.m));
    }
  }
  const auto verdict = validate_sperner(ctx, labeling);
  return {io::to_json(verdict), verdict.valid ? Ok : HypothesisViolation};
}

Outcome cmd_degree(const Job& job, bool boundary) {
  const auto oc = job.complex().oriented(job.seed_sign());
  const auto labeling = job.labels();
  const auto report = boundary ? boundary_degree(oc, labeling, job.target()) : degree_labeling(oc, labeling, job.target());
  return {io::to_json(report), Ok};
}

RayDirection parse_ray(const std::string& text) {
  if (text == "+x") return RayDirection::PosX;
  if (text == "-x") return RayDirection::NegX;
  if (text == "+y") return RayDirection::PosY;
  if (text == "-y") return RayDirection::NegY;
  throw InvalidInput("option --ray: expected +x, -x, +y or -y");
}

Outcome cmd_winding(const Job& job) {
  const auto file = job.config();
  const auto p = job.query_point(file);
  if (p.dim() != 2) throw InvalidInput("winding needs planar points");
  const auto loop = file.loop_points();
  if (loop.size() < 2) throw InvalidInput("winding needs a loop of at least two points");
  const long w = winding_number(std::span<const RationalPoint>(loop), p, parse_ray(job.option("ray", "+x")));
  return {Json{{"p", io::point_to_json(p)}, {"winding", w}}, Ok};
}

Outcome cmd_cov(const Job& job) {
  const auto file = job.config();
  const auto p = job.query_point(file);
  const auto family = cov_v(file.config.V, p);
  Json out = io::to_json(family);
  out["p"] = io::point_to_json(p);
  if (job.has("query")) {
    const auto J = job.index_list("query");
    if (!J.empty() && J.back() >= family.index_count()) throw InvalidInput("option --query: index outside V");
    out["query"] = Json{{"indices", J}, {"member", family.contains(J)}};
  }
  return {out, Ok};
}

Outcome cmd_complement(const Job& job) {
  const auto cover = job.cover();
  const auto file = job.config();
  const auto p = job.query_point(file);
  const auto verdict = p_in_complement(cover.cover, file.config.V, p);
  const auto pieces = image_polyhedron(cover.cover, file.config.V);
  const bool on_image = point_on_image(pieces, file.config.V, p);
  Json out = io::to_json(verdict);
  out["p"] = io::point_to_json(p);
  Json list = Json::array();
  for (const auto& J : pieces) list.push_back(J);
  out["image_pieces"] = std::move(list);
  out["on_image"] = on_image;
  out["agrees"] = on_image != verdict.in_complement;
  return {out, Ok};
}

Outcome cmd_nerve(const Job& job) { return {io::to_json(nerve(job.cover().cover)), Ok}; }

Outcome cmd_cover_degree(const Job& job) {
  const auto file = job.cover();
  const auto oc = file.ambient.oriented(job.seed_sign());
  Json out = io::to_json(cover_degree(file.cover, oc));
  if (file.weights) out["weighted_degree"] = cover_degree_weighted(file.cover, oc, *file.weights);
  return {out, Ok};
}

Outcome cmd_extension(const Job& job) {
  const auto verdict = extension_check(job.cover("cover-a").cover, job.cover("cover-x").cover);
  return {io::to_json(verdict), verdict.extends ? Ok : HypothesisViolation};
}

Outcome cmd_fully_labeled(const Job& job) {
  const auto file = job.complex();
  const auto labeling = job.labels();
  IndexSet J;
  if (job.has("J")) {
    J = job.index_list("J");
  } else {
    for (int l = 0; l <= labeling.m; ++l) J.push_back(l);
  }
  Json out = io::to_json(fully_labeled(file.complex, labeling, J));
  out = Json{{"J", J}, {"containing", out["containing"]}, {"exact", out["exact"]}};
  return {out, Ok};
}

Outcome cmd_pebble(const Job& job) {
  const auto file = job.config("V");
  const auto result = pebble_set(file.config.V, static_cast<int>(file.config.dimension()));
  return {io::to_json(result), result.certified ? Ok : Alarm};
}

Outcome cmd_bloch(const Job& job) {
  const auto file = job.complex();
  const auto labeling = job.labels();
  const auto P = job.config("P").config.V;
  require_labels_for(file.complex, labeling);
  const auto bd = bloch_boundary(file.complex);
  Json faces = Json::array();
  for (std::size_t i = 0; i < bd.faces.size(); ++i) {
    faces.push_back(Json{{"face", io::simplex_to_json(bd.faces[i])}, {"incidence", bd.incidence[i]}});
  }
  Json off = Json::array();
  for (const auto& s : bloch_boundary_off_polytope(file.complex, labeling, P)) off.push_back(io::simplex_to_json(s));
  const bool ok = off.empty();
  return {Json{{"faces", std::move(faces)}, {"off_polytope_boundary", std::move(off)}}, ok ? Ok : HypothesisViolation};
}

Outcome cmd_dg2(const Job& job) {
  const auto file = job.complex();
  return {io::to_json(dg2(file.complex, job.labels(), job.config("P").config.V)), Ok};
}

Outcome cmd_fuzz(const Job& job) {
  const std::string family = job.option("family", "all");
  const long long count = job.integer("fuzz-count", 100);
  if (count < 0 || count > 1000000) throw InvalidInput("option --fuzz-count: expected 0..1000000");
  const std::uint64_t seed = job.unsigned_integer("seed", 1);
  const long long threads = job.integer("threads", 1);
  if (threads < 1 || threads > 256) throw InvalidInput("option --threads: expected 1..256");
  std::vector<std::string> families;
  if (family == "all") {
    families = fuzz_families();
  } else {
    families.push_back(family);
  }
  Json summaries = Json::array();
  long alarms = 0;
  for (const auto& f : families) {
    const auto summary = run_fuzz(f, static_cast<long>(count), seed, static_cast<unsigned>(threads));
    alarms += summary.alarms;
    summaries.push_back(io::to_json(summary));
  }
  return {Json{{"seed", seed}, {"summaries", std::move(summaries)}}, alarms ? Alarm : Ok};
}

Outcome dispatch(const std::string& command, const Job& job) {
  if (command == "build") return cmd_build(job);
  if (command == "subdivide") return cmd_subdivide(job);
  if (command == "sperner-check") return cmd_sperner_check(job);
  if (command == "degree") return cmd_degree(job, false);
  if (command == "boundary-degree") return cmd_degree(job, true);
  if (command == "winding") return cmd_winding(job);
  if (command == "cov") return cmd_cov(job);
  if (command == "complement-check") return cmd_complement(job);
  if (command == "nerve") return cmd_nerve(job);
  if (command == "cover-degree") return cmd_cover_degree(job);
  if (command == "extension-check") return cmd_extension(job);
  if (command == "fully-labeled") return cmd_fully_labeled(job);
  if (command == "pebble") return cmd_pebble(job);
  if (command == "bloch") return cmd_bloch(job);
  if (command == "dg2") return cmd_dg2(job);
  if (command == "verify-kkm") {
    return theorem(kkm_verify(job.cover("cover-a").cover, job.cover("cover-x").cover, job.verify_options()));
  }
  if (command == "verify-gkkm") {
    const auto file = job.config();
    return theorem(generalized_kkm_verify(job.cover("cover-a").cover, job.cover("cover-x").cover, file.config.V,
                                          job.query_point(file), job.verify_options()));
  }
  if (command == "verify-sperner") {
    const auto file = job.config();
    return theorem(generalized_sperner_verify(job.complex().complex, job.complex("subcomplex").complex, job.labels(),
                                              file.config.V, job.query_point(file), job.verify_options()));
  }
  if (command == "verify-degbound") return theorem(deg_lower_bound_verify(job.complex().oriented(job.seed_sign()), job.labels()));
  if (command == "verify-polytope") {
    return theorem(polytope_sperner_verify(job.complex().oriented(job.seed_sign()), job.labels(), job.config("P").config.V));
  }
  if (command == "verify-bloch") return theorem(bloch_sperner_verify(job.complex().complex, job.labels(), job.config("P").config.V));
  if (command == "verify-tucker") {
    return theorem(tucker_bacon_verify(job.cover("cover-a").cover, job.cover("cover-x").cover, job.verify_options()));
  }
  if (command == "fuzz") return cmd_fuzz(job);
  throw InvalidInput("unknown command '" + command + "'");
}

void validate(const JobSpec& job) {
  auto it = table().find(job.command);
  if (it == table().end()) throw InvalidInput("unknown command '" + job.command + "'");
  const auto& info = it->second;
  for (const auto& role : info.required_inputs) {
    if (!job.inputs.count(role)) throw InvalidInput(job.command + ": missing input --" + role);
  }
  for (const auto& [role, path] : job.inputs) {
    const bool known = std::count(info.required_inputs.begin(), info.required_inputs.end(), role) ||
                       std::count(info.optional_inputs.begin(), info.optional_inputs.end(), role);
    if (!known) throw InvalidInput(job.command + ": input --" + role + " does not apply");
    if (!std::filesystem::is_regular_file(path)) throw InvalidInput("input --" + role + ": no such file '" + path + "'");
  }
  for (const auto& [name, value] : job.options) {
    if (!std::count(info.options.begin(), info.options.end(), name)) {
      throw InvalidInput(job.command + ": option --" + name + " does not apply");
    }
  }
}

}  // namespace

const std::vector<std::string>& commands() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, info] : table()) out.push_back(name);
    return out;
  }();
  return names;
}

JobResult run(const JobSpec& spec) {
  JobResult result;
  try {
    validate(spec);
    const Job job(spec);
    auto outcome = dispatch(spec.command, job);
    // build and subdivide emit plain input files; every other report is tagged.
    Json report;
    if (spec.command == "build" || spec.command == "subdivide") {
      report = std::move(outcome.report);
    } else {
      report["command"] = spec.command;
      for (auto it = outcome.report.begin(); it != outcome.report.end(); ++it) report[it.key()] = it.value();
    }
    result.exit_code = outcome.exit_code;
    result.report = io::dump(report);
    if (spec.output) io::write_text_file(*spec.output, result.report);
  } catch (const InvalidInput& e) {
    result = {InputError, "", e.what()};
  } catch (const NotOrientable& e) {
    result = {HypothesisViolation, "", std::string("not orientable: ") + e.what()};
  } catch (const OnImage& e) {
    result = {HypothesisViolation, "", std::string("on image: ") + e.what()};
  } catch (const HypothesisFailure& e) {
    result = {HypothesisViolation, "", std::string("hypothesis failure: ") + e.what()};
  } catch (const Unsupported& e) {
    result = {HypothesisViolation, "", std::string("unsupported: ") + e.what()};
  } catch (const Error& e) {
    result = {InputError, "", e.what()};
  }
  return result;
}

}  // namespace kkm::cli
