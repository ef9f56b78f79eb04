// kkm: batch front end over the kkmtopo library. See README.md for the
// commands and the report schema.
#include "kkm/cli.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <map>
#include <string>

namespace {

struct Binding {
  std::string name;
  bool is_input;
  const char* help;
};

const std::map<std::string, std::vector<Binding>>& command_flags() {
  // Must agree with the command table in src/cli.cpp; run() rejects anything else.
  static const std::map<std::string, std::vector<Binding>> flags{
      {"build", {{"complex", true, "complex file to canonicalize"},
                 {"fixture", false, "simplex:m | sphere:m | cycle:n | disk:n:rings | winding:k | mobius | mobius5"},
                 {"simplices", false, "maximal simplices as JSON, e.g. [[0,1,2],[1,2,3]]"},
                 {"orient", false, "orient with this seed sign (1 or -1)"}}},
      {"subdivide", {{"complex", true, "complex file"},
                     {"depth", false, "number of barycentric subdivisions (default 1)"},
                     {"orient", false, "orient the input with this seed sign first"},
                     {"labels-out", false, "also write the canonical Sperner labeling here"}}},
      {"sperner-check", {{"complex", true, "subdivided complex with carriers"}, {"labels", true, "labeling file"}}},
      {"degree", {{"complex", true, "closed oriented pseudomanifold"},
                  {"labels", true, "labeling file"},
                  {"target", false, "label omitted by the target face"},
                  {"seed-sign", false, "orientation seed when the file has none"}}},
      {"boundary-degree", {{"complex", true, "oriented manifold with boundary"},
                           {"labels", true, "labeling file"},
                           {"target", false, "label omitted by the target face"},
                           {"seed-sign", false, "orientation seed when the file has none"}}},
      {"winding", {{"config", true, "config with V and loop or loop_labels"},
                   {"p", false, "query point, e.g. 3/10,3/10"},
                   {"ray", false, "+x | -x | +y | -y"}}},
      {"cov", {{"config", true, "config with V"},
               {"p", false, "query point"},
               {"query", false, "index set to test, e.g. 0,2"}}},
      {"complement-check", {{"cover", true, "cover file"}, {"config", true, "config with V"}, {"p", false, "query point"}}},
      {"nerve", {{"cover", true, "cover file"}}},
      {"cover-degree", {{"cover", true, "cover file"}, {"seed-sign", false, "orientation seed for the ambient"}}},
      {"extension-check", {{"cover-a", true, "cover of A"}, {"cover-x", true, "cover of X"}}},
      {"fully-labeled", {{"complex", true, "complex file"},
                         {"labels", true, "labeling file"},
                         {"J", false, "label set, default 0..m"}}},
      {"pebble", {{"V", true, "config with the polytope vertices"}}},
      {"bloch", {{"complex", true, "complex file"}, {"labels", true, "labeling file"}, {"P", true, "polytope config"}}},
      {"dg2", {{"complex", true, "complex file"}, {"labels", true, "labeling file"}, {"P", true, "polytope config"}}},
      {"verify-kkm", {{"cover-a", true, "cover S of A"},
                      {"cover-x", true, "cover F of X"},
                      {"assert-ep", false, "treat (X, A) as an EP pair"},
                      {"assert-class", false, "treat the class of S as non-zero"}}},
      {"verify-gkkm", {{"cover-a", true, "cover S of A"},
                       {"cover-x", true, "cover F of X"},
                       {"config", true, "config with V"},
                       {"p", false, "query point"},
                       {"assert-ep", false, "treat (X, A) as an EP pair"},
                       {"assert-class", false, "treat h as non-zero"}}},
      {"verify-sperner", {{"complex", true, "complex K"},
                          {"subcomplex", true, "subcomplex Q"},
                          {"labels", true, "labeling file"},
                          {"config", true, "config with V"},
                          {"p", false, "query point"},
                          {"assert-ep", false, "treat (K, Q) as an EP pair"},
                          {"assert-class", false, "treat h as non-zero"}}},
      {"verify-degbound", {{"complex", true, "oriented manifold with boundary"},
                           {"labels", true, "labeling file"},
                           {"seed-sign", false, "orientation seed"}}},
      {"verify-polytope", {{"complex", true, "oriented manifold with boundary"},
                           {"labels", true, "labeling file"},
                           {"P", true, "polytope config"},
                           {"seed-sign", false, "orientation seed"}}},
      {"verify-bloch", {{"complex", true, "pure complex"}, {"labels", true, "labeling file"}, {"P", true, "polytope config"}}},
      {"verify-tucker", {{"cover-a", true, "cover S of A"},
                         {"cover-x", true, "cover F of X"},
                         {"assert-ep", false, "treat (X, A) as an EP pair"},
                         {"assert-class", false, "treat the class of S as non-zero"}}},
      {"fuzz", {{"family", false, "sperner | degbound | polytope | bloch | kkm | gkkm | gsperner | tucker | all"},
                {"fuzz-count", false, "instances per family (default 100)"},
                {"seed", false, "base seed (default 1)"},
                {"threads", false, "worker threads (default 1)"}}},
  };
  return flags;
}

const std::map<std::string, std::string>& command_descriptions() {
  static const std::map<std::string, std::string> text{
      {"build", "write a complex file from a fixture, a simplex list or another file"},
      {"subdivide", "iterated barycentric subdivision with carriers"},
      {"sperner-check", "check a labeling against the Sperner rules"},
      {"degree", "degree of a labeling on a closed pseudomanifold"},
      {"boundary-degree", "degree of a labeling restricted to the boundary"},
      {"winding", "winding number of a planar loop around p"},
      {"cov", "minimal index sets whose hull contains p"},
      {"complement-check", "is p outside the image of the nerve map"},
      {"nerve", "nerve of a cover"},
      {"cover-degree", "degree of a cover through its canonical labeling"},
      {"extension-check", "does a cover of X restrict to the cover of A"},
      {"fully-labeled", "simplices carrying a label set"},
      {"pebble", "certified pebble set of a polytope"},
      {"bloch", "Bloch boundary and its placement over a polytope"},
      {"dg2", "mod 2 degree over a polytope"},
      {"verify-kkm", "KKM intersection verifier"},
      {"verify-gkkm", "generalized KKM verifier at a point"},
      {"verify-sperner", "generalized Sperner verifier at a point"},
      {"verify-degbound", "fully labeled count against the boundary degree"},
      {"verify-polytope", "fully labeled lower bound over a polytope"},
      {"verify-bloch", "fully labeled lower bound from an odd dg2"},
      {"verify-tucker", "complementary pair verifier for antipodal covers"},
      {"fuzz", "seeded random instances for each verifier"},
  };
  return text;
}

bool is_flag(const std::string& name) { return name == "assert-ep" || name == "assert-class"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact combinatorial-topology toolkit: Sperner/KKM labelings, covers, degrees and verifiers"};
  app.require_subcommand(1);

  kkm::cli::JobSpec job;
  std::map<std::string, std::string> values;
  std::map<std::string, bool> flags;
  std::string out;

  for (const auto& [command, bindings] : command_flags()) {
    auto* sub = app.add_subcommand(command, command_descriptions().at(command));
    sub->add_option("--out", out, "write the report here instead of stdout");
    for (const auto& b : bindings) {
      const std::string key = command + "/" + b.name;
      if (is_flag(b.name)) {
        sub->add_flag("--" + b.name, flags[key], b.help);
      } else {
        sub->add_option("--" + b.name, values[key], b.help);
      }
    }
  }

  CLI11_PARSE(app, argc, argv);

  auto* chosen = app.get_subcommands().front();
  job.command = chosen->get_name();
  for (const auto& b : command_flags().at(job.command)) {
    const std::string key = job.command + "/" + b.name;
    if (is_flag(b.name)) {
      if (flags[key]) job.options[b.name] = "1";
      continue;
    }
    if (chosen->count("--" + b.name) == 0) continue;
    (b.is_input ? job.inputs : job.options)[b.name] = values[key];
  }
  if (!out.empty()) job.output = out;

  const auto result = kkm::cli::run(job);
  if (!result.error.empty()) std::cerr << "kkm " << job.command << ": " << result.error << "\n";
  if (!result.report.empty() && !job.output) std::cout << result.report;
  return result.exit_code;
}
