#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "kkm/cli.hpp"
#include "kkm/errors.hpp"
#include "kkm/fixtures.hpp"
#include "kkm/io.hpp"

#include <filesystem>
#include <fstream>
#include <random>

using namespace kkm;
namespace fx = kkm::fixtures;
namespace fs = std::filesystem;
using io::Json;

namespace {

const fs::path data_dir{KKM_DATA_DIR};

fs::path scratch() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / ("kkm_cli_test_" + std::to_string(std::random_device{}()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

fs::path write(const std::string& name, const std::string& text) {
  const auto path = scratch() / name;
  io::write_text_file(path, text);
  return path;
}

fs::path write(const std::string& name, const Json& value) { return write(name, io::dump(value)); }

cli::JobResult run(const std::string& command, std::map<std::string, std::string> inputs,
                   std::map<std::string, std::string> options = {}) {
  return cli::run({command, std::move(inputs), std::nullopt, std::move(options)});
}

Json report(const cli::JobResult& r) {
  REQUIRE_MESSAGE(!r.report.empty(), r.error);
  return io::parse_json(r.report);
}

std::string data(const char* name) { return (data_dir / name).string(); }

}  // namespace

TEST_CASE("complex files round-trip") {
  const auto disk = fx::disk(6, 2);
  for (const auto& value : {io::complex_to_json(disk.complex()), io::complex_to_json(disk)}) {
    const auto file = io::complex_from_json(io::parse_json(io::dump(value)));
    CHECK(file.complex == disk.complex());
    CHECK(io::complex_to_json(file) == value);
  }
  const auto oriented = io::complex_from_json(io::complex_to_json(disk));
  REQUIRE(oriented.orientation);
  CHECK(oriented.oriented().signs() == disk.signs());
  // Subcomplexes keep parent ids, so unused ids are accepted.
  const auto sub = io::complex_from_json(io::parse_json(R"({"vertices": 5, "maximal_simplices": [[1, 4]]})"));
  CHECK(sub.complex.contains(Simplex{1, 4}));
}

TEST_CASE("labeling, config and cover files round-trip") {
  const Labeling L{3, {0, 3, 1, 2, 2}};
  CHECK(io::labeling_from_json(io::labeling_to_json(L)) == L);

  io::ConfigFile cfg{{fx::hexagon(), RationalPoint{Rational(1, 3), Rational(-2, 7)}}, std::nullopt, std::vector<int>{0, 2, 4}};
  const auto back = io::config_from_json(io::parse_json(io::dump(io::config_to_json(cfg))));
  CHECK(back.config.V == cfg.config.V);
  CHECK(back.config.p == cfg.config.p);
  CHECK(back.loop_points() == std::vector<RationalPoint>{fx::hexagon()[0], fx::hexagon()[2], fx::hexagon()[4]});

  const auto fixture = construct_winding_labeling(2);
  const auto cover = cover_from_labeling(fixture.cycle.complex(), fixture.labeling);
  const auto weights = canonical_weights(cover);
  for (auto semantics : {CoverSemantics::Star, CoverSemantics::Closed}) {
    const Cover c = semantics == CoverSemantics::Star
                        ? cover
                        : Cover(fixture.cycle.complex(), {{Simplex{0, 1}}, {Simplex{1, 2}, Simplex{2, 3}}, {Simplex{0, 5}, Simplex{3, 4}, Simplex{4, 5}}},
                                semantics);
    const auto json = io::cover_to_json(c, semantics == CoverSemantics::Star ? std::optional(weights) : std::nullopt);
    const auto file = io::cover_from_json(io::parse_json(io::dump(json)), scratch());
    CHECK(file.cover.semantics() == semantics);
    for (int i = 0; i < c.size(); ++i) CHECK(file.cover.set(i) == c.set(i));
    CHECK(io::cover_to_json(file.cover, file.weights) == json);
  }
}

TEST_CASE("a string ambient resolves against the cover file's directory") {
  const auto fixture = construct_winding_labeling(1);
  write("ambient.json", io::complex_to_json(fixture.cycle));
  auto json = io::cover_to_json(cover_from_labeling(fixture.cycle.complex(), fixture.labeling));
  json["ambient"] = "ambient.json";
  const auto path = write("cover_rel.json", json);
  const auto file = io::read_cover(path);
  CHECK(file.ambient.complex == fixture.cycle.complex());
  REQUIRE(file.ambient.orientation);
}

TEST_CASE("parse and schema errors name the location") {
  try {
    io::parse_json("{\n  \"m\": 2,\n  \"labels\": [0, 1,, 2]\n}", "labels.json");
    FAIL("expected a parse error");
  } catch (const InvalidInput& e) {
    const std::string msg = e.what();
    CHECK(msg.find("labels.json") != std::string::npos);
    CHECK(msg.find("line 3") != std::string::npos);
  }
  try {
    io::labeling_from_json(io::parse_json(R"({"m": 2, "labels": [0, 1, "x"]})"));
    FAIL("expected a schema error");
  } catch (const InvalidInput& e) {
    CHECK(std::string(e.what()).find("$.labels[2]") != std::string::npos);
  }
  CHECK_THROWS_AS(io::rational_from_json(Json(0.5)), InvalidInput);
  CHECK_THROWS_AS(io::rational_from_json(Json("-3/-6")), InvalidInput);
  CHECK(io::rational_from_json(Json(-4)) == Rational(-4));
  CHECK_THROWS_AS(io::complex_from_json(io::parse_json(R"({"vertices": 2, "maximal_simplices": [[0, 1]], "extra": 1})")),
                  InvalidInput);
  CHECK_THROWS_AS(io::complex_from_json(io::parse_json(R"({"vertices": 2, "maximal_simplices": [[0, 2]]})")), InvalidInput);
}

TEST_CASE("documented examples") {
  const auto deg = report(run("degree", {{"complex", data("sphere2.json")}, {"labels", data("sperner.json")}}));
  CHECK(deg["command"] == "degree");
  CHECK(deg["degree"] == 1);
  for (const auto& c : deg["cross_checked"]) CHECK(c["degree"] == 1);

  const auto w1 = run("winding", {{"config", data("heptagon.json")}});
  CHECK(w1.exit_code == cli::Ok);
  CHECK(report(w1)["winding"] == 1);
  CHECK(report(run("winding", {{"config", data("heptagon.json")}}, {{"p", "7/10,7/10"}}))["winding"] == 0);
  const auto on = run("winding", {{"config", data("heptagon.json")}}, {{"p", "1/2,1/2"}});
  CHECK(on.exit_code == cli::HypothesisViolation);

  const auto peb = run("pebble", {{"V", data("hexagon.json")}});
  CHECK(peb.exit_code == cli::Ok);
  CHECK(report(peb)["bound"] == 4);
  CHECK(report(peb)["certified"] == true);

  const auto sp = run("sperner-check", {{"complex", data("sphere2.json")}, {"labels", data("sperner.json")}});
  CHECK(sp.exit_code == cli::Ok);
  CHECK(report(sp)["valid"] == true);
}

TEST_CASE("exit codes") {
  CHECK(run("nope", {}).exit_code == cli::InputError);
  CHECK(run("degree", {{"complex", data("sphere2.json")}}).exit_code == cli::InputError);
  CHECK(run("degree", {{"complex", "/nonexistent.json"}, {"labels", data("sperner.json")}}).exit_code == cli::InputError);
  CHECK(run("pebble", {{"V", data("hexagon.json")}}, {{"depth", "2"}}).exit_code == cli::InputError);
  const auto garbage = write("garbage.json", std::string("{ not json"));
  const auto bad = run("pebble", {{"V", garbage.string()}});
  CHECK(bad.exit_code == cli::InputError);
  CHECK(bad.report.empty());
  CHECK_FALSE(bad.error.empty());

  const auto mob = write("mobius.json", report(run("build", {}, {{"fixture", "mobius"}})));
  const auto labels = write("mob_labels.json", io::labeling_to_json(Labeling{2, {0, 1, 2, 0, 1, 2}}));
  CHECK(run("degree", {{"complex", mob.string()}, {"labels", labels.string()}}).exit_code == cli::HypothesisViolation);

  auto wrong = io::read_labeling(data_dir / "sperner.json");
  wrong.labels[1] = 0;
  const auto wrong_path = write("wrong.json", io::labeling_to_json(wrong));
  const auto v = run("sperner-check", {{"complex", data("sphere2.json")}, {"labels", wrong_path.string()}});
  CHECK(v.exit_code == cli::HypothesisViolation);
  CHECK(report(v)["valid"] == false);

  const auto fuzz = run("fuzz", {}, {{"fuzz-count", "5"}, {"seed", "3"}});
  CHECK(fuzz.exit_code == cli::Ok);
  CHECK(report(fuzz)["summaries"].size() == fuzz_families().size());
}

TEST_CASE("pipeline: build, subdivide, verify") {
  const auto built = run("build", {}, {{"fixture", "sphere:3"}, {"orient", "1"}});
  REQUIRE(built.exit_code == cli::Ok);
  CHECK_FALSE(report(built).contains("command"));
  const auto base = write("sphere_base.json", built.report);
  const auto labels_out = scratch() / "sub_labels.json";
  const auto sub = run("subdivide", {{"complex", base.string()}}, {{"depth", "2"}, {"labels-out", labels_out.string()}});
  REQUIRE(sub.exit_code == cli::Ok);
  const auto sub_path = write("sphere_sub.json", sub.report);
  const auto deg = run("degree", {{"complex", sub_path.string()}, {"labels", labels_out.string()}});
  CHECK(report(deg)["degree"] == 1);
  CHECK(run("sperner-check", {{"complex", sub_path.string()}, {"labels", labels_out.string()}}).exit_code == cli::Ok);

  const auto wind = report(run("build", {}, {{"fixture", "winding:-2"}}));
  const auto cyc = write("wind_cycle.json", wind["complex"]);
  const auto lab = write("wind_labels.json", wind["labeling"]);
  CHECK(report(run("degree", {{"complex", cyc.string()}, {"labels", lab.string()}}))["degree"] == -2);

  auto cover = io::cover_to_json(cover_from_labeling(io::read_complex(cyc).complex, io::read_labeling(lab)));
  cover["ambient"] = "wind_cycle.json";
  const auto cover_path = write("wind_cover.json", cover);
  CHECK(report(run("cover-degree", {{"cover", cover_path.string()}}))["degree"] == -2);
  CHECK(run("nerve", {{"cover", cover_path.string()}}).exit_code == cli::Ok);
}

TEST_CASE("reports are byte-identical across runs and thread counts") {
  const auto a = run("fuzz", {}, {{"family", "kkm"}, {"fuzz-count", "30"}, {"seed", "17"}, {"threads", "1"}});
  const auto b = run("fuzz", {}, {{"family", "kkm"}, {"fuzz-count", "30"}, {"seed", "17"}, {"threads", "4"}});
  CHECK(a.report == b.report);
  const auto p1 = run("pebble", {{"V", data("hexagon.json")}});
  const auto p2 = run("pebble", {{"V", data("hexagon.json")}});
  CHECK(p1.report == p2.report);

  const auto out = scratch() / "pebble_out.json";
  const auto r = cli::run({"pebble", {{"V", data("hexagon.json")}}, out.string(), {}});
  std::ifstream in(out);
  const std::string written((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(written == r.report);
}
