// pybind11 bindings. Structured values cross the boundary as JSON text in
// the same schema as the kkm files and reports.
#include "kkm/cli.hpp"
#include "kkm/errors.hpp"
#include "kkm/fuzz.hpp"
#include "kkm/io.hpp"
#include "kkm/theorems.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using kkm::io::Json;

namespace {

std::string text(const Json& value) { return kkm::io::dump(value); }

Json parse(const std::string& s, const char* what) { return kkm::io::parse_json(s, what); }

std::string degree(const std::string& complex_json, const std::string& labeling_json, std::optional<int> target, int seed_sign) {
  const auto file = kkm::io::complex_from_json(parse(complex_json, "complex"));
  const auto labeling = kkm::io::labeling_from_json(parse(labeling_json, "labeling"));
  return text(kkm::io::to_json(kkm::degree_labeling(file.oriented(seed_sign), labeling, target)));
}

long winding(const std::string& loop_json, const std::string& p_json, const std::string& ray) {
  const auto loop = kkm::io::points_from_json(parse(loop_json, "loop"));
  const auto p = kkm::io::point_from_json(parse(p_json, "p"));
  kkm::RayDirection dir = kkm::RayDirection::PosX;
  if (ray == "-x") dir = kkm::RayDirection::NegX;
  else if (ray == "+y") dir = kkm::RayDirection::PosY;
  else if (ray == "-y") dir = kkm::RayDirection::NegY;
  else if (ray != "+x") throw kkm::InvalidInput("ray must be +x, -x, +y or -y");
  return kkm::winding_number(std::span<const kkm::RationalPoint>(loop), p, dir);
}

std::string cov(const std::string& V_json, const std::string& p_json) {
  const auto V = kkm::io::points_from_json(parse(V_json, "V"));
  return text(kkm::io::to_json(kkm::cov_v(V, kkm::io::point_from_json(parse(p_json, "p")))));
}

std::string pebble(const std::string& V_json) {
  const auto V = kkm::io::points_from_json(parse(V_json, "V"));
  if (V.empty()) throw kkm::InvalidInput("V is empty");
  return text(kkm::io::to_json(kkm::pebble_set(V, static_cast<int>(V.front().dim()))));
}

std::string subdivide(const std::string& complex_json, int depth) {
  const auto file = kkm::io::complex_from_json(parse(complex_json, "complex"));
  kkm::io::ComplexFile out;
  kkm::Subdivision sub;
  if (file.orientation) {
    auto result = kkm::barycentric_subdivision(file.oriented(), depth);
    out.orientation = result.oriented.signs();
    sub = std::move(result.subdivision);
  } else {
    sub = kkm::barycentric_subdivision(file.complex, depth);
  }
  out.complex = sub.complex;
  out.carriers.emplace();
  for (const auto& prov : sub.provenance) out.carriers->push_back(prov.carrier);
  return text(kkm::io::complex_to_json(out));
}

std::string sperner_labeling(const std::string& complex_json, int m) {
  const auto file = kkm::io::complex_from_json(parse(complex_json, "complex"));
  if (!file.carriers) throw kkm::InvalidInput("complex has no carriers");
  return text(kkm::io::labeling_to_json(kkm::canonical_sperner_labeling(kkm::SpernerContext{m, *file.carriers})));
}

std::string fuzz(const std::string& family, long count, std::uint64_t seed, unsigned threads) {
  return text(kkm::io::to_json(kkm::run_fuzz(family, count, seed, threads)));
}

py::tuple run(const std::string& command, const std::map<std::string, std::string>& inputs,
              const std::map<std::string, std::string>& options, std::optional<std::string> output) {
  kkm::cli::JobResult r;
  {
    py::gil_scoped_release release;
    r = kkm::cli::run({command, inputs, std::move(output), options});
  }
  return py::make_tuple(r.exit_code, r.report, r.error);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact combinatorial topology kernels";

  static py::exception<kkm::Error> error(m, "KkmError", PyExc_RuntimeError);
  static py::exception<kkm::InvalidInput> invalid(m, "InvalidInput", error.ptr());
  static py::exception<kkm::NotOrientable> not_orientable(m, "NotOrientable", error.ptr());
  static py::exception<kkm::OnImage> on_image(m, "OnImage", error.ptr());
  static py::exception<kkm::HypothesisFailure> hypothesis(m, "HypothesisFailure", error.ptr());
  static py::exception<kkm::Unsupported> unsupported(m, "Unsupported", error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const kkm::InvalidInput& e) {
      invalid(e.what());
    } catch (const kkm::NotOrientable& e) {
      not_orientable(e.what());
    } catch (const kkm::OnImage& e) {
      on_image(e.what());
    } catch (const kkm::HypothesisFailure& e) {
      hypothesis(e.what());
    } catch (const kkm::Unsupported& e) {
      unsupported(e.what());
    } catch (const kkm::Error& e) {
      error(e.what());
    }
  });

  m.def("degree", &degree, py::arg("complex_json"), py::arg("labeling_json"), py::arg("target") = py::none(),
        py::arg("seed_sign") = 1);
  m.def("winding", &winding, py::arg("loop_json"), py::arg("p_json"), py::arg("ray") = "+x");
  m.def("cov", &cov, py::arg("V_json"), py::arg("p_json"));
  m.def("pebble", &pebble, py::arg("V_json"));
  m.def("subdivide", &subdivide, py::arg("complex_json"), py::arg("depth") = 1);
  m.def("sperner_labeling", &sperner_labeling, py::arg("complex_json"), py::arg("m"));
  m.def("fuzz", &fuzz, py::arg("family"), py::arg("count"), py::arg("seed") = 1, py::arg("threads") = 1);
  m.def("run", &run, py::arg("command"), py::arg("inputs"), py::arg("options"), py::arg("output") = py::none());
  m.def("commands", &kkm::cli::commands);
}
