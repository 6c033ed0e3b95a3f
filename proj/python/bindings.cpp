// Python bindings. Structured data crosses the boundary as JSON text so that
// exact rationals stay exact strings on both sides.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "schroeter/cubic.hpp"
#include "schroeter/engine.hpp"
#include "schroeter/error.hpp"
#include "schroeter/serialize.hpp"
#include "schroeter/svg.hpp"
#include "schroeter/verify.hpp"
#include "schroeter/weierstrass.hpp"

namespace py = pybind11;
using namespace schroeter;

namespace {

std::string construct(const std::string& seed_json, std::size_t max_points, std::size_t max_generations,
                      std::optional<std::uint64_t> shuffle_seed) {
  SeedFile sf = seed_from_json(Json::parse(seed_json));
  ConstructionState st = run(sf.seed, RunOptions{max_points, max_generations, shuffle_seed});
  return state_to_json(st, sf.weierstrass).dump();
}

std::string seed_from_weierstrass(const std::string& a, const std::string& b, const std::string& points) {
  WeierstrassCurve w(parse_rat(a), parse_rat(b));
  auto pts = parse_point_list(points);
  if (pts.size() != 3) throw GeometryError(ErrorKind::ParseError, "expected three points");
  return seed_to_json(seed_from_curve(w, pts[0], pts[1], pts[2]), w).dump();
}

std::string fit(const std::string& points) {
  auto pts = parse_point_list(points);
  if (pts.size() != 9) throw GeometryError(ErrorKind::ParseError, "expected nine points");
  return fit_cubic_9(pts).to_string();
}

std::string verify(const std::string& run_json, const std::string& suite) {
  Json j = Json::parse(run_json);
  return report_to_json(verify_state(state_from_json(j), weierstrass_of_state_json(j), suite)).dump();
}

std::string plot(const std::string& run_json, bool tangents) {
  PlotOptions o;
  o.tangents = tangents;
  return render_svg(state_from_json(Json::parse(run_json)), o).svg;
}

}  // namespace

PYBIND11_MODULE(_schroeter, m) {
  m.doc() = "Exact Schroeter constructions on plane cubics";

  static PyObject* geometry_error = py::exception<GeometryError>(m, "GeometryError", PyExc_ValueError).release().ptr();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const GeometryError& e) {
      std::string msg = std::string(to_string(e.kind())) + ": " + e.what();
      PyErr_SetString(geometry_error, msg.c_str());
    } catch (const Json::exception& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.def("construct", &construct, py::arg("seed_json"), py::arg("max_points") = 512,
        py::arg("max_generations") = 16, py::arg("shuffle_seed") = std::nullopt);
  m.def("seed_from_curve", &seed_from_weierstrass, py::arg("a"), py::arg("b"), py::arg("points"));
  m.def("fit", &fit, py::arg("points"));
  m.def("verify", &verify, py::arg("run_json"), py::arg("suite") = "all");
  m.def("plot", &plot, py::arg("run_json"), py::arg("tangents") = false);
}
