#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rotsys/catalog.hpp"
#include "rotsys/drawability.hpp"
#include "rotsys/errors.hpp"
#include "rotsys/oracle.hpp"
#include "rotsys/pipeline.hpp"
#include "rotsys/version.hpp"

namespace py = pybind11;
using namespace rotsys;

namespace {

DrawingClass class_from_name(const std::string& name) {
  if (name == "drawable") return DrawingClass::Drawable;
  if (name == "convex") return DrawingClass::Convex;
  if (name == "hconvex") return DrawingClass::HConvex;
  if (name == "gentwisted") return DrawingClass::GenTwisted;
  throw InvalidArgument("unknown drawing class " + name);
}

py::object witness_or_none(const OracleReport& r) {
  if (!r.found) return py::none();
  return py::cast(r.witness);
}

}  // namespace

PYBIND11_MODULE(_rotsys, m) {
  m.doc() = "Rotation systems of simple drawings of complete graphs";
  m.attr("__version__") = kVersion;

  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<NotDrawable>(m, "NotDrawable");
  py::register_exception<OutOfScope>(m, "OutOfScope");
  py::register_exception<SolverError>(m, "SolverError");

  py::class_<PreRotationSystem>(m, "PreRotationSystem")
      .def(py::init<const std::vector<std::vector<Vertex>>&>(), py::arg("rotations"))
      .def_property_readonly("n", &PreRotationSystem::size)
      .def("rotations", &PreRotationSystem::rotations)
      .def("ccw", &PreRotationSystem::ccw)
      .def("is_natural", &PreRotationSystem::natural)
      .def("to_json", [](const PreRotationSystem& p) { return to_json_line(p); })
      .def_static("from_json", [](const std::string& s) { return from_json_line(s); })
      .def("__eq__", [](const PreRotationSystem& a, const PreRotationSystem& b) { return a == b; })
      .def("__hash__", [](const PreRotationSystem& p) { return py::hash(py::cast(p.flat())); })
      .def("__repr__", [](const PreRotationSystem& p) { return "PreRotationSystem(" + to_json_line(p) + ")"; });

  m.def("canonical_form", &canonical_form);
  m.def("reflect", &reflect);
  m.def("isomorphic", &isomorphic);
  m.def("convex_position_system", &convex_position_system);
  m.def("twisted_system", &twisted_system);

  m.def("crossings", [](const PreRotationSystem& p) {
    std::vector<std::pair<Edge, Edge>> out;
    for (const auto& c : crossing_map(p).pairs()) out.push_back({c.e, c.f});
    return out;
  });
  m.def(
      "check_class",
      [](const PreRotationSystem& p, const std::string& cls) { return check_class(p, class_from_name(cls)); },
      py::arg("pi"), py::arg("cls") = "drawable");
  m.def(
      "is_drawable",
      [](const PreRotationSystem& p) {
        py::gil_scoped_release release;
        return is_drawable(p).drawable;
      },
      py::arg("pi"));

  m.def("plane_hamiltonian_cycle", [](const PreRotationSystem& p) {
    return witness_or_none(find_plane_hamiltonian_cycle(p));
  });
  m.def("plane_hamiltonian_path", [](const PreRotationSystem& p, Vertex a, Vertex b) {
    return witness_or_none(find_plane_hamiltonian_path(p, a, b));
  });
  m.def("empty_k_cycle", [](const PreRotationSystem& p, int k) { return witness_or_none(find_empty_k_cycle(p, k)); });
  m.def("count_empty_triangles", &count_empty_triangles);
  m.def("crossing_family", [](const PreRotationSystem& p, int k) { return witness_or_none(find_crossing_family(p, k)); });
  m.def("all_edges_crossed", &all_edges_crossed);
  m.def("is_crossing_maximal", &is_crossing_maximal);

  py::enum_<Toggle>(m, "Toggle").value("AUTO", Toggle::Auto).value("ON", Toggle::On).value("OFF", Toggle::Off);

  py::class_<RunConfig>(m, "RunConfig")
      .def(py::init([](int n) {
             RunConfig c;
             c.n = n;
             return c;
           }),
           py::arg("n"))
      .def_readwrite("n", &RunConfig::n)
      .def_readwrite("forbid4", &RunConfig::forbid4)
      .def_readwrite("forbid5", &RunConfig::forbid5)
      .def_readwrite("natural", &RunConfig::natural)
      .def_readwrite("lexmin", &RunConfig::lexmin)
      .def_readwrite("convex", &RunConfig::convex)
      .def_readwrite("hconvex", &RunConfig::hconvex)
      .def_readwrite("cmonotone", &RunConfig::cmonotone)
      .def_readwrite("scmonotone", &RunConfig::scmonotone)
      .def_readwrite("gentwisted", &RunConfig::gentwisted)
      .def_readwrite("hc", &RunConfig::hc)
      .def_readwrite("hc_plus", &RunConfig::hc_plus)
      .def_readwrite("ht_plus", &RunConfig::ht_plus)
      .def_readwrite("hp", &RunConfig::hp)
      .def_readwrite("empty_cycles", &RunConfig::empty_cycles)
      .def_readwrite("etupp", &RunConfig::etupp)
      .def_readwrite("aec", &RunConfig::aec)
      .def_readwrite("crmax", &RunConfig::crmax)
      .def_readwrite("crf", &RunConfig::crf)
      .def_readwrite("perfect_convex", &RunConfig::perfect_convex)
      .def_readwrite("perfect_twisted", &RunConfig::perfect_twisted)
      .def_readwrite("crossmax_sub", &RunConfig::crossmax_sub)
      .def("flags", &canonical_flags);

  m.def("to_dimacs", [](const RunConfig& c) { return to_dimacs(build_instance(c)); });
  m.def(
      "solve",
      [](const RunConfig& c, double timeout) -> py::tuple {
        const auto inst = build_instance(c);
        SolverOptions s;
        s.timeout = timeout;
        SolveOutcome out;
        {
          py::gil_scoped_release release;
          out = solve(inst, s);
        }
        if (out.status != Status::Sat) return py::make_tuple(to_string(out.status), py::none());
        return py::make_tuple(to_string(out.status), project(decode_model(out, inst.vars()), c.n));
      },
      py::arg("config"), py::arg("timeout") = 0.0);
  m.def(
      "enumerate",
      [](const RunConfig& c, std::size_t limit) {
        const auto inst = build_instance(c);
        py::gil_scoped_release release;
        return enumerate_systems(inst, {}, enumeration_options(c, Dedup::Canonical, limit));
      },
      py::arg("config"), py::arg("limit") = 0);
}
