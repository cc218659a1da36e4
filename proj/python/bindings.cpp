#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sgasket/check.hpp"
#include "sgasket/code.hpp"
#include "sgasket/errors.hpp"
#include "sgasket/geodesic.hpp"
#include "sgasket/geometry.hpp"
#include "sgasket/metric.hpp"
#include "sgasket/oracle.hpp"
#include "sgasket/svg.hpp"

namespace py = pybind11;
using namespace sgasket;

namespace {

py::object to_int(const BigInt& value) {
  return py::reinterpret_steal<py::object>(PyLong_FromString(value.str().c_str(), nullptr, 10));
}

BigInt from_int(const py::handle& value) { return BigInt(py::str(value).cast<std::string>()); }

// Rationals cross the boundary as fractions.Fraction.
py::object to_fraction(const Rational& r) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_int(r.numerator()), to_int(r.denominator()));
}

Rational from_fraction(const py::handle& value) {
  py::object f = py::module_::import("fractions").attr("Fraction")(value);
  return Rational(from_int(f.attr("numerator")), from_int(f.attr("denominator")));
}

py::tuple to_tuple(const Barycentric& p) {
  return py::make_tuple(to_fraction(p.b0), to_fraction(p.b1), to_fraction(p.b2));
}

Barycentric from_tuple(const py::sequence& seq) {
  if (py::len(seq) != 3) throw py::value_error("expected three barycentric weights");
  return Barycentric{from_fraction(seq[0]), from_fraction(seq[1]), from_fraction(seq[2])};
}

std::vector<int> to_ints(const Word& w) {
  std::vector<int> out;
  for (Symbol s : w) out.push_back(s.value());
  return out;
}

Word to_word(const std::vector<int>& values) {
  Word w;
  for (int v : values) w.emplace_back(v);
  return w;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact intrinsic metric on the Sierpinski gasket";

  auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<MalformedCode>(m, "MalformedCode", base);
  py::register_exception<NotAJunction>(m, "NotAJunction", base);
  py::register_exception<IdenticalCodes>(m, "IdenticalCodes", base);
  py::register_exception<SamePoint>(m, "SamePoint", base);
  py::register_exception<DepthTooSmall>(m, "DepthTooSmall", base);
  py::register_exception<LevelTooLarge>(m, "LevelTooLarge", base);
  py::register_exception<VertexNotFound>(m, "VertexNotFound", base);

  py::class_<Code>(m, "Code")
      .def(py::init([](const std::string& text) { return parse_code(text); }), py::arg("text"))
      .def(py::init([](const std::vector<int>& pre, const std::vector<int>& period) {
             return Code(to_word(pre), to_word(period));
           }),
           py::arg("preperiod"), py::arg("period"))
      .def_property_readonly("preperiod", [](const Code& c) { return to_ints(c.preperiod()); })
      .def_property_readonly("period", [](const Code& c) { return to_ints(c.period()); })
      .def("__getitem__", [](const Code& c, std::size_t i) { return c.at(i).value(); })
      .def("__str__", [](const Code& c) { return to_string(c); })
      .def("__repr__", [](const Code& c) { return "Code('" + to_string(c) + "')"; })
      .def("__eq__", [](const Code& a, const Code& b) { return a == b; })
      .def("__hash__", [](const Code& c) { return CodeHash{}(c); });
  py::implicitly_convertible<py::str, Code>();

  py::class_<DistanceResult>(m, "DistanceResult")
      .def_property_readonly("distance", [](const DistanceResult& d) { return to_fraction(d.distance); })
      .def_property_readonly("sum_p", [](const DistanceResult& d) { return to_fraction(d.sum_p); })
      .def_property_readonly("sum_edge", [](const DistanceResult& d) { return to_fraction(d.sum_edge); })
      .def_readonly("split_index", &DistanceResult::split_index)
      .def_property_readonly("route", [](const DistanceResult& d) { return std::string(to_string(d.route)); })
      .def("__repr__", [](const DistanceResult& d) {
        return "DistanceResult(distance=" + d.distance.str() + ", k=" + std::to_string(d.split_index) +
               ", route=" + std::string(to_string(d.route)) + ")";
      });

  py::class_<Geodesic>(m, "Geodesic")
      .def_readonly("waypoints", &Geodesic::waypoints)
      .def_readonly("segment_levels", &Geodesic::segment_levels)
      .def_property_readonly("length", [](const Geodesic& g) { return to_fraction(g.length); })
      .def_readonly("depth", &Geodesic::depth)
      .def_property_readonly("route", [](const Geodesic& g) { return std::string(to_string(g.route)); })
      .def("to_json", [](const Geodesic& g) { return to_json(g); });

  py::class_<LevelGraph>(m, "LevelGraph")
      .def(py::init<std::size_t>(), py::arg("level"))
      .def_property_readonly("level", &LevelGraph::level)
      .def_property_readonly("vertex_count", &LevelGraph::vertex_count)
      .def_property_readonly("edge_count", &LevelGraph::edge_count)
      .def("degree", &LevelGraph::degree)
      .def("coordinates", [](const LevelGraph& g, std::size_t v) { return to_tuple(g.coordinates(v)); })
      .def("connected", &LevelGraph::connected, py::call_guard<py::gil_scoped_release>());

  m.def("parse_code", &parse_code, py::arg("text"));
  m.def("canonicalize", [](const Code& c) { return canonicalize(c); });
  m.def("symbol_at", [](const Code& c, std::size_t i) { return symbol_at(c, i).value(); });
  m.def("is_junction", &is_junction);
  m.def("twin", &twin);
  m.def("same_point", &same_point);
  m.def("representations", &representations);

  m.def("split_index", &split_index);
  m.def("indicator_bits", [](const Code& a, const Code& b, std::size_t k, std::size_t i) {
    const IndicatorBits bits = indicator_bits(a, b, k, i);
    return py::make_tuple(bits.alpha, bits.beta, bits.gamma, bits.delta);
  });
  m.def(
      "periodic_bit_sum",
      [](std::vector<std::uint8_t> pre, std::vector<std::uint8_t> period, std::size_t start) {
        return to_fraction(periodic_bit_sum(BitSequence{std::move(pre), std::move(period), start}));
      },
      py::arg("preperiod"), py::arg("period"), py::arg("start") = 1);
  m.def("distance", &distance);

  m.def("junction_triple", [](const std::string& sigma) {
    const JunctionTriple t = junction_triple(parse_word(sigma));
    return py::make_tuple(t.p, t.q, t.r);
  });
  m.def("geodesic", &geodesic, py::arg("a"), py::arg("b"), py::arg("depth"));

  m.def("to_barycentric", [](const Code& c) { return to_tuple(to_barycentric(c)); });
  m.def("to_cartesian", [](const py::sequence& p) {
    const CartesianPoint xy = to_cartesian(from_tuple(p));
    return py::make_tuple(xy.x, xy.y);
  });
  m.def("twin_coordinates_agree", &twin_coordinates_agree);

  m.def("project", [](const Code& c, std::size_t level) { return to_tuple(project(c, level)); });
  m.def("graph_distance", [](const LevelGraph& g, const py::sequence& u, const py::sequence& v) {
    return to_fraction(graph_distance(g, from_tuple(u), from_tuple(v)));
  });
  m.def("oracle_distance", [](const Code& a, const Code& b, std::size_t level) {
    return to_fraction(oracle_distance(a, b, level));
  });
  m.def("oracle_tolerance", [](std::size_t level) { return to_fraction(oracle_tolerance(level)); });

  m.def(
      "run_check",
      [](std::size_t samples, std::size_t level, std::uint64_t seed, std::size_t threads) {
        CheckReport report;
        {
          py::gil_scoped_release release;
          report = run_check(CheckOptions{samples, level, seed, threads});
        }
        py::list failures;
        for (const SampleOutcome& s : report.outcomes) {
          if (!s.passed()) failures.append(py::make_tuple(s.index, to_string(s.a), to_string(s.b)));
        }
        py::dict out;
        out["samples"] = report.outcomes.size();
        out["passed"] = report.passed();
        out["failures"] = failures;
        return out;
      },
      py::arg("samples"), py::arg("level"), py::arg("seed"), py::arg("threads") = 0);

  m.def("render_svg", [](const Code& a, const Code& b, std::size_t depth) {
    const Geodesic g = geodesic(a, b, depth);
    return render_svg(a, b, g, distance(a, b).distance);
  });
}
