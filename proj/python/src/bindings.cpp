#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "nonloose/cables.hpp"
#include "nonloose/cfrac.hpp"
#include "nonloose/cli.hpp"
#include "nonloose/decorated.hpp"
#include "nonloose/existence.hpp"
#include "nonloose/format.hpp"
#include "nonloose/unknots.hpp"

namespace py = pybind11;
using namespace nonloose;

namespace {

// JSON crosses the boundary as text; the Python side decodes it.
py::object decode(const json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Slope slope_arg(const py::object& o) {
    if (py::isinstance<Slope>(o)) return o.cast<Slope>();
    if (py::isinstance<py::int_>(o)) return Slope::integer(o.cast<Int>());
    if (py::isinstance<py::tuple>(o)) {
        auto t = o.cast<std::pair<Int, Int>>();
        return Slope(t.first, t.second);
    }
    return Slope::parse(py::str(o).cast<std::string>());
}

Context context_arg(const std::string& kind, const py::object& a, const py::object& b) {
    if (kind == "lens") return Context::lens(a.cast<Int>(), b.cast<Int>());
    if (kind == "torus") return Context::thickened_torus(slope_arg(a), slope_arg(b));
    if (kind == "upper") return Context::upper_solid_torus(slope_arg(a), slope_arg(b));
    if (kind == "lower") return Context::lower_solid_torus(slope_arg(a), slope_arg(b));
    throw std::invalid_argument("unknown context kind '" + kind + "' (lens, torus, upper, lower)");
}

Classification classify_arg(Int p, Int q, const std::string& knot, int kmax) {
    return classify(LensSpace(p, q), KnotId::parse(knot), kmax);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Farey-graph arithmetic and non-loose rational unknots in lens spaces";

    py::class_<Slope>(m, "Slope")
        .def(py::init<Int, Int>(), py::arg("num"), py::arg("den") = 1)
        .def_static("parse", [](const std::string& t) { return Slope::parse(t); })
        .def_static("infinity", &Slope::infinity)
        .def_property_readonly("num", &Slope::num)
        .def_property_readonly("den", &Slope::den)
        .def("is_infinite", &Slope::is_infinite)
        .def("__str__", &Slope::str)
        .def("__repr__", [](const Slope& s) { return "Slope('" + s.str() + "')"; })
        .def("__eq__", [](const Slope& a, const Slope& b) { return a == b; })
        .def("__hash__", [](const Slope& s) { return py::hash(py::make_tuple(s.num(), s.den())); });

    m.def("dot", [](const py::object& x, const py::object& y) { return dot(slope_arg(x), slope_arg(y)); });
    m.def("has_edge", [](const py::object& x, const py::object& y) { return has_edge(slope_arg(x), slope_arg(y)); });
    m.def("farey_sum", [](const py::object& x, const py::object& y) { return farey_sum(slope_arg(x), slope_arg(y)); });
    m.def("minimal_path", [](const py::object& r, const py::object& s) {
        return minimal_path(slope_arg(r), slope_arg(s)).vertices();
    });
    m.def("block_structure", [](const std::vector<py::object>& vs) {
        std::vector<Slope> v;
        for (const auto& o : vs) v.push_back(slope_arg(o));
        return block_structure(FareyPath(v));
    });
    m.def("expand", [](const py::object& s) { return expand(slope_arg(s)).coeffs(); });
    m.def("value", [](const std::vector<Int>& cf) { return value(ContinuedFraction(cf)); });
    m.def("successor", [](const py::object& s) { return successor(slope_arg(s)); });
    m.def("ancestor", [](const py::object& s) { return ancestor(slope_arg(s)); });

    m.def("count_tight", [](const std::string& kind, const py::object& a, const py::object& b) {
        return count_tight(context_arg(kind, a, b));
    }, py::arg("kind"), py::arg("a"), py::arg("b"));

    m.def("classify", [](Int p, Int q, const std::string& knot, int kmax) {
        return decode(to_json(classify_arg(p, q, knot, kmax)));
    }, py::arg("p"), py::arg("q"), py::arg("knot") = "K0", py::arg("kmax") = 5);
    m.def("classify_svg", [](Int p, Int q, const std::string& knot, int kmax) {
        return to_svg(classify_arg(p, q, knot, kmax));
    }, py::arg("p"), py::arg("q"), py::arg("knot") = "K0", py::arg("kmax") = 5);
    m.def("range_counts", [](Int p, Int q, const std::string& knot) {
        auto c = range_counts(LensSpace(p, q), KnotId::parse(knot));
        py::dict d;
        d["v_low"] = c.v_low;
        d["slashes"] = c.slashes;
        d["v_high"] = c.v_high;
        d["total"] = c.total();
        return d;
    }, py::arg("p"), py::arg("q"), py::arg("knot") = "K0");

    m.def("divide_cable_tb", [](Int p, Int q) { return divide_cable_tb(CableSpec(p, q)); });
    m.def("ruling_cable_tb", [](Int p, Int q, const py::object& d) {
        return ruling_cable_tb(CableSpec(p, q), slope_arg(d));
    });
    m.def("positive_cable", [](Int tb, Int rot, Int p, Int q) {
        auto r = positive_cable({tb, rot}, CableSpec(p, q));
        return std::pair{r.tb, r.rot};
    });
    m.def("self_linking", [](Int tb, Int rot) { return self_linking({tb, rot}); });
    m.def("transnonsimple_family", [](Int n) {
        auto f = transnonsimple_family(n);
        py::dict d;
        d["tb"] = f.tb;
        d["rot"] = f.rot;
        d["sl"] = f.sl;
        d["count"] = f.count;
        return d;
    });

    m.def("admits_nonloose", [](const std::string& flavor, const std::string& ambient, bool rational_unknot,
                                bool unknot, bool unknot_in_s3, bool in_ball, bool essential_sphere_once,
                                std::optional<bool> summand_tight) {
        TopologyFacts f;
        f.ambient = parse_ambient(ambient);
        f.is_rational_unknot = rational_unknot;
        f.is_unknot = unknot;
        f.is_unknot_in_s3 = unknot_in_s3;
        f.contained_in_ball = in_ball;
        f.intersects_essential_sphere_once = essential_sphere_once;
        f.summand_admits_tight = summand_tight;
        return to_string(admits_nonloose(f, parse_flavor(flavor)));
    }, py::arg("flavor") = "legendrian", py::arg("ambient") = "unspecified", py::arg("rational_unknot") = false,
       py::arg("unknot") = false, py::arg("unknot_in_s3") = false, py::arg("in_ball") = false,
       py::arg("essential_sphere_once") = false, py::arg("summand_tight") = py::none());

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int status = run_cli(args, out, err);
        return py::make_tuple(status, out.str(), err.str());
    });
}
