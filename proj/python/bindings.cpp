#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rectlab/bijection.hpp"
#include "rectlab/cases.hpp"
#include "rectlab/generators.hpp"
#include "rectlab/table.hpp"
#include "rectlab/whirl_series.hpp"

namespace py = pybind11;
using namespace rectlab;

namespace {

// Exact coefficients as Python ints (numerators of integral rationals) or strings.
py::list coefficients(const QSeries& s) {
    py::list out;
    for (const auto& c : s.coefficients()) {
        if (c.get_den() == 1) {
            out.append(py::int_(py::str(c.get_num().get_str())));
        } else {
            out.append(py::str(c.get_str()));
        }
    }
    return out;
}

py::tuple rect_tuple(const Rect& r) { return py::make_tuple(r.x_lo, r.y_lo, r.x_hi, r.y_hi); }

Drawing drawing_from(int width, int height, const std::vector<std::array<int, 4>>& rects) {
    Drawing d{width, height, {}};
    for (const auto& r : rects) d.rects.push_back({r[0], r[1], r[2], r[3]});
    return d;
}

}  // namespace

PYBIND11_MODULE(_rectlab, m) {
    m.doc() = "Pattern-avoiding rectangulations: enumeration and generating functions";

    py::register_exception<ResourceLimit>(m, "ResourceLimit");
    py::register_exception<NonContraction>(m, "NonContraction");

    py::class_<Rect>(m, "Rect")
        .def(py::init([](int a, int b, int c, int d) { return Rect{a, b, c, d}; }))
        .def_readonly("x_lo", &Rect::x_lo)
        .def_readonly("y_lo", &Rect::y_lo)
        .def_readonly("x_hi", &Rect::x_hi)
        .def_readonly("y_hi", &Rect::y_hi)
        .def("__iter__", [](const Rect& r) { return py::iter(rect_tuple(r)); })
        .def("__repr__", [](const Rect& r) { return py::str("Rect{}").format(rect_tuple(r)); });

    py::class_<Drawing>(m, "Drawing")
        .def(py::init(&drawing_from), py::arg("width"), py::arg("height"), py::arg("rects"))
        .def_readonly("width", &Drawing::width)
        .def_readonly("height", &Drawing::height)
        .def_readonly("rects", &Drawing::rects)
        .def("__len__", &Drawing::size)
        .def("__eq__", [](const Drawing& a, const Drawing& b) { return a == b; })
        .def("ascii", &render_ascii)
        .def("code", [](const Drawing& d) { return canonicalize(d).code; })
        .def("valid", [](const Drawing& d) { return validate_drawing(d).ok(); })
        .def("contains", [](const Drawing& d, int p) { return contains_pattern(d, static_cast<PatternId>(p)); })
        .def("avoids", [](const Drawing& d, const std::string& ps) { return avoids(d, PatternSet::parse(ps)); })
        .def("is_guillotine", &is_guillotine)
        .def("is_vortex", [](const Drawing& d) { return is_vortex(extract_segments(d)); })
        .def("is_simple_whirl", &is_simple_whirl);

    m.def("equivalent", &equivalent);
    m.def("pinwheel", &pinwheel);
    m.def("all_rectangulations", [](int n) {
        std::vector<Drawing> out;
        for (auto& c : gen_all_rectangulations(n)) out.push_back(std::move(c.drawing));
        return out;
    }, py::arg("n"));
    m.def("generate", [](int n, const std::string& row) { return gen_class(n, find_row(row).avoided); },
          py::arg("n"), py::arg("row"));
    m.def("count", [](int n, const std::string& row, const std::string& method) {
        const ClassMethod cm = method == "bijective" ? ClassMethod::bijective
                               : method == "oracle"  ? ClassMethod::oracle
                                                     : ClassMethod::automatic;
        return count_class(n, find_row(row).avoided, cm);
    }, py::arg("n"), py::arg("row"), py::arg("method") = "auto");

    m.def("table_rows", [] {
        py::list out;
        for (const auto& r : table_rows()) {
            out.append(py::dict(py::arg("id") = r.id, py::arg("case") = r.case_number, py::arg("oeis") = r.oeis,
                                py::arg("patterns") = r.permutation_patterns, py::arg("rational") = r.rational));
        }
        return out;
    });

    m.def("delta", [](const Drawing& d) { return delta(d).values(); });
    m.def("delta_inv", [](const std::vector<int>& p) { return delta_inv(Permutation(p)); });
    m.def("separable", [](int n) {
        std::vector<std::vector<int>> out;
        for_each_separable(n, [&](const Permutation& p) { out.push_back(p.values()); });
        return out;
    });

    m.def("whirl_tree_sizes", [](int depth) { return whirl_tree(depth).sizes; });
    m.def("build_simple_whirl", [](const std::vector<std::pair<int, int>>& path) {
        std::vector<TreeStep> steps;
        for (const auto& [rule, value] : path) steps.push_back({rule, value});
        return build_simple_whirl(steps);
    });
    m.def("signature", [](const Drawing& d) { return signature_of(d); });

    m.def("case_series", [](int id, int order) { return coefficients(solve_system(find_case_spec(id), order).F()); },
          py::arg("case"), py::arg("order"));
    m.def("verify_theorem1", [](int id, int order) { return verify_theorem1(find_case_spec(id), order).ok; },
          py::arg("case"), py::arg("order") = 30);
    m.def("catalan", [](int order) { return coefficients(catalan(order)); });
    m.def("vortex_series", [](int order) {
        const auto p = whirl_pipeline(order);
        return py::dict(py::arg("P") = coefficients(p.P), py::arg("W") = coefficients(p.W),
                        py::arg("Z") = coefficients(p.Z), py::arg("V") = coefficients(p.V),
                        py::arg("identity_ok") = p.identity_ok);
    }, py::arg("order"));
    m.def("whirl_specialization", [](int order) { return coefficients(solve_funceq(order).F.specialize_ones()); });
    m.def("vortex_recurrence", [](int K) {
        std::vector<std::string> out;
        for (const auto& v : vortex_recurrence(K)) out.push_back(v.get_str());
        return out;
    });
}
