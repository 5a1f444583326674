// Python module: the core operations (metric helpers, catalog families,
// residual grids, profile ODE integration, ruled-patch classification).

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tsol/catalog.hpp"
#include "tsol/errors.hpp"
#include "tsol/expr.hpp"
#include "tsol/io.hpp"
#include "tsol/ode.hpp"
#include "tsol/ruled.hpp"
#include "tsol/surface.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>

namespace py = pybind11;
using namespace tsol;

namespace {

using Arr3 = std::array<double, 3>;

MVec3 vec(const Arr3& a) { return {a[0], a[1], a[2]}; }
py::tuple tup(const MVec3& v) { return py::make_tuple(v.x, v.y, v.z); }

py::dict report_dict(const GridReport& gr) {
    py::dict d;
    d["max"] = gr.max_abs_r1;
    d["mean"] = gr.mean_abs_r1;
    d["worst"] = py::make_tuple(gr.worst_s, gr.worst_t);
    d["evaluated"] = gr.evaluated;
    d["degenerate"] = gr.degenerate;
    return d;
}

py::dict fit_dict(const VelocityFit& fit) {
    py::dict d;
    d["v"] = tup(fit.v);
    d["rms"] = fit.fit_rms;
    d["rank"] = fit.rank;
    py::list ns;
    for (const MVec3& n : fit.nullspace) ns.append(tup(n));
    d["nullspace"] = ns;
    return d;
}

py::dict classify_dict(const ClassificationReport& rep) {
    py::dict d;
    d["label"] = case_label_name(rep.label);
    d["velocity"] = rep.velocity ? py::object(tup(*rep.velocity)) : py::object(py::none());
    d["max_residual"] = rep.max_residual;
    d["evidence"] = rep.evidence;
    d["report"] = format_report(rep);
    if (rep.fit) d["fit"] = fit_dict(*rep.fit);
    return d;
}

struct PyFamily {
    SolitonFamily fam;
};

struct PySolution {
    ReaperOde ode;
    ProfileSolution sol;
};

RuledSurfaceSpec spec_from_strings(const std::string& gamma, const std::string& w,
                                   std::pair<double, double> s_range,
                                   std::pair<double, double> t_range) {
    RuledSurfaceSpec spec;
    spec.gamma = expr_curve(parse_vec_expr(gamma));
    spec.director = expr_curve(parse_vec_expr(w));
    spec.domain = {s_range.first, s_range.second, t_range.first, t_range.second};
    return spec;
}

ReaperId reaper_from_name(const std::string& name) {
    for (ReaperId r : {ReaperId::Eq31Spacelike, ReaperId::Eq31Timelike, ReaperId::Eq32,
                       ReaperId::Gr0Spacelike, ReaperId::Gr0Timelike})
        if (name == reaper_id_name(r)) return r;
    throw Error(ErrorKind::OutOfRange, "unknown ode '" + name + "'");
}

} // namespace

PYBIND11_MODULE(pytsol, m) {
    m.doc() = "ruled translating solitons in Minkowski 3-space";

    py::register_exception<Error>(m, "TsolError");

    m.def("mink_dot", [](Arr3 a, Arr3 b) { return mink_dot(vec(a), vec(b)); },
          "Lorentzian inner product, signature (+,+,-)");
    m.def("mink_cross", [](Arr3 a, Arr3 b) { return tup(mink_cross(vec(a), vec(b))); },
          "cross product adapted to the metric: <a x b, c> = det(a,b,c)");
    m.def("triple", [](Arr3 a, Arr3 b, Arr3 c) { return triple(vec(a), vec(b), vec(c)); });
    m.def("causal_character",
          [](Arr3 a) { return std::string(causal_character_name(causal_character(vec(a)))); });

    m.def("list_families", [] {
        std::vector<std::string> names;
        for (const FamilyInfo& info : family_registry()) names.push_back(info.name);
        return names;
    });
    m.def("family_schema", [](const std::string& name) {
        const FamilyInfo& info = family_info(name);
        py::dict d;
        d["name"] = info.name;
        d["source"] = info.source;
        py::dict params;
        for (const ParamSpec& p : info.params)
            params[p.key.c_str()] = py::make_tuple(p.default_value, p.doc);
        d["params"] = params;
        d["string_params"] = info.string_params;
        return d;
    });

    py::class_<PyFamily>(m, "Family")
        .def_property_readonly("name", [](const PyFamily& f) { return f.fam.name; })
        .def_property_readonly("velocity", [](const PyFamily& f) { return tup(f.fam.velocity); })
        .def_property_readonly("domain",
                               [](const PyFamily& f) {
                                   const Rect& r = f.fam.surface.domain;
                                   return py::make_tuple(r.s0, r.s1, r.t0, r.t1);
                               })
        .def("position",
             [](const PyFamily& f, double s, double t) { return tup(f.fam.surface.jet(s, t).p); })
        .def("residual_grid",
             [](const PyFamily& f, int ns, int nt, std::optional<Arr3> v) {
                 MVec3 vv = v ? vec(*v) : f.fam.velocity;
                 return report_dict(max_residual(f.fam.surface, vv, ns, nt));
             },
             py::arg("ns") = 30, py::arg("nt") = 30, py::arg("v") = py::none())
        .def("fit_velocity",
             [](const PyFamily& f, int ns, int nt) {
                 return fit_dict(solve_velocity(f.fam.surface, ns, nt));
             },
             py::arg("ns") = 30, py::arg("nt") = 30)
        .def("classify", [](const PyFamily& f) { return classify_dict(classify(f.fam.spec)); });

    m.def("make_family",
          [](const std::string& name, const std::map<std::string, double>& params,
             const std::map<std::string, std::string>& strings) {
              return PyFamily{make_family(name, params, strings)};
          },
          py::arg("name"), py::arg("params") = std::map<std::string, double>{},
          py::arg("strings") = std::map<std::string, std::string>{});

    py::class_<PySolution>(m, "ProfileSolution")
        .def_property_readonly("stop",
                               [](const PySolution& s) {
                                   return std::string(stop_reason_name(s.sol.stop));
                               })
        .def_property_readonly("s_begin", [](const PySolution& s) { return s.sol.s_begin(); })
        .def_property_readonly("s_end", [](const PySolution& s) { return s.sol.s_end(); })
        .def_property_readonly("nodes",
                               [](const PySolution& s) {
                                   py::list out;
                                   for (const ProfileNode& n : s.sol.nodes)
                                       out.append(py::make_tuple(n.s, n.u, n.up, n.upp));
                                   return out;
                               })
        .def("eval", [](const PySolution& s, double x) { return s.sol.eval(x); })
        .def("eval_deriv", [](const PySolution& s, double x) { return s.sol.eval_deriv(x); })
        .def("lift_residual",
             [](const PySolution& s, int ns, int nt) {
                 SolitonFamily fam = lift_cylinder(s.ode, s.sol);
                 return report_dict(max_residual(fam.surface, s.ode.velocity, ns, nt));
             },
             py::arg("ns") = 30, py::arg("nt") = 30);

    m.def("integrate",
          [](const std::string& ode_name, std::pair<double, double> init,
             std::pair<double, double> range, double tol, std::optional<Arr3> v) {
              std::optional<MVec3> vv;
              if (v) vv = vec(*v);
              ReaperOde ode = make_reaper(reaper_from_name(ode_name), vv);
              IntegrateOptions opt;
              opt.tol = tol;
              ProfileSolution sol =
                  integrate(ode, range.first, init.first, init.second, range.second, opt);
              return PySolution{ode, std::move(sol)};
          },
          py::arg("ode"), py::arg("init"), py::arg("range"), py::arg("tol") = 1e-10,
          py::arg("v") = py::none());

    m.def("classify",
          [](const std::string& gamma, const std::string& w, std::pair<double, double> s_range,
             std::pair<double, double> t_range) {
              return classify_dict(classify(spec_from_strings(gamma, w, s_range, t_range)));
          },
          py::arg("gamma"), py::arg("w"), py::arg("s_range"),
          py::arg("t_range") = std::pair<double, double>{-1.0, 1.0});

    m.def("classify_family",
          [](const std::string& name, const std::map<std::string, double>& params,
             const std::map<std::string, std::string>& strings) {
              return classify_dict(classify(make_family(name, params, strings).spec));
          },
          py::arg("name"), py::arg("params") = std::map<std::string, double>{},
          py::arg("strings") = std::map<std::string, std::string>{});
}
