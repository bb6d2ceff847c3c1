#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "margulis/bounds.hpp"
#include "margulis/cases.hpp"
#include "margulis/constants.hpp"
#include "margulis/extremal.hpp"
#include "margulis/halfspace.hpp"
#include "margulis/mobius.hpp"
#include "margulis/report.hpp"
#include "margulis/verify.hpp"

namespace py = pybind11;
using namespace margulis;

namespace {

const char* kind_name(ElementKind k) {
    switch (k) {
        case ElementKind::identity: return "identity";
        case ElementKind::parabolic: return "parabolic";
        case ElementKind::elliptic: return "elliptic";
        case ElementKind::loxodromic: return "loxodromic";
    }
    return "?";
}

py::dict classify_dict(const MoebiusMap& f) {
    const ElementClass c = classify(f);
    py::dict d;
    d["kind"] = kind_name(c.kind);
    d["tau"] = c.tau;
    d["theta"] = c.theta;
    d["order"] = c.order ? py::cast(*c.order) : py::none();
    return d;
}

py::dict report_dict(const CaseReport& r) {
    py::dict d;
    d["name"] = r.name;
    d["bound"] = r.solved_bound;
    d["argmin_beta"] = r.argmin_beta;
    d["feasible"] = r.feasible;
    d["passes"] = r.passes;
    return d;
}

py::dict config_dict(const ExtremalConfig& cfg) {
    const auto entries = [](const MoebiusMap& m) {
        return py::make_tuple(m.mat().a, m.mat().b, m.mat().c, m.mat().d);
    };
    py::dict d;
    d["f"] = entries(cfg.f);
    d["g"] = entries(cfg.g);
    d["witness"] = py::make_tuple(cfg.witness.z, cfg.witness.t);
    d["claimed"] = cfg.claimed;
    d["record"] = extremal_record(cfg);
    return d;
}

}  // namespace

PYBIND11_MODULE(_margulis, m) {
    m.doc() = "Displacement bounds for two-generator Moebius groups";

    py::class_<MoebiusMap>(m, "MoebiusMap")
        .def(py::init([](cplx a, cplx b, cplx c, cplx d) {
                 return normalize(Matrix2{a, b, c, d});
             }),
             py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"))
        .def("inverse", &MoebiusMap::inverse)
        .def("__mul__", &MoebiusMap::operator*)
        .def("apply", py::overload_cast<cplx>(&MoebiusMap::apply, py::const_))
        .def("apply_point",
             [](const MoebiusMap& f, cplx z, double t) {
                 const HPoint y = apply(f, HPoint{z, t});
                 return py::make_tuple(y.z, y.t);
             },
             py::arg("z"), py::arg("t"))
        .def("is_identity", &MoebiusMap::is_identity, py::arg("tol") = kIdTol)
        .def_property_readonly("entries",
                               [](const MoebiusMap& f) {
                                   return py::make_tuple(f.mat().a, f.mat().b,
                                                         f.mat().c, f.mat().d);
                               })
        .def_static("identity", &MoebiusMap::identity)
        .def_static("translation", &MoebiusMap::translation)
        .def_static("dilation", &MoebiusMap::dilation);

    m.def("beta", &margulis::beta);
    m.def("gamma", &margulis::gamma);
    m.def("params", [](const MoebiusMap& f, const MoebiusMap& g) {
        const GroupParams p = params(f, g);
        return py::make_tuple(p.gamma, p.beta_f, p.beta_g);
    });
    m.def("classify", &classify_dict);
    m.def("matrix_norm", &margulis::matrix_norm);
    m.def("translation_rotation", [](const MoebiusMap& f) {
        const TauTheta tt = translation_rotation(f);
        return py::make_tuple(tt.tau, tt.theta);
    });

    m.def("hyp_distance",
          [](cplx z1, double t1, cplx z2, double t2) {
              return hyp_distance(HPoint{z1, t1}, HPoint{z2, t2});
          },
          py::arg("z1"), py::arg("t1"), py::arg("z2"), py::arg("t2"));
    m.def("chordal_norm", &margulis::chordal_norm);
    m.def("hyperbolic_norm", &margulis::hyperbolic_norm);
    m.def("delta_point_axis",
          [](cplx z, double t, const MoebiusMap& f) {
              return delta_point_axis(HPoint{z, t}, f);
          },
          py::arg("z"), py::arg("t"), py::arg("f"));
    m.def("axes_distance",
          [](cplx gamma, cplx beta_f, cplx beta_g) {
              return axes_distance_params({gamma, beta_f, beta_g});
          },
          py::arg("gamma"), py::arg("beta_f"), py::arg("beta_g"));

    m.def("rho_from_beta_delta", &margulis::rho_from_beta_delta);
    m.def("parabolic_displacement",
          [](cplx u, cplx z, double t) { return parabolic_displacement(u, {z, t}); },
          py::arg("u"), py::arg("z") = cplx{0.0}, py::arg("t") = 1.0);
    m.def("joint_rho_lower",
          [](cplx gamma, cplx beta_f, cplx beta_g) {
              return joint_rho_lower({gamma, beta_f, beta_g}).rho_lower;
          },
          py::arg("gamma"), py::arg("beta_f"), py::arg("beta_g"));
    m.def("min_t_from_beta", &margulis::min_t_from_beta);

    m.def("c", &margulis::c);
    m.def("d", &margulis::d);
    m.def("psi", &margulis::psi);
    m.def("b", &margulis::b);
    m.def("phi", &margulis::phi);
    m.def("solve_t", &margulis::solve_t);
    m.def("yamada_cF", &margulis::yamada_cF);
    m.def("high_precision_table", &margulis::high_precision_table);
    m.attr("INF") = kInf;

    m.def("run_all_cases", [] {
        py::list out;
        for (const CaseReport& r : run_all_cases()) out.append(report_dict(r));
        return out;
    });
    m.def("n6_joint_min", &margulis::n6_joint_min);
    m.def("parabolic_min_t", [] { return parabolic_min_t().t_min; });

    m.def("extremal_elliptic_config",
          [](int n) { return config_dict(extremal_elliptic_config(n)); });
    m.def("modular_pair", [] { return config_dict(modular_pair()); });
    m.def("verify_suite", [](const std::string& suite, std::uint64_t seed) {
        Report r;
        if (suite == "constants") r = verify_constants();
        else if (suite == "identities") r = verify_identities(10000, seed);
        else if (suite == "cases") r = verify_cases();
        else if (suite == "parabolic") r = verify_parabolic();
        else if (suite == "extremal") r = verify_extremal();
        else if (suite == "all") r = verify_all(seed);
        else throw std::invalid_argument("unknown suite: " + suite);
        return py::make_tuple(r.pass(), to_json(r));
    }, py::arg("suite"), py::arg("seed") = 0);
}
