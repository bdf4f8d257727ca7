#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "galrec/ancients.hpp"
#include "galrec/celestial.hpp"
#include "galrec/claims.hpp"
#include "galrec/config.hpp"
#include "galrec/curves.hpp"
#include "galrec/emit.hpp"
#include "galrec/hydrostatics.hpp"
#include "galrec/kernels.hpp"
#include "galrec/kinematics.hpp"
#include "galrec/rotation.hpp"
#include "galrec/venus.hpp"

namespace py = pybind11;

using namespace galrec;

namespace {

py::dict record_to_dict(const claims::ClaimRecord& rec) {
    py::dict d;
    d["id"] = rec.id;
    d["title"] = rec.title;
    d["section_ref"] = rec.section_ref;
    d["statement"] = rec.historical.statement;
    d["source"] = rec.historical.source;
    if (rec.historical.value) d["historical_value"] = *rec.historical.value;
    if (rec.computed.value) d["computed_value"] = *rec.computed.value;
    d["method"] = rec.computed.method;
    if (rec.verdict) d["verdict"] = claims::verdict_name(*rec.verdict);
    d["detail"] = rec.detail;
    d["citations"] = rec.citations;
    return d;
}

}  // namespace

PYBIND11_MODULE(_galrec, m) {
    m.doc() = "reconstructions of early-modern mechanics and astronomy claims";

    py::register_exception<galrec::Error>(m, "GalrecError");

    py::class_<kinematics::PhysicalConstants>(m, "PhysicalConstants")
        .def(py::init<>())
        .def_readwrite("g", &kinematics::PhysicalConstants::g)
        .def_readwrite("G", &kinematics::PhysicalConstants::G)
        .def_readwrite("M_sun", &kinematics::PhysicalConstants::M_sun)
        .def_readwrite("M_earth", &kinematics::PhysicalConstants::M_earth)
        .def_readwrite("R_earth", &kinematics::PhysicalConstants::R_earth)
        .def_readwrite("AU", &kinematics::PhysicalConstants::AU)
        .def_readwrite("sidereal_day", &kinematics::PhysicalConstants::sidereal_day)
        .def_readwrite("lunar_sidereal_month", &kinematics::PhysicalConstants::lunar_sidereal_month)
        .def_readwrite("moon_distance", &kinematics::PhysicalConstants::moon_distance);

    m.def("fall_distance",
          [](double t, const kinematics::PhysicalConstants& c) { return kinematics::fall_distance(t, c); },
          py::arg("t"), py::arg("constants") = kinematics::PhysicalConstants{});
    m.def("fall_velocity",
          [](double t, const kinematics::PhysicalConstants& c) { return kinematics::fall_velocity(t, c); },
          py::arg("t"), py::arg("constants") = kinematics::PhysicalConstants{});
    m.def("pendulum_period",
          [](double length, double amplitude, const kinematics::PhysicalConstants& c) {
              return kinematics::pendulum_period(length, amplitude, c);
          },
          py::arg("length"), py::arg("amplitude"),
          py::arg("constants") = kinematics::PhysicalConstants{});
    m.def("range_table",
          [](double v0, const std::vector<double>& angles, const kinematics::PhysicalConstants& c) {
              std::vector<std::pair<double, double>> rows;
              for (const auto& r : kinematics::range_table(v0, angles, c))
                  rows.push_back({r.angle, r.range});
              return rows;
          },
          py::arg("v0"), py::arg("angles"), py::arg("constants") = kinematics::PhysicalConstants{});

    m.def("cycloid_area", [](double r) {
        auto a = curves::cycloid_area(curves::CycloidSpec(r));
        return py::make_tuple(a.numeric, a.exact);
    });
    m.def("brachistochrone_compare",
          [](double x_end, double y_end, const kinematics::PhysicalConstants& c) {
              auto rep = curves::brachistochrone_compare(x_end, y_end, c);
              py::dict d;
              d["t_cycloid"] = rep.t_cycloid;
              d["t_best_circular_arc"] = rep.t_best_circular_arc;
              d["t_straight"] = rep.t_straight;
              d["best_sagitta"] = rep.best_sagitta;
              return d;
          },
          py::arg("x_end"), py::arg("y_end"),
          py::arg("constants") = kinematics::PhysicalConstants{});
    m.def("catenary_vs_parabola", [](double span, double arc_length) {
        auto cmp = curves::catenary_vs_parabola(curves::HangingChain(span, arc_length));
        py::dict d;
        d["max_deviation"] = cmp.max_deviation;
        d["deviation_over_sag"] = cmp.deviation_over_sag;
        d["sag"] = cmp.sag;
        return d;
    });

    m.def("tangential_rise", [](double t, double radius, double speed, double g) {
        return rotation::tangential_rise(t, rotation::RotatingBody(radius, speed, g));
    }, py::arg("t"), py::arg("radius") = 6.371e6, py::arg("surface_speed") = 465.1,
       py::arg("g") = 9.8);
    m.def("extrusion_verdict", [](double radius, double speed, double g) {
        auto v = rotation::extrusion_verdict(rotation::RotatingBody(radius, speed, g));
        py::dict d;
        d["extruded"] = v.extruded;
        d["critical_speed"] = v.critical_speed;
        d["limit_ratio"] = v.limit_ratio;
        return d;
    }, py::arg("radius") = 6.371e6, py::arg("surface_speed") = 465.1, py::arg("g") = 9.8);

    m.def("moon_fall_time", [](const std::string& model, const kinematics::PhysicalConstants& c) {
        auto fm = model == "constant-g" ? celestial::FallModel::constant_g
                                        : celestial::FallModel::inverse_square;
        return celestial::moon_fall_time(fm, c);
    }, py::arg("model") = "inverse-square", py::arg("constants") = kinematics::PhysicalConstants{});
    m.def("venus_phase", [](double date_offset) {
        venus::PhaseModel model;
        auto s = venus::sample_at(model, date_offset);
        py::dict d;
        d["date_offset"] = s.date_offset;
        d["phase_angle"] = s.phase_angle;
        d["k"] = s.k;
        d["diameter_ratio"] = s.diameter_ratio;
        d["elongation"] = s.elongation;
        return d;
    });
    m.def("wreath_density", [](double weight_air, double weight_water, double fluid_density) {
        auto rep = hydrostatics::wreath_density(weight_air, weight_water, fluid_density);
        return py::make_tuple(rep.density, rep.classification);
    }, py::arg("weight_air"), py::arg("weight_water"), py::arg("fluid_density") = 1000.0);
    m.def("paraboloid_stability", [](double focal, double height, double density_ratio) {
        auto rep = hydrostatics::paraboloid_upright_stability(
            hydrostatics::Paraboloid(focal, height, density_ratio));
        py::dict d;
        d["metacentric_height"] = rep.metacentric_height;
        d["stable"] = rep.stable;
        d["critical_height"] = rep.critical_height;
        return d;
    });
    m.def("schroeder_count", &ancients::schroeder_count);
    m.def("sun_moon_distance_ratio", &ancients::sun_moon_distance_ratio);
    m.def("mean_ci", &kernels::mean_ci, py::arg("sigma"), py::arg("n"), py::arg("confidence"));

    m.def("claim_ids", &claims::claim_ids);
    m.def("run_claim", [](const std::string& id) {
        return record_to_dict(claims::run_claim(id, config::RunConfig{}));
    });
    m.def("report", [](int parallel) {
        config::RunConfig cfg;
        cfg.parallelism = parallel;
        auto rep = claims::report(cfg);
        py::dict d;
        d["all_match"] = rep.all_match;
        d["exit_code"] = rep.exit_code;
        d["markdown"] = claims::render_report_markdown(rep);
        py::list rows;
        for (const auto& row : rep.rows) rows.append(record_to_dict(row.record));
        d["claims"] = rows;
        return d;
    }, py::arg("parallel") = 1);
    m.def("claim_csv", [](const std::string& id) {
        return emit::to_csv(claims::claim_series(id, config::RunConfig{}));
    });

    m.attr("__version__") = "0.1.0";
}
