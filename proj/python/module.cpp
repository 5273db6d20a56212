#include "latsum/energy.hpp"
#include "latsum/errors.hpp"
#include "latsum/lattice.hpp"
#include "latsum/ljopt.hpp"
#include "latsum/potentials.hpp"
#include "latsum/scan.hpp"
#include "latsum/specfun.hpp"

#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace latsum;

PYBIND11_MODULE(_latsum, m) {
    m.doc() = "lattice sums, theta functions, and energy minimization";

    static py::exception<Error> exc(m, "LatsumError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            exc((std::string("[") + e.code() + "] " + e.what()).c_str());
        }
    });

    py::class_<Lattice>(m, "Lattice")
        .def_readonly("dim", &Lattice::dim)
        .def_readonly("basis", &Lattice::basis)
        .def_readonly("det_abs", &Lattice::det_abs)
        .def("shortest_sq", &Lattice::shortest_sq);

    py::class_<Shell>(m, "Shell")
        .def_readonly("r2", &Shell::r2)
        .def_readonly("mult", &Shell::mult);

    py::class_<ShellSeries>(m, "ShellSeries")
        .def_readonly("entries", &ShellSeries::entries)
        .def_readonly("r_max", &ShellSeries::r_max)
        .def("total_points", &ShellSeries::total_points);

    py::class_<EvalResult>(m, "EvalResult")
        .def_readonly("value", &EvalResult::value)
        .def_readonly("tail_bound", &EvalResult::tail_bound)
        .def_readonly("r_max_used", &EvalResult::r_max_used);

    py::class_<EnergyResult>(m, "EnergyResult")
        .def_readonly("value", &EnergyResult::value)
        .def_readonly("tail_bound", &EnergyResult::tail_bound)
        .def_readonly("r_max_used", &EnergyResult::r_max_used)
        .def_readonly("method", &EnergyResult::method);

    py::class_<ScaleMinimum>(m, "ScaleMinimum")
        .def_readonly("lambda_star", &ScaleMinimum::lambda_star)
        .def_readonly("value", &ScaleMinimum::value)
        .def_readonly("bracket_lo", &ScaleMinimum::bracket_lo)
        .def_readonly("bracket_hi", &ScaleMinimum::bracket_hi);

    py::class_<CMinResult>(m, "CMinResult")
        .def_readonly("c", &CMinResult::c)
        .def_readonly("x", &CMinResult::x)
        .def_readonly("y", &CMinResult::y);

    py::class_<Interval>(m, "Interval")
        .def_readonly("lo", &Interval::lo)
        .def_readonly("hi", &Interval::hi);

    py::class_<RadialPotential>(m, "RadialPotential")
        .def_static("lennard_jones", &RadialPotential::lennard_jones)
        .def_static("inverse_power_poly",
                    [](const std::vector<std::pair<double, double>>& terms) {
                        std::vector<PowerTerm> ts;
                        for (auto& [c, p] : terms) ts.push_back({c, p});
                        return RadialPotential::inverse_power_poly(std::move(ts));
                    })
        .def_static("yukawa_diff", &RadialPotential::yukawa_diff)
        .def_static("piecewise_one_well", &RadialPotential::piecewise_one_well)
        .def_static("hard_core_one_well", &RadialPotential::hard_core_one_well)
        .def_static("f_epsilon", &RadialPotential::f_epsilon)
        .def_static("counterexample_v", &RadialPotential::counterexample_v)
        .def("eval", &RadialPotential::eval)
        .def("has_density", &RadialPotential::has_density)
        .def("inverse_laplace_density", &RadialPotential::inverse_laplace_density)
        .def_property_readonly("name", &RadialPotential::name);

    m.def("make_lattice", &make_lattice, py::arg("basis"));
    m.def("special_lattice", &special_lattice, py::arg("name"));
    m.def("dual", &dual);
    m.def("from_domain_point",
          [](double x, double y) { return from_domain_point({x, y}); },
          py::arg("x"), py::arg("y"));
    m.def("shells", &shells, py::arg("lattice"), py::arg("r_max"),
          py::arg("point_cap") = kDefaultPointCap);
    m.def("kissing_number", &kissing_number);

    m.def("riemann_zeta", &riemann_zeta);
    m.def("epstein_zeta", &epstein_zeta, py::arg("lattice"), py::arg("s"),
          py::arg("tol") = 1e-10);
    m.def("epstein_zeta_deriv", &epstein_zeta_deriv, py::arg("lattice"),
          py::arg("s"), py::arg("tol") = 1e-8,
          py::arg("point_cap") = kDefaultPointCap);
    m.def("lattice_theta", &lattice_theta, py::arg("lattice"), py::arg("alpha"),
          py::arg("tol") = 1e-10);
    m.def("lattice_theta_minus_one", &lattice_theta_minus_one,
          py::arg("lattice"), py::arg("alpha"), py::arg("tol") = 1e-10);

    m.def("energy_direct", &energy_direct, py::arg("potential"),
          py::arg("lattice"), py::arg("lam"), py::arg("tol") = 1e-10);
    m.def("energy_theta_integral", &energy_theta_integral, py::arg("potential"),
          py::arg("lattice"), py::arg("lam"), py::arg("tol") = 1e-8);

    m.def("optimal_scale",
          [](const Lattice& L, double a1, double a2, double x1, double x2) {
              return optimal_scale(L, {a1, a2, x1, x2});
          });
    m.def("min_energy_closed_form",
          [](const Lattice& L, double a1, double a2, double x1, double x2) {
              return min_energy_closed_form(L, {a1, a2, x1, x2});
          });
    m.def("min_energy_ratio", &min_energy_ratio);
    m.def("H_function", &H_function);
    m.def("h_function", &h_function, py::arg("lattice"), py::arg("x"),
          py::arg("deriv_tol") = 1e-8);

    m.def("minimize_scale", &minimize_scale, py::arg("potential"),
          py::arg("lattice"), py::arg("lo"), py::arg("hi"),
          py::arg("tol") = 1e-8, py::arg("grid_points") = 200);
    m.def("c_function", [](double x, double y) { return c_function({x, y}); });
    m.def("find_c_minimum", &find_c_minimum, py::arg("coarse_step") = 1e-2,
          py::arg("final_step") = 1e-5);
    m.def("h_of_epsilon", &h_of_epsilon);
    m.def("epsilon_zero", &epsilon_zero);
    m.def("discriminant",
          [](double eps, double x, double y) { return discriminant(eps, {x, y}); });
    m.def("nonminimality_window",
          [](const RadialPotential& f, double lambda_lo, double lambda_hi,
             int steps, double step, double y_hi) {
              GridSpec g;
              g.step = step;
              g.y_hi = y_hi;
              return nonminimality_window(f, g, lambda_lo, lambda_hi, steps);
          },
          py::arg("potential"), py::arg("lambda_lo"), py::arg("lambda_hi"),
          py::arg("steps"), py::arg("step") = 5e-3, py::arg("y_hi") = 1.5);
    m.def("crossover_scale",
          [](const RadialPotential& f, const Lattice& L, const std::string& side,
             double start, int rungs) {
              return crossover_scale(f, L,
                                     side == "low" ? CrossoverSide::LowDensity
                                                   : CrossoverSide::HighDensity,
                                     start, rungs);
          },
          py::arg("potential"), py::arg("lattice"), py::arg("side") = "high",
          py::arg("start") = 1.0, py::arg("rungs") = 17);
}
