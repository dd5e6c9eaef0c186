// Python bindings for the main operations: radius solving, table
// reproduction, inequality verification and the multidimensional checks.

#include "bohr/inequality.hpp"
#include "bohr/multidim.hpp"
#include "bohr/tables.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;

namespace {

bohr::Equation equation_from_string(const std::string& name) {
    static const std::pair<const char*, bohr::Equation> table[] = {
        {"R1", bohr::Equation::R1},     {"R2", bohr::Equation::R2},
        {"R3", bohr::Equation::R3},     {"R4", bohr::Equation::R4},
        {"R5", bohr::Equation::R5},     {"ZetaM", bohr::Equation::ZetaM},
        {"EtaM", bohr::Equation::EtaM}, {"AlphaKMP", bohr::Equation::AlphaKMP},
        {"BetaKMP", bohr::Equation::BetaKMP},
    };
    for (const auto& [key, eq] : table)
        if (name == key) return eq;
    throw std::invalid_argument("unknown equation id: " + name);
}

bohr::TheoremId theorem_id(const std::string& name) {
    const auto id = bohr::theorem_from_string(name);
    if (!id) throw std::invalid_argument("unknown theorem id: " + name);
    return *id;
}

bohr::LabParams make_params(int k, int m, int q, int s, int t, double p,
                            double lambda, double a) {
    bohr::LabParams prm;
    prm.k = k;
    prm.m = m;
    prm.q = q;
    prm.s = s;
    prm.t = t;
    prm.p = p;
    prm.lambda = lambda;
    prm.a = a;
    return prm;
}

py::dict report_dict(const bohr::VerificationReport& report) {
    py::dict d;
    d["theorem"] = bohr::to_string(report.theorem);
    d["radius"] = report.radius;
    d["max_lhs"] = report.max_lhs;
    d["margin"] = report.margin;
    d["verdict"] = report.pass ? "pass" : "fail";
    if (report.witness)
        d["witness"] = py::make_tuple(report.witness->r, report.witness->a);
    else
        d["witness"] = py::none();
    return d;
}

} // namespace

PYBIND11_MODULE(_bohrlab, module) {
    module.doc() = "Numerical laboratory for refined Bohr inequalities";

    module.def(
        "solve_radius",
        [](const std::string& theorem, int k, int m, int q, int s, int t, double p,
           double lambda, double a, double tol) {
            bohr::RadiusQuery query;
            query.theorem = equation_from_string(theorem);
            query.k = k;
            query.m = m;
            query.q = q;
            query.s = s;
            query.t = t;
            query.p = p;
            query.lambda = lambda;
            query.a = a;
            const auto result = bohr::solve(query, tol);
            py::dict d;
            d["value"] = result.value;
            d["bracket"] = py::make_tuple(result.bracket_lo, result.bracket_hi);
            d["residual"] = result.residual;
            return d;
        },
        py::arg("theorem"), py::arg("k") = 1, py::arg("m") = 1, py::arg("q") = 1,
        py::arg("s") = 1, py::arg("t") = 0, py::arg("p") = 1.0,
        py::arg("lambda_") = 1.0, py::arg("a") = 0.0, py::arg("tol") = 1e-13);

    module.def("radius_r5", &bohr::radius_R5, py::arg("k"), py::arg("p"),
               py::arg("q"));
    module.def("infimum_oracle", &bohr::infimum_oracle, py::arg("p"),
               py::arg("grid_size") = 100000);

    module.def(
        "table",
        [](int id) {
            const auto table = bohr::compute_table(id);
            py::dict d;
            d["columns"] = table.columns;
            py::list rows;
            for (const auto& label : table.row_labels) {
                py::list values;
                for (const auto& cell : table.cells)
                    if (cell.row_label == label) values.append(cell.computed);
                rows.append(py::make_tuple(label, values));
            }
            d["rows"] = rows;
            d["max_deviation"] = table.max_deviation();
            return d;
        },
        py::arg("id"));

    module.def(
        "verify",
        [](const std::string& theorem, int k, int m, int q, int s, int t, double p,
           double lambda, const std::vector<double>& a_values, int random_count,
           std::uint64_t seed) {
            const auto id = theorem_id(theorem);
            const auto prm = make_params(k, m, q, s, t, p, lambda, 0.0);
            auto family = bohr::extremal_family(id, prm, a_values);
            for (int i = 0; i < random_count; ++i) {
                auto member = std::get<bohr::BlaschkeProduct>(
                    bohr::random_member(seed + i, 3, 0));
                if (id == bohr::TheoremId::T5) member.argument_power = q;
                family.push_back(member);
            }
            const std::vector<double> fractions{0.125, 0.25, 0.375, 0.5,
                                                0.625, 0.75, 0.875, 1.0};
            return report_dict(bohr::verify(id, prm, family, fractions, 32));
        },
        py::arg("theorem"), py::arg("k") = 1, py::arg("m") = 1, py::arg("q") = 1,
        py::arg("s") = 1, py::arg("t") = 0, py::arg("p") = 1.0,
        py::arg("lambda_") = 1.0,
        py::arg("a_values") = std::vector<double>{0.0, 0.3, 0.5, 0.656},
        py::arg("random_count") = 0, py::arg("seed") = 42);

    module.def(
        "sharpness",
        [](const std::string& theorem, int k, int m, int q, int s, int t, double p,
           double lambda) {
            const auto id = theorem_id(theorem);
            const auto prm = make_params(k, m, q, s, t, p, lambda, 0.0);
            const std::vector<double> eps{0.002, 0.005, 0.01, 0.02, 0.05};
            const std::vector<double> a_list{0.99, 0.999, 0.9999};
            return report_dict(bohr::sharpness_probe(id, prm, eps, a_list));
        },
        py::arg("theorem"), py::arg("k") = 1, py::arg("m") = 1, py::arg("q") = 1,
        py::arg("s") = 1, py::arg("t") = 0, py::arg("p") = 1.0,
        py::arg("lambda_") = 1.0);

    module.def("lemma_checks", [] {
        py::list out;
        for (const auto& check : bohr::lemma_checks())
            out.append(py::make_tuple(check.name, check.pass, check.detail));
        return out;
    });

    module.def(
        "reduction_max_diff",
        [](const std::string& which, int d, const std::string& norm, int k, int m,
           int q, int s, int t, double p, double lambda) {
            const auto variant = bohr::multi_lhs_from_string(which);
            if (!variant) throw std::invalid_argument("unknown variant: " + which);
            const bohr::Norm n = norm == "sup" ? bohr::Norm::Sup : bohr::Norm::Euclid;
            const auto prm = make_params(k, m, q, s, t, p, lambda, 0.0);
            const std::vector<double> a_grid{0.0, 0.2, 0.4, 0.6, 0.8};
            const std::vector<double> r_grid{0.1, 0.25, 0.4, 0.6, 0.75};
            return bohr::reduction_check(*variant, prm, d, n, a_grid, r_grid)
                .max_abs_diff;
        },
        py::arg("which"), py::arg("d") = 2, py::arg("norm") = "sup",
        py::arg("k") = 1, py::arg("m") = 1, py::arg("q") = 1, py::arg("s") = 1,
        py::arg("t") = 0, py::arg("p") = 1.0, py::arg("lambda_") = 1.0);

    module.def("taylor_mobius_phi", [](double a, int n_max) {
        return bohr::taylor_coefficients(bohr::MobiusPhi{a}, n_max).coefficients();
    });
}
