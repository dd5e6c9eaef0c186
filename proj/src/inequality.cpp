#include "bohr/inequality.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace bohr {

namespace {

constexpr double kPassTolerance = 1e-9;

double schwarz_argument(const SchwarzFunction& w, cplx z) {
    return std::abs(evaluate_schwarz(w, z));
}

void require_q_lattice(const CoefficientSeries& series, int q) {
    const auto& a = series.coefficients();
    for (std::size_t n = 1; n < a.size(); ++n)
        if (n % static_cast<std::size_t>(q) != 0 && std::abs(a[n]) > 1e-14)
            throw std::domain_error("lhs_D: series has coefficients off the q-lattice");
}

} // namespace

std::string to_string(TheoremId id) {
    switch (id) {
    case TheoremId::T1: return "T1";
    case TheoremId::T2: return "T2";
    case TheoremId::T3: return "T3";
    case TheoremId::T4: return "T4";
    case TheoremId::T5: return "T5";
    case TheoremId::T6: return "T6";
    case TheoremId::ThmA_first: return "ThmA_first";
    case TheoremId::ThmA_second: return "ThmA_second";
    }
    return "?";
}

std::optional<TheoremId> theorem_from_string(const std::string& name) {
    for (auto id : {TheoremId::T1, TheoremId::T2, TheoremId::T3, TheoremId::T4,
                    TheoremId::T5, TheoremId::T6, TheoremId::ThmA_first,
                    TheoremId::ThmA_second})
        if (to_string(id) == name) return id;
    return std::nullopt;
}

StudyFunction make_study(DiskFunction fn, int n_max) {
    CoefficientSeries series = taylor_coefficients(fn, n_max);
    return StudyFunction{std::move(fn), std::move(series)};
}

double lhs_A(const StudyFunction& f, const SchwarzFunction& wk,
             const SchwarzFunction& wm, double p, cplx z) {
    const double u = schwarz_argument(wk, z);
    const cplx a0 = f.series.coefficients()[0];
    const cplx fv = evaluate(f.fn, evaluate_schwarz(wm, z));
    return std::pow(std::abs(a0), p) + majorant_sum(f.series, 1, u)
        + refined_term(f.series, u) + std::abs(fv - a0);
}

double lhs_B(const StudyFunction& f, const SchwarzFunction& wk,
             const SchwarzFunction& wm, double p, double lambda, int s, int t, cplx z) {
    const double u = schwarz_argument(wk, z);
    const cplx fv = evaluate(f.fn, evaluate_schwarz(wm, z));
    return std::pow(std::abs(fv), p) + lambda * lacunary_sum(f.series, s, t, u);
}

double lhs_C(const StudyFunction& f, const SchwarzFunction& wk,
             const SchwarzFunction& wm, double p, double lambda, cplx z) {
    const double u = schwarz_argument(wk, z);
    const cplx fv = evaluate(f.fn, evaluate_schwarz(wm, z));
    return std::pow(std::abs(fv), p)
        + lambda * (majorant_sum(f.series, 1, u) + refined_term(f.series, u));
}

double lhs_D(const StudyFunction& f, const SchwarzFunction& wk, double p, int q, cplx z) {
    if (q < 1) throw std::domain_error("lhs_D: q must be >= 1");
    require_q_lattice(f.series, q);
    const double u = schwarz_argument(wk, z);
    const double a = f.series.a0_modulus();
    const double uq = ipow(u, q);
    const double factor = 1.0 / (1.0 + a) + uq / (1.0 - uq);
    return std::pow(a, p) + majorant_sum(f.series, 1, u)
        + factor * quadratic_norm(f.series, u);
}

double lhs_E(const StudyFunction& f, const SchwarzFunction& wk,
             const SchwarzFunction& wm, cplx z) {
    const double u = schwarz_argument(wk, z);
    const cplx a0 = f.series.coefficients()[0];
    const cplx fv = evaluate(f.fn, evaluate_schwarz(wm, z));
    const double dev = std::abs(fv - a0);
    return majorant_sum(f.series, 0, u) + refined_term(f.series, u) + dev * dev;
}

double theorem_lhs(TheoremId id, const LabParams& prm, const StudyFunction& f,
                   const SchwarzFunction& wk, const SchwarzFunction& wm, cplx z) {
    switch (id) {
    case TheoremId::T1:
        return lhs_A(f, wk, wm, prm.p, z);
    case TheoremId::T2:
        return lhs_B(f, wk, wm, prm.p, prm.lambda, prm.s, prm.t, z);
    case TheoremId::T3:
    case TheoremId::T4:
        return lhs_C(f, wk, wm, prm.p, prm.lambda, z);
    case TheoremId::T5:
        return lhs_D(f, wk, prm.p, prm.q, z);
    case TheoremId::T6:
        return lhs_E(f, wk, wm, z);
    case TheoremId::ThmA_first: {
        // B_0(f, r) + A(f_0, r) + |f(omega_m(z)) - a_0| at r = |z|.
        const double r = std::abs(z);
        const cplx a0 = f.series.coefficients()[0];
        const cplx fv = evaluate(f.fn, evaluate_schwarz(wm, z));
        return majorant_sum(f.series, 0, r) + refined_term(f.series, r)
            + std::abs(fv - a0);
    }
    case TheoremId::ThmA_second: {
        const double r = std::abs(z);
        const cplx a0 = f.series.coefficients()[0];
        const double a = std::abs(a0);
        const cplx fv = evaluate(f.fn, evaluate_schwarz(wm, z));
        return a * a + majorant_sum(f.series, 1, r) + refined_term(f.series, r)
            + std::abs(fv - a0);
    }
    }
    throw std::logic_error("unreachable");
}

double closed_A_phi(double a, double p, int k, int m, double r) {
    const double rk = ipow(r, k);
    const double rm = ipow(r, m);
    const double w = 1.0 - a * a;
    return 1.0 + w * (rk / (1.0 - rk) + rm / (1.0 - a * rm))
        - (1.0 - std::pow(a, p));
}

double closed_B_f(double a, double p, double lambda, int s, int t, int k, int m,
                  double r) {
    const double rm = ipow(r, m);
    const double head = std::pow((a + rm) / (1.0 + a * rm), p);
    const double w = 1.0 - a * a;
    const double num = ipow(a, s + t - 1) * ipow(r, static_cast<long long>(k) * (s + t));
    const double den = 1.0 - ipow(a, s) * ipow(r, static_cast<long long>(k) * s);
    return head + lambda * w * num / den;
}

double closed_C_f(double a, double p, double lambda, int k, int m, double r) {
    const double rm = ipow(r, m);
    const double rk = ipow(r, k);
    const double head = std::pow((a + rm) / (1.0 + a * rm), p);
    return head + lambda * (1.0 - a * a) * rk / (1.0 - rk);
}

double closed_D_fstar(double a, double p, int q, int k, double r) {
    const double rkq = ipow(r, static_cast<long long>(k) * q);
    return std::pow(a, p) + (1.0 - a * a) * rkq / (1.0 - rkq);
}

double closed_E_phi(double a, int k, int m, double r) {
    const double rk = ipow(r, k);
    const double rm = ipow(r, m);
    const double w = 1.0 - a * a;
    const double last = w * rm / (1.0 - a * rm);
    return a + w * rk / (1.0 - rk) + last * last;
}

double theorem_radius(TheoremId id, const LabParams& prm, double a_hint) {
    RadiusQuery query;
    query.k = prm.k;
    query.m = prm.m;
    query.q = prm.q;
    query.s = prm.s;
    query.t = prm.t;
    query.p = prm.p;
    query.lambda = prm.lambda;
    switch (id) {
    case TheoremId::T1:
        query.theorem = Equation::R1;
        return solve(query).value;
    case TheoremId::T2:
        query.theorem = Equation::R2;
        return solve(query).value;
    case TheoremId::T3:
        query.theorem = Equation::R3;
        return solve(query).value;
    case TheoremId::T4:
        query.theorem = Equation::R4;
        query.a = a_hint;
        return solve(query).value;
    case TheoremId::T5:
        return radius_R5(prm.k, prm.p, prm.q);
    case TheoremId::T6:
        return std::pow(3.0, -1.0 / prm.k);
    case TheoremId::ThmA_first:
        query.theorem = Equation::ZetaM;
        return solve(query).value;
    case TheoremId::ThmA_second:
        query.theorem = Equation::EtaM;
        return solve(query).value;
    }
    throw std::logic_error("unreachable");
}

nlohmann::json VerificationReport::to_json() const {
    nlohmann::json j;
    j["theorem"] = bohr::to_string(theorem);
    j["params"] = {{"k", params.k},   {"m", params.m}, {"q", params.q},
                   {"s", params.s},   {"t", params.t}, {"p", params.p},
                   {"lambda", params.lambda}, {"a", params.a}};
    j["radius"] = radius;
    j["max_lhs"] = max_lhs;
    j["margin"] = margin;
    j["verdict"] = pass ? "pass" : "fail";
    if (witness)
        j["witness"] = {{"r", witness->r}, {"a", witness->a}};
    else
        j["witness"] = nullptr;
    return j;
}

std::string VerificationReport::to_markdown() const {
    std::ostringstream out;
    out << "## " << bohr::to_string(theorem) << " report\n\n";
    out << "| field | value |\n|---|---|\n";
    out << "| radius | " << radius << " |\n";
    out << "| grid points | " << grid.size() << " |\n";
    out << "| max LHS | " << max_lhs << " |\n";
    out << "| margin | " << margin << " |\n";
    out << "| verdict | " << (pass ? "pass" : "fail") << " |\n";
    if (witness)
        out << "| witness | r = " << witness->r << ", a = " << witness->a << " |\n";
    return out.str();
}

VerificationReport verify(TheoremId id, const LabParams& params,
                          const std::vector<DiskFunction>& family,
                          const std::vector<double>& r_fractions, int angle_count) {
    if (angle_count < 1) throw std::domain_error("verify: angle_count must be >= 1");
    for (double fr : r_fractions)
        if (!(fr > 0.0) || fr > 1.0)
            throw std::domain_error("verify: r_fractions must lie in (0, 1]");

    VerificationReport report;
    report.theorem = id;
    report.params = params;
    report.radius = theorem_radius(id, params, params.a);

    const SchwarzFunction wk = SchwarzFunction::monomial(params.k);
    const SchwarzFunction wm = SchwarzFunction::monomial(params.m);
    const double pi = std::acos(-1.0);

    double max_lhs = 0.0;
    for (const auto& fn : family) {
        const StudyFunction f = make_study(fn);
        const double radius =
            id == TheoremId::T4
                ? theorem_radius(id, params, f.series.a0_modulus())
                : report.radius;
        for (double fraction : r_fractions) {
            const double r = fraction * radius;
            for (int i = 0; i < angle_count; ++i) {
                const double theta = 2.0 * pi * i / angle_count;
                const cplx z = std::polar(r, theta);
                const double value = theorem_lhs(id, params, f, wk, wm, z);
                report.grid.push_back({r, theta, value});
                max_lhs = std::max(max_lhs, value);
            }
        }
    }
    report.max_lhs = max_lhs;
    report.margin = 1.0 - max_lhs;
    report.pass = max_lhs <= 1.0 + kPassTolerance;
    return report;
}

std::vector<DiskFunction> extremal_family(TheoremId id, const LabParams& params,
                                          const std::vector<double>& a_values) {
    std::vector<DiskFunction> family;
    for (double a : a_values) {
        switch (id) {
        case TheoremId::T2:
        case TheoremId::T3:
        case TheoremId::T4:
            family.push_back(MobiusF{a});
            break;
        case TheoremId::T5:
            family.push_back(LacunaryFStar{a, params.q});
            break;
        default:
            family.push_back(MobiusPhi{a});
            break;
        }
    }
    return family;
}

VerificationReport sharpness_probe(TheoremId id, const LabParams& prm,
                                   const std::vector<double>& eps_list,
                                   const std::vector<double>& a_list) {
    VerificationReport report;
    report.theorem = id;
    report.params = prm;
    report.radius = theorem_radius(id, prm, prm.a);

    double max_lhs = 0.0;
    for (double a : a_list) {
        const double base =
            id == TheoremId::T4 ? theorem_radius(id, prm, a) : report.radius;
        for (double eps : eps_list) {
            const double r = base + eps;
            if (r >= 1.0) continue;
            double value = 0.0;
            switch (id) {
            case TheoremId::T1:
                value = closed_A_phi(a, prm.p, prm.k, prm.m, r);
                break;
            case TheoremId::T2:
                value = closed_B_f(a, prm.p, prm.lambda, prm.s, prm.t, prm.k, prm.m, r);
                break;
            case TheoremId::T3:
            case TheoremId::T4:
                value = closed_C_f(a, prm.p, prm.lambda, prm.k, prm.m, r);
                break;
            case TheoremId::T5:
                value = closed_D_fstar(a, prm.p, prm.q, prm.k, r);
                break;
            case TheoremId::T6:
                value = closed_E_phi(a, prm.k, prm.m, r);
                break;
            default:
                throw std::domain_error("sharpness_probe: unsupported theorem");
            }
            report.grid.push_back({r, a, value});
            max_lhs = std::max(max_lhs, value);
            if (value > 1.0 && !report.witness) report.witness = Witness{r, a};
        }
    }
    report.max_lhs = max_lhs;
    report.margin = 1.0 - max_lhs;
    report.pass = report.witness.has_value();
    return report;
}

double psi6(double r, int k, int m) {
    return 11.0 * ipow(r, 2 * m + k) - 6.0 * ipow(r, 2 * m) - 8.0 * ipow(r, k + m)
        + 2.0 * ipow(r, m) + ipow(r, k);
}

namespace {

std::vector<StudyFunction> lemma_family() {
    std::vector<StudyFunction> family;
    for (std::uint64_t seed = 1; seed <= 10; ++seed)
        for (int degree : {0, 1, 3, 5})
            family.push_back(make_study(random_member(seed, degree, 0)));
    family.push_back(make_study(MobiusPhi{0.5}));
    family.push_back(make_study(MobiusF{0.8}));
    return family;
}

CheckResult check_lemma1() {
    CheckResult result{"lemma1", true, ""};
    for (const auto& f : lemma_family()) {
        const double a = f.series.a0_modulus();
        for (double r : {0.2, 0.5, 0.8}) {
            const double lhs = majorant_sum(f.series, 1, r);
            const double bound = a >= r
                ? r * (1.0 - a * a) / (1.0 - r * a)
                : r * std::sqrt((1.0 - a * a) / (1.0 - r * r));
            if (lhs > bound + 1e-10) {
                result.pass = false;
                std::ostringstream msg;
                msg << "violated at r=" << r << " a=" << a << " lhs=" << lhs
                    << " bound=" << bound;
                result.detail = msg.str();
                return result;
            }
        }
    }
    return result;
}

CheckResult check_lemma2() {
    CheckResult result{"lemma2", true, ""};
    for (const auto& f : lemma_family()) {
        const double a = f.series.a0_modulus();
        for (double r : {0.2, 0.5, 0.8}) {
            const double lhs = majorant_sum(f.series, 1, r) + refined_term(f.series, r);
            const double bound = (1.0 - a * a) * r / (1.0 - r);
            if (lhs > bound + 1e-10) {
                result.pass = false;
                std::ostringstream msg;
                msg << "violated at r=" << r << " a=" << a;
                result.detail = msg.str();
                return result;
            }
        }
    }
    return result;
}

CheckResult check_lemma4() {
    // phi_0(r) = 1, N(r) = lambda r^k/(1-r^k): D_{p,m}(a) <= 0 for r <= R_3.
    CheckResult result{"lemma4", true, ""};
    for (double lambda : {0.5, 1.0, 2.0}) {
        for (double p : {1.0, 2.0}) {
            for (int k : {1, 2}) {
                for (int m : {1, 3}) {
                    RadiusQuery query;
                    query.theorem = Equation::R3;
                    query.k = k;
                    query.m = m;
                    query.p = p;
                    query.lambda = lambda;
                    const double R = solve(query).value;
                    for (int ri = 1; ri <= 20; ++ri) {
                        const double r = R * ri / 20.0;
                        const double N = lambda * ipow(r, k) / (1.0 - ipow(r, k));
                        for (int ai = 0; ai < 100; ++ai) {
                            const double a = ai / 100.0;
                            const double rm = ipow(r, m);
                            const double D =
                                std::pow((a + rm) / (1.0 + a * rm), p) - 1.0
                                + (1.0 - a * a) * N;
                            if (D > 1e-10) {
                                result.pass = false;
                                std::ostringstream msg;
                                msg << "D>0 at lambda=" << lambda << " p=" << p
                                    << " k=" << k << " m=" << m << " r=" << r
                                    << " a=" << a;
                                result.detail = msg.str();
                                return result;
                            }
                        }
                    }
                }
            }
        }
    }
    return result;
}

CheckResult check_lemma5() {
    CheckResult result{"lemma5", true, ""};
    const double ratio = std::log(2.0 * std::sqrt(2.0) + 1.0) / std::log(3.0);
    for (int m = 2; m <= 30; ++m) {
        const int k_max = static_cast<int>(std::floor(m / ratio));
        for (int k = 2; k <= k_max; ++k) {
            const double upper = std::pow(3.0, -1.0 / k);
            for (int i = 0; i <= 10000; ++i) {
                const double r = upper * i / 10000.0;
                if (psi6(r, k, m) < -1e-12) {
                    result.pass = false;
                    std::ostringstream msg;
                    msg << "Psi6<0 at k=" << k << " m=" << m << " r=" << r;
                    result.detail = msg.str();
                    return result;
                }
            }
        }
    }
    return result;
}

} // namespace

std::vector<CheckResult> lemma_checks() {
    return {check_lemma1(), check_lemma2(), check_lemma4(), check_lemma5()};
}

} // namespace bohr
