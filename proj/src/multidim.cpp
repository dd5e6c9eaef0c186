#include "bohr/multidim.hpp"

#include <cmath>

namespace bohr {

namespace {
constexpr int kMaxDegree = 256;
}

double vector_norm(const Vec& z, Norm norm) {
    if (norm == Norm::Sup) {
        double best = 0.0;
        for (const auto& zi : z) best = std::max(best, std::abs(zi));
        return best;
    }
    double sum = 0.0;
    for (const auto& zi : z) sum += std::norm(zi);
    return std::sqrt(sum);
}

SupportFunctional::SupportFunctional(Norm norm, Vec v) : norm_(norm), v_(std::move(v)) {
    if (v_.empty()) throw std::domain_error("support functional needs a nonzero vector");
    if (std::abs(vector_norm(v_, norm_) - 1.0) > 1e-12)
        throw std::domain_error("support functional base point must have unit norm");
    if (norm_ == Norm::Sup) {
        double best = -1.0;
        for (std::size_t i = 0; i < v_.size(); ++i) {
            const double mod = std::abs(v_[i]);
            if (mod > best + 1e-15) {
                best = mod;
                sup_index_ = i;
            }
        }
        sup_phase_ = std::conj(v_[sup_index_]) / std::abs(v_[sup_index_]);
    }
}

cplx SupportFunctional::operator()(const Vec& z) const {
    if (z.size() != v_.size())
        throw std::domain_error("dimension mismatch in support functional");
    if (norm_ == Norm::Sup) return z[sup_index_] * sup_phase_;
    cplx acc = 0.0;
    for (std::size_t i = 0; i < z.size(); ++i) acc += z[i] * std::conj(v_[i]);
    return acc;
}

SupportFunctional support_functional(Norm norm, const Vec& v) {
    return SupportFunctional(norm, v);
}

Vec VectorSchwarzMap::eval(const Vec& z) const {
    if (order < 1) throw std::domain_error("Schwarz map order must be >= 1");
    if (!(vector_norm(z, T.norm_kind()) < 1.0))
        throw std::domain_error("Schwarz map argument must satisfy ||z|| < 1");
    cplx scale = 1.0;
    const cplx tv = T(z);
    for (int i = 1; i < order; ++i) scale *= tv;
    Vec out(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) out[i] = scale * z[i];
    return out;
}

cplx BallFunction::eval(const Vec& z) const {
    cplx tv = T(z);
    if (kind == BallKind::EtaStar) {
        cplx tq = 1.0;
        for (int i = 0; i < q; ++i) tq *= tv;
        tv = tq;
    }
    if (kind == BallKind::XiA) return (a + tv) / (1.0 + a * tv);
    return (a - tv) / (1.0 - a * tv);
}

long long BallFunction::part_degree(int j) const {
    return kind == BallKind::EtaStar ? static_cast<long long>(q) * j : j;
}

cplx BallFunction::part_coefficient(int j) const {
    const double w = 1.0 - a * a;
    if (kind == BallKind::XiA) return w * ipow(-a, j - 1);
    return -w * ipow(a, j - 1);
}

std::string to_string(MultiLhs which) {
    switch (which) {
    case MultiLhs::G: return "G";
    case MultiLhs::H: return "H";
    case MultiLhs::I: return "I";
    case MultiLhs::J: return "J";
    case MultiLhs::K: return "K";
    }
    return "?";
}

std::optional<MultiLhs> multi_lhs_from_string(const std::string& name) {
    for (auto w : {MultiLhs::G, MultiLhs::H, MultiLhs::I, MultiLhs::J, MultiLhs::K})
        if (to_string(w) == name) return w;
    return std::nullopt;
}

double multidim_lhs(MultiLhs which, const BallFunction& f,
                    const VectorSchwarzMap& mu_k, const VectorSchwarzMap& mu_m,
                    const LabParams& prm, const Vec& z) {
    const Norm norm = f.T.norm_kind();
    const double r = vector_norm(z, norm);
    if (!(r < 1.0)) throw std::domain_error("multidim_lhs: need ||z|| < 1");

    const Vec wk = mu_k.eval(z);
    const double tau = std::abs(f.T(wk)); // |T_v(mu_k(z))|

    // S1 = sum_j |P_j(mu_k(z))|, S2 = sum_j |P_j(mu_k(z))|^2 over nonzero parts.
    double s1 = 0.0, s2 = 0.0;
    for (int j = 1; f.part_degree(j) <= kMaxDegree; ++j) {
        const double pj = std::abs(f.part_coefficient(j)) * ipow(tau, f.part_degree(j));
        s1 += pj;
        s2 += pj * pj;
    }

    const double a = f.a;
    switch (which) {
    case MultiLhs::G: {
        const double rk = ipow(r, prm.k);
        const double factor = 1.0 / (1.0 + a) + rk / (1.0 - rk);
        const cplx fv = f.eval(mu_m.eval(z));
        const cplx f0 = f.eval(Vec(z.size(), 0.0));
        return std::pow(a, prm.p) + s1 + factor * s2 + std::abs(fv - f0);
    }
    case MultiLhs::H: {
        // Only the parts of degree s j + t enter the sum.
        double lac = 0.0;
        for (int j = 1; f.part_degree(j) <= kMaxDegree; ++j) {
            const long long deg = f.part_degree(j);
            if (deg < prm.s + prm.t || (deg - prm.t) % prm.s != 0) continue;
            lac += std::abs(f.part_coefficient(j)) * ipow(tau, deg);
        }
        const cplx fv = f.eval(mu_m.eval(z));
        return std::pow(std::abs(fv), prm.p) + prm.lambda * lac;
    }
    case MultiLhs::I: {
        const double rk = ipow(r, prm.k);
        const double factor = 1.0 / (1.0 + a) + rk / (1.0 - rk);
        const cplx fv = f.eval(mu_m.eval(z));
        return std::pow(std::abs(fv), prm.p) + prm.lambda * (s1 + factor * s2);
    }
    case MultiLhs::J: {
        const double rqk = ipow(r, static_cast<long long>(prm.q) * prm.k);
        const double factor = 1.0 / (1.0 + a) + rqk / (1.0 - rqk);
        return std::pow(a, prm.p) + s1 + factor * s2;
    }
    case MultiLhs::K: {
        const double rk = ipow(r, prm.k);
        const double factor = 1.0 / (1.0 + a) + rk / (1.0 - rk);
        const cplx fv = f.eval(mu_m.eval(z));
        const cplx f0 = f.eval(Vec(z.size(), 0.0));
        const double dev = std::abs(fv - f0);
        return a + s1 + factor * s2 + dev * dev;
    }
    }
    throw std::logic_error("unreachable");
}

namespace {

Vec ray_direction(int d, Norm norm) {
    Vec raw;
    if (d == 2)
        raw = {cplx(0.6, 0.3), cplx(1.0, 0.0)};
    else if (d == 3)
        raw = {cplx(0.2, -0.5), cplx(1.0, 0.0), cplx(0.4, 0.1)};
    else
        throw std::domain_error("reduction_check: d must be 2 or 3");
    const double n = vector_norm(raw, norm);
    for (auto& x : raw) x /= n;
    return raw;
}

BallKind extremal_kind(MultiLhs which) {
    switch (which) {
    case MultiLhs::H:
    case MultiLhs::I: return BallKind::XiA;
    case MultiLhs::J: return BallKind::EtaStar;
    default: return BallKind::EtaA;
    }
}

double scalar_counterpart(MultiLhs which, const LabParams& prm, double a, double r) {
    const SchwarzFunction wk = SchwarzFunction::monomial(prm.k);
    const SchwarzFunction wm = SchwarzFunction::monomial(prm.m);
    const cplx z = r;
    switch (which) {
    case MultiLhs::G: return lhs_A(make_study(MobiusPhi{a}), wk, wm, prm.p, z);
    case MultiLhs::H:
        return lhs_B(make_study(MobiusF{a}), wk, wm, prm.p, prm.lambda, prm.s, prm.t, z);
    case MultiLhs::I:
        return lhs_C(make_study(MobiusF{a}), wk, wm, prm.p, prm.lambda, z);
    case MultiLhs::J:
        return lhs_D(make_study(LacunaryFStar{a, prm.q}), wk, prm.p, prm.q, z);
    case MultiLhs::K: return lhs_E(make_study(MobiusPhi{a}), wk, wm, z);
    }
    throw std::logic_error("unreachable");
}

} // namespace

ReductionReport reduction_check(MultiLhs which, const LabParams& prm, int d,
                                Norm norm, const std::vector<double>& a_grid,
                                const std::vector<double>& r_grid) {
    ReductionReport report;
    report.which = which;
    report.dimension = d;
    report.norm = norm;

    const Vec v = ray_direction(d, norm);
    const SupportFunctional T = support_functional(norm, v);
    const VectorSchwarzMap mu_k{prm.k, T};
    const VectorSchwarzMap mu_m{prm.m, T};

    for (double a : a_grid) {
        BallFunction f{extremal_kind(which), a, prm.q, T};
        for (double r : r_grid) {
            Vec z(v.size());
            for (std::size_t i = 0; i < v.size(); ++i) z[i] = r * v[i];
            const double multi = multidim_lhs(which, f, mu_k, mu_m, prm, z);
            const double scalar = scalar_counterpart(which, prm, a, r);
            const double diff = std::abs(multi - scalar);
            report.max_abs_diff = std::max(report.max_abs_diff, diff);
            if (diff > 1e-10 && !report.first_mismatch) {
                report.pass = false;
                report.first_mismatch = ReductionMismatch{a, r, scalar, multi};
            }
        }
    }
    return report;
}

} // namespace bohr
