#include "bohr/radius.hpp"

#include "bohr/series.hpp"

#include <algorithm>
#include <cmath>

namespace bohr {

namespace {
constexpr double kScanStep = 1e-4;
constexpr double kScanEnd = 1.0 - 1e-9;
} // namespace

double psi1(double r, int k, int m, double p) {
    require_radius(r);
    const double rk = ipow(r, k);
    const double rm = ipow(r, m);
    return rk / (1.0 - rk) + rm / (1.0 - rm) - p / 2.0;
}

double psi2(double r, double lambda, int s, int t, double p, int m, int k) {
    require_radius(r);
    const double rkst = ipow(r, static_cast<long long>(k) * (s + t));
    const double rks = ipow(r, static_cast<long long>(k) * s);
    const double rm = ipow(r, m);
    return 2.0 * lambda * rkst / (1.0 - rks) - p * (1.0 - rm) / (1.0 + rm);
}

double psi3(double r, double lambda, double p, int k, int m) {
    require_radius(r);
    const double rk = ipow(r, k);
    const double rm = ipow(r, m);
    return p * (1.0 - rm) / (1.0 + rm) - 2.0 * lambda * rk / (1.0 - rk);
}

double psi4(double r, double lambda, double p, double a, int k, int m) {
    require_radius(r);
    const double rk = ipow(r, k);
    const double rm = ipow(r, m);
    return std::pow(1.0 + a * rm, p) * (1.0 + (lambda * a * a - lambda - 1.0) * rk)
        - (1.0 - rk) * std::pow(a + rm, p);
}

double psi5(double r, double a, double p, int q, int k) {
    require_radius(r);
    const double rqk = ipow(r, static_cast<long long>(q) * k);
    return (2.0 - a * a - std::pow(a, p)) * rqk + std::pow(a, p) - 1.0;
}

double zeta_m(double r, int m) {
    return ipow(r, m) * (3.0 - 5.0 * r) + 3.0 * r - 1.0;
}

double eta_m(double r, int m) {
    return ipow(r, m) * (2.0 - 3.0 * r) + 2.0 * r - 1.0;
}

double zeta_kmp(double r, int k, int m, double p) {
    const double rk = ipow(r, k);
    const double rm = ipow(r, m);
    return 2.0 * rk * (1.0 + rm) - p * (1.0 - rm) * (1.0 - rk);
}

double eta_kmp(double r, int k, int m, double p) {
    const double rk = ipow(r, k);
    return 1.0 - 2.0 * rk - std::pow(r, m * p) * (1.0 - rk);
}

void validate(const RadiusQuery& query) {
    if (query.k < 1 || query.m < 1 || query.q < 1 || query.s < 1)
        throw std::domain_error("k, m, q, s must be positive integers");
    if (query.t < 0 || query.t >= query.s)
        throw std::domain_error("need 0 <= t < s");
    if (!(query.p > 0.0))
        throw std::domain_error("p must be positive");
    if (query.a < 0.0 || query.a >= 1.0)
        throw std::domain_error("a must lie in [0, 1)");
    if (!(query.lambda > 0.0))
        throw std::domain_error("lambda must be positive");
    switch (query.theorem) {
    case Equation::R1:
    case Equation::R2:
    case Equation::R3:
        if (query.p > 2.0)
            throw std::domain_error("p must lie in (0, 2] for this equation");
        break;
    default:
        break;
    }
}

double defining_function(const RadiusQuery& q, double r) {
    switch (q.theorem) {
    case Equation::R1: return psi1(r, q.k, q.m, q.p);
    case Equation::R2: return psi2(r, q.lambda, q.s, q.t, q.p, q.m, q.k);
    case Equation::R3: return psi3(r, q.lambda, q.p, q.k, q.m);
    case Equation::R4: return psi4(r, q.lambda, q.p, q.a, q.k, q.m);
    case Equation::R5: return psi5(r, q.a, q.p, q.q, q.k);
    case Equation::ZetaM: return zeta_m(r, q.m);
    case Equation::EtaM: return eta_m(r, q.m);
    case Equation::AlphaKMP: return zeta_kmp(r, q.k, q.m, q.p);
    case Equation::BetaKMP: return eta_kmp(r, q.k, q.m, q.p);
    }
    throw std::logic_error("unreachable");
}

RadiusResult solve(const RadiusQuery& query, double tol) {
    validate(query);
    if (tol < 1e-14) throw std::domain_error("tol must be >= 1e-14");

    if (query.theorem == Equation::R5) {
        const double value = radius_R5(query.k, query.p, query.q);
        return RadiusResult{value, value, value, 0.0, 0.0};
    }

    auto f = [&](double r) { return defining_function(query, r); };

    double lo = 0.0;
    double flo = f(0.0);
    double hi = 0.0, fhi = 0.0;
    bool bracketed = false;
    for (double r = kScanStep; r < kScanEnd; r += kScanStep) {
        fhi = f(r);
        if (fhi == 0.0) {
            lo = hi = r;
            flo = fhi;
            bracketed = true;
            break;
        }
        if (flo != 0.0 && std::signbit(flo) != std::signbit(fhi)) {
            hi = r;
            bracketed = true;
            break;
        }
        lo = r;
        flo = fhi;
    }
    if (!bracketed)
        throw NoRootFound("no sign change found in (0, 1)");

    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = f(mid);
        if (fmid == 0.0) {
            lo = hi = mid;
            break;
        }
        if (std::signbit(fmid) == std::signbit(flo)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }

    RadiusResult result;
    result.bracket_lo = lo;
    result.bracket_hi = hi;
    result.value = 0.5 * (lo + hi);
    result.residual = f(result.value);
    result.scan_step = kScanStep;
    return result;
}

double radius_R5(int k, double p, int q) {
    if (k < 1 || q < 1 || !(p > 0.0))
        throw std::domain_error("radius_R5: need k, q >= 1 and p > 0");
    const double pm = std::min(p, 2.0);
    return std::pow(pm / (2.0 + pm), 1.0 / (static_cast<double>(q) * k));
}

double infimum_oracle(double p, int grid_size) {
    if (!(p > 0.0) || grid_size < 1000)
        throw std::domain_error("infimum_oracle: need p > 0 and grid_size >= 1000");
    const double a_max = 1.0 - 1e-6;
    double best = p / (2.0 + p); // a -> 1 limit, by l'Hopital
    for (int i = 0; i <= grid_size; ++i) {
        const double a = a_max * i / grid_size;
        const double ap = std::pow(a, p);
        const double value = (1.0 - ap) / (2.0 - a * a - ap);
        best = std::min(best, value);
    }
    return best;
}

} // namespace bohr
