#include "bohr/functions.hpp"

#include <cmath>
#include <random>

namespace bohr {

namespace {

void require_disk(cplx z) {
    if (!(std::abs(z) < 1.0))
        throw std::domain_error("evaluation point must satisfy |z| < 1");
}

void require_zeros(const std::vector<cplx>& zeros) {
    for (const auto& zj : zeros)
        if (!(std::abs(zj) < 1.0))
            throw std::domain_error("Blaschke zeros must satisfy |z_j| < 1");
}

cplx blaschke_eval(const std::vector<cplx>& zeros, cplx factor, int order, cplx z) {
    cplx value = factor;
    for (int i = 0; i < order; ++i) value *= z;
    for (const auto& zj : zeros)
        value *= (zj - z) / (1.0 - std::conj(zj) * z);
    return value;
}

// Coefficients of num/den to index n_max by long division; den[0] must be nonzero.
std::vector<cplx> divide_series(const std::vector<cplx>& num,
                                const std::vector<cplx>& den, int n_max) {
    std::vector<cplx> c(n_max + 1, 0.0);
    for (int n = 0; n <= n_max; ++n) {
        cplx acc = n < static_cast<int>(num.size()) ? num[n] : cplx(0.0);
        for (int i = 1; i <= n && i < static_cast<int>(den.size()); ++i)
            acc -= den[i] * c[n - i];
        c[n] = acc / den[0];
    }
    return c;
}

std::vector<cplx> poly_mul(const std::vector<cplx>& p, const std::vector<cplx>& q) {
    std::vector<cplx> out(p.size() + q.size() - 1, 0.0);
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < q.size(); ++j)
            out[i + j] += p[i] * q[j];
    return out;
}

std::vector<cplx> blaschke_series(const BlaschkeProduct& b, int n_max) {
    require_zeros(b.zeros);
    std::vector<cplx> num{b.factor};
    std::vector<cplx> den{1.0};
    for (const auto& zj : b.zeros) {
        num = poly_mul(num, {zj, -1.0});
        den = poly_mul(den, {1.0, -std::conj(zj)});
    }
    std::vector<cplx> shifted(b.vanishing_order, 0.0);
    shifted.insert(shifted.end(), num.begin(), num.end());
    return divide_series(shifted, den, n_max);
}

} // namespace

cplx evaluate(const DiskFunction& f, cplx z) {
    require_disk(z);
    return std::visit(
        [&](const auto& g) -> cplx {
            using T = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<T, BlaschkeProduct>) {
                require_zeros(g.zeros);
                cplx w = 1.0;
                for (int i = 0; i < g.argument_power; ++i) w *= z;
                return blaschke_eval(g.zeros, g.factor, g.vanishing_order, w);
            } else if constexpr (std::is_same_v<T, Constant>) {
                return g.c;
            } else if constexpr (std::is_same_v<T, MobiusPhi>) {
                return (g.a - z) / (1.0 - g.a * z);
            } else if constexpr (std::is_same_v<T, MobiusF>) {
                return (z + g.a) / (1.0 + g.a * z);
            } else {
                cplx zq = 1.0;
                for (int i = 0; i < g.q; ++i) zq *= z;
                return (g.a - zq) / (1.0 - g.a * zq);
            }
        },
        f);
}

cplx evaluate_schwarz(const SchwarzFunction& w, cplx z) {
    require_disk(z);
    require_zeros(w.zeros);
    if (w.order < 1) throw std::domain_error("Schwarz function needs order >= 1");
    return blaschke_eval(w.zeros, w.factor, w.order, z);
}

CoefficientSeries taylor_coefficients(const DiskFunction& f, int n_max) {
    if (n_max < 0) throw std::domain_error("taylor_coefficients: n_max must be >= 0");
    std::vector<cplx> c(n_max + 1, 0.0);
    std::visit(
        [&](const auto& g) {
            using T = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<T, BlaschkeProduct>) {
                if (g.argument_power < 1)
                    throw std::domain_error("argument_power must be >= 1");
                if (g.argument_power == 1) {
                    c = blaschke_series(g, n_max);
                } else {
                    const int inner = n_max / g.argument_power;
                    const auto base = blaschke_series(g, inner);
                    for (int n = 0; n <= inner; ++n)
                        c[static_cast<std::size_t>(n) * g.argument_power] = base[n];
                }
            } else if constexpr (std::is_same_v<T, Constant>) {
                c[0] = g.c;
            } else if constexpr (std::is_same_v<T, MobiusPhi>) {
                // (a - z)/(1 - a z) = a - (1 - a^2) sum_{j>=1} a^{j-1} z^j
                c[0] = g.a;
                const double w = 1.0 - g.a * g.a;
                double ap = 1.0;
                for (int j = 1; j <= n_max; ++j, ap *= g.a) c[j] = -w * ap;
            } else if constexpr (std::is_same_v<T, MobiusF>) {
                // (z + a)/(1 + a z) = a + (1 - a^2) sum_{j>=1} (-a)^{j-1} z^j
                c[0] = g.a;
                const double w = 1.0 - g.a * g.a;
                double ap = 1.0;
                for (int j = 1; j <= n_max; ++j, ap *= -g.a) c[j] = w * ap;
            } else {
                c[0] = g.a;
                const double w = 1.0 - g.a * g.a;
                double ap = 1.0;
                for (int j = 1; static_cast<long long>(g.q) * j <= n_max; ++j, ap *= g.a)
                    c[g.q * j] = -w * ap;
            }
        },
        f);
    return CoefficientSeries(std::move(c));
}

double a0_modulus(const DiskFunction& f) {
    return std::abs(evaluate(f, 0.0));
}

DiskFunction random_member(std::uint64_t seed, int degree, int vanishing_order) {
    if (degree < 0 || vanishing_order < 0)
        throw std::domain_error("random_member: degree and order must be >= 0");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    BlaschkeProduct b;
    b.vanishing_order = vanishing_order;
    const double pi = std::acos(-1.0);
    b.factor = std::polar(1.0, 2.0 * pi * unit(rng));
    for (int i = 0; i < degree; ++i) {
        const double rho = 0.95 * std::sqrt(unit(rng));
        const double theta = 2.0 * pi * unit(rng);
        b.zeros.push_back(std::polar(rho, theta));
    }
    return b;
}

SchwarzFunction random_schwarz(std::uint64_t seed, int degree, int order) {
    if (order < 1) throw std::domain_error("random_schwarz: order must be >= 1");
    auto member = std::get<BlaschkeProduct>(random_member(seed, degree, 0));
    SchwarzFunction w;
    w.order = order;
    w.factor = member.factor;
    for (auto& zj : member.zeros)
        if (std::abs(zj) > 1e-12) w.zeros.push_back(zj);
    return w;
}

} // namespace bohr
