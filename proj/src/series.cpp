#include "bohr/series.hpp"

#include <cmath>

namespace bohr {

CoefficientSeries::CoefficientSeries(std::vector<cplx> coeffs)
    : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.push_back(0.0);
    a0_ = std::abs(coeffs_[0]);
    wiener_ = 1.0 - a0_ * a0_;
    if (wiener_ < 0.0) wiener_ = 0.0;
}

double CoefficientSeries::tail_bound(double r) const {
    if (r <= 0.0) return 0.0;
    const int N = truncation_order();
    return wiener_ * ipow(r, N + 1) / (1.0 - r);
}

double CoefficientSeries::quadratic_tail_bound(double r) const {
    if (r <= 0.0) return 0.0;
    const int N = truncation_order();
    const double r2 = r * r;
    return wiener_ * wiener_ * ipow(r2, N + 1) / (1.0 - r2);
}

double ipow(double x, long long n) {
    if (n < 0) return 1.0 / ipow(x, -n);
    double acc = 1.0;
    while (n > 0) {
        if (n & 1) acc *= x;
        x *= x;
        n >>= 1;
    }
    return acc;
}

void require_radius(double r) {
    if (!(r >= 0.0) || r >= 1.0)
        throw std::domain_error("radius must lie in [0, 1)");
}

double majorant_sum(const CoefficientSeries& series, int N, double r) {
    require_radius(r);
    if (N < 0) throw std::domain_error("majorant_sum: N must be >= 0");
    const auto& a = series.coefficients();
    double sum = 0.0;
    double rn = ipow(r, N);
    for (std::size_t n = N; n < a.size(); ++n) {
        sum += std::abs(a[n]) * rn;
        rn *= r;
    }
    return sum + series.tail_bound(r);
}

double quadratic_norm(const CoefficientSeries& series, double r) {
    require_radius(r);
    const auto& a = series.coefficients();
    const double r2 = r * r;
    double sum = 0.0;
    double rn = r2;
    for (std::size_t n = 1; n < a.size(); ++n) {
        sum += std::norm(a[n]) * rn;
        rn *= r2;
    }
    return sum + series.quadratic_tail_bound(r);
}

double refined_term(const CoefficientSeries& series, double r) {
    require_radius(r);
    const double factor = 1.0 / (1.0 + series.a0_modulus()) + r / (1.0 - r);
    return factor * quadratic_norm(series, r);
}

double lacunary_sum(const CoefficientSeries& series, int s, int t, double r) {
    require_radius(r);
    if (s < 1 || t < 0) throw std::domain_error("lacunary_sum: need s >= 1, t >= 0");
    const auto& a = series.coefficients();
    double sum = 0.0;
    for (long long j = 1;; ++j) {
        const long long idx = static_cast<long long>(s) * j + t;
        if (idx >= static_cast<long long>(a.size())) break;
        sum += std::abs(a[idx]) * ipow(r, idx);
    }
    // Indices past the truncation order are covered by the full geometric tail.
    return sum + series.tail_bound(r);
}

} // namespace bohr
