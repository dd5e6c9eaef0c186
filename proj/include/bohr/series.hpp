#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

namespace bohr {

using cplx = std::complex<double>;

/// Truncated Taylor expansion of a self-map of the unit disk, together with
/// a geometric bound on the discarded tail. The tail coefficient is the
/// Wiener bound 1 - |a_0|^2, valid for every coefficient of index >= 1.
class CoefficientSeries {
public:
    CoefficientSeries() = default;
    explicit CoefficientSeries(std::vector<cplx> coeffs);

    const std::vector<cplx>& coefficients() const { return coeffs_; }
    int truncation_order() const { return static_cast<int>(coeffs_.size()) - 1; }
    double a0_modulus() const { return a0_; }
    double wiener_coefficient() const { return wiener_; }

    /// Upper bound on sum_{n > N} |a_n| r^n.
    double tail_bound(double r) const;
    /// Upper bound on sum_{n > N} |a_n|^2 r^{2n}.
    double quadratic_tail_bound(double r) const;

private:
    std::vector<cplx> coeffs_;
    double a0_ = 0.0;
    double wiener_ = 1.0;
};

/// Integer power by repeated squaring; exact for the exponents used here.
double ipow(double x, long long n);

void require_radius(double r);

/// B_N(f, r) = sum_{n >= N} |a_n| r^n, tail included (upper estimate).
double majorant_sum(const CoefficientSeries& series, int N, double r);

/// ||f_0||_r^2 = sum_{n >= 1} |a_n|^2 r^{2n}, tail included.
double quadratic_norm(const CoefficientSeries& series, double r);

/// A(f_0, r) = (1/(1+|a_0|) + r/(1-r)) ||f_0||_r^2.
double refined_term(const CoefficientSeries& series, double r);

/// sum_{j >= 1} |a_{sj+t}| r^{sj+t}, tail included. Requires s >= 1, t >= 0.
double lacunary_sum(const CoefficientSeries& series, int s, int t, double r);

} // namespace bohr
