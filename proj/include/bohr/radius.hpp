#pragma once

#include <stdexcept>
#include <string>

namespace bohr {

/// Which defining equation a query refers to.
enum class Equation {
    R1,       // Psi_1(r) = r^k/(1-r^k) + r^m/(1-r^m) - p/2
    R2,       // Psi_2(r) = 2 lambda r^{k(s+t)}/(1-r^{ks}) - p (1-r^m)/(1+r^m)
    R3,       // Psi_3(r) = p (1-r^m)/(1+r^m) - 2 lambda r^k/(1-r^k)
    R4,       // Psi_4(r) = (1+a r^m)^p [1+(la^2-l-1)r^k] - (1-r^k)(a+r^m)^p
    R5,       // closed form (min{p,2}/(2+min{p,2}))^{1/(qk)}
    ZetaM,    // r^m (3-5r) + 3r - 1
    EtaM,     // r^m (2-3r) + 2r - 1
    AlphaKMP, // 2 r^k (1+r^m) - p (1-r^m)(1-r^k)
    BetaKMP,  // 1 - 2 r^k - r^{mp} (1-r^k)
};

struct RadiusQuery {
    Equation theorem = Equation::R1;
    int k = 1;
    int m = 1;
    int q = 1;
    int s = 1;
    int t = 0;
    double p = 1.0;
    double lambda = 1.0;
    double a = 0.0;
};

struct RadiusResult {
    double value = 0.0;
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
    double residual = 0.0;
    double scan_step = 0.0;
};

struct NoRootFound : std::runtime_error {
    explicit NoRootFound(const std::string& what) : std::runtime_error(what) {}
};

double psi1(double r, int k, int m, double p);
double psi2(double r, double lambda, int s, int t, double p, int m, int k);
double psi3(double r, double lambda, double p, int k, int m);
double psi4(double r, double lambda, double p, double a, int k, int m);
double psi5(double r, double a, double p, int q, int k);
double zeta_m(double r, int m);
double eta_m(double r, int m);
double zeta_kmp(double r, int k, int m, double p);
double eta_kmp(double r, int k, int m, double p);

/// Value of the query's defining function at r (R5 has no scan equation).
double defining_function(const RadiusQuery& query, double r);

/// Minimal positive root by left-to-right scan plus bisection.
RadiusResult solve(const RadiusQuery& query, double tol = 1e-13);

/// (min{p,2}/(2+min{p,2}))^{1/(qk)}.
double radius_R5(int k, double p, int q);

/// Grid minimization of (1-a^p)/(2-a^2-a^p) over a in [0, 1), limit included.
double infimum_oracle(double p, int grid_size);

void validate(const RadiusQuery& query);

} // namespace bohr
