#pragma once

#include "bohr/series.hpp"

#include <cstdint>
#include <variant>

namespace bohr {

/// factor * w^{vanishing_order} * prod_j (z_j - w)/(1 - conj(z_j) w) evaluated
/// at w = z^{argument_power}. |factor| = 1 and |z_j| < 1 keep the product
/// inside the closed unit ball; argument_power > 1 yields a lacunary series.
struct BlaschkeProduct {
    std::vector<cplx> zeros;
    cplx factor = 1.0;
    int vanishing_order = 0;
    int argument_power = 1;
};

/// The constant map z -> c, |c| <= 1.
struct Constant {
    cplx c = 0.0;
};

/// phi_a(z) = (a - z)/(1 - a z), a in [0, 1).
struct MobiusPhi {
    double a = 0.0;
};

/// f_a(z) = (z + a)/(1 + a z), a in [0, 1).
struct MobiusF {
    double a = 0.0;
};

/// f*(z) = (a - z^q)/(1 - a z^q): the lacunary extremal with gap q.
struct LacunaryFStar {
    double a = 0.0;
    int q = 1;
};

using DiskFunction =
    std::variant<BlaschkeProduct, MobiusPhi, MobiusF, LacunaryFStar, Constant>;

/// omega(z) = factor * z^order * prod_j (z_j - z)/(1 - conj(z_j) z), order >= 1,
/// no zero at the origin among z_j. Monomial when zeros is empty and factor = 1.
struct SchwarzFunction {
    int order = 1;
    std::vector<cplx> zeros;
    cplx factor = 1.0;

    static SchwarzFunction monomial(int n) { return SchwarzFunction{n, {}, 1.0}; }
    bool is_monomial() const { return zeros.empty() && factor == cplx(1.0); }
};

/// Closed-form evaluation; rejects |z| >= 1.
cplx evaluate(const DiskFunction& f, cplx z);
cplx evaluate_schwarz(const SchwarzFunction& w, cplx z);

/// Expansion of f to index n_max, with the Wiener geometric tail bound.
/// Blaschke products are expanded by polynomial long division.
CoefficientSeries taylor_coefficients(const DiskFunction& f, int n_max = 256);

double a0_modulus(const DiskFunction& f);

/// Deterministic finite Blaschke product times z^{vanishing_order};
/// zeros drawn with |z_j| <= 0.95.
DiskFunction random_member(std::uint64_t seed, int degree, int vanishing_order);

/// Random member of B_n: z^order times a Blaschke product with no zero at 0.
SchwarzFunction random_schwarz(std::uint64_t seed, int degree, int order);

} // namespace bohr
