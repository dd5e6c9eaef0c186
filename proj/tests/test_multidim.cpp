#include "bohr/multidim.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace bohr;

namespace {

const double kPi = std::acos(-1.0);

Vec random_point(std::mt19937& rng, int d, double radius) {
    std::uniform_real_distribution<double> mag(0.1, 1.0);
    std::uniform_real_distribution<double> arg(0.0, 2.0 * kPi);
    Vec z(d);
    for (auto& zi : z) zi = std::polar(mag(rng), arg(rng));
    // scale so the point fits inside the ball in either norm
    std::uniform_real_distribution<double> shrink(0.0, radius);
    const double scale = shrink(rng) / vector_norm(z, Norm::Euclid);
    for (auto& zi : z) zi *= scale;
    return z;
}

Vec unit_vector(std::mt19937& rng, int d, Norm norm) {
    Vec v = random_point(rng, d, 1.0);
    double n = vector_norm(v, norm);
    while (n < 0.1) {
        v = random_point(rng, d, 1.0);
        n = vector_norm(v, norm);
    }
    for (auto& vi : v) vi /= n;
    return v;
}

} // namespace

TEST_CASE("support functional picks the right coordinate") {
    SUBCASE("sup norm, first coordinate dominant") {
        const auto T = support_functional(Norm::Sup, {cplx(1.0, 0.0), cplx(0.0, 0.0)});
        const cplx value = T({cplx(0.2, 0.1), cplx(0.9, 0.0)});
        CHECK(value.real() == doctest::Approx(0.2));
        CHECK(value.imag() == doctest::Approx(0.1));
    }
    SUBCASE("sup norm with a phase on the dominant coordinate") {
        const cplx phase = std::polar(1.0, kPi / 4.0);
        const auto T = support_functional(Norm::Sup, {cplx(0.5, 0.0), phase});
        const cplx value = T({cplx(0.1, 0.0), cplx(0.3, 0.0)});
        // reads z_2 rotated by conj(phase)
        const cplx expected = cplx(0.3, 0.0) * std::conj(phase);
        CHECK(std::abs(value - expected) < 1e-15);
    }
    SUBCASE("euclidean norm is the inner product") {
        const double s = 1.0 / std::sqrt(2.0);
        const auto T = support_functional(Norm::Euclid, {cplx(s, 0.0), cplx(s, 0.0)});
        const cplx value = T({cplx(0.2, 0.0), cplx(0.4, 0.0)});
        CHECK(value.real() == doctest::Approx(0.6 * s).epsilon(1e-14));
    }
    SUBCASE("base point must have unit norm") {
        CHECK_THROWS_AS(support_functional(Norm::Sup, {cplx(0.5, 0.0), cplx(0.2, 0.0)}),
                        std::domain_error);
        CHECK_THROWS_AS(support_functional(Norm::Euclid, Vec{}), std::domain_error);
    }
}

TEST_CASE("support functional has norm one and peaks at its base point") {
    std::mt19937 rng(2024);
    for (Norm norm : {Norm::Sup, Norm::Euclid}) {
        for (int d : {2, 3}) {
            for (int trial = 0; trial < 20; ++trial) {
                const Vec v = unit_vector(rng, d, norm);
                const auto T = support_functional(norm, v);
                CHECK(std::abs(T(v) - cplx(1.0)) < 1e-12);
                for (int i = 0; i < 10; ++i) {
                    const Vec z = random_point(rng, d, 0.99);
                    CHECK(std::abs(T(z)) <= vector_norm(z, norm) + 1e-12);
                }
            }
        }
    }
}

TEST_CASE("vector schwarz maps") {
    const auto T = support_functional(Norm::Sup, {cplx(1.0, 0.0), cplx(0.0, 0.0)});
    SUBCASE("order one is the identity") {
        const VectorSchwarzMap mu{1, T};
        const Vec z{cplx(0.3, 0.2), cplx(-0.1, 0.4)};
        const Vec out = mu.eval(z);
        CHECK(std::abs(out[0] - z[0]) == 0.0);
        CHECK(std::abs(out[1] - z[1]) == 0.0);
    }
    SUBCASE("order two multiplies by the support value") {
        const VectorSchwarzMap mu{2, T};
        const Vec out = mu.eval({cplx(0.3, 0.0), cplx(0.5, 0.0)});
        CHECK(out[0].real() == doctest::Approx(0.09).epsilon(1e-14));
        CHECK(out[1].real() == doctest::Approx(0.15).epsilon(1e-14));
    }
    SUBCASE("on rays the image norm is r^n") {
        std::mt19937 rng(7);
        for (Norm norm : {Norm::Sup, Norm::Euclid}) {
            for (int d : {2, 3}) {
                const Vec v = unit_vector(rng, d, norm);
                const auto Tv = support_functional(norm, v);
                for (int n : {1, 2, 3, 5}) {
                    const VectorSchwarzMap mu{n, Tv};
                    for (double r : {0.2, 0.6, 0.9}) {
                        Vec z(v.size());
                        for (std::size_t i = 0; i < v.size(); ++i) z[i] = r * v[i];
                        CHECK(vector_norm(mu.eval(z), norm)
                              == doctest::Approx(ipow(r, n)).epsilon(1e-13));
                    }
                }
            }
        }
    }
    SUBCASE("vanishing-order bound off the ray") {
        std::mt19937 rng(11);
        for (Norm norm : {Norm::Sup, Norm::Euclid}) {
            const Vec v = unit_vector(rng, 3, norm);
            const auto Tv = support_functional(norm, v);
            for (int n : {1, 2, 3, 5}) {
                const VectorSchwarzMap mu{n, Tv};
                for (int trial = 0; trial < 25; ++trial) {
                    const Vec z = random_point(rng, 3, 0.95);
                    const double r = vector_norm(z, norm);
                    CHECK(vector_norm(mu.eval(z), norm) <= ipow(r, n) + 1e-12);
                }
            }
        }
    }
}

TEST_CASE("ball functions restrict to the one-variable families") {
    const auto T = support_functional(Norm::Sup, {cplx(0.0, 0.0), cplx(1.0, 0.0)});
    const Vec z{cplx(0.1, 0.0), cplx(0.4, 0.0)};
    SUBCASE("eta_a is the phi family in T(z)") {
        const BallFunction f{BallKind::EtaA, 0.5, 1, T};
        CHECK(std::abs(f.eval(z) - evaluate(MobiusPhi{0.5}, cplx(0.4, 0.0))) < 1e-15);
    }
    SUBCASE("xi_a is the f family in T(z)") {
        const BallFunction f{BallKind::XiA, 0.5, 1, T};
        CHECK(std::abs(f.eval(z) - evaluate(MobiusF{0.5}, cplx(0.4, 0.0))) < 1e-15);
    }
    SUBCASE("eta_star composes with T(z)^q") {
        const BallFunction f{BallKind::EtaStar, 0.5, 2, T};
        CHECK(std::abs(f.eval(z) - evaluate(LacunaryFStar{0.5, 2}, cplx(0.4, 0.0)))
              < 1e-15);
        CHECK(f.part_degree(3) == 6);
    }
    SUBCASE("part coefficients match the scalar expansions") {
        const BallFunction f{BallKind::EtaA, 0.6, 1, T};
        const auto s = taylor_coefficients(MobiusPhi{0.6}, 8);
        for (int j = 1; j <= 8; ++j)
            CHECK(std::abs(f.part_coefficient(j) - s.coefficients()[j]) < 1e-14);
        const BallFunction g{BallKind::XiA, 0.6, 1, T};
        const auto sf = taylor_coefficients(MobiusF{0.6}, 8);
        for (int j = 1; j <= 8; ++j)
            CHECK(std::abs(g.part_coefficient(j) - sf.coefficients()[j]) < 1e-14);
    }
}

TEST_CASE("lhs on rays matches the one-variable closed forms") {
    std::mt19937 rng(99);
    for (Norm norm : {Norm::Sup, Norm::Euclid}) {
        const Vec v = unit_vector(rng, 2, norm);
        const auto T = support_functional(norm, v);
        LabParams prm;
        prm.k = 2;
        prm.m = 1;
        prm.p = 1.5;
        const VectorSchwarzMap mu_k{prm.k, T};
        const VectorSchwarzMap mu_m{prm.m, T};
        for (double a : {0.0, 0.4, 0.8}) {
            for (double r : {0.2, 0.5, 0.75}) {
                Vec z(v.size());
                for (std::size_t i = 0; i < v.size(); ++i) z[i] = r * v[i];
                const BallFunction phi{BallKind::EtaA, a, 1, T};
                CHECK(multidim_lhs(MultiLhs::G, phi, mu_k, mu_m, prm, z)
                      == doctest::Approx(closed_A_phi(a, prm.p, prm.k, prm.m, r))
                             .epsilon(1e-9));
                const BallFunction fstar{BallKind::EtaStar, a, 2, T};
                LabParams pj = prm;
                pj.q = 2;
                CHECK(multidim_lhs(MultiLhs::J, fstar, mu_k, mu_m, pj, z)
                      == doctest::Approx(closed_D_fstar(a, prm.p, 2, prm.k, r))
                             .epsilon(1e-9));
                CHECK(multidim_lhs(MultiLhs::K, phi, mu_k, mu_m, prm, z)
                      == doctest::Approx(closed_E_phi(a, prm.k, prm.m, r))
                             .epsilon(1e-9));
            }
        }
    }
}

TEST_CASE("reduction to the scalar module") {
    const std::vector<double> a_grid{0.0, 0.2, 0.4, 0.6, 0.8};
    const std::vector<double> r_grid{0.1, 0.25, 0.4, 0.6, 0.75};
    LabParams prm;
    prm.k = 1;
    prm.m = 2;
    prm.p = 1.0;
    prm.s = 2;
    prm.t = 1;
    prm.q = 2;
    for (auto which : {MultiLhs::G, MultiLhs::H, MultiLhs::I, MultiLhs::J, MultiLhs::K}) {
        for (int d : {2, 3}) {
            for (Norm norm : {Norm::Sup, Norm::Euclid}) {
                const auto report = reduction_check(which, prm, d, norm, a_grid, r_grid);
                const std::string label = to_string(which);
                INFO("variant ", label, " d=", d);
                CHECK(report.pass);
                CHECK(report.max_abs_diff <= 1e-10);
                CHECK_FALSE(report.first_mismatch.has_value());
            }
        }
    }
}

TEST_CASE("reduction at the equality configuration") {
    // a = 4 sqrt(2) - 5 and r = 1/3 put the fifth variant exactly on the bound.
    const double a_star = 4.0 * std::sqrt(2.0) - 5.0;
    LabParams prm; // k = m = 1
    const auto report =
        reduction_check(MultiLhs::K, prm, 2, Norm::Euclid, {a_star}, {1.0 / 3.0});
    CHECK(report.pass);
    CHECK(closed_E_phi(a_star, 1, 1, 1.0 / 3.0) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("argument validation") {
    const auto T = support_functional(Norm::Sup, {cplx(1.0, 0.0), cplx(0.0, 0.0)});
    const VectorSchwarzMap mu{1, T};
    CHECK_THROWS_AS(mu.eval({cplx(1.0, 0.0), cplx(0.0, 0.0)}), std::domain_error);
    CHECK_THROWS_AS(T(Vec{cplx(0.1, 0.0)}), std::domain_error);
    LabParams prm;
    CHECK_THROWS_AS(reduction_check(MultiLhs::G, prm, 4, Norm::Sup, {0.0}, {0.5}),
                    std::domain_error);
}
