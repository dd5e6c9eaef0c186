#include "bohr/functions.hpp"

#include <doctest.h>

#include <cmath>

using namespace bohr;

namespace {
const double kPi = std::acos(-1.0);
}

TEST_CASE("point evaluation of the extremal families") {
    CHECK(evaluate(MobiusPhi{0.3}, 0.0).real() == doctest::Approx(0.3));
    CHECK(std::abs(evaluate(MobiusPhi{0.5}, 0.5)) == doctest::Approx(0.0));
    CHECK(evaluate(LacunaryFStar{0.5, 2}, 0.5).real()
          == doctest::Approx(2.0 / 7.0).epsilon(1e-14));
    CHECK_THROWS_AS(evaluate(MobiusPhi{0.5}, cplx(1.0, 0.0)), std::domain_error);
}

TEST_CASE("schwarz evaluation") {
    CHECK(evaluate_schwarz(SchwarzFunction::monomial(3), 0.5).real()
          == doctest::Approx(0.125));
    CHECK(std::abs(evaluate_schwarz(SchwarzFunction::monomial(4), 0.0)) == 0.0);
    // z^2 (z - c)/(1 - conj(c) z) with c = 1/2 at z = 1/4.
    const SchwarzFunction w{2, {cplx(0.5, 0.0)}, -1.0};
    CHECK(evaluate_schwarz(w, 0.25).real()
          == doctest::Approx(-1.0 / 56.0).epsilon(1e-14));
    CHECK_THROWS_AS(evaluate_schwarz(SchwarzFunction{2, {cplx(1.2, 0.0)}, 1.0}, 0.1),
                    std::domain_error);
}

TEST_CASE("random members are deterministic and unimodular at degree 0") {
    const auto f1 = random_member(1, 0, 1);
    const auto f2 = random_member(1, 0, 1);
    for (double theta : {0.1, 1.2, 3.0}) {
        const cplx z = std::polar(0.5, theta);
        CHECK(std::abs(evaluate(f1, z) - evaluate(f2, z)) == 0.0);
        CHECK(std::abs(evaluate(f1, z)) == doctest::Approx(0.5).epsilon(1e-14));
    }
}

TEST_CASE("generated members stay inside the unit ball") {
    for (std::uint64_t seed : {3, 11, 19}) {
        for (int degree : {1, 3, 5}) {
            const auto f = random_member(seed, degree, seed % 2);
            for (int i = 0; i < 64; ++i) {
                const cplx z = std::polar(0.97, 2.0 * kPi * i / 64.0);
                CHECK(std::abs(evaluate(f, z)) <= 1.0 + 1e-12);
            }
        }
    }
}

TEST_CASE("schwarz lemma bound on generated schwarz functions") {
    for (std::uint64_t seed : {2, 9}) {
        for (int n : {1, 2, 4}) {
            const auto w = random_schwarz(seed, 2, n);
            for (double r : {0.3, 0.6, 0.9}) {
                for (int i = 0; i < 32; ++i) {
                    const cplx z = std::polar(r, 2.0 * kPi * i / 32.0);
                    CHECK(std::abs(evaluate_schwarz(w, z)) <= ipow(r, n) + 1e-12);
                }
            }
        }
    }
}

TEST_CASE("schwarz-pick composition bound") {
    // |f(omega_m(z))| <= (r^m + a)/(1 + a r^m) on |z| = r.
    for (std::uint64_t seed : {5, 13}) {
        const auto f = random_member(seed, 3, 0);
        const double a = a0_modulus(f);
        for (int m : {1, 2}) {
            const auto w = random_schwarz(seed + 100, 1, m);
            for (double r : {0.4, 0.8}) {
                const double bound = (ipow(r, m) + a) / (1.0 + a * ipow(r, m));
                for (int i = 0; i < 16; ++i) {
                    const cplx z = std::polar(r, 2.0 * kPi * i / 16.0);
                    const cplx u = evaluate_schwarz(w, z);
                    CHECK(std::abs(evaluate(f, u)) <= bound + 1e-10);
                }
            }
        }
    }
}

TEST_CASE("series partial sums agree with point evaluation") {
    for (std::uint64_t seed : {4, 8}) {
        const auto f = random_member(seed, 4, 1);
        const auto s = taylor_coefficients(f);
        for (double r : {0.2, 0.5, 0.8}) {
            const cplx z = std::polar(r, 0.7);
            cplx sum = 0.0;
            cplx zn = 1.0;
            for (const auto& c : s.coefficients()) {
                sum += c * zn;
                zn *= z;
            }
            CHECK(std::abs(sum - evaluate(f, z)) <= s.tail_bound(r) + 1e-12);
        }
    }
}

TEST_CASE("lacunary composition shifts the spectrum") {
    auto base = std::get<BlaschkeProduct>(random_member(6, 2, 0));
    base.argument_power = 3;
    const auto s = taylor_coefficients(DiskFunction{base}, 30);
    for (std::size_t n = 1; n < s.coefficients().size(); ++n)
        if (n % 3 != 0) CHECK(std::abs(s.coefficients()[n]) == 0.0);
    const cplx z(0.4, 0.2);
    cplx inner = z * z * z;
    BlaschkeProduct plain = base;
    plain.argument_power = 1;
    CHECK(std::abs(evaluate(DiskFunction{base}, z)
                   - evaluate(DiskFunction{plain}, inner))
          < 1e-14);
}

TEST_CASE("invalid blaschke zeros are rejected") {
    BlaschkeProduct bad;
    bad.zeros = {cplx(1.0, 0.5)};
    CHECK_THROWS_AS(evaluate(DiskFunction{bad}, 0.1), std::domain_error);
    CHECK_THROWS_AS(taylor_coefficients(DiskFunction{bad}, 8), std::domain_error);
}
