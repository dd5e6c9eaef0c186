#include "bohr/radius.hpp"

#include <doctest.h>

#include <cmath>

using namespace bohr;

namespace {

RadiusQuery query(Equation eq, int k = 1, int m = 1, double p = 1.0,
                  double lambda = 1.0, int s = 1, int t = 0, int q = 1,
                  double a = 0.0) {
    RadiusQuery out;
    out.theorem = eq;
    out.k = k;
    out.m = m;
    out.p = p;
    out.lambda = lambda;
    out.s = s;
    out.t = t;
    out.q = q;
    out.a = a;
    return out;
}

} // namespace

TEST_CASE("defining functions at r = 0") {
    CHECK(psi1(0.0, 2, 3, 1.5) == doctest::Approx(-0.75));
    CHECK(psi2(0.0, 1.0, 2, 1, 1.5, 1, 1) == doctest::Approx(-1.5));
    CHECK(psi3(0.0, 1.0, 1.5, 1, 1) == doctest::Approx(1.5));
    CHECK(psi4(0.0, 1.0, 2.0, 0.5, 1, 1) == doctest::Approx(0.75));
    CHECK(psi5(0.0, 0.5, 2.0, 1, 1) == doctest::Approx(0.25 - 1.0));
}

TEST_CASE("known roots of psi1") {
    CHECK(psi1(0.2, 1, 1, 1.0) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(psi1(1.0 / 3.0, 1, 1, 2.0) == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("known roots of psi2 and psi4") {
    CHECK(psi2(std::sqrt(5.0) - 2.0, 1.0, 1, 0, 1.0, 1, 1)
          == doctest::Approx(0.0).epsilon(1e-13));
    CHECK(psi2(0.5, 1.0, 1, 0, 2.0, 1, 2) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(psi4((3.0 - std::sqrt(5.0)) / 2.0, 1.0, 1.0, 0.0, 1, 1)
          == doctest::Approx(0.0).epsilon(1e-13));
}

TEST_CASE("psi5 special values") {
    CHECK(psi5(0.5, 0.0, 1.0, 1, 1) == doctest::Approx(0.0));
    // degenerate equality as a -> 1
    const double a = 1.0 - 1e-12;
    for (double r : {0.1, 0.5, 0.9})
        CHECK(psi5(r, a, 2.0, 2, 1) == doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("sign-flip identity between psi3 and psi2") {
    for (double r : {0.05, 0.3, 0.55, 0.8}) {
        for (int k : {1, 2, 5}) {
            for (int m : {1, 3}) {
                for (double lambda : {0.5, 2.0}) {
                    CHECK(psi3(r, lambda, 1.5, k, m)
                          == doctest::Approx(-psi2(r, lambda, 1, 0, 1.5, m, k))
                                 .epsilon(1e-15));
                }
            }
        }
    }
}

TEST_CASE("solve reproduces closed-form roots") {
    CHECK(solve(query(Equation::R1, 1, 1, 1.0)).value
          == doctest::Approx(0.2).epsilon(1e-12));
    CHECK(solve(query(Equation::R1, 1, 1, 2.0)).value
          == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(solve(query(Equation::R1, 1, 2, 1.0)).value
          == doctest::Approx((std::sqrt(6.0) - 1.0) / 5.0).epsilon(1e-12));
    CHECK(solve(query(Equation::R1, 1, 2, 2.0)).value
          == doctest::Approx((std::sqrt(13.0) - 1.0) / 6.0).epsilon(1e-12));
    CHECK(solve(query(Equation::AlphaKMP, 2, 1, 1.0)).value
          == doctest::Approx(std::sqrt(2.0) - 1.0).epsilon(1e-12));
    CHECK(solve(query(Equation::AlphaKMP, 2, 1, 2.0)).value
          == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(solve(query(Equation::BetaKMP, 1, 1, 1.0)).value
          == doctest::Approx((3.0 - std::sqrt(5.0)) / 2.0).epsilon(1e-12));
    CHECK(solve(query(Equation::ZetaM, 1, 1)).value
          == doctest::Approx(0.2).epsilon(1e-12));
    CHECK(solve(query(Equation::EtaM, 1, 1)).value
          == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("residual and bracket contract") {
    const RadiusQuery queries[] = {
        query(Equation::R1, 1, 3, 1.0),
        query(Equation::R2, 2, 1, 1.0, 1.0, 2, 1),
        query(Equation::R3, 1, 2, 2.0, 0.5),
        query(Equation::R4, 1, 1, 3.0, 1.0, 1, 0, 1, 0.4),
        query(Equation::AlphaKMP, 5, 20, 1.0),
        query(Equation::BetaKMP, 8, 1, 3.0),
        query(Equation::ZetaM, 1, 7),
        query(Equation::EtaM, 1, 7),
    };
    for (const auto& q : queries) {
        const auto result = solve(q);
        CHECK(result.bracket_hi - result.bracket_lo <= 1e-13);
        CHECK(std::abs(result.residual) <= 1e-10);
        CHECK(result.value > 0.0);
        CHECK(result.value < 1.0);
        // sign change over the bracket (or an exact hit)
        const double flo = defining_function(q, result.bracket_lo);
        const double fhi = defining_function(q, result.bracket_hi);
        CHECK(flo * fhi <= 0.0);
    }
}

TEST_CASE("psi1 roots are symmetric in k and m") {
    for (double p : {1.0, 2.0}) {
        CHECK(solve(query(Equation::R1, 1, 4, p)).value
              == doctest::Approx(solve(query(Equation::R1, 4, 1, p)).value)
                     .epsilon(2e-13));
        CHECK(solve(query(Equation::R1, 2, 3, p)).value
              == doctest::Approx(solve(query(Equation::R1, 3, 2, p)).value)
                     .epsilon(2e-13));
    }
}

TEST_CASE("psi1 is strictly increasing") {
    for (int k : {1, 3}) {
        for (int m : {1, 5}) {
            double prev = psi1(0.001, k, m, 1.0);
            for (double r = 0.05; r < 0.999; r += 0.05) {
                const double cur = psi1(r, k, m, 1.0);
                CHECK(cur > prev);
                prev = cur;
            }
        }
    }
}

TEST_CASE("limit behaviour at m = 60") {
    for (int k : {1, 2}) {
        for (double p : {1.0, 2.0}) {
            const double limit = std::pow(p / (2.0 + p), 1.0 / k);
            CHECK(solve(query(Equation::R1, k, 60, p)).value
                  == doctest::Approx(limit).epsilon(1e-6));
        }
        const double half = std::pow(2.0, -1.0 / k);
        CHECK(solve(query(Equation::BetaKMP, k, 60, 3.0)).value
              == doctest::Approx(half).epsilon(1e-6));
        CHECK(solve(query(Equation::BetaKMP, k, 1, 60.0)).value
              == doctest::Approx(half).epsilon(1e-6));
    }
}

TEST_CASE("R4 and R2 reduce to the limiting equations") {
    // lambda = 1, a = 0: Psi_4 root equals the eta_{k,m,p} root.
    auto q4 = query(Equation::R4, 2, 3, 1.5);
    auto qb = query(Equation::BetaKMP, 2, 3, 1.5);
    CHECK(solve(q4).value == doctest::Approx(solve(qb).value).epsilon(1e-12));
    // lambda = 1, s = 1, t = 0: Psi_2 root equals the zeta_{k,m,p} root.
    auto q2 = query(Equation::R2, 3, 2, 1.5);
    auto qa = query(Equation::AlphaKMP, 3, 2, 1.5);
    CHECK(solve(q2).value == doctest::Approx(solve(qa).value).epsilon(1e-12));
}

TEST_CASE("closed-form radius for theorem five") {
    CHECK(radius_R5(1, 2.0, 1) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(radius_R5(1, 1.0, 1) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(radius_R5(1, 500.0, 1) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(radius_R5(2, 2.0, 3) == doctest::Approx(std::pow(0.5, 1.0 / 6.0)));
}

TEST_CASE("infimum oracle agrees with the closed form") {
    for (double p : {0.5, 1.0, 1.5, 2.0, 3.0, 5.0}) {
        const double expected = std::min(p, 2.0) / (2.0 + std::min(p, 2.0));
        CHECK(infimum_oracle(p, 100000) == doctest::Approx(expected).epsilon(1e-6));
    }
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(solve(query(Equation::R1, 0, 1, 1.0)), std::domain_error);
    CHECK_THROWS_AS(solve(query(Equation::R1, 1, 1, 3.0)), std::domain_error);
    CHECK_THROWS_AS(solve(query(Equation::R2, 1, 1, 1.0, 1.0, 1, 1)),
                    std::domain_error);
    CHECK_THROWS_AS(solve(query(Equation::R4, 1, 1, 1.0, 1.0, 1, 0, 1, 1.0)),
                    std::domain_error);
    CHECK_THROWS_AS(solve(query(Equation::R1, 1, 1, 1.0), 1e-15), std::domain_error);
    CHECK_THROWS_AS(psi1(1.0, 1, 1, 1.0), std::domain_error);
}
