#include <catch2/catch_amalgamated.hpp>

#include <complex>

#include <moduli/periods.hpp>

#include "test_support.hpp"

using namespace moduli;
using Cplx = std::complex<double>;

TEST_CASE("agm basics") {
    CHECK(agm(1.0, 1.0) == 1.0);
    testsupport::SplitMix rng(401);
    for (int it = 0; it < 50; ++it) {
        double a = rng.uniform(0.05, 4.0), b = rng.uniform(0.05, 4.0);
        CHECK(std::abs(agm(a, b) - agm(b, a)) <= 1e-14 * agm(a, b));
    }
    CHECK_THROWS_AS(agm(-1.0, 2.0), NonPositiveInput);
    CHECK_THROWS_AS(agm(1.0, 0.0), NonPositiveInput);
}

TEST_CASE("agm matches the complete elliptic integral") {
    // M(1, k') = pi / (2 K(k)); the right side is quadrature only
    for (double kp : {0.5, 0.25, 0.8, 0.1}) {
        double k = std::sqrt(1.0 - kp * kp);
        double lhs = agm(1.0, kp);
        double rhs = M_PI / (2.0 * testsupport::elliptic_k_quadrature(k));
        CHECK(std::abs(lhs - rhs) <= 1e-11 * lhs);
    }
}

TEST_CASE("legendre periods against the quadrature oracle") {
    for (double lambda : {0.1, 0.25, 0.5, 0.75, 0.9}) {
        PeriodResult pr = legendre_periods(LegendreParameter(lambda));
        REQUIRE(pr.guaranteed);
        double i1 = testsupport::legendre_real_period_quadrature(lambda);
        double i2 = testsupport::legendre_imag_period_quadrature(lambda);
        CHECK(std::abs(pr.periods.w1 - Cplx{i1, 0.0}) <= 1e-9);
        CHECK(std::abs(pr.periods.w2 - Cplx{0.0, i2}) <= 1e-9);
    }
}

TEST_CASE("period pair is positively framed on (0,1)") {
    testsupport::SplitMix rng(402);
    for (int it = 0; it < 50; ++it) {
        double lambda = rng.uniform(0.01, 0.99);
        PeriodResult pr = legendre_periods(LegendreParameter(lambda));
        CHECK(pr.guaranteed);
        CHECK((pr.periods.w2 / pr.periods.w1).imag() > 0.0);
    }
}

TEST_CASE("tau_from_lambda") {
    // lambda = 1/2: the two AGM calls coincide, tau = i exactly
    CHECK(std::abs(tau_from_lambda(LegendreParameter(0.5)).value() - Cplx{0, 1}) <= 1e-15);

    // lambda = 0.1: purely imaginary with Im > 1
    HalfPlanePoint t = tau_from_lambda(LegendreParameter(0.1));
    CHECK(std::abs(t.re()) <= 1e-12);
    CHECK(t.im() > 1.0);

    // lambda <-> 1 - lambda swaps the AGM calls: tau -> -1/tau
    for (double lambda : {0.1, 0.3, 0.42}) {
        Cplx a = tau_from_lambda(LegendreParameter(lambda)).value();
        Cplx b = tau_from_lambda(LegendreParameter(1.0 - lambda)).value();
        CHECK(std::abs(b - (-1.0 / a)) <= 1e-12 * std::abs(b));
    }
}

TEST_CASE("j_from_lambda") {
    CHECK(std::abs(j_from_lambda(LegendreParameter(0.5)) - Cplx{1728, 0}) <= 1e-6);
    CHECK(std::abs(j_from_lambda(LegendreParameter(0.3)) - j_from_lambda(LegendreParameter(0.7))) <=
          1e-6);
    // best-effort mode: lambda = 5 = 1/0.2 lies in the orbit of 0.2
    LegendreParameter l5(Cplx{5, 0});
    CHECK_FALSE(l5.in_guaranteed_domain());
    CHECK_FALSE(legendre_periods(l5).guaranteed);
    CHECK(std::abs(j_from_lambda(LegendreParameter(0.2)) - j_from_lambda(l5)) <= 1e-4);
}

TEST_CASE("j is constant on the six-fold orbit") {
    const double lambda = 0.3;
    Cplx base = j_from_lambda(LegendreParameter(lambda));
    // the (0,1)-reachable representatives at the guaranteed tolerance
    for (double mu : {0.3, 0.7}) {
        CHECK(std::abs(j_from_lambda(LegendreParameter(mu)) - base) <= 1e-6);
    }
    // remaining orbit members through the best-effort branch
    for (Cplx mu : {Cplx{10.0 / 3.0, 0}, Cplx{10.0 / 7.0, 0}, Cplx{-3.0 / 7.0, 0}, Cplx{-7.0 / 3.0, 0}}) {
        CHECK(std::abs(j_from_lambda(LegendreParameter(mu)) - base) <= 1e-4);
    }
}

TEST_CASE("isomorphism coherence along the orbit") {
    for (double lambda : {0.2, 0.35, 0.44}) {
        HalfPlanePoint t1 = tau_from_lambda(LegendreParameter(lambda));
        HalfPlanePoint t2 = tau_from_lambda(LegendreParameter(1.0 - lambda));
        auto g = elliptic_isomorphic(t1, t2);
        REQUIRE(g.has_value());
        CHECK(std::abs(g->apply(t1.value()) - t2.value()) <= 1e-9);
    }
}

TEST_CASE("legendre parameter validation") {
    CHECK_THROWS_AS(LegendreParameter(0.0), BadModuliPoint);
    CHECK_THROWS_AS(LegendreParameter(1.0), BadModuliPoint);
    CHECK_THROWS_AS(LegendreParameter(Cplx{1, 0}), BadModuliPoint);
    CHECK(LegendreParameter(Cplx{0.3, 0.1}).in_guaranteed_domain() == false);
}
