#include "sl2p/lfunction.hpp"

#include <doctest.h>

#include <cmath>

using namespace sl2p;

TEST_CASE("complex Gamma") {
    CHECK(std::abs(complex_gamma(cplx(5, 0)) - cplx(24, 0)) < 1e-10);
    CHECK(std::abs(complex_gamma(cplx(0.5, 0)) - cplx(std::sqrt(M_PI), 0)) < 1e-12);
    cplx z(0.3, 1.7);
    CHECK(std::abs(complex_gamma(z + 1.0) - z * complex_gamma(z)) < 1e-12 * std::abs(complex_gamma(z + 1.0)));
    CHECK_THROWS_AS(complex_gamma(cplx(-2, 0)), pole_error);
}

TEST_CASE("archimedean factor") {
    CHECK(std::abs(gamma_factor(1, 1, cplx(1, 0)) - cplx(8 / std::pow(2 * M_PI, 4), 0)) < 1e-14);
    auto parts = gamma_factor(3, 5, cplx(2.5, 0.25));
    auto split = gamma_factor_parts(3, 5, cplx(2.5, 0.25));
    CHECK(std::abs(parts - split[0] * split[1] * split[2]) < 1e-12 * std::abs(parts));
}

TEST_CASE("Euler polynomial") {
    EulerSixData d{5, Rational(2), Rational(-1), 1, 1};
    auto c = euler_polynomial(d);
    CHECK(c[0] == 1);
    CHECK(c[6] != 0);
    Rational R = rpow(Rational(5), 2 * d.k - 1 + 2 * d.ell);
    for (int j = 0; j <= 3; ++j) CHECK(c[6 - j] == rpow(R, 3 - j) * c[j]);
    auto roots = euler_inverse_roots(d);
    REQUIRE(roots.size() == 6);
    const double R0 = std::pow(5.0, d.k - 0.5 + d.ell);
    for (cplx a : roots) CHECK(std::abs(std::abs(a) / R0 - 1.0) < 1e-9);
    // zero Hecke eigenvalues: A_p = diag(i, -i) scaled
    EulerSixData z{7, Rational(0), Rational(0), 1, 1};
    auto cz = euler_polynomial(z);
    for (int j = 1; j <= 5; j += 2) CHECK(cz[j] == 0);
}

TEST_CASE("Euler factor at a pole") {
    EulerSixData d{3, Rational(0), Rational(0), 1, 1};
    auto roots = euler_inverse_roots(d);
    // X = p^{-s-ell} equal to 1/root with root = p^{k - 1/2 + ell} e^{i theta}
    CHECK(std::abs(euler_factor(d, cplx(2, 0))) > 0);
    CHECK_THROWS(euler_polynomial(EulerSixData{9, 1, 1, 1, 1}));
    (void)roots;
}

TEST_CASE("sign criterion") {
    NonvanishingResult r = nonvanishing_criterion(1, 3, {{3, 1}}, 3, 1);
    CHECK(r.perPlace.count("inf"));
    CHECK(r.perPlace.at("inf").match);
    CHECK(r.perPlace.count("3"));
    CHECK(r.overall);
    CHECK_FALSE(nonvanishing_criterion(1, 3, {{3, -1}}, 3, 1).overall);
    // at p | N_g the required sign is w_p itself
    CHECK(nonvanishing_criterion(1, 3, {{3, -1}}, 3, 3).overall);
    CHECK_THROWS(nonvanishing_criterion(1, 3, {}, 3, 1));
    CHECK_THROWS(nonvanishing_criterion(3, 1, {{3, 1}}, 3, 1));
}

TEST_CASE("central value") {
    CentralValueInput in;
    in.Nf = 3;
    in.Ng = 1;
    in.k = 1;
    in.ell = 3;
    in.petersonF = 2;
    in.petersonH = 3;
    in.petersonG = 5;
    in.pairingSq = 7;
    in.atkinLehner = {{3, 1}};
    CentralValueConstants c = central_value_constants(in);
    CHECK(c.powerOfTwo == 7);
    CHECK(c.C0 == 3);
    CHECK(c.CinftyFG == Rational(4, 3));
    CentralValue v = central_value(in);
    CHECK(v.lambdaValue > 0);
    // linear in the pairing, inverse square in the norm of g
    CentralValueInput twice = in;
    twice.pairingSq = 14;
    CHECK(std::abs(central_value(twice).lambdaValue / v.lambdaValue - 2) < 1e-15);
    twice = in;
    twice.petersonG = 10;
    CHECK(std::abs(central_value(twice).lambdaValue / v.lambdaValue - 0.25) < 1e-15);
    in.pairingSq = 0;
    CHECK(central_value(in).lambdaValue == 0);
    in.atkinLehner = {{3, -1}};
    CHECK_THROWS(central_value(in));
    in.atkinLehner.clear();
    CHECK_THROWS(central_value(in));
}

TEST_CASE("local witness") {
    LocalConfig cfg;
    cfg.p = 3;
    cfg.kase = LocalCase::dividesMg;
    cfg.wp = 1;
    Certificate a = subconvexity_certificate_exact(cfg, Gauss(0, 1));
    REQUIRE(a.alphaExact);
    CHECK(*a.alphaExact == Rational(8, 9));
    CHECK(a.passes);
    Certificate b = subconvexity_certificate_exact(cfg, Gauss(1));
    CHECK(*b.alphaExact == Rational(1, 18));
    Certificate n = subconvexity_certificate(cfg, cplx(-1, 0));
    CHECK(std::abs(n.alphaSharp - 8.0 / 9) < 1e-12);
    cfg.wp = -1;
    Certificate z = subconvexity_certificate(cfg);
    CHECK(z.alphaSharp == 0);
    CHECK_FALSE(z.passes);
    cfg.kase = LocalCase::unramified;
    CHECK_THROWS(subconvexity_certificate(cfg));
}
