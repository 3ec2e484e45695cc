#include "sl2p/local_periods.hpp"
#include "sl2p/weil_cells.hpp"

#include <doctest.h>

using namespace sl2p;

TEST_CASE("metaplectic lift and Iwasawa decomposition") {
    const long p = 3;
    Iwasawa w = iwasawa_decompose(Mat2::alpha(2, p), p);
    CHECK(w.borel * w.k == Mat2::alpha(2, p));
    CHECK(w.k.is_integral(p));
    Mat2 y{make_rational(1, 9), 2, 27, 4};
    y.d = (1 + y.b * y.c) / y.a;
    Iwasawa v = iwasawa_decompose(y, p);
    CHECK(v.borel * v.k == y);
    // the cocycle is trivial on the diagonal torus in SL2(Z_p)
    CHECK(metaplectic_cocycle(Mat2::t(2), Mat2::t(5), p) == 1);
}

TEST_CASE("element parsing") {
    CHECK(Element::parse("alpha(-1)").index == -1);
    CHECK(Element::parse("beta:2").kind == Element::beta);
    CHECK_THROWS(Element::parse("gamma(1)"));
}

TEST_CASE("tau oracle matches closed form at small resolution") {
    OracleConfig cfg;
    cfg.p = 3;
    cfg.M = 3;
    for (auto s : {"alpha(-1)", "alpha(0)", "alpha(1)", "beta(0)", "beta(1)"}) {
        Element e = Element::parse(s);
        CHECK(tau_oracle(e, cfg) == tau_old_closed(e, 3));
    }
    CHECK(tau_norm_oracle(cfg) == LaurentPoly(ExactScalar(1)));
}

TEST_CASE("projective line reduction agrees with the literal group average") {
    OracleConfig cfg;
    cfg.p = 3;
    cfg.M = 2;
    for (auto s : {"alpha(1)", "beta(0)"}) {
        Element e = Element::parse(s);
        CHECK(tau_oracle(e, cfg) == tau_oracle_literal(e, cfg));
        CHECK(pi_tilde_oracle(e, cfg) == pi_tilde_oracle_literal(e, cfg));
    }
}

TEST_CASE("pi-tilde oracle and norm") {
    OracleConfig cfg;
    cfg.p = 3;
    cfg.M = 3;
    CHECK(h_norm_oracle(cfg) == ExactScalar(3));
    for (auto s : {"alpha(0)", "alpha(1)", "beta(1)"}) {
        Element e = Element::parse(s);
        CHECK(pi_tilde_oracle(e, cfg) == pi_tilde_closed(e, 3, 1));
    }
    cfg.h.delta = 6;
    CHECK_THROWS_AS(pi_tilde_oracle(Element::parse("alpha(0)"), cfg), domain_error);
}

TEST_CASE("omega oracle on the cell grid") {
    OracleConfig cfg;
    cfg.p = 3;
    cfg.M = 3;
    for (auto s : {"alpha(-1)", "alpha(0)", "alpha(1)", "beta(0)", "beta(1)"}) {
        Element e = Element::parse(s);
        CHECK(std::abs(omega_oracle(e, cfg) - omega_closed(e, 3).to_complex()) < 1e-12);
    }
}

TEST_CASE("Weil action on cells") {
    CellFunction f = CellFunction::indicator_Zp(3, 2);
    CHECK(std::abs(f.inner(f) - cplx(1, 0)) < 1e-14);
    // s is unitary and fixes 1_{Z_p} up to the Weil index
    CellFunction g = weil_action({{WeilStep::s}}, f);
    CHECK(std::abs(std::abs(g.inner(f)) - 1.0) < 1e-12);
    CHECK_THROWS_AS(CellFunction(5, 8), resolution_error);
}

TEST_CASE("cost guard") {
    OracleConfig cfg;
    cfg.p = 5;
    cfg.M = 6;
    cfg.costGuard = 1000;
    CHECK_THROWS_AS(tau_oracle(Element::parse("alpha(0)"), cfg), cost_guard_error);
}
