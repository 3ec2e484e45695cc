#include "sl2p/local_periods.hpp"

#include <doctest.h>

#include <cmath>

using namespace sl2p;

TEST_CASE("closed tau coefficients") {
    // alpha_0 is the identity
    CHECK(tau_old_closed(Element::parse("alpha(0)"), 3) == LaurentPoly(ExactScalar(1)));
    // symmetric in n -> -n
    CHECK(tau_old_closed(Element::parse("alpha(2)"), 5) == tau_old_closed(Element::parse("alpha(-2)"), 5));
    CHECK(tau_old_closed(Element::parse("beta(1)"), 3) == tau_old_closed(Element::parse("alpha(0)"), 3));
    CHECK_THROWS_AS(tau_old_closed(Element::parse("alpha(1)"), 2), unsupported_place);
}

TEST_CASE("double coset volumes") {
    CHECK(double_coset_volume(Element::parse("alpha(0)"), 3) == Rational(2, 9));
    CHECK(double_coset_volume(Element::parse("alpha(1)"), 3) == Rational(2));
    CHECK(double_coset_volume(Element::parse("beta(0)"), 3) == Rational(2, 3));
    CHECK(double_coset_volume(Element::parse("beta(1)"), 3) == Rational(2, 3));
}

TEST_CASE("alpha sharp closed forms") {
    LocalConfig mg{3, LocalCase::dividesMg, 1, 1};
    RationalFunction a = alpha_sharp_closed(mg);
    ExactScalar at_minus = a.num.eval_exact(ExactScalar(Gauss(0, 1))) / a.den.eval_exact(ExactScalar(Gauss(0, 1)));
    CHECK(at_minus == ExactScalar(Rational(8, 9)));
    CHECK(alpha_sharp_closed({3, LocalCase::dividesMg, -1, 1}).is_zero());
    RationalFunction ng = alpha_sharp_closed({3, LocalCase::dividesNg, 1, 1});
    CHECK(ng.num == LaurentPoly(ExactScalar(Rational(4, 9))));
    CHECK_THROWS(alpha_sharp_closed({3, LocalCase::unramified, 1, 1}));
}

TEST_CASE("truncated series converges to the closed form") {
    LocalConfig cfg{5, LocalCase::dividesMg, 1, 1};
    LaurentPoly t = alpha_sharp_truncated_exact(cfg, 30);
    RationalFunction c = alpha_sharp_closed(cfg);
    for (double th : {0.3, 1.1, 2.5, 3.0}) {
        cplx X = std::polar(1.0, th / 2);
        CHECK(std::abs(t.eval(X) - c.eval(X)) < 1e-10);
    }
    CHECK_THROWS(alpha_sharp_truncated(cfg, 5, cplx(2, 0)));
    // w_p = -1 needs a discriminant with (D, p)_p = -1, and then the series vanishes
    LocalConfig neg = make_local_config(5, LocalCase::dividesMg, -1);
    CHECK(neg.D == -3);
    CHECK(std::abs(alpha_sharp_truncated(neg, 30, cplx(0, 1))) < 1e-12);
    neg.D = 1;
    CHECK_THROWS(alpha_sharp_truncated_exact(neg, 3));
}

TEST_CASE("L-ratio and I sharp") {
    CHECK(I_sharp_p({3, LocalCase::unramified, 1, 1}) == 1);
    CHECK(local_L_ratio({3, LocalCase::unramified, 1, 1}).conventional);
    CHECK(I_sharp_p({3, LocalCase::dividesNg, 1, 1}) == Rational(1, 3));
    CHECK(I_sharp_p({3, LocalCase::dividesNg, -1, 1}) == Rational(1, 3));
    CHECK(I_sharp_p({3, LocalCase::dividesMg, 1, 1}) == Rational(1, 2));
    CHECK(I_sharp_p({7, LocalCase::dividesMg, 1, 1}) == Rational(1, 4));
    CHECK(I_sharp_p({3, LocalCase::dividesMg, -1, 1}) == 0);
}

TEST_CASE("case names") {
    CHECK(parse_local_case("mg") == LocalCase::dividesMg);
    CHECK(to_string(LocalCase::dividesNg) == "ng");
    CHECK_THROWS(parse_local_case("bogus"));
}
