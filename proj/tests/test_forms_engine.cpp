#include "sl2p/acceptance.hpp"
#include "sl2p/ingest.hpp"
#include "sl2p/maass.hpp"

#include <doctest.h>

using namespace sl2p;

namespace {

NewformData level_one(int k) {
    NewformData nf;
    nf.weight = 2 * k;
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) nf.heckeEigen[p] = Rational(p % 7 - 3);
    return nf;
}

}  // namespace

TEST_CASE("Satake data") {
    NewformData nf;
    nf.level = 3;
    nf.weight = 2;
    nf.atkinLehner[3] = 1;
    nf.heckeEigen[5] = 2;
    nf.heckeEigen[7] = 0;
    Satake r = satake(nf, 3);
    CHECK(r.ramified);
    CHECK(r.alpha == ExactScalar(Gauss(-1), 3, -1));
    CHECK(satake(nf, 5).trace == ExactScalar(Gauss(2), 5, -1));
    CHECK(satake(nf, 7).trace.is_zero());
    CHECK_THROWS(satake(nf, 11));
}

TEST_CASE("Psi factors") {
    NewformData nf;
    nf.level = 3;
    nf.weight = 2;
    nf.atkinLehner[3] = 1;
    nf.heckeEigen[5] = 2;
    // e_p = 0 off the level
    CHECK(psi_factor(Rational(7), 5, nf) == ExactScalar(1));
    // e_p = 0 at p | N: 1 + chi w in {0, 2}; chi_{-4}(3) = -1, chi_{-8}(3) = 1
    CHECK(psi_factor(Rational(4), 3, nf) == ExactScalar(0));
    CHECK(psi_factor(Rational(8), 3, nf) == ExactScalar(2));
    // e_p < 0
    CHECK(psi_factor(Rational(1), 2, level_one(1)) == ExactScalar(0));
}

TEST_CASE("half-integral weight coefficients") {
    HalfIntegralData h;
    h.parent = level_one(1);
    h.cFund = {{3, 2}, {4, 5}, {7, -1}, {8, 3}};
    // fundamental xi
    CHECK(halfint_coefficient(h, Rational(3), CoefficientMethod::euler) == 2);
    // xi = d p^2 with p off the level: c(d)(a(p) - chi_{-d}(p) p^{k-1})
    Rational a5 = h.parent.heckeEigen[5];
    int chi = kronecker_symbol(Integer(-3), Integer(5));
    CHECK(halfint_coefficient(h, Rational(75), CoefficientMethod::euler) == 2 * (a5 - chi));
    CHECK(halfint_coefficient(h, Rational(75), CoefficientMethod::convolution) == 2 * (a5 - chi));
    // non-integral and outside the plus space
    CHECK(halfint_coefficient(h, Rational(1, 4), CoefficientMethod::euler) == 0);
    CHECK(halfint_coefficient(h, Rational(1), CoefficientMethod::euler) == 0);
    CHECK(halfint_coefficient(h, Rational(2), CoefficientMethod::convolution) == 0);
    CHECK_THROWS(halfint_coefficient(h, Rational(11), CoefficientMethod::euler));
}

TEST_CASE("Euler product agrees with convolution on synthetic data") {
    HalfIntegralData h = synthetic_halfint(15, 3, {{3, 1}, {5, -1}}, 99, 2000);
    for (long x = 1; x <= 2000; ++x)
        CHECK(halfint_coefficient(h, x, CoefficientMethod::euler) ==
              halfint_coefficient(h, x, CoefficientMethod::convolution));
}

TEST_CASE("Kohnen support") {
    HalfIntegralData h;
    h.parent.level = 3;
    h.parent.weight = 2;
    h.parent.atkinLehner[3] = 1;
    h.D = 1;
    h.cFund = {{4, 1}};  // chi_{-4}(3) = -1 = -w_3
    CHECK_THROWS(h.validate());
    h.cFund = {{4, 0}, {8, 1}};
    CHECK_NOTHROW(h.validate());
    CHECK(halfint_coefficient(h, Rational(4), CoefficientMethod::euler) == 0);
    CHECK(halfint_coefficient(h, Rational(8), CoefficientMethod::euler) == 1);
}

TEST_CASE("Saito-Kurokawa coefficients") {
    HalfIntegralData h;
    h.parent = level_one(1);
    for (long d = 3; d <= 400; ++d)
        if (fundamental_decomposition(Rational(d)).d == d) h.cFund[d] = Rational(d % 5 - 2);
    // gcd 1
    SymHalfIntegralMatrix B{2, 1, 3};
    CHECK(sk_coefficient(h, B) == halfint_coefficient(h, 4 * B.xi(), CoefficientMethod::euler));
    SymHalfIntegralMatrix I{1, 0, 1};
    CHECK(sk_coefficient(h, I) == halfint_coefficient(h, Rational(4), CoefficientMethod::euler));
    // scaled by q = 3
    SymHalfIntegralMatrix B3{6, 3, 9};
    Rational xi0 = B.xi();
    CHECK(sk_coefficient(h, B3) == halfint_coefficient(h, 4 * 9 * xi0, CoefficientMethod::euler) +
                                       3 * halfint_coefficient(h, 4 * xi0, CoefficientMethod::euler));
    CHECK_THROWS(sk_coefficient(h, SymHalfIntegralMatrix{Rational(1, 2), 0, 1}));
}

TEST_CASE("Whittaker values") {
    CHECK(whittaker_value(3, 1, WhittakerElement::one).value == 2);
    CHECK(whittaker_value(3, 3, WhittakerElement::one).value == Rational(4, 3));
    CHECK(whittaker_value(3, Rational(1, 9), WhittakerElement::s).value == 0);
    WhittakerValue r = whittaker_value(5, Rational(7, 5), WhittakerElement::r, 2);
    if (r.value != 0) CHECK(r.psiArg != 0);
    CHECK_THROWS(whittaker_value(5, Rational(7, 5), WhittakerElement::r, 5));
}

TEST_CASE("correction factors") {
    CHECK(correction_factor(3, {1, 1, 3}, 2, CorrectionMode::closed).value == 1);
    CHECK(correction_factor(3, {3, 3, 3}, 2, CorrectionMode::sum).value == 4);
    CHECK(correction_factor(3, {3, 3, 3}, 2, CorrectionMode::closed).value == 4);
    CHECK(correction_factor(3, {3, 3, 9}, 1, CorrectionMode::closed).value == 7);
    Correction v = correction_factor(3, {1, 1, 1}, 2, CorrectionMode::closed);
    CHECK(v.vanishing);
    CHECK(v.value == 0);
    // W_xi(1) vanishes here, so the sum cannot be normalised
    CHECK_THROWS_AS(correction_factor(3, {1, 1, 3}, 2, CorrectionMode::sum), indeterminate_error);
    CHECK(whittaker_B_sum(3, {1, 1, 3}, 2) == 0);
}

TEST_CASE("Maass cofactor") {
    SymHalfIntegralMatrix B{2, 1, 3};
    CHECK(maass_C(B, 1, 0, 2, 1, 0) == PiPoly(1));
    CHECK(maass_oracle(3, 0) == MaassExpr(Gauss(1)));
    // m = 1, k = 1
    MaassExpr expect = maass_det_B() - MaassExpr::var(mv_pi, -1, Gauss(Rational(1, 4))) * maass_trace_BY() *
                                           MaassExpr::var(mv_D, -1) +
                       MaassExpr::var(mv_pi, -2, Gauss(Rational(3, 16))) * MaassExpr::var(mv_D, -1);
    CHECK(maass_oracle(1, 1) == expect);
    MaassExpr closed = maass_det_B() - MaassExpr::var(mv_pi, -1, Gauss(Rational(3, 8))) * maass_trace_BY() *
                                           MaassExpr::var(mv_D, -1) +
                       MaassExpr::var(mv_pi, -2, Gauss(Rational(3, 16))) * MaassExpr::var(mv_D, -1);
    CHECK(const_diff_symbolic(1, 1) == closed);
    // det(Y)^{-1} pi^{-2} coefficient is (k+1)(2k+1)/32
    for (int k : {1, 3, 5}) {
        MaassMono m{};
        m[mv_D] = -1;
        m[mv_pi] = -2;
        CHECK(maass_oracle(k, 1).coeff(m) == Gauss(make_rational((k + 1) * (2 * k + 1), 32)));
    }
    // B = 0 leaves only the pure det(Y) tower
    SymHalfIntegralMatrix Z{0, 0, 0};
    CHECK(maass_C_oracle(Z, 1, 0, 1, 1, 1) == PiPoly::pi(-2, Rational(3, 16)));
    CHECK_THROWS(maass_oracle(1, 4));
    CHECK_THROWS(maass_C(B, 1, 1, 1, 1, 1));
}

TEST_CASE("Maass oracle against finite differences") {
    for (int m : {1, 2}) CHECK(maass_fd_check(1, m, 5, 7).passed);
}

TEST_CASE("breve coefficients") {
    HalfIntegralData h;
    h.parent = level_one(1);
    for (long d = 3; d <= 400; ++d)
        if (fundamental_decomposition(Rational(d)).d == d) h.cFund[d] = Rational(d % 5 - 2);
    SymHalfIntegralMatrix B{2, 1, 3};
    CHECK(breve_coefficient(h, B, 1, 0, 1, 1, 0, 1, 2) == PiPoly(sk_coefficient(h, B)));
    CHECK(breve_coefficient(h, B, 1, 0, 1, 1, 0, 5, 2).is_zero());
    SymHalfIntegralMatrix B3{3, 3, 3};
    PiPoly C = maass_C_oracle(B3, 1, 0, 1, 1, 1);
    CHECK(breve_coefficient(h, B3, 1, 0, 1, 1, 1, 3, 2) == PiPoly(4 * sk_coefficient(h, B3)) * C);
}

TEST_CASE("ingestion") {
    std::string dir = SL2P_DATA_DIR;
    IngestResult r = ingest_newform(dir + "/level1.json");
    CHECK(r.newform.level == 1);
    CHECK(r.newform.atkinLehner.empty());
    IngestResult e = ingest_newform(dir + "/newform_11.json");
    REQUIRE(e.halfIntegral);
    CHECK(e.halfIntegral->c_fund(3) == 1);
    try {
        ingest_newform(dir + "/bad_missing_sign.json");
        FAIL("expected an error");
    } catch (const ingest_error& err) {
        CHECK(std::string(err.what()).find("atkin_lehner incomplete") != std::string::npos);
    }
    try {
        ingest_newform(dir + "/bad_ap.json");
        FAIL("expected an error");
    } catch (const ingest_error& err) {
        CHECK(std::string(err.what()).find("alpha_p = -p^{-1/2} w_p") != std::string::npos);
    }
    try {
        ingest_newform(dir + "/bad_syntax.json");
        FAIL("expected an error");
    } catch (const ingest_error& err) {
        CHECK(std::string(err.what()).find(":3:") != std::string::npos);
    }
    CHECK_THROWS_AS(ingest_newform_text(R"({"level": 9, "weight": 2})"), ingest_error);
    CHECK_THROWS_AS(ingest_newform_text(R"({"level": 3, "weight": 2, "atkin_lehner": {"3": 1}, "colour": 1})"),
                    ingest_error);
}
