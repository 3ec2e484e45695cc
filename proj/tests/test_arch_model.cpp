#include "sl2p/arch_model.hpp"

#include <doctest.h>

#include <cmath>

using namespace sl2p;

TEST_CASE("archimedean constants at (1,3)") {
    ArchPeriod a = arch_period(1, 3);
    CHECK(a.CinftyKL == 8);
    CHECK(a.CinftyFG == Rational(4, 3));
    CHECK(a.ISharp == PiPoly::pi(2, Rational(1, 2)));
    CHECK(a.gammaRatio == PiPoly(1));
    CHECK(a.alphaSharp == PiPoly::pi(2, Rational(1, 2)));
}

TEST_CASE("diagonal weights") {
    for (int k : {1, 3, 5, 7}) {
        ArchPeriod a = arch_period(k, k);
        CHECK(a.ISharp == PiPoly(1));
        CHECK(a.CinftyFG == 1);
        CHECK(a.CinftyKL == 1);
    }
    CHECK_THROWS(arch_period(3, 1));
    CHECK_THROWS(arch_period(2, 4));
}

TEST_CASE("Lie action") {
    for (int k : {1, 3, 5})
        for (int m = 0; m <= 4; ++m) CHECK(lie_action(LieOp::Xminus, v_hol(k, m, 3)).is_zero());
    JacobiVector v = basis_vector(1, 1, 0, 0);
    CHECK(lie_action(LieOp::Yminus, v).is_zero());
    CHECK(lie_action(LieOp::Yplus, v).coeffs.count({1, 0}) == 1);
}

TEST_CASE("norms") {
    CHECK(hol_norm(1, 2) == Rational(16, 5));
    CHECK(basis_norm(1, 1, 1, 0, 2) == PiPoly::pi(-2, Rational(3, 16)));
    CHECK(basis_norm(1, 1, 1, 1, 0) == PiPoly::pi(-1, Rational(1, 4)));
    for (int m = 0; m <= 3; ++m) {
        CHECK(hol_norm_expanded(3, m, 5) == PiPoly(hol_norm(3, m)));
        for (int s = 0; s <= 2 * m; s += 2) CHECK(basis_norm_closed(3, m, 5, s) == basis_norm(3, m, 5, 2 * m - s, s));
    }
}

TEST_CASE("cosh quadrature") {
    for (int ell : {1, 3, 5, 7}) CHECK(std::abs(cosh_quadrature_oracle(ell) - 1.0 / ell) < 1e-10);
}

TEST_CASE("Gamma ratio identity") {
    for (int k : {1, 3, 5})
        for (int ell = k; ell <= k + 6; ell += 2) {
            ArchPeriod a = arch_period(k, ell);
            CHECK(a.ISharp == a.gammaRatio * a.alphaSharp);
            CHECK(a.gammaRatio == gamma_ratio_unsimplified(k, ell));
        }
}
