#include "sl2p/exact.hpp"

#include <doctest.h>

using namespace sl2p;

TEST_CASE("rationals parse canonically") {
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(parse_rational("-5") == Rational(-5));
    CHECK(to_string(parse_rational("10/-4")) == "-5/2");
    CHECK(make_rational(4, 6) == Rational(2, 3));
}

TEST_CASE("valuations and unit parts") {
    CHECK(val_p(Rational(18), 3) == 2);
    CHECK(val_p(make_rational(5, 27), 3) == -3);
    CHECK(unit_part(make_rational(5, 27), 3) == Rational(5));
}

TEST_CASE("number theory helpers") {
    CHECK(is_squarefree(Integer(15)));
    CHECK_FALSE(is_squarefree(Integer(18)));
    CHECK(moebius(Integer(30)) == -1);
    CHECK(moebius(Integer(12)) == 0);
    CHECK(divisors(Integer(12)).size() == 6);
    CHECK(gamma0_index(Integer(15)) == 24);
    CHECK(omega_count(Integer(105)) == 3);
}

TEST_CASE("Legendre, Kronecker, Hilbert") {
    CHECK(legendre(Integer(2), 3) == -1);
    CHECK(legendre(Integer(4), 5) == 1);
    CHECK(kronecker_symbol(Integer(-4), Integer(3)) == -1);
    CHECK(kronecker_symbol(Integer(-3), Integer(2)) == -1);
    CHECK(kronecker_symbol(Integer(-7), Integer(2)) == 1);
    CHECK(kronecker_symbol(Integer(5), Integer(11)) == 1);
    // (-3, 3)_3 = 1 and (3, 3)_3 = (3, -1)_3 = -1
    CHECK(hilbert_symbol(Rational(-3), Rational(3), 3) == 1);
    CHECK(hilbert_symbol(Rational(3), Rational(3), 3) == -1);
    CHECK(hilbert_symbol(Rational(-1), Rational(-1), kInfinity) == -1);
    CHECK(hilbert_symbol(Rational(-1), Rational(-1), 2) == -1);
    // product formula
    for (long a : {-7L, -3L, 2L, 5L, 6L})
        for (long b : {-1L, 3L, 10L, -15L}) {
            int prod = hilbert_symbol(Rational(a), Rational(b), kInfinity);
            for (long p : {2L, 3L, 5L, 7L}) prod *= hilbert_symbol(Rational(a), Rational(b), p);
            CHECK(prod == 1);
        }
}

TEST_CASE("fundamental decomposition") {
    auto a = fundamental_decomposition(Rational(12));
    CHECK(a.d == 3);
    CHECK(a.f == 2);
    auto b = fundamental_decomposition(Rational(1));
    CHECK(b.d == 4);
    CHECK(b.f == Rational(1, 2));
    auto c = fundamental_decomposition(Rational(20));
    CHECK(c.d == 20);
    CHECK(c.f == 1);
}

TEST_CASE("exact scalars serialize and parse back") {
    ExactScalar x = ExactScalar(Gauss(make_rational(3, 4), -2), 5, 3) + ExactScalar(Rational(1, 2));
    ExactScalar y = ExactScalar::parse(x.serialize(), 5);
    CHECK(x == y);
    ExactScalar z(Gauss(0, 1), 3, -3);
    CHECK(ExactScalar::parse(z.serialize(), 3) == z);
    CHECK(ExactScalar::sqrt_p(7) * ExactScalar::sqrt_p(7) == ExactScalar(7));
    CHECK((z * z.inverse()) == ExactScalar(1));
}

TEST_CASE("Laurent polynomials divide exactly") {
    LaurentPoly a = LaurentPoly::X(2) - LaurentPoly(ExactScalar(1));
    LaurentPoly b = LaurentPoly::X(1) - LaurentPoly(ExactScalar(1));
    LaurentPoly q = a.divide_exact(b);
    CHECK(q == LaurentPoly::X(1) + LaurentPoly(ExactScalar(1)));
}

TEST_CASE("Weil index squares to the Hilbert symbol twist") {
    // gamma(a) gamma(b) / (gamma(1) gamma(ab)) = (a, b)_p
    for (long p : {3L, 5L, 7L})
        for (long a : {1L, 2L, 3L, 6L})
            for (long b : {1L, 2L, 5L, 10L}) {
                if (a % p == 0 && b % p == 0) continue;
                auto g = [&](long x) { return weil_gamma_chi(Rational(x), p).gamma; };
                ExactScalar lhs = g(a) * g(b) / (g(1) * g(a * b));
                CHECK(lhs == ExactScalar(hilbert_symbol(Rational(a), Rational(b), p)));
            }
}
