#pragma once

// Big rationals and the local symbols (Hilbert, Kronecker, Weil index).

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sl2p {

using Integer = mpz_class;
using Rational = mpq_class;

// place 0 stands for the real place
constexpr long kInfinity = 0;

struct domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

struct unsupported_place : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

Rational make_rational(const Integer& num, const Integer& den = 1);
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

bool is_integer(const Rational& q);
bool is_prime(long n);

int val_p(const Integer& n, long p);
int val_p(const Rational& q, long p);
// q / p^val_p(q)
Rational unit_part(const Rational& q, long p);
Rational rpow(const Rational& base, long e);
Integer ipow(long base, unsigned long e);

// prime -> exponent, for |n| > 0; trial division
std::map<long, int> factor(Integer n);
bool is_squarefree(const Integer& n);
std::vector<Integer> divisors(const Integer& n);
int moebius(const Integer& n);

int legendre(const Integer& a, long p);
// Legendre symbol of a p-adic unit given as a rational
int legendre_unit(const Rational& u, long p);

int hilbert_symbol(const Rational& a, const Rational& b, long place);
int kronecker_symbol(const Integer& D, const Integer& n);

struct Fundamental {
    Integer d;   // -d is the discriminant of Q(sqrt(-xi))
    Rational f;  // xi = d * f^2
};
Fundamental fundamental_decomposition(const Rational& xi);

Integer gamma0_index(const Integer& t);

// number of distinct prime divisors
int omega_count(const Integer& n);

}  // namespace sl2p
