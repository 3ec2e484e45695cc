#pragma once

// Closed-form local quantities at a finite prime: matrix coefficients of the
// three test vectors, double coset volumes, alpha^sharp, L-factor ratios, I^sharp.

#include "sl2p/padic_oracle.hpp"

namespace sl2p {

enum class LocalCase { unramified, dividesNg, dividesMg };

LocalCase parse_local_case(const std::string& text);
std::string to_string(LocalCase c);

struct LocalConfig {
    long p = 3;
    LocalCase kase = LocalCase::dividesMg;
    int wp = 1;
    // fundamental discriminant D with (D, p)_p = w_p; only the pi_tilde factor reads it
    Rational D = 1;
};

// smallest fundamental discriminant D prime to p with (D, p)_p = wp
Integer local_discriminant(long p, int wp);
// config with D filled in from wp
LocalConfig make_local_config(long p, LocalCase kase, int wp);

// quotient of two Laurent polynomials in X (xi = X^2)
struct RationalFunction {
    LaurentPoly num = LaurentPoly(ExactScalar(1));
    LaurentPoly den = LaurentPoly(ExactScalar(1));

    cplx eval(cplx X) const { return num.eval(X) / den.eval(X); }
    bool is_zero() const { return num.is_zero(); }
    std::string to_string() const;
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return {a.num * b.num, a.den * b.den};
    }
    // cross-multiplied equality
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num * b.den == b.num * a.den;
    }
};

// xi = X^2 as a Laurent polynomial
LaurentPoly xi_poly();

LaurentPoly tau_old_closed(const Element& e, long p);
ExactScalar pi_tilde_closed(const Element& e, long p, const Rational& D);
ExactScalar omega_closed(const Element& e, long p);

Rational double_coset_volume(const Element& e, long p);

// conj(Phi_h) * Phi_g * Phi_phi
LaurentPoly omega_product(const Element& e, const LocalConfig& cfg);

RationalFunction alpha_sharp_closed(const LocalConfig& cfg);
// sum over |n|, |m| <= N of Omega * vol, exact
LaurentPoly alpha_sharp_truncated_exact(const LocalConfig& cfg, int N);
// same sum evaluated at a unit-modulus xi (X = sqrt(xi))
cplx alpha_sharp_truncated(const LocalConfig& cfg, int N, cplx xi);

struct LRatio {
    RationalFunction value;
    bool conventional = false;  // unramified: 1 by convention
};
LRatio local_L_ratio(const LocalConfig& cfg);

// L-ratio times alpha^sharp, reduced to a constant
Rational I_sharp_p(const LocalConfig& cfg);

}  // namespace sl2p
