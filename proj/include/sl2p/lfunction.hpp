#pragma once

// Degree six Euler factors of f x ad(g), the archimedean Gamma factor, the
// global sign criterion, the central value assembler and the local witness
// used for the subconvexity exponent.

#include "sl2p/arch_model.hpp"
#include "sl2p/local_periods.hpp"

#include <array>
#include <map>
#include <vector>

namespace sl2p {

struct EulerSixData {
    long p = 3;
    Rational af;  // a_f(p), weight 2k
    Rational ag;  // a_g(p), weight ell + 1
    int k = 1, ell = 1;
};

// det(1 - A_p x B_p X) with X = p^{-s-ell}: 7 exact coefficients, constant term 1
std::array<Rational, 7> euler_polynomial(const EulerSixData& d);
// inverse roots of the polynomial, numerically
std::vector<cplx> euler_inverse_roots(const EulerSixData& d);
// local L-factor at s
cplx euler_factor(const EulerSixData& d, cplx s);

struct pole_error : std::domain_error {
    using std::domain_error::domain_error;
};

cplx complex_gamma(cplx z);
// Gamma_C(s) Gamma_C(s + ell) Gamma_C(s + ell - 2k + 1)
cplx gamma_factor(int k, int ell, cplx s);
std::array<cplx, 3> gamma_factor_parts(int k, int ell, cplx s);

struct PlaceSign {
    int required = 0;
    int provided = 0;
    bool match = false;
};
struct NonvanishingResult {
    std::map<std::string, PlaceSign> perPlace;  // "inf" or the prime
    bool overall = false;
};
NonvanishingResult nonvanishing_criterion(int k, int ell, const std::map<long, int>& atkinLehner, const Integer& Nf,
                                          const Integer& Ng);

struct CentralValueInput {
    Integer Nf = 1, Ng = 1;
    int k = 1, ell = 1;
    long double petersonF = 1, petersonH = 1, petersonG = 1;
    long double pairingSq = 0;
    std::map<long, int> atkinLehner;
};
struct CentralValueConstants {
    int powerOfTwo = 0;
    Rational C0;
    Rational CinftyFG;
};
struct CentralValue {
    long double lambdaValue = 0;
    CentralValueConstants constants;
};
CentralValueConstants central_value_constants(const CentralValueInput& in);
CentralValue central_value(const CentralValueInput& in);

struct Certificate {
    double alphaSharp = 0;
    double conductorProduct = 0;
    bool passes = false;
    bool vanishing = false;
    std::pair<double, double> bracket;
    std::optional<Rational> alphaExact;  // when the evaluation point is exact
};
// xi on the unit circle; used for p | M_g only
Certificate subconvexity_certificate(const LocalConfig& cfg, cplx xi = cplx(1, 0));
// exact variant: X is a square root of xi with X in Q(i), |X| = 1
Certificate subconvexity_certificate_exact(const LocalConfig& cfg, const Gauss& X);
// the unit-circle bracket [lo, hi] for p | M_g
std::pair<Rational, Rational> mg_bracket(long p);

}  // namespace sl2p
