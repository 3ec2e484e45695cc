#pragma once

// Brute-force local matrix coefficients: explicit vectors evaluated through an
// Iwasawa decomposition, averaged over residue classes mod p^M.

#include "sl2p/exact.hpp"

#include <variant>
#include <vector>

namespace sl2p {

struct Mat2 {
    Rational a = 1, b = 0, c = 0, d = 1;

    Rational det() const { return a * d - b * c; }
    Mat2 inverse() const;
    friend Mat2 operator*(const Mat2& x, const Mat2& y);
    friend bool operator==(const Mat2& x, const Mat2& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }
    bool is_integral(long p) const;
    std::string to_string() const;

    static Mat2 identity() { return {}; }
    static Mat2 u(const Rational& x) { return {1, x, 0, 1}; }
    static Mat2 t(const Rational& a) { return {a, 0, 0, Rational(1) / a}; }
    static Mat2 s() { return {0, 1, -1, 0}; }
    static Mat2 w() { return {0, 1, 1, 0}; }
    static Mat2 r(const Rational& b) { return {1, 0, b, 1}; }
    static Mat2 varpi(long p) { return {Rational(1, p), 0, 0, 1}; }
    static Mat2 alpha(int n, long p);
    static Mat2 beta(int m, long p);
};

struct MetaplecticElement {
    Mat2 g;
    int eps = 1;
    friend bool operator==(const MetaplecticElement& x, const MetaplecticElement& y) {
        return x.g == y.g && x.eps == y.eps;
    }
};

// x(g) = c if c != 0, else d
Rational x_of(const Mat2& g);
int metaplectic_cocycle(const Mat2& g1, const Mat2& g2, long p);
int splitting_sp(const Mat2& g, long p);
MetaplecticElement metaplectic_multiply(const MetaplecticElement& e1, const MetaplecticElement& e2, long p);

struct Iwasawa {
    int valA = 0, valD = 0;
    Rational diagA, diagD;  // diagonal of the Borel factor
    Mat2 borel;             // upper triangular
    Mat2 k;                 // in SL2(Z_p)
    bool inK0 = false;      // y in B(Q_p) K_0(p)
};

// y = borel * k with k in SL2(Z_p)
Iwasawa iwasawa_decompose(const Mat2& y, long p);

enum class TauVariant { unramified, newvector_Ng, oldvector_Mg };

// value in X = chi(p); for newvector_Ng pass chiSign = chi(p) in {+1,-1}
LaurentPoly eval_tau_vector(TauVariant variant, const Mat2& y, long p, int chiSign = 1);

struct HConfig {
    long p = 3;
    Rational D = 1;      // fundamental discriminant, p-unit
    Rational delta = 2;  // nonresidue unit
};

ExactScalar eval_h_vector(const MetaplecticElement& e, const HConfig& cfg);

enum class Factor { tau, pi_tilde, omega };

struct Element {
    enum Kind { alpha, beta } kind = alpha;
    int index = 0;
    std::string to_string() const;
    static Element parse(const std::string& text);
    Mat2 matrix(long p) const;
};

// metaplectic lift used for matrix coefficients: [alpha_n, 1], [s,1][alpha_m,1]
MetaplecticElement metaplectic_lift(const Element& e, long p);

struct OracleConfig {
    long p = 3;
    int M = 5;
    TauVariant variant = TauVariant::oldvector_Mg;
    HConfig h;
    unsigned threads = 1;
    double costGuard = 1e8;
};

struct cost_guard_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// projective line over Z/p^M as bottom rows (c, d)
std::vector<std::pair<Integer, Integer>> projective_line(long p, int M);

LaurentPoly tau_oracle(const Element& e, const OracleConfig& cfg);
// ||breve g_p||^2 by the same enumeration
LaurentPoly tau_norm_oracle(const OracleConfig& cfg);
// literal average over all of GL2(Z/p^M); small M only
LaurentPoly tau_oracle_literal(const Element& e, const OracleConfig& cfg);

ExactScalar pi_tilde_oracle(const Element& e, const OracleConfig& cfg);
ExactScalar h_norm_oracle(const OracleConfig& cfg);
ExactScalar pi_tilde_oracle_literal(const Element& e, const OracleConfig& cfg);

cplx omega_oracle(const Element& e, const OracleConfig& cfg);

}  // namespace sl2p
