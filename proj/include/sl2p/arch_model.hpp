#pragma once

// Jacobi-group discrete series model D(k+1, N): basis v_{r,s} (s even), the
// Lie algebra action, the holomorphic vector of weight k+1+2m and the
// archimedean period constants. pi is formal throughout.

#include "sl2p/exact.hpp"

#include <map>

namespace sl2p {

struct JacobiVector {
    int k = 1;
    Integer Nf = 1;
    std::map<std::pair<int, int>, PiPoly> coeffs;  // (r, s) -> coefficient

    bool is_zero() const;
    void add(int r, int s, const PiPoly& c);
    std::string to_string() const;
};

enum class LieOp { Xplus, Xminus, Yplus, Yminus };

JacobiVector basis_vector(int k, const Integer& Nf, int r, int s);
JacobiVector lie_action(LieOp op, const JacobiVector& v);

JacobiVector v_hol(int k, int m, const Integer& Nf);

// ||v_{r,s}||^2 with ||v_{2m,0}||^2 = 1, by the two step recursions
PiPoly basis_norm(int k, int m, const Integer& Nf, int r, int s);
// closed product at r = 2m - s
PiPoly basis_norm_closed(int k, int m, const Integer& Nf, int s);

Rational hol_norm(int k, int m);
// sum of c_s^2 ||v_{2m-s,s}||^2 before cancellation
PiPoly hol_norm_expanded(int k, int m, const Integer& Nf);

struct ArchPeriod {
    int k = 1, ell = 1, m = 0;
    PiPoly alphaSharp;
    PiPoly ISharp;
    PiPoly gammaRatio;  // archimedean L-factor ratio
    Rational CinftyKL;
    Rational CinftyFG;
};

ArchPeriod arch_period(int k, int ell);
// L-factor ratio straight from the Gamma_C products, before simplification
PiPoly gamma_ratio_unsimplified(int k, int ell);

// integral of cosh(t)^(-2(ell+1)) sinh(2t) over [0, inf)
double cosh_quadrature_oracle(int ell);

}  // namespace sl2p
