#pragma once

// Fourier coefficient layer: Satake data of f, the local factors Psi_p, the
// half-integral weight coefficients c(xi), Saito-Kurokawa coefficients, local
// Whittaker values at p | N_f and the correction factors E_p(B).

#include "sl2p/exact.hpp"

#include <array>
#include <map>
#include <optional>

namespace sl2p {

struct NewformData {
    Integer level = 1;                    // odd squarefree
    int weight = 2;                       // 2k for f
    std::map<long, int> atkinLehner;      // p | level -> w_p
    std::map<long, Rational> heckeEigen;  // p -> a(p)

    int k() const { return weight / 2; }
    // a(n) from a(p) by multiplicativity and the Hecke recursion
    Rational a(const Integer& n) const;
    Rational a_prime_power(long p, int r) const;
    // throws domain_error naming the violated invariant
    void validate() const;
};

struct HalfIntegralData {
    NewformData parent;
    std::map<Integer, Rational> cFund;  // fundamental d -> c(d)
    Integer D = 1;

    Rational c_fund(const Integer& d) const;
    // c(d) must vanish unless kronecker(-d, p) = w_p at every p | N
    void validate() const;
};

// fundamental discriminant of least absolute value (positive first) with chi_D(p) = w_p at every p | N
Integer choose_discriminant(const NewformData& nf);

struct SymHalfIntegralMatrix {
    Rational b1, b2, b3;  // B = (b1, b2/2; b2/2, b3)

    Rational xi() const { return b1 * b3 - b2 * b2 / 4; }
    bool is_half_integral() const;
    bool is_positive_definite() const { return b1 > 0 && xi() > 0; }
    std::array<int, 3> nu(long p) const;  // val_p(0) is treated as +infinity (a large value)
    int nB(long p) const;
    int mB(long p) const;
    std::string to_string() const;
};

struct Satake {
    bool ramified = false;
    ExactScalar trace;  // alpha + alpha^{-1} when unramified
    ExactScalar alpha;  // -p^{-1/2} w_p when ramified
};
Satake satake(const NewformData& nf, long p);

// e_p read as val_p of the conductor part f_xi (fundamental) or of xi itself (literal)
enum class PsiExponent { fundamental, literal };

ExactScalar psi_factor(const Rational& xi, long p, const NewformData& nf,
                       PsiExponent conv = PsiExponent::fundamental);

enum class CoefficientMethod { euler, convolution };
Rational halfint_coefficient(const HalfIntegralData& h, const Rational& xi, CoefficientMethod method);

Rational sk_coefficient(const HalfIntegralData& h, const SymHalfIntegralMatrix& B);

enum class WhittakerElement { one, s, r };
struct WhittakerValue {
    Rational value;     // the value is value * psi_p(psiArg)
    Rational psiArg = 0;
    std::string to_string() const;
};
// b is the p-adic unit of r_b (ignored unless element == r)
WhittakerValue whittaker_value(long p, const Rational& xi, WhittakerElement element, const Rational& b = 1);

struct indeterminate_error : std::domain_error {
    using std::domain_error::domain_error;
};

enum class CorrectionMode { closed, sum };
struct Correction {
    Rational value;
    bool vanishing = false;  // B outside Z_p x Z_p x pZ_p
};
// mu_p W_{B,p}(1): the two finite sums of tabulated Whittaker values, before normalising by W_xi(1)
Rational whittaker_B_sum(long p, const SymHalfIntegralMatrix& B, const Rational& delta);
Correction correction_factor(long p, const SymHalfIntegralMatrix& B, const Rational& delta, CorrectionMode mode);

}  // namespace sl2p
