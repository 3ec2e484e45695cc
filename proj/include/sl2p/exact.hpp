#pragma once

// Exact scalars in Q(i)(sqrt p), Laurent polynomials in the Satake variable X,
// and Laurent polynomials in a formal pi.

#include "sl2p/arith.hpp"

#include <complex>
#include <map>
#include <optional>
#include <string>

namespace sl2p {

using cplx = std::complex<double>;

struct Gauss {
    Rational re, im;

    Gauss() = default;
    Gauss(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}
    Gauss(long r) : re(r), im(0) {}

    bool is_zero() const { return re == 0 && im == 0; }
    Gauss conj() const { return {re, -im}; }
    Rational norm() const { return re * re + im * im; }
    Gauss inverse() const;
    cplx to_complex() const { return {re.get_d(), im.get_d()}; }

    friend Gauss operator+(const Gauss& a, const Gauss& b) { return {a.re + b.re, a.im + b.im}; }
    friend Gauss operator-(const Gauss& a, const Gauss& b) { return {a.re - b.re, a.im - b.im}; }
    friend Gauss operator-(const Gauss& a) { return {-a.re, -a.im}; }
    friend Gauss operator*(const Gauss& a, const Gauss& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Gauss operator/(const Gauss& a, const Gauss& b) { return a * b.inverse(); }
    friend bool operator==(const Gauss& a, const Gauss& b) { return a.re == b.re && a.im == b.im; }
};

Gauss gauss_i();
// i^k
Gauss gauss_root4(int k);
std::string to_string(const Gauss& g);

// a + b*sqrt(p) with a, b Gaussian rationals. p == 0 means "no prime attached yet";
// such a scalar has b == 0 and combines with any p.
class ExactScalar {
public:
    ExactScalar() = default;
    ExactScalar(long v) : a_(v) {}
    ExactScalar(Rational v) : a_(std::move(v)) {}
    ExactScalar(Gauss v) : a_(std::move(v)) {}
    // g * p^(j/2)
    ExactScalar(const Gauss& g, long p, long halfPower);

    static ExactScalar sqrt_p(long p) { return ExactScalar(Gauss(1), p, 1); }

    long prime() const { return p_; }
    const Gauss& rational_part() const { return a_; }
    const Gauss& sqrt_part() const { return b_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_gauss() const { return b_.is_zero(); }
    bool is_rational() const { return b_.is_zero() && a_.im == 0; }
    Rational to_rational() const;
    Gauss to_gauss() const;
    // single term g * p^(j/2) with j in {0, 1}, when representable
    std::optional<std::pair<Gauss, int>> monomial() const;

    ExactScalar conj() const;
    ExactScalar inverse() const;
    cplx to_complex() const;

    // "a/b + c/d*i * p^(j/2)"; two-term values joined by " ; "
    std::string serialize() const;
    static ExactScalar parse(const std::string& text, long p);
    // compact human form, e.g. "-1/3", "-i*3^(-1/2)"
    std::string pretty() const;

    friend ExactScalar operator+(const ExactScalar& x, const ExactScalar& y);
    friend ExactScalar operator-(const ExactScalar& x, const ExactScalar& y);
    friend ExactScalar operator-(const ExactScalar& x);
    friend ExactScalar operator*(const ExactScalar& x, const ExactScalar& y);
    friend ExactScalar operator/(const ExactScalar& x, const ExactScalar& y);
    friend bool operator==(const ExactScalar& x, const ExactScalar& y);

    ExactScalar& operator+=(const ExactScalar& y) { return *this = *this + y; }
    ExactScalar& operator*=(const ExactScalar& y) { return *this = *this * y; }

private:
    Gauss a_, b_;
    long p_ = 0;

    static long join(long p, long q);
};

ExactScalar pow(const ExactScalar& x, long e);

// Laurent polynomial in X over ExactScalar; conj is X -> X^{-1} plus coefficient conjugation
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(const ExactScalar& c) { set(0, c); }
    static LaurentPoly monomial(int e, const ExactScalar& c);
    static LaurentPoly X(int e = 1) { return monomial(e, ExactScalar(1)); }

    const std::map<int, ExactScalar>& terms() const { return terms_; }
    ExactScalar coeff(int e) const;
    void set(int e, const ExactScalar& c);
    bool is_zero() const { return terms_.empty(); }
    int min_exp() const;
    int max_exp() const;

    LaurentPoly conj() const;
    cplx eval(cplx x) const;
    ExactScalar eval_exact(const ExactScalar& x) const;
    // exact quotient; throws domain_error on nonzero remainder
    LaurentPoly divide_exact(const LaurentPoly& den) const;

    std::string to_string() const;

    friend LaurentPoly operator+(const LaurentPoly& x, const LaurentPoly& y);
    friend LaurentPoly operator-(const LaurentPoly& x, const LaurentPoly& y);
    friend LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y);
    friend LaurentPoly operator*(const ExactScalar& c, const LaurentPoly& y);
    friend bool operator==(const LaurentPoly& x, const LaurentPoly& y) { return x.terms_ == y.terms_; }
    LaurentPoly& operator+=(const LaurentPoly& y);

private:
    std::map<int, ExactScalar> terms_;
};

// Laurent polynomial in a formal pi with rational coefficients
class PiPoly {
public:
    PiPoly() = default;
    PiPoly(const Rational& c) { set(0, c); }
    PiPoly(long c) { set(0, Rational(c)); }
    static PiPoly pi(int e = 1, const Rational& c = 1);

    const std::map<int, Rational>& terms() const { return terms_; }
    Rational coeff(int e) const;
    void set(int e, const Rational& c);
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    double eval() const;
    std::string to_string() const;

    friend PiPoly operator+(const PiPoly& x, const PiPoly& y);
    friend PiPoly operator-(const PiPoly& x, const PiPoly& y);
    friend PiPoly operator*(const PiPoly& x, const PiPoly& y);
    friend bool operator==(const PiPoly& x, const PiPoly& y) { return x.terms_ == y.terms_; }
    PiPoly& operator+=(const PiPoly& y) { return *this = *this + y; }
    // division by a monomial only
    PiPoly divide_monomial(const PiPoly& m) const;

private:
    std::map<int, Rational> terms_;
};

struct WeilGammaChi {
    ExactScalar gamma;
    ExactScalar chi;
};

// gamma(a, psi_p^d) and chi_{psi_p^d}(a) for the standard character psi_p, odd p
WeilGammaChi weil_gamma_chi(const Rational& a, long p, const Rational& d = 1);

// fractional part {x}_p in [0,1)
Rational padic_fractional_part(const Rational& x, long p);
// psi_p(x) = exp(-2 pi i {x}_p)
cplx psi_p(const Rational& x, long p);

}  // namespace sl2p
