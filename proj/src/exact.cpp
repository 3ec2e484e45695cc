#include "sl2p/exact.hpp"

#include <cmath>
#include <regex>
#include <sstream>

namespace sl2p {

Gauss Gauss::inverse() const {
    Rational n = norm();
    if (n == 0) throw domain_error("inverse of zero");
    return {re / n, -im / n};
}

Gauss gauss_i() { return {0, 1}; }

Gauss gauss_root4(int k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return {1, 0};
        case 1: return {0, 1};
        case 2: return {-1, 0};
        default: return {0, -1};
    }
}

namespace {

std::string frac(const Rational& q) { return q.get_num().get_str() + "/" + q.get_den().get_str(); }

std::string pretty_gauss(const Gauss& g) {
    auto imag = [](const Rational& v) -> std::string {
        if (v == 1) return "i";
        if (v == -1) return "-i";
        return to_string(v) + "*i";
    };
    if (g.im == 0) return to_string(g.re);
    if (g.re == 0) return imag(g.im);
    std::string s = to_string(g.re);
    if (g.im > 0) return s + " + " + imag(g.im);
    return s + " - " + imag(-g.im);
}

}  // namespace

std::string to_string(const Gauss& g) { return pretty_gauss(g); }

ExactScalar::ExactScalar(const Gauss& g, long p, long halfPower) {
    if (p == 0 && halfPower != 0) throw domain_error("ExactScalar: half power without a prime");
    long q = (halfPower >= 0) ? halfPower / 2 : -((-halfPower + 1) / 2);
    long r = halfPower - 2 * q;
    Gauss c = g * Gauss(rpow(Rational(p == 0 ? 1 : p), q));
    p_ = p;
    if (r == 0) a_ = c;
    else b_ = c;
}

long ExactScalar::join(long p, long q) {
    if (p == 0) return q;
    if (q == 0 || p == q) return p;
    throw domain_error("ExactScalar: mixing different primes");
}

Rational ExactScalar::to_rational() const {
    if (!is_rational()) throw domain_error("ExactScalar is not rational: " + serialize());
    return a_.re;
}

Gauss ExactScalar::to_gauss() const {
    if (!is_gauss()) throw domain_error("ExactScalar is not a Gaussian rational: " + serialize());
    return a_;
}

std::optional<std::pair<Gauss, int>> ExactScalar::monomial() const {
    if (b_.is_zero()) return std::make_pair(a_, 0);
    if (a_.is_zero()) return std::make_pair(b_, 1);
    return std::nullopt;
}

ExactScalar ExactScalar::conj() const {
    ExactScalar r;
    r.a_ = a_.conj();
    r.b_ = b_.conj();
    r.p_ = p_;
    return r;
}

ExactScalar ExactScalar::inverse() const {
    if (is_zero()) throw domain_error("ExactScalar: inverse of zero");
    // (a - b sqrt p) / (a^2 - p b^2)
    Gauss den = a_ * a_ - Gauss(Rational(p_)) * b_ * b_;
    ExactScalar r;
    r.p_ = p_;
    r.a_ = a_ / den;
    r.b_ = -(b_ / den);
    return r;
}

cplx ExactScalar::to_complex() const {
    cplx v = a_.to_complex();
    if (!b_.is_zero()) v += b_.to_complex() * std::sqrt(static_cast<double>(p_));
    return v;
}

ExactScalar operator+(const ExactScalar& x, const ExactScalar& y) {
    ExactScalar r;
    r.p_ = ExactScalar::join(x.p_, y.p_);
    r.a_ = x.a_ + y.a_;
    r.b_ = x.b_ + y.b_;
    return r;
}

ExactScalar operator-(const ExactScalar& x) {
    ExactScalar r = x;
    r.a_ = -x.a_;
    r.b_ = -x.b_;
    return r;
}

ExactScalar operator-(const ExactScalar& x, const ExactScalar& y) { return x + (-y); }

ExactScalar operator*(const ExactScalar& x, const ExactScalar& y) {
    ExactScalar r;
    r.p_ = ExactScalar::join(x.p_, y.p_);
    r.a_ = x.a_ * y.a_;
    if (!x.b_.is_zero() && !y.b_.is_zero()) r.a_ = r.a_ + Gauss(Rational(r.p_)) * x.b_ * y.b_;
    r.b_ = x.a_ * y.b_ + x.b_ * y.a_;
    return r;
}

ExactScalar operator/(const ExactScalar& x, const ExactScalar& y) { return x * y.inverse(); }

bool operator==(const ExactScalar& x, const ExactScalar& y) {
    if (!(x.a_ == y.a_) || !(x.b_ == y.b_)) return false;
    if (x.b_.is_zero()) return true;
    return x.p_ == y.p_;
}

ExactScalar pow(const ExactScalar& x, long e) {
    if (e < 0) return pow(x.inverse(), -e);
    ExactScalar r(1), b = x;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

std::string ExactScalar::serialize() const {
    auto term = [](const Gauss& g, int j) {
        return frac(g.re) + " + " + frac(g.im) + "*i * p^(" + std::to_string(j) + "/2)";
    };
    if (auto m = monomial()) return term(m->first, m->second);
    return term(a_, 0) + " ; " + term(b_, 1);
}

ExactScalar ExactScalar::parse(const std::string& text, long p) {
    static const std::regex term_re(
        R"(\s*(-?\d+(?:/\d+)?)\s*\+\s*(-?\d+(?:/\d+)?)\*i\s*\*\s*p\^\((-?\d+)/2\)\s*)");
    ExactScalar out;
    std::stringstream ss(text);
    std::string part;
    bool any = false;
    while (std::getline(ss, part, ';')) {
        std::smatch m;
        if (!std::regex_match(part, m, term_re)) throw std::invalid_argument("bad exact scalar: " + text);
        Gauss g(parse_rational(m[1].str()), parse_rational(m[2].str()));
        long j = std::stol(m[3].str());
        out = out + ExactScalar(g, j == 0 ? 0 : p, j);
        any = true;
    }
    if (!any) throw std::invalid_argument("bad exact scalar: " + text);
    if (p != 0 && out.p_ == 0) out.p_ = p;
    return out;
}

std::string ExactScalar::pretty() const {
    auto sqrt_term = [this](const Gauss& g) {
        // pull the p-adic valuation of g into the power of p
        long q = 0;
        bool first = true;
        for (const Rational* v : {&g.re, &g.im}) {
            if (*v == 0) continue;
            long vv = val_p(*v, p_);
            q = first ? vv : std::min(q, vv);
            first = false;
        }
        Gauss h = g * Gauss(rpow(Rational(p_), -q));
        long e = 1 + 2 * q;
        std::string pw = std::to_string(p_) + "^(" + std::to_string(e) + "/2)";
        if (h.im == 0 && h.re == 1) return pw;
        if (h.im == 0 && h.re == -1) return "-" + pw;
        if (h.re == 0 && h.im == 1) return "i*" + pw;
        if (h.re == 0 && h.im == -1) return "-i*" + pw;
        return "(" + pretty_gauss(h) + ")*" + pw;
    };
    if (b_.is_zero()) return pretty_gauss(a_);
    if (a_.is_zero()) return sqrt_term(b_);
    return pretty_gauss(a_) + " + " + sqrt_term(b_);
}

LaurentPoly LaurentPoly::monomial(int e, const ExactScalar& c) {
    LaurentPoly r;
    r.set(e, c);
    return r;
}

ExactScalar LaurentPoly::coeff(int e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? ExactScalar(0) : it->second;
}

void LaurentPoly::set(int e, const ExactScalar& c) {
    if (c.is_zero()) terms_.erase(e);
    else terms_[e] = c;
}

int LaurentPoly::min_exp() const {
    if (terms_.empty()) throw domain_error("LaurentPoly: zero polynomial has no exponents");
    return terms_.begin()->first;
}

int LaurentPoly::max_exp() const {
    if (terms_.empty()) throw domain_error("LaurentPoly: zero polynomial has no exponents");
    return terms_.rbegin()->first;
}

LaurentPoly LaurentPoly::conj() const {
    LaurentPoly r;
    for (auto& [e, c] : terms_) r.set(-e, c.conj());
    return r;
}

cplx LaurentPoly::eval(cplx x) const {
    cplx s = 0;
    for (auto& [e, c] : terms_) s += c.to_complex() * std::pow(x, e);
    return s;
}

ExactScalar LaurentPoly::eval_exact(const ExactScalar& x) const {
    ExactScalar s(0);
    for (auto& [e, c] : terms_) s += c * pow(x, e);
    return s;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& y) {
    for (auto& [e, c] : y.terms_) set(e, coeff(e) + c);
    return *this;
}

LaurentPoly operator+(const LaurentPoly& x, const LaurentPoly& y) {
    LaurentPoly r = x;
    r += y;
    return r;
}

LaurentPoly operator-(const LaurentPoly& x, const LaurentPoly& y) {
    LaurentPoly r = x;
    for (auto& [e, c] : y.terms_) r.set(e, r.coeff(e) - c);
    return r;
}

LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y) {
    LaurentPoly r;
    for (auto& [e1, c1] : x.terms_)
        for (auto& [e2, c2] : y.terms_) r.set(e1 + e2, r.coeff(e1 + e2) + c1 * c2);
    return r;
}

LaurentPoly operator*(const ExactScalar& c, const LaurentPoly& y) {
    LaurentPoly r;
    for (auto& [e, v] : y.terms_) r.set(e, c * v);
    return r;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& den) const {
    if (den.is_zero()) throw domain_error("LaurentPoly: division by zero");
    LaurentPoly q, rem = *this;
    if (rem.is_zero()) return q;
    const int dlo = den.min_exp(), dhi = den.max_exp();
    const ExactScalar lead = den.coeff(dhi);
    const int floor_exp = min_exp() - dlo;
    while (!rem.is_zero()) {
        int e = rem.max_exp() - dhi;
        if (e < floor_exp) throw domain_error("LaurentPoly: inexact division");
        ExactScalar c = rem.coeff(rem.max_exp()) / lead;
        q.set(e, c);
        rem = rem - LaurentPoly::monomial(e, c) * den;
    }
    return q;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "{}";
    std::string s = "{";
    bool first = true;
    for (auto& [e, c] : terms_) {
        if (!first) s += ", ";
        s += std::to_string(e) + ": " + c.serialize();
        first = false;
    }
    return s + "}";
}

PiPoly PiPoly::pi(int e, const Rational& c) {
    PiPoly r;
    r.set(e, c);
    return r;
}

Rational PiPoly::coeff(int e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void PiPoly::set(int e, const Rational& c) {
    if (c == 0) terms_.erase(e);
    else terms_[e] = c;
}

double PiPoly::eval() const {
    double s = 0;
    for (auto& [e, c] : terms_) s += c.get_d() * std::pow(M_PI, e);
    return s;
}

std::string PiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        auto [e, c] = *it;
        std::string cs = sl2p::to_string(c);
        if (!first) {
            if (c < 0) {
                s += " - ";
                cs = sl2p::to_string(Rational(-c));
            } else {
                s += " + ";
            }
        }
        if (e == 0) s += cs;
        else {
            std::string pw = (e == 1) ? "pi" : "pi^" + std::to_string(e);
            if (cs == "1") s += pw;
            else if (cs == "-1") s += "-" + pw;
            else s += cs + "*" + pw;
        }
        first = false;
    }
    return s;
}

PiPoly operator+(const PiPoly& x, const PiPoly& y) {
    PiPoly r = x;
    for (auto& [e, c] : y.terms_) r.set(e, r.coeff(e) + c);
    return r;
}

PiPoly operator-(const PiPoly& x, const PiPoly& y) {
    PiPoly r = x;
    for (auto& [e, c] : y.terms_) r.set(e, r.coeff(e) - c);
    return r;
}

PiPoly operator*(const PiPoly& x, const PiPoly& y) {
    PiPoly r;
    for (auto& [e1, c1] : x.terms_)
        for (auto& [e2, c2] : y.terms_) r.set(e1 + e2, r.coeff(e1 + e2) + c1 * c2);
    return r;
}

PiPoly PiPoly::divide_monomial(const PiPoly& m) const {
    if (!m.is_monomial()) throw domain_error("PiPoly: divisor must be a monomial");
    auto [e0, c0] = *m.terms_.begin();
    PiPoly r;
    for (auto& [e, c] : terms_) r.set(e - e0, c / c0);
    return r;
}

namespace {

// gamma(a, psi_p) for the standard character
Gauss gamma_standard(const Rational& a, long p) {
    int alpha = val_p(a, p);
    Rational u = unit_part(a, p);
    Gauss g(1);
    if (alpha & 1) {
        // (p^alpha, u)_p = legendre(u)^alpha
        g = Gauss(legendre_unit(u, p));
        if (p % 4 == 3) g = g * Gauss(0, -1);
    }
    return g;
}

}  // namespace

WeilGammaChi weil_gamma_chi(const Rational& a, long p, const Rational& d) {
    if (p == 2 || !is_prime(p)) throw unsupported_place("weil_gamma_chi: p must be an odd prime");
    if (a == 0 || d == 0) throw domain_error("weil_gamma_chi: zero argument");
    // gamma(a, psi^d) = gamma(psi^{ad}) / gamma(psi^d) = gamma(ad, psi) / gamma(d, psi)
    Gauss g = gamma_standard(a * d, p) / gamma_standard(d, p);
    Gauss chi = Gauss(hilbert_symbol(a, Rational(-1), p)) * g;
    return {ExactScalar(g), ExactScalar(chi)};
}

Rational padic_fractional_part(const Rational& x, long p) {
    if (x == 0) return 0;
    int v = val_p(x, p);
    if (v >= 0) return 0;
    Integer pe = ipow(p, static_cast<unsigned long>(-v));
    Integer m = x.get_den() / pe;  // prime to p
    Integer minv;
    mpz_invert(minv.get_mpz_t(), m.get_mpz_t(), pe.get_mpz_t());
    Integer r = x.get_num() * minv;
    mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), pe.get_mpz_t());
    return make_rational(r, pe);
}

cplx psi_p(const Rational& x, long p) {
    Rational f = padic_fractional_part(x, p);
    double ang = -2.0 * M_PI * f.get_d();
    return {std::cos(ang), std::sin(ang)};
}

}  // namespace sl2p
