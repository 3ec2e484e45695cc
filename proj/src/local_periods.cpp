#include "sl2p/local_periods.hpp"

namespace sl2p {

LocalCase parse_local_case(const std::string& text) {
    if (text == "unramified" || text == "none") return LocalCase::unramified;
    if (text == "ng" || text == "dividesNg") return LocalCase::dividesNg;
    if (text == "mg" || text == "dividesMg") return LocalCase::dividesMg;
    throw std::invalid_argument("unknown local case: " + text);
}

std::string to_string(LocalCase c) {
    switch (c) {
        case LocalCase::unramified: return "unramified";
        case LocalCase::dividesNg: return "ng";
        case LocalCase::dividesMg: return "mg";
    }
    return "?";
}

std::string RationalFunction::to_string() const {
    return "(" + num.to_string() + ") / (" + den.to_string() + ")";
}

Integer local_discriminant(long p, int wp) {
    if (wp != 1 && wp != -1) throw domain_error("local_discriminant: wp must be +1 or -1");
    for (long n = 1;; ++n) {
        for (long D : {n, -n}) {
            if (D % p == 0) continue;
            long r = ((D % 4) + 4) % 4;
            bool fund = D == 1 || (r == 1 && D != 1 && is_squarefree(Integer(D)));
            if (r == 0) {
                long m = D / 4, rm = ((m % 4) + 4) % 4;
                fund = (rm == 2 || rm == 3) && is_squarefree(Integer(m));
            }
            if (fund && hilbert_symbol(Rational(D), Rational(p), p) == wp) return Integer(D);
        }
    }
}

LocalConfig make_local_config(long p, LocalCase kase, int wp) {
    return {p, kase, wp, Rational(local_discriminant(p, wp))};
}

LaurentPoly xi_poly() { return LaurentPoly::X(2); }

namespace {

ExactScalar q(long n) { return ExactScalar(Rational(n)); }

// a + b*xi
LaurentPoly lin(long a, long b) { return LaurentPoly(q(a)) + q(b) * xi_poly(); }

ExactScalar half_power(long p, long j) { return ExactScalar(Gauss(1), p, j); }

void require_odd(long p) {
    if (p == 2 || !is_prime(p)) throw unsupported_place("local periods: p must be an odd prime");
}

}  // namespace

LaurentPoly tau_old_closed(const Element& e, long p) {
    require_odd(p);
    int n = e.kind == Element::alpha ? e.index : e.index - 1;
    int N = std::abs(n);
    LaurentPoly top = LaurentPoly::X(2 * N) * lin(-1, p) + LaurentPoly::X(-2 * N) * lin(-p, 1);
    LaurentPoly quo = top.divide_exact(lin(-1, 1));
    return ExactScalar(rpow(Rational(p), -N) / Rational(p + 1)) * quo;
}

ExactScalar pi_tilde_closed(const Element& e, long p, const Rational& D) {
    require_odd(p);
    int n = e.index;
    Rational pn = rpow(Rational(p), n);
    ExactScalar chi = weil_gamma_chi(pn, p, -D).chi;
    if (e.kind == Element::alpha) {
        long sign = (n % 2 == 0) ? 1 : -1;
        return q(sign) * chi * half_power(p, -3L * std::abs(n));
    }
    long sign = ((n + 1) % 2 == 0) ? 1 : -1;
    return q(sign) * chi * half_power(p, -std::abs(3L * n - 2));
}

ExactScalar omega_closed(const Element& e, long p) {
    require_odd(p);
    int n = e.index;
    return weil_gamma_chi(rpow(Rational(p), n), p, -1).chi * half_power(p, -std::abs(n));
}

Rational double_coset_volume(const Element& e, long p) {
    int n = e.index;
    long ex;
    if (e.kind == Element::alpha) ex = n > 0 ? 2L * n - 2 : -2L * n - 2;
    else ex = n > 0 ? 2L * n - 3 : -2L * n - 1;
    return rpow(Rational(p), ex) * Rational(p - 1);
}

LaurentPoly omega_product(const Element& e, const LocalConfig& cfg) {
    if (cfg.kase != LocalCase::dividesMg)
        throw domain_error("omega_product: closed tau coefficients are available for p | M_g only");
    if (hilbert_symbol(cfg.D, Rational(cfg.p), cfg.p) != cfg.wp)
        throw domain_error("omega_product: D must satisfy (D, p)_p = w_p");
    ExactScalar scal = pi_tilde_closed(e, cfg.p, cfg.D).conj() * omega_closed(e, cfg.p);
    return scal * tau_old_closed(e, cfg.p);
}

RationalFunction alpha_sharp_closed(const LocalConfig& cfg) {
    const long p = cfg.p;
    require_odd(p);
    switch (cfg.kase) {
        case LocalCase::dividesMg: {
            if (cfg.wp == -1) return {LaurentPoly(), LaurentPoly(q(1))};
            LaurentPoly num = ExactScalar(Rational(2 * (p - 1) * (p - 1))) * lin(p, -1) * lin(-1, p);
            LaurentPoly den = ExactScalar(Rational(p * p * (p + 1))) * lin(p, 1) * lin(1, p);
            return {num, den};
        }
        case LocalCase::dividesNg: {
            Rational v = make_rational((p - cfg.wp) * (p - cfg.wp), p * p);
            return {LaurentPoly(ExactScalar(v)), LaurentPoly(q(1))};
        }
        case LocalCase::unramified: break;
    }
    throw domain_error("alpha_sharp_closed: case must be ng or mg");
}

LaurentPoly alpha_sharp_truncated_exact(const LocalConfig& cfg, int N) {
    if (N < 0) throw domain_error("alpha_sharp_truncated: negative cutoff");
    LaurentPoly acc;
    for (int kind = 0; kind < 2; ++kind) {
        for (int n = -N; n <= N; ++n) {
            Element e{kind == 0 ? Element::alpha : Element::beta, n};
            acc += ExactScalar(double_coset_volume(e, cfg.p)) * omega_product(e, cfg);
        }
    }
    return acc;
}

cplx alpha_sharp_truncated(const LocalConfig& cfg, int N, cplx xi) {
    if (std::abs(std::abs(xi) - 1.0) > 1e-12)
        throw domain_error("alpha_sharp_truncated: xi must lie on the unit circle");
    return alpha_sharp_truncated_exact(cfg, N).eval(std::sqrt(xi));
}

LRatio local_L_ratio(const LocalConfig& cfg) {
    const long p = cfg.p;
    switch (cfg.kase) {
        case LocalCase::unramified: return {RationalFunction{}, true};
        case LocalCase::dividesNg: {
            Rational v = Rational(p, (p - cfg.wp) * (p - cfg.wp));
            return {RationalFunction{LaurentPoly(ExactScalar(v)), LaurentPoly(q(1))}, false};
        }
        case LocalCase::dividesMg: {
            LaurentPoly num = ExactScalar(Rational(p * p)) * lin(p, 1) * lin(1, p);
            LaurentPoly den = ExactScalar(Rational((p - 1) * (p - 1))) * lin(p, -1) * lin(-1, p);
            return {RationalFunction{num, den}, false};
        }
    }
    throw domain_error("local_L_ratio: unknown case");
}

Rational I_sharp_p(const LocalConfig& cfg) {
    if (cfg.kase == LocalCase::unramified) return 1;
    RationalFunction prod = local_L_ratio(cfg).value * alpha_sharp_closed(cfg);
    if (prod.is_zero()) return 0;
    int top = prod.den.max_exp();
    ExactScalar c = prod.num.coeff(top) / prod.den.coeff(top);
    if (!(prod.num == c * prod.den) || !c.is_rational())
        throw domain_error("I_sharp_p: L-ratio times alpha^sharp is not constant");
    return c.to_rational();
}

}  // namespace sl2p
