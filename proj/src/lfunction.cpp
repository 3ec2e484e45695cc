#include "sl2p/lfunction.hpp"

#include <unsupported/Eigen/Polynomials>

#include <cmath>

namespace sl2p {

namespace {

void check_prime(long p) {
    if (!is_prime(p)) throw domain_error("p must be prime");
}

void check_level(const Integer& N, const char* what) {
    if (N < 1 || N % 2 == 0 || !is_squarefree(N))
        throw domain_error(std::string(what) + " must be odd, squarefree and positive");
}

}  // namespace

std::array<Rational, 7> euler_polynomial(const EulerSixData& d) {
    check_prime(d.p);
    const Rational P(d.p);
    const Rational q = rpow(P, 2L * d.k - 1);  // alpha-side norm after scaling
    const Rational s2 = d.ag * d.ag / rpow(P, d.ell) - 2;
    const Rational s4 = s2 * s2 - 2;
    // in T = p^{-s}: (1 - a T + q T^2)(1 - a s2 T + (s4 q + a^2) T^2 - a s2 q T^3 + q^2 T^4)
    std::array<Rational, 3> A{1, -d.af, q};
    std::array<Rational, 5> B{1, -d.af * s2, s4 * q + d.af * d.af, -d.af * s2 * q, q * q};
    std::array<Rational, 7> out;
    for (auto& c : out) c = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 5; ++j) out[i + j] += A[i] * B[j];
    // X = p^{-s-ell} = p^{-ell} T
    for (int j = 0; j < 7; ++j) out[j] *= rpow(P, static_cast<long>(j) * d.ell);
    return out;
}

std::vector<cplx> euler_inverse_roots(const EulerSixData& d) {
    auto c = euler_polynomial(d);
    // normalise X = Y / R with R = p^{k - 1/2 + ell} so that the roots sit near the unit circle
    const double logR = (d.k - 0.5 + d.ell) * std::log(static_cast<double>(d.p));
    Eigen::Matrix<double, 7, 1> coeffs;
    for (int j = 0; j < 7; ++j) coeffs[j] = c[j].get_d() * std::exp(-j * logR);
    Eigen::PolynomialSolver<double, 6> solver;
    solver.compute(coeffs);
    std::vector<cplx> out;
    for (int j = 0; j < 6; ++j) {
        std::complex<double> y = solver.roots()[j];
        out.push_back(std::exp(logR) / y);
    }
    return out;
}

cplx euler_factor(const EulerSixData& d, cplx s) {
    auto c = euler_polynomial(d);
    cplx X = std::exp(-(s + static_cast<double>(d.ell)) * std::log(static_cast<double>(d.p)));
    cplx val = 0, xp = 1;
    double scale = 0;
    for (int j = 0; j < 7; ++j) {
        cplx t = c[j].get_d() * xp;
        val += t;
        scale = std::max(scale, std::abs(t));
        xp *= X;
    }
    if (std::abs(val) <= 1e-14 * scale) throw pole_error("euler_factor: s is a pole of the local factor");
    return 1.0 / val;
}

cplx complex_gamma(cplx z) {
    static const double g = 7;
    static const double coef[9] = {0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
                                   771.32342877765313,   -176.61502916214059,   12.507343278686905,
                                   -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
    const double pi = std::acos(-1.0);
    if (z.imag() == 0 && z.real() <= 0 && std::floor(z.real()) == z.real())
        throw pole_error("complex_gamma: pole at a nonpositive integer");
    if (z.real() < 0.5) return pi / (std::sin(pi * z) * complex_gamma(1.0 - z));
    z -= 1.0;
    cplx x = coef[0];
    for (int i = 1; i < 9; ++i) x += coef[i] / (z + static_cast<double>(i));
    cplx t = z + g + 0.5;
    return std::sqrt(2 * pi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

std::array<cplx, 3> gamma_factor_parts(int k, int ell, cplx s) {
    const double twoPi = 2 * std::acos(-1.0);
    auto gC = [&](cplx w) { return 2.0 * std::pow(twoPi, -w) * complex_gamma(w); };
    return {gC(s), gC(s + static_cast<double>(ell)), gC(s + static_cast<double>(ell - 2 * k + 1))};
}

cplx gamma_factor(int k, int ell, cplx s) {
    auto g = gamma_factor_parts(k, ell, s);
    return g[0] * g[1] * g[2];
}

NonvanishingResult nonvanishing_criterion(int k, int ell, const std::map<long, int>& atkinLehner, const Integer& Nf,
                                          const Integer& Ng) {
    if (ell < k) throw domain_error("nonvanishing_criterion: need ell >= k");
    check_level(Nf, "N_f");
    check_level(Ng, "N_g");
    if (Nf % Ng != 0) throw domain_error("nonvanishing_criterion: N_g must divide N_f");
    NonvanishingResult r;
    r.perPlace["inf"] = {-1, -1, true};
    r.overall = true;
    for (auto& [p, e] : factor(Nf)) {
        auto it = atkinLehner.find(p);
        if (it == atkinLehner.end()) throw domain_error("atkin_lehner incomplete: missing w_" + std::to_string(p));
        int w = it->second;
        PlaceSign s;
        if (Ng % p == 0) s = {w, w, true};
        else s = {1, w, w == 1};
        r.perPlace[std::to_string(p)] = s;
        r.overall = r.overall && s.match;
    }
    return r;
}

CentralValueConstants central_value_constants(const CentralValueInput& in) {
    check_level(in.Nf, "N_f");
    check_level(in.Ng, "N_g");
    if (in.Nf % in.Ng != 0) throw domain_error("central_value: N_g must divide N_f");
    if (in.k < 1 || in.k % 2 == 0 || in.ell % 2 == 0 || in.ell < in.k)
        throw domain_error("central_value: k, ell must be odd with ell >= k");
    Integer Mg = in.Nf / in.Ng;
    for (auto& [p, e] : factor(Mg)) {
        auto it = in.atkinLehner.find(p);
        if (it == in.atkinLehner.end()) throw domain_error("atkin_lehner incomplete: missing w_" + std::to_string(p));
        if (it->second != 1)
            throw domain_error("central_value: hypothesis violated, w_p = -1 at p = " + std::to_string(p) + " dividing M_g");
    }
    int m = (in.ell - in.k) / 2;
    CentralValueConstants c;
    c.powerOfTwo = 6 * m + in.k + 1 - omega_count(Mg);
    Rational mu(gamma0_index(in.Ng));
    c.C0 = Rational(Mg * Mg) * mu * mu / Rational(in.Nf);
    c.CinftyFG = arch_period(in.k, in.ell).CinftyFG;
    return c;
}

CentralValue central_value(const CentralValueInput& in) {
    if (!(in.petersonF > 0 && in.petersonH > 0 && in.petersonG > 0))
        throw domain_error("central_value: Petersson norms must be positive");
    if (!(in.pairingSq >= 0)) throw domain_error("central_value: pairingSq must be nonnegative");
    CentralValue out;
    out.constants = central_value_constants(in);
    long double v = std::ldexp(1.0L, out.constants.powerOfTwo);
    v *= static_cast<long double>(out.constants.C0.get_d()) * static_cast<long double>(out.constants.CinftyFG.get_d());
    v *= in.petersonF / in.petersonH * in.pairingSq / (in.petersonG * in.petersonG);
    out.lambdaValue = v;
    return out;
}

std::pair<Rational, Rational> mg_bracket(long p) {
    Rational P(p);
    Rational lo = 2 * rpow(P - 1, 4) / (P * P * rpow(P + 1, 3));
    Rational hi = 2 * (P + 1) / (P * P);
    return {lo, hi};
}

namespace {

Certificate certificate_frame(const LocalConfig& cfg) {
    if (cfg.kase == LocalCase::unramified) throw domain_error("subconvexity_certificate: p must divide N_f");
    Certificate c;
    const double p = static_cast<double>(cfg.p);
    if (cfg.kase == LocalCase::dividesNg) {
        Rational a = make_rational((cfg.p - cfg.wp) * (cfg.p - cfg.wp), cfg.p * cfg.p);
        c.alphaExact = a;
        c.alphaSharp = a.get_d();
        c.conductorProduct = p * p;
        c.bracket = {c.alphaSharp, c.alphaSharp};
    } else {
        auto [lo, hi] = mg_bracket(cfg.p);
        c.conductorProduct = p;
        c.bracket = {lo.get_d(), hi.get_d()};
        c.vanishing = cfg.wp == -1;
    }
    return c;
}

void finish(Certificate& c) {
    c.passes = !c.vanishing && c.bracket.first > 0 &&
               (c.alphaExact ? c.alphaExact->get_d() >= c.bracket.first * (1 - 1e-15)
                             : c.alphaSharp >= c.bracket.first * (1 - 1e-12));
}

}  // namespace

Certificate subconvexity_certificate(const LocalConfig& cfg, cplx xi) {
    Certificate c = certificate_frame(cfg);
    if (cfg.kase == LocalCase::dividesMg) {
        if (std::abs(std::abs(xi) - 1.0) > 1e-12) throw domain_error("subconvexity_certificate: |xi| must be 1");
        cplx a = alpha_sharp_closed(cfg).eval(std::sqrt(xi));
        if (std::abs(a.imag()) > 1e-12) throw domain_error("subconvexity_certificate: alpha is not real");
        c.alphaSharp = a.real();
    }
    finish(c);
    return c;
}

Certificate subconvexity_certificate_exact(const LocalConfig& cfg, const Gauss& X) {
    if (X.norm() != 1) throw domain_error("subconvexity_certificate: |X| must be 1");
    Certificate c = certificate_frame(cfg);
    if (cfg.kase == LocalCase::dividesMg) {
        RationalFunction f = alpha_sharp_closed(cfg);
        ExactScalar num = f.num.eval_exact(ExactScalar(X)), den = f.den.eval_exact(ExactScalar(X));
        if (den.is_zero()) throw domain_error("subconvexity_certificate: pole");
        ExactScalar a = num / den;
        if (!a.is_rational()) throw domain_error("subconvexity_certificate: alpha is not rational here");
        c.alphaExact = a.to_rational();
        c.alphaSharp = c.alphaExact->get_d();
    }
    finish(c);
    if (c.alphaExact && !c.vanishing)
        c.passes = *c.alphaExact > 0 &&
                   (cfg.kase != LocalCase::dividesMg || *c.alphaExact >= mg_bracket(cfg.p).first);
    return c;
}

}  // namespace sl2p
