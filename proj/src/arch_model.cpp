#include "sl2p/arch_model.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>

#include <cmath>

namespace sl2p {

namespace {

Rational fact(long n) {
    if (n < 0) throw domain_error("factorial of a negative integer");
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(r);
}

// c * (pi N)^e
PiPoly pi_n_power(const Integer& N, int e, const Rational& c = 1) {
    return PiPoly::pi(e, c * rpow(Rational(N), e));
}

void check_weights(int k, int m) {
    if (k < 1 || k % 2 == 0) throw domain_error("k must be a positive odd integer");
    if (m < 0) throw domain_error("m must be nonnegative");
}

}  // namespace

bool JacobiVector::is_zero() const {
    for (auto& [rs, c] : coeffs)
        if (!c.is_zero()) return false;
    return true;
}

void JacobiVector::add(int r, int s, const PiPoly& c) {
    if (s % 2 != 0) throw domain_error("JacobiVector: s must be even");
    if (r < 0 || s < 0) return;
    PiPoly& slot = coeffs[{r, s}];
    slot += c;
    if (slot.is_zero()) coeffs.erase({r, s});
}

std::string JacobiVector::to_string() const {
    if (coeffs.empty()) return "0";
    std::string out;
    for (auto& [rs, c] : coeffs) {
        if (!out.empty()) out += " + ";
        out += "(" + c.to_string() + ")*v[" + std::to_string(rs.first) + "," + std::to_string(rs.second) + "]";
    }
    return out;
}

JacobiVector basis_vector(int k, const Integer& Nf, int r, int s) {
    JacobiVector v{k, Nf, {}};
    v.add(r, s, PiPoly(1));
    return v;
}

JacobiVector lie_action(LieOp op, const JacobiVector& v) {
    JacobiVector out{v.k, v.Nf, {}};
    const Integer& N = v.Nf;
    for (auto& [rs, c] : v.coeffs) {
        auto [r, s] = rs;
        switch (op) {
            case LieOp::Yplus: out.add(r + 1, s, c); break;
            case LieOp::Xplus: out.add(r + 2, s, c * pi_n_power(N, -1, Rational(-1, 2))); break;
            case LieOp::Yminus:
                if (r > 0) out.add(r - 1, s, c * pi_n_power(N, 1, Rational(-2 * r)));
                break;
            case LieOp::Xminus:
                if (r > 1) out.add(r - 2, s, c * pi_n_power(N, 1, Rational(r * (r - 1))));
                if (s > 0) out.add(r, s - 2, c * PiPoly(make_rational(-s * (2 * v.k + s - 1), 4)));
                break;
        }
    }
    return out;
}

JacobiVector v_hol(int k, int m, const Integer& Nf) {
    check_weights(k, m);
    JacobiVector v{k, Nf, {}};
    PiPoly c(1);
    for (int s = 0; s <= 2 * m; s += 2) {
        v.add(2 * m - s, s, c);
        Rational step(Integer((2 * m - s) * (2 * m - s - 1)), Integer((s + 2) * (2 * k + s + 1)));
        step.canonicalize();
        c = c * pi_n_power(Nf, 1, 4 * step);
    }
    return v;
}

PiPoly basis_norm(int k, int m, const Integer& Nf, int r, int s) {
    check_weights(k, m);
    if (r < 0 || s < 0 || s % 2 != 0)
        throw domain_error("basis_norm: (r,s) is not reachable from (2m,0)");
    // ||v_{r+1,s}||^2 = 2 pi N (r+1) ||v_{r,s}||^2, walked from r = 2m
    PiPoly norm(1);
    for (int t = 2 * m; t < r; ++t) norm = norm * pi_n_power(Nf, 1, Rational(2 * (t + 1)));
    for (int t = 2 * m; t > r; --t) norm = norm * pi_n_power(Nf, -1, Rational(1, 2 * t));
    // ||v_{r,s+2}||^2 = (s+2)(2k+s+1)/4 ||v_{r,s}||^2
    for (int j = 0; j < s; j += 2) norm = norm * PiPoly(make_rational((j + 2) * (2 * k + j + 1), 4));
    return norm;
}

PiPoly basis_norm_closed(int k, int m, const Integer& Nf, int s) {
    check_weights(k, m);
    if (s < 0 || s > 2 * m || s % 2 != 0) throw domain_error("basis_norm_closed: s out of range");
    Rational prod = 1;
    for (int j = 0; j <= s - 2; j += 2)
        prod *= Rational(Integer((j + 2) * (2 * k + j + 1)), Integer((2 * m - j - 1) * (2 * m - j)));
    prod.canonicalize();
    return PiPoly::pi(-s, prod * rpow(Rational(4) * Rational(Nf), -s));
}

Rational hol_norm(int k, int m) {
    check_weights(k, m);
    Rational sum = 0, term = 1;
    for (int s = 0; s <= 2 * m; s += 2) {
        sum += term;
        term *= Rational(Integer((2 * m - s) * (2 * m - s - 1)), Integer((s + 2) * (2 * k + s + 1)));
        term.canonicalize();
    }
    return sum;
}

PiPoly hol_norm_expanded(int k, int m, const Integer& Nf) {
    JacobiVector v = v_hol(k, m, Nf);
    PiPoly sum;
    for (auto& [rs, c] : v.coeffs) sum += c * c * basis_norm(k, m, Nf, rs.first, rs.second);
    return sum;
}

PiPoly gamma_ratio_unsimplified(int k, int ell) {
    // Gamma_C(s) = 2 (2 pi)^{-s} Gamma(s); Gamma_R(s) = pi^{-s/2} Gamma(s/2)
    auto gC = [](long s) { return PiPoly::pi(-static_cast<int>(s), 2 * rpow(Rational(2), -s) * fact(s - 1)); };
    PiPoly gR2 = PiPoly::pi(-1, 1);  // Gamma_R(2) = pi^{-1}
    // L(1, pi, ad) L(1, tau, ad) / L(pi x ad tau, 1/2)
    PiPoly num = gC(ell + 1) * gR2 * gC(2 * k) * gR2;
    PiPoly den = gC(ell + k) * gC(ell - k + 1) * gC(k);
    if (!den.is_monomial()) throw domain_error("gamma ratio: non-monomial denominator");
    return num.divide_monomial(den);
}

ArchPeriod arch_period(int k, int ell) {
    if (ell < k || (ell - k) % 2 != 0) throw domain_error("arch_period: need ell >= k, both odd");
    int m = (ell - k) / 2;
    check_weights(k, m);
    ArchPeriod out;
    out.k = k;
    out.ell = ell;
    out.m = m;
    Rational hn = hol_norm(k, m);
    out.alphaSharp = PiPoly::pi(2, Rational(2) / (Rational(ell) * hn));
    out.gammaRatio = PiPoly::pi(ell - k - 2, rpow(Rational(2), ell - k - 1) * fact(ell) * fact(2 * k - 1) /
                                                 (fact(ell + k - 1) * fact(ell - k) * fact(k - 1)));
    out.CinftyKL = fact(2 * m) * fact(ell + k - 1) * fact(k - 1) / (fact(2 * k - 1) * fact(ell - 1)) * hn;
    out.CinftyFG = fact(2 * m) / fact(m) * fact(k + m - 1) / fact(ell - 1) * hn;
    out.ISharp = PiPoly::pi(2 * m, rpow(Rational(2), 2 * m) / out.CinftyKL);
    return out;
}

double cosh_quadrature_oracle(int ell) {
    if (ell < 1) throw domain_error("cosh_quadrature_oracle: ell must be positive");
    boost::math::quadrature::exp_sinh<double> integrator;
    auto f = [ell](double t) {
        // cosh^{-2(ell+1)} sinh(2t) = 2 tanh(t) cosh(t)^{-2 ell}
        double c = std::cosh(t);
        if (!std::isfinite(c)) return 0.0;
        return 2.0 * std::tanh(t) * std::pow(c, -2.0 * ell);
    };
    double err = 0;
    return integrator.integrate(f, 0.0, std::numeric_limits<double>::infinity(), 1e-14, &err);
}

}  // namespace sl2p
