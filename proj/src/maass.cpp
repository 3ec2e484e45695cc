#include "sl2p/maass.hpp"

#include <cmath>
#include <random>

namespace sl2p {

namespace {

const char* kVarNames[mv_count] = {"b1", "b2", "b3", "y1", "y2", "v", "detY", "pi"};

MaassMono unit_mono() { return MaassMono{}; }

Rational half_factorial_ratio(int hi, int lo) {
    // Gamma(hi + 1/2) / Gamma(lo + 1/2) for hi >= lo
    Rational r = 1;
    for (int t = lo; t < hi; ++t) r *= Rational(2 * t + 1, 2);
    return r;
}

Rational fact(long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(r);
}

Rational binom(long n, long r) {
    Integer c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
    return Rational(c);
}

MaassExpr power(const MaassExpr& x, int e) {
    MaassExpr r(Gauss(1));
    for (int i = 0; i < e; ++i) r = r * x;
    return r;
}

// (c pi)^e as an expression
MaassExpr pi_power(const Rational& c, int e) { return MaassExpr::var(mv_pi, e, Gauss(rpow(c, e))); }

MaassExpr scal(const Gauss& g) { return MaassExpr(g); }

}  // namespace

MaassExpr::MaassExpr(const Gauss& c) {
    if (!c.is_zero()) terms_[unit_mono()] = c;
}

MaassExpr MaassExpr::var(MaassVar x, int e, const Gauss& c) {
    MaassExpr r;
    MaassMono m = unit_mono();
    m[x] = e;
    r.add_term(m, c);
    return r;
}

Gauss MaassExpr::coeff(const MaassMono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Gauss() : it->second;
}

void MaassExpr::add_term(MaassMono m, const Gauss& c) {
    if (c.is_zero()) return;
    if (m[mv_y1] > 0 && m[mv_y2] > 0) {
        // y1 y2 = D + v^2
        --m[mv_y1];
        --m[mv_y2];
        MaassMono a = m, b = m;
        ++a[mv_D];
        b[mv_v] += 2;
        add_term(a, c);
        add_term(b, c);
        return;
    }
    Gauss& slot = terms_[m];
    slot = slot + c;
    if (slot.is_zero()) terms_.erase(m);
}

MaassExpr operator+(const MaassExpr& x, const MaassExpr& y) {
    MaassExpr r = x;
    for (auto& [m, c] : y.terms_) r.add_term(m, c);
    return r;
}

MaassExpr operator-(const MaassExpr& x, const MaassExpr& y) {
    MaassExpr r = x;
    for (auto& [m, c] : y.terms_) r.add_term(m, -c);
    return r;
}

MaassExpr operator*(const MaassExpr& x, const MaassExpr& y) {
    MaassExpr r;
    for (auto& [mx, cx] : x.terms_)
        for (auto& [my, cy] : y.terms_) {
            MaassMono m;
            for (int i = 0; i < mv_count; ++i) m[i] = mx[i] + my[i];
            r.add_term(m, cx * cy);
        }
    return r;
}

MaassExpr MaassExpr::diff(MaassVar x) const {
    if (x != mv_y1 && x != mv_y2 && x != mv_v) throw domain_error("MaassExpr::diff: only y1, y2, v");
    MaassExpr r;
    for (auto& [m, c] : terms_) {
        if (m[x] != 0) {
            MaassMono a = m;
            --a[x];
            r.add_term(a, c * Gauss(Rational(m[x])));
        }
        if (m[mv_D] != 0) {
            MaassMono a = m;
            --a[mv_D];
            Gauss f = c * Gauss(Rational(m[mv_D]));
            if (x == mv_y1) ++a[mv_y2];
            else if (x == mv_y2) ++a[mv_y1];
            else {
                ++a[mv_v];
                f = f * Gauss(-2);
            }
            r.add_term(a, f);
        }
    }
    return r;
}

PiPoly MaassExpr::eval_exact(const Point& at) const {
    Rational D = at.y1 * at.y2 - at.v * at.v;
    if (D == 0) throw domain_error("maass: Y is singular");
    const Rational vals[mv_D] = {at.b1, at.b2, at.b3, at.y1, at.y2, at.v};
    std::map<int, Gauss> acc;
    for (auto& [m, c] : terms_) {
        Rational x = 1;
        for (int i = 0; i < mv_D; ++i) {
            if (m[i] == 0) continue;
            if (vals[i] == 0) {
                x = 0;
                break;
            }
            x *= rpow(vals[i], m[i]);
        }
        if (x == 0) continue;
        x *= rpow(D, m[mv_D]);
        acc[m[mv_pi]] = acc[m[mv_pi]] + c * Gauss(x);
    }
    PiPoly out;
    for (auto& [e, g] : acc) {
        if (g.im != 0) throw domain_error("maass: cofactor is not real at this point");
        out += PiPoly::pi(e, g.re);
    }
    return out;
}

std::complex<long double> MaassExpr::eval(const std::array<long double, 6>& byv) const {
    const long double pi = std::acos(-1.0L);
    const long double D = byv[3] * byv[4] - byv[5] * byv[5];
    std::complex<long double> s = 0;
    for (auto& [m, c] : terms_) {
        long double x = 1;
        for (int i = 0; i < mv_D; ++i) x *= std::pow(byv[i], static_cast<long double>(m[i]));
        x *= std::pow(D, static_cast<long double>(m[mv_D])) * std::pow(pi, static_cast<long double>(m[mv_pi]));
        s += std::complex<long double>(static_cast<long double>(c.re.get_d()), static_cast<long double>(c.im.get_d())) * x;
    }
    return s;
}

std::string MaassExpr::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto& [m, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += "(" + sl2p::to_string(c) + ")";
        for (int i = 0; i < mv_count; ++i) {
            if (m[i] == 0) continue;
            out += std::string("*") + kVarNames[i];
            if (m[i] != 1) out += "^" + std::to_string(m[i]);
        }
    }
    return out;
}

MaassExpr maass_det_B() {
    return MaassExpr::var(mv_b1) * MaassExpr::var(mv_b3) - MaassExpr::var(mv_b2, 2, Gauss(Rational(1, 4)));
}

MaassExpr maass_trace_BY() {
    return MaassExpr::var(mv_b1) * MaassExpr::var(mv_y1) + MaassExpr::var(mv_b2) * MaassExpr::var(mv_v) +
           MaassExpr::var(mv_b3) * MaassExpr::var(mv_y2);
}

MaassExpr maass_step(const MaassExpr& P, int kappa) {
    const Gauss i(0, 1);
    const MaassExpr twoPiI = MaassExpr::var(mv_pi, 1, Gauss(0, 2));
    // d/dtau on the cofactor: -(i/2) d/dy + 2 pi i b
    auto T = [&](const MaassExpr& Q, MaassVar y, MaassVar b) {
        return scal(Gauss(0, Rational(-1, 2))) * Q.diff(y) + twoPiI * MaassExpr::var(b) * Q;
    };
    auto T1 = [&](const MaassExpr& Q) { return T(Q, mv_y1, mv_b1); };
    auto T2 = [&](const MaassExpr& Q) { return T(Q, mv_y2, mv_b3); };
    auto Tz = [&](const MaassExpr& Q) { return T(Q, mv_v, mv_b2); };
    const MaassExpr Dinv = MaassExpr::var(mv_D, -1);
    MaassExpr bracket = scal(Gauss(Rational(kappa * (2 * kappa - 1)))) * Dinv * P;
    bracket = bracket - scal(Gauss(8)) * T1(T2(P));
    bracket = bracket + scal(Gauss(2)) * Tz(Tz(P));
    MaassExpr drift = MaassExpr::var(mv_y1) * T1(P) + MaassExpr::var(mv_y2) * T2(P) + MaassExpr::var(mv_v) * Tz(P);
    bracket = bracket + scal(Gauss(Rational(2 * kappa)) * i) * Dinv * drift;
    return MaassExpr::var(mv_pi, -2, Gauss(Rational(1, 32))) * bracket;
}

MaassExpr maass_oracle(int k, int m) {
    if (k < 1 || k % 2 == 0) throw domain_error("maass_oracle: k must be a positive odd integer");
    if (m < 0) throw domain_error("maass_oracle: m must be nonnegative");
    if (m > 3) throw domain_error("maass_oracle: cost guard, m <= 3");
    MaassExpr P(Gauss(1));
    for (int j = 0; j < m; ++j) P = maass_step(P, k + 1 + 2 * j);
    return P;
}

MaassExpr const_diff_symbolic(int k, int m) {
    if (k < 1 || k % 2 == 0) throw domain_error("const_diff: k must be a positive odd integer");
    if (m < 0) throw domain_error("const_diff: m must be nonnegative");
    const int ell = k + 2 * m;
    const MaassExpr detB = maass_det_B(), tr = maass_trace_BY();
    MaassExpr C;
    for (int j = 0; j <= m; ++j) {
        Rational outer = half_factorial_ratio(ell - m, ell - 2 * m + j) * binom(m, j);
        MaassExpr head = pi_power(-4, j - m) * scal(Gauss(outer)) * power(detB, j) * MaassExpr::var(mv_D, j - m);
        MaassExpr mid;
        for (int i = 0; i <= m - j; ++i) {
            Rational w = fact(2 * m - 2 * j - i) / (fact(i) * fact(m - j - i));
            MaassExpr inner;
            for (int n = 0; n <= i; ++n) {
                Rational c = fact(ell + 1) / fact(ell + 1 - n) * binom(i, n);
                inner += pi_power(-4, -n) * scal(Gauss(c)) * power(tr, i - n);
            }
            mid += scal(Gauss(w)) * pi_power(4, i + j - m) * inner;
        }
        C += head * mid;
    }
    return C;
}

namespace {

MaassExpr::Point point(const SymHalfIntegralMatrix& B, const Rational& y1, const Rational& v, const Rational& y2) {
    if (y1 <= 0 || y1 * y2 - v * v <= 0) throw domain_error("maass: Y must be positive definite");
    return {B.b1, B.b2, B.b3, y1, y2, v};
}

}  // namespace

PiPoly maass_C(const SymHalfIntegralMatrix& B, const Rational& y1, const Rational& v, const Rational& y2, int k, int m) {
    return const_diff_symbolic(k, m).eval_exact(point(B, y1, v, y2));
}

PiPoly maass_C_oracle(const SymHalfIntegralMatrix& B, const Rational& y1, const Rational& v, const Rational& y2, int k,
                      int m) {
    return maass_oracle(k, m).eval_exact(point(B, y1, v, y2));
}

std::complex<long double> maass_step_numeric(const MaassExpr& P, int kappa, const std::array<long double, 6>& byv,
                                             long double h) {
    using C = std::complex<long double>;
    const long double pi = std::acos(-1.0L);
    const C I(0, 1);
    const long double b1 = byv[0], b2 = byv[1], b3 = byv[2];
    // coordinates (x1, x2, u, y1, y2, v), evaluated around x = 0
    auto F = [&](const std::array<long double, 6>& c) {
        std::array<long double, 6> at{b1, b2, b3, c[3], c[4], c[5]};
        C tr = b1 * C(c[0], c[3]) + b2 * C(c[2], c[5]) + b3 * C(c[1], c[4]);
        return P.eval(at) * std::exp(2.0L * pi * I * tr);
    };
    const std::array<long double, 6> base{0, 0, 0, byv[3], byv[4], byv[5]};
    auto shifted = [&](int a, long double da, int b, long double db) {
        auto c = base;
        c[a] += da;
        if (b >= 0) c[b] += db;
        return F(c);
    };
    auto d1 = [&](int a) { return (shifted(a, h, -1, 0) - shifted(a, -h, -1, 0)) / (2 * h); };
    auto d2 = [&](int a, int b) {
        if (a == b) return (shifted(a, h, -1, 0) - 2.0L * F(base) + shifted(a, -h, -1, 0)) / (h * h);
        return (shifted(a, h, b, h) - shifted(a, h, b, -h) - shifted(a, -h, b, h) + shifted(a, -h, b, -h)) / (4 * h * h);
    };
    enum { x1, x2, u, y1, y2, v };
    const long double D = byv[3] * byv[4] - byv[5] * byv[5];
    C dt1 = 0.5L * (d1(x1) - I * d1(y1));
    C dt2 = 0.5L * (d1(x2) - I * d1(y2));
    C dz = 0.5L * (d1(u) - I * d1(v));
    C dt1t2 = 0.25L * (d2(x1, x2) - I * d2(x1, y2) - I * d2(y1, x2) - d2(y1, y2));
    C dzz = 0.25L * (d2(u, u) - 2.0L * I * d2(u, v) - d2(v, v));
    long double kap = kappa;
    C bracket = kap * (2 * kap - 1) / D * F(base) - 8.0L * dt1t2 + 2.0L * dzz +
                2.0L * kap * I / D * (byv[3] * dt1 + byv[4] * dt2 + byv[5] * dz);
    C val = bracket / (32.0L * pi * pi);
    C e = std::exp(2.0L * pi * I * C(0, b1 * byv[3] + b2 * byv[5] + b3 * byv[4]));
    return val / e;
}

MaassCheck maass_fd_check(int k, int m, int points, unsigned long seed, long double tol) {
    MaassCheck out;
    out.k = k;
    out.m = m;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<std::array<long double, 6>> pts;
    for (int t = 0; t < points; ++t) {
        long double b1 = 0.5 + 1.5 * unit(rng), b3 = 0.5 + 1.5 * unit(rng);
        long double b2 = (2 * unit(rng) - 1) * std::sqrt(b1 * b3);
        long double y1 = 0.8 + 1.2 * unit(rng), y2 = 0.8 + 1.2 * unit(rng);
        long double v = (2 * unit(rng) - 1) * 0.5 * std::sqrt(y1 * y2);
        pts.push_back({b1, b2, b3, y1, y2, v});
    }
    MaassExpr P(Gauss(1));
    for (int j = 0; j < m; ++j) {
        int kappa = k + 1 + 2 * j;
        MaassExpr next = maass_step(P, kappa);
        for (auto& at : pts) {
            auto sym = next.eval(at);
            auto num = maass_step_numeric(P, kappa, at);
            long double rel = std::abs(sym - num) / std::max(std::abs(sym), 1e-30L);
            out.maxRelError = std::max(out.maxRelError, rel);
        }
        P = next;
    }
    out.passed = out.maxRelError < tol;
    return out;
}

std::vector<MaassReportRow> maass_report(int kMax, int mMax) {
    std::vector<MaassReportRow> rows;
    MaassMono trMono{};
    trMono[mv_b1] = 1;
    trMono[mv_y1] = 1;
    trMono[mv_D] = -1;
    trMono[mv_pi] = -1;
    for (int k = 1; k <= kMax; k += 2)
        for (int m = 0; m <= mMax; ++m) {
            MaassExpr a = const_diff_symbolic(k, m), b = maass_oracle(k, m);
            MaassReportRow row;
            row.k = k;
            row.m = m;
            row.agree = a == b;
            row.traceCoeffConstDiff = a.coeff(trMono);
            row.traceCoeffOracle = b.coeff(trMono);
            row.differingMonomials = (a - b).terms().size();
            rows.push_back(row);
        }
    return rows;
}

PiPoly breve_coefficient(const HalfIntegralData& h, const SymHalfIntegralMatrix& B, const Rational& y1,
                         const Rational& v, const Rational& y2, int k, int m, const Integer& Mg, const Rational& delta,
                         MaassSource source) {
    if (Mg < 1) throw domain_error("breve_coefficient: M_g must be positive");
    if (!B.is_half_integral()) throw domain_error("breve_coefficient: B is not half-integral");
    if (!is_integer(B.b3 / Rational(Mg))) return PiPoly();
    Rational E = 1;
    for (auto& [p, e] : factor(Mg)) {
        Correction c = correction_factor(p, B, delta, CorrectionMode::closed);
        if (c.vanishing) return PiPoly();
        E *= c.value;
    }
    PiPoly C = source == MaassSource::oracle ? maass_C_oracle(B, y1, v, y2, k, m) : maass_C(B, y1, v, y2, k, m);
    return PiPoly(E * sk_coefficient(h, B)) * C;
}

}  // namespace sl2p
