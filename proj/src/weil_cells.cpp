#include "sl2p/weil_cells.hpp"

#include <cmath>
#include <numbers>

namespace sl2p {

namespace {

constexpr std::size_t kMaxCells = 60000;

long cell_count(long p, int M) {
    Integer n = ipow(p, 2UL * static_cast<unsigned long>(M));
    if (n > Integer(static_cast<unsigned long>(kMaxCells)))
        throw resolution_error("cell model: p^(2M) too large");
    return n.get_si();
}

// residue of an element of Z_p (given as a rational) modulo n = p^k
long residue(const Rational& x, long n) {
    Integer num = x.get_num(), den = x.get_den(), mod = n, inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t()) == 0)
        throw domain_error("residue: denominator not invertible");
    Integer r = (num * inv) % mod;
    if (r < 0) r += mod;
    return r.get_si();
}

bool nonzero(const cplx& z) { return std::abs(z) > 1e-12; }

}  // namespace

CellFunction::CellFunction(long p, int M) : p_(p), M_(M) {
    if (M < 1) throw resolution_error("cell model: M must be positive");
    values_.assign(static_cast<std::size_t>(cell_count(p, M)), cplx(0));
}

CellFunction CellFunction::indicator_Zp(long p, int M) {
    CellFunction f(p, M);
    long step = ipow(p, static_cast<unsigned long>(M)).get_si();
    for (std::size_t j = 0; j < f.size(); j += static_cast<std::size_t>(step)) f[j] = 1;
    return f;
}

cplx CellFunction::inner(const CellFunction& other) const {
    if (other.p_ != p_ || other.M_ != M_) throw domain_error("CellFunction::inner: resolution mismatch");
    cplx acc = 0;
    for (std::size_t j = 0; j < values_.size(); ++j) acc += values_[j] * std::conj(other.values_[j]);
    return acc / std::pow(double(p_), M_);
}

namespace {

CellFunction apply_u(const Rational& b, const CellFunction& f) {
    if (b != 0 && val_p(b, f.p()) < 0) throw resolution_error("u(b): b must be p-integral");
    const long p = f.p();
    Rational scale = rpow(Rational(p), -2L * f.M());
    CellFunction out = f;
    for (std::size_t j = 0; j < f.size(); ++j) {
        if (!nonzero(f[j])) continue;
        Rational x2 = Rational(static_cast<long>(j)) * Rational(static_cast<long>(j)) * scale;
        out[j] = f[j] * std::conj(psi_p(b * x2, p));
    }
    return out;
}

CellFunction apply_t(const Rational& a, int eps, const CellFunction& f) {
    const long p = f.p();
    const int M = f.M();
    const long N = static_cast<long>(f.size());
    int k = val_p(a, p);
    if (std::abs(k) >= 2 * M) throw resolution_error("t(a): |val(a)| too large for the resolution");
    cplx c = double(eps) * weil_gamma_chi(a, p, -1).chi.to_complex() * std::pow(double(p), -0.5 * k);
    if (k > 0) {
        // cells of valuation in [-M, -M+k) are pushed outside the window
        for (long i = 1; i < N; ++i)
            if (nonzero(f[i]) && val_p(Integer(i), p) < k)
                throw resolution_error("t(a): support leaves the resolution window");
    }
    Rational pM = rpow(Rational(p), M);
    CellFunction out(p, M);
    long span = k < 0 ? ipow(p, static_cast<unsigned long>(-k)).get_si() : 1;
    long stride = N / span;
    for (long j = 0; j < N; ++j) {
        Rational y = a * Rational(j) / pM;  // a * x_j
        if (y != 0 && val_p(y, p) < -M) continue;
        long i = residue(y * pM, N);
        cplx v = f[i];
        for (long t = 1; t < span; ++t) {
            if (std::abs(f[(i + t * stride) % N] - v) > 1e-12)
                throw resolution_error("t(a): function not constant at the required scale");
        }
        out[j] = c * v;
    }
    return out;
}

CellFunction apply_s(const CellFunction& f) {
    const long p = f.p();
    const long N = static_cast<long>(f.size());
    std::vector<cplx> root(static_cast<std::size_t>(N));
    for (long k = 0; k < N; ++k) {
        double th = 2 * std::numbers::pi * double(k) / double(N);
        root[k] = {std::cos(th), std::sin(th)};
    }
    // Weil index of psibar(x^2)
    cplx gamma = weil_gamma_chi(Rational(1), p, -1).gamma.to_complex();
    cplx scale = gamma / std::pow(double(p), f.M());
    CellFunction out(p, f.M());
    for (long l = 0; l < N; ++l) {
        if (!nonzero(f[l])) continue;
        long step = (2 * l) % N;
        long idx = 0;
        for (long j = 0; j < N; ++j) {
            out[j] += f[l] * root[idx];
            idx += step;
            if (idx >= N) idx -= N;
        }
    }
    for (long j = 0; j < N; ++j) out[j] *= scale;
    return out;
}

}  // namespace

CellFunction weil_action(const std::vector<WeilStep>& word, const CellFunction& f) {
    if (f.p() == 2) throw unsupported_place("weil_action: p = 2");
    CellFunction cur = f;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        switch (it->kind) {
            case WeilStep::u: cur = apply_u(it->arg, cur); break;
            case WeilStep::t: cur = apply_t(it->arg, it->eps, cur); break;
            case WeilStep::s: cur = apply_s(cur); break;
        }
    }
    return cur;
}

}  // namespace sl2p
