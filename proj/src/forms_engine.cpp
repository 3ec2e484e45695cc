#include "sl2p/forms_engine.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace sl2p {

namespace {

constexpr int kInfiniteVal = 1 << 20;

int val_or_inf(const Rational& q, long p) { return q == 0 ? kInfiniteVal : val_p(q, p); }

bool divides(const Integer& n, long p) { return mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(p)) != 0; }

ExactScalar chebyshev_U(const ExactScalar& t, int e) {
    if (e < 0) return ExactScalar(0);
    ExactScalar prev(0), cur(1);
    for (int j = 0; j < e; ++j) {
        ExactScalar next = t * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

}  // namespace

Rational NewformData::a_prime_power(long p, int r) const {
    if (r == 0) return 1;
    Rational ap;
    auto it = heckeEigen.find(p);
    bool ram = divides(level, p);
    if (it != heckeEigen.end()) ap = it->second;
    else if (ram) ap = Rational(-atkinLehner.at(p)) * rpow(Rational(p), k() - 1);
    else throw domain_error("missing Hecke eigenvalue a(" + std::to_string(p) + ")");
    if (ram) return rpow(ap, r);
    Rational pw = rpow(Rational(p), 2L * k() - 1);
    Rational prev = 1, cur = ap;
    for (int j = 1; j < r; ++j) {
        Rational next = ap * cur - pw * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

Rational NewformData::a(const Integer& n) const {
    if (n < 1) throw domain_error("a(n): n must be positive");
    Rational r = 1;
    for (auto& [p, e] : factor(n)) r *= a_prime_power(p, e);
    return r;
}

void NewformData::validate() const {
    if (level < 1 || level % 2 == 0 || !is_squarefree(level))
        throw domain_error("level must be odd, squarefree and positive");
    if (weight < 2 || weight % 2 != 0) throw domain_error("weight must be even and positive");
    auto primes = factor(level);
    for (auto& [p, e] : primes)
        if (!atkinLehner.count(p)) throw domain_error("atkin_lehner incomplete: missing w_" + std::to_string(p));
    for (auto& [p, w] : atkinLehner) {
        if (!primes.count(p)) throw domain_error("atkin_lehner given at a prime not dividing the level");
        if (w != 1 && w != -1) throw domain_error("atkin_lehner signs must be +1 or -1");
        auto it = heckeEigen.find(p);
        if (it != heckeEigen.end() && it->second != Rational(-w) * rpow(Rational(p), k() - 1))
            throw domain_error("a(" + std::to_string(p) + ") inconsistent with w_" + std::to_string(p) +
                               ": need alpha_p = -p^{-1/2} w_p, i.e. a(p) = -w_p p^{k-1}");
    }
}

Rational HalfIntegralData::c_fund(const Integer& d) const {
    auto it = cFund.find(d);
    if (it == cFund.end()) throw domain_error("missing c(" + d.get_str() + ")");
    return it->second;
}

void HalfIntegralData::validate() const {
    parent.validate();
    for (auto& [p, w] : parent.atkinLehner) {
        if (parent.level > 1 && kronecker_symbol(D, Integer(p)) != w)
            throw domain_error("D must satisfy chi_D(p) = w_p at p = " + std::to_string(p));
    }
    for (auto& [d, c] : cFund) {
        if (d < 3) throw domain_error("c_fund key " + d.get_str() + " is not a fundamental d");
        Fundamental fd = fundamental_decomposition(Rational(d));
        if (fd.d != d) throw domain_error("c_fund key " + d.get_str() + " is not a fundamental d");
        if (c == 0) continue;
        for (auto& [p, w] : parent.atkinLehner)
            if (kronecker_symbol(-d, Integer(p)) != w)
                throw domain_error("Kohnen support violated: c(" + d.get_str() + ") nonzero with chi_{-d}(" +
                                   std::to_string(p) + ") != w_p");
    }
}

Integer choose_discriminant(const NewformData& nf) {
    auto fits = [&](const Integer& D) {
        for (auto& [p, w] : nf.atkinLehner)
            if (kronecker_symbol(D, Integer(p)) != w) return false;
        return true;
    };
    auto fundamental = [](const Integer& D) {
        if (D == 1) return true;
        Integer r = D % 4;
        if (r < 0) r += 4;
        if (r == 1) return is_squarefree(D < 0 ? Integer(-D) : D);
        if (r != 0) return false;
        Integer m = D / 4, mr = m % 4;
        if (mr < 0) mr += 4;
        return (mr == 2 || mr == 3) && is_squarefree(m < 0 ? Integer(-m) : m);
    };
    for (long n = 1; n < 1000000; ++n)
        for (long s : {n, -n})
            if (fundamental(Integer(s)) && fits(Integer(s))) return Integer(s);
    throw domain_error("choose_discriminant: search exhausted");
}

bool SymHalfIntegralMatrix::is_half_integral() const {
    return is_integer(b1) && is_integer(b2) && is_integer(b3);
}

std::array<int, 3> SymHalfIntegralMatrix::nu(long p) const {
    return {val_or_inf(b1, p), val_or_inf(b2, p), val_or_inf(b3, p)};
}

int SymHalfIntegralMatrix::nB(long p) const {
    auto v = nu(p);
    return std::min({v[0], v[1], v[2] - 1});
}

int SymHalfIntegralMatrix::mB(long p) const {
    auto v = nu(p);
    return std::min({v[0] + 1, v[1], v[2]});
}

std::string SymHalfIntegralMatrix::to_string() const {
    return "[" + sl2p::to_string(b1) + ", " + sl2p::to_string(b2) + ", " + sl2p::to_string(b3) + "]";
}

Satake satake(const NewformData& nf, long p) {
    if (!is_prime(p)) throw domain_error("satake: p must be prime");
    Satake s;
    if (divides(nf.level, p)) {
        auto it = nf.atkinLehner.find(p);
        if (it == nf.atkinLehner.end()) throw domain_error("satake: missing w_p");
        s.ramified = true;
        s.alpha = ExactScalar(Gauss(-it->second), p, -1);
        return s;
    }
    auto it = nf.heckeEigen.find(p);
    if (it == nf.heckeEigen.end()) throw domain_error("satake: missing a(" + std::to_string(p) + ")");
    s.trace = ExactScalar(Gauss(it->second), p, 1L - 2L * nf.k());
    return s;
}

ExactScalar psi_factor(const Rational& xi, long p, const NewformData& nf, PsiExponent conv) {
    if (xi <= 0) throw domain_error("psi_factor: xi must be positive");
    Fundamental fd = fundamental_decomposition(xi);
    int e = conv == PsiExponent::fundamental ? val_p(fd.f, p) : val_p(xi, p);
    if (e < 0) return ExactScalar(0);
    int chi = kronecker_symbol(-fd.d, Integer(p));
    Satake s = satake(nf, p);
    if (s.ramified) {
        int w = nf.atkinLehner.at(p);
        return ExactScalar(Rational(chi * (chi + w))) * pow(s.alpha, e);
    }
    ExactScalar second = ExactScalar(Gauss(chi), p, -1) * chebyshev_U(s.trace, e - 1);
    return chebyshev_U(s.trace, e) - second;
}

Rational halfint_coefficient(const HalfIntegralData& h, const Rational& xi, CoefficientMethod method) {
    if (xi <= 0) throw domain_error("halfint_coefficient: xi must be positive");
    const NewformData& nf = h.parent;
    const int k = nf.k();
    if (method == CoefficientMethod::euler) {
        if (!is_integer(xi)) return 0;
        Fundamental fd = fundamental_decomposition(xi);
        std::set<long> primes;
        for (auto& [p, e] : factor(fd.f.get_num())) primes.insert(p);
        for (auto& [p, e] : factor(fd.f.get_den())) primes.insert(p);
        for (auto& [p, e] : factor(nf.level)) primes.insert(p);
        Rational prod = 1;
        for (long p : primes) {
            int e = val_p(fd.f, p);
            ExactScalar local = ExactScalar(Gauss(1), p, static_cast<long>(e) * (2L * k - 1)) * psi_factor(xi, p, nf);
            if (!local.is_rational()) throw domain_error("halfint_coefficient: irrational local factor");
            prod *= local.to_rational();
            if (prod == 0) return 0;
        }
        return prod * h.c_fund(fd.d) / rpow(Rational(2), omega_count(nf.level));
    }
    if (!is_integer(xi)) throw domain_error("halfint_coefficient: convolution needs integer xi");
    Fundamental fd = fundamental_decomposition(xi);
    if (!is_integer(fd.f)) return 0;
    Integer f = fd.f.get_num();
    Rational sum = 0;
    for (const Integer& d : divisors(f)) {
        Integer g;
        mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), nf.level.get_mpz_t());
        if (g != 1) continue;
        int mu = moebius(d);
        if (mu == 0) continue;
        int chi = kronecker_symbol(-fd.d, d);
        if (chi == 0) continue;
        sum += Rational(mu * chi) * rpow(Rational(d), k - 1) * nf.a(f / d);
    }
    if (sum == 0) return 0;
    return h.c_fund(fd.d) * sum;
}

Rational sk_coefficient(const HalfIntegralData& h, const SymHalfIntegralMatrix& B) {
    if (!B.is_half_integral()) throw domain_error("sk_coefficient: B is not half-integral");
    if (!B.is_positive_definite()) throw domain_error("sk_coefficient: B is not positive definite");
    Integer g;
    mpz_gcd(g.get_mpz_t(), B.b1.get_num_mpz_t(), B.b2.get_num_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), B.b3.get_num_mpz_t());
    Rational fourXi = 4 * B.xi();
    Rational sum = 0;
    for (const Integer& d : divisors(g)) {
        Integer c;
        mpz_gcd(c.get_mpz_t(), d.get_mpz_t(), h.parent.level.get_mpz_t());
        if (c != 1) continue;
        Rational dq(d);
        sum += rpow(dq, h.parent.k()) * halfint_coefficient(h, fourXi / (dq * dq), CoefficientMethod::euler);
    }
    return sum;
}

std::string WhittakerValue::to_string() const {
    if (psiArg == 0 || value == 0) return sl2p::to_string(value);
    return sl2p::to_string(value) + " * psi_p(" + sl2p::to_string(psiArg) + ")";
}

WhittakerValue whittaker_value(long p, const Rational& xi, WhittakerElement element, const Rational& b) {
    if (p == 2 || !is_prime(p)) throw unsupported_place("whittaker_value: p must be an odd prime");
    if (xi == 0) throw domain_error("whittaker_value: xi must be nonzero");
    int v = val_p(xi, p);
    Rational P(p);
    int sym = hilbert_symbol(-P * xi, P, p);
    WhittakerValue out;
    if (element == WhittakerElement::one) {
        if (v < 0) out.value = 0;
        else if (v % 2 == 0) out.value = rpow(P, -(v / 2)) * (1 + sym);
        else out.value = rpow(P, -((v - 1) / 2) - 1) * (P + 1);
        return out;
    }
    if (v < -1) out.value = 0;
    else if (v >= 0 && v % 2 == 0) out.value = -rpow(P, -(v / 2) - 1) * (1 + sym);
    else if (v % 2 != 0) {
        int r = (v - 1) / 2;
        if (v == -1) r = -1;
        out.value = -rpow(P, -r - 2) * (P + 1);
    } else {
        out.value = 0;
    }
    if (element == WhittakerElement::r) {
        if (b == 0 || val_p(b, p) != 0) throw domain_error("whittaker_value: b must be a p-adic unit");
        if (out.value != 0) out.psiArg = padic_fractional_part(xi / b, p);
    }
    return out;
}

Rational whittaker_B_sum(long p, const SymHalfIntegralMatrix& B, const Rational& delta) {
    if (p == 2 || !is_prime(p)) throw unsupported_place("whittaker_B_sum: p must be an odd prime");
    if (delta == 0 || val_p(delta, p) != 0) throw domain_error("whittaker_B_sum: delta must be a p-adic unit");
    const Rational xi = B.xi();
    if (xi == 0) throw domain_error("whittaker_B_sum: det B must be nonzero");
    const int nB = B.nB(p), mB = B.mB(p);
    const int chi = legendre_unit(Rational(-2) * delta, p);
    const Rational P(p);
    Rational total = 0, scale = 1, x = xi;
    for (int n = 0; n <= std::max(nB, mB); ++n) {
        if (n <= nB) total += scale * whittaker_value(p, x, WhittakerElement::one).value;
        if (n >= 1 && n <= mB) total += scale * whittaker_value(p, x, WhittakerElement::s).value;
        scale *= P * chi;
        x /= P * P;
    }
    return total;
}

Correction correction_factor(long p, const SymHalfIntegralMatrix& B, const Rational& delta, CorrectionMode mode) {
    if (p == 2 || !is_prime(p)) throw unsupported_place("correction_factor: p must be an odd prime");
    if (delta == 0 || val_p(delta, p) != 0) throw domain_error("correction_factor: delta must be a p-adic unit");
    if (B.b1 == 0 || B.b3 == 0) throw domain_error("correction_factor: b1 and b3 must be nonzero");
    auto nu = B.nu(p);
    if (nu[0] < 0 || nu[1] < 0 || nu[2] < 1) return {0, true};
    const int nB = B.nB(p), mB = B.mB(p);
    const int chi = legendre_unit(Rational(-2) * delta, p);
    const Rational P(p);
    if (mode == CorrectionMode::closed) {
        Rational sum = 0, term = 1;
        for (int n = 1; n <= nB; ++n) {
            term *= P * P * chi;
            sum += term;
        }
        Rational E = 1 + (1 - 1 / P) * sum;
        E += Rational(nB - mB) * rpow(P, 2L * nB + 1) * rpow(Rational(chi), nB + 1);
        return {E, false};
    }
    Rational w1 = whittaker_value(p, B.xi(), WhittakerElement::one).value;
    if (w1 == 0) throw indeterminate_error("correction_factor: W_xi(1) vanishes, sum mode cannot normalise");
    Rational total = whittaker_B_sum(p, B, delta);
    return {total / w1, false};
}

}  // namespace sl2p
