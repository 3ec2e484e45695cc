#include "sl2p/arith.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

namespace sl2p {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw domain_error("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational parse_rational(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("empty rational");
    auto slash = s.find('/');
    Integer num, den = 1;
    if (num.set_str(s.substr(0, slash), 10) != 0)
        throw std::invalid_argument("bad rational: " + text);
    if (slash != std::string::npos && den.set_str(s.substr(slash + 1), 10) != 0)
        throw std::invalid_argument("bad rational: " + text);
    return make_rational(num, den);
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

int val_p(const Integer& n, long p) {
    if (n == 0) throw domain_error("valuation of zero");
    Integer m = abs(n);
    int v = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(p))) {
        m /= p;
        ++v;
    }
    return v;
}

int val_p(const Rational& q, long p) {
    if (q == 0) throw domain_error("valuation of zero");
    return val_p(q.get_num(), p) - val_p(q.get_den(), p);
}

Integer ipow(long base, unsigned long e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(std::labs(base)), e);
    if (base < 0 && (e & 1)) r = -r;
    return r;
}

Rational rpow(const Rational& base, long e) {
    if (e < 0) {
        if (base == 0) throw domain_error("negative power of zero");
        return rpow(Rational(1) / base, -e);
    }
    Integer n, d;
    mpz_pow_ui(n.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e));
    return make_rational(n, d);
}

Rational unit_part(const Rational& q, long p) {
    int v = val_p(q, p);
    return q / rpow(Rational(p), v);
}

std::map<long, int> factor(Integer n) {
    if (n == 0) throw domain_error("factor of zero");
    n = abs(n);
    std::map<long, int> out;
    for (long d = 2; Integer(d) * d <= n; d += (d == 2 ? 1 : 2)) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(d))) {
            n /= d;
            ++out[d];
        }
    }
    if (n > 1) {
        if (!n.fits_slong_p()) throw domain_error("factor: cofactor too large");
        ++out[n.get_si()];
    }
    return out;
}

bool is_squarefree(const Integer& n) {
    for (auto& [p, e] : factor(n))
        if (e > 1) return false;
    return true;
}

std::vector<Integer> divisors(const Integer& n) {
    std::vector<Integer> out{1};
    for (auto& [p, e] : factor(n)) {
        std::size_t k = out.size();
        Integer pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < k; ++j) out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int moebius(const Integer& n) {
    int s = 1;
    for (auto& [p, e] : factor(n)) {
        if (e > 1) return 0;
        s = -s;
    }
    return s;
}

int legendre(const Integer& a, long p) {
    return mpz_legendre(a.get_mpz_t(), Integer(p).get_mpz_t());
}

int legendre_unit(const Rational& u, long p) {
    int ln = legendre(u.get_num(), p);
    int ld = legendre(u.get_den(), p);
    if (ln == 0 || ld == 0) throw domain_error("legendre_unit: not a p-adic unit");
    return ln * ld;
}

namespace {

int unit_mod8(const Rational& u) {
    // odd numerator and denominator; d^{-1} = d mod 8
    Integer r = u.get_num() * u.get_den();
    long m = mpz_fdiv_ui(r.get_mpz_t(), 8);
    return static_cast<int>(m);
}

int eps2(int u8) { return ((u8 - 1) / 2) & 1; }
int omega2(int u8) { return ((u8 * u8 - 1) / 8) & 1; }

}  // namespace

int hilbert_symbol(const Rational& a, const Rational& b, long place) {
    if (a == 0 || b == 0) throw domain_error("hilbert_symbol: zero argument");
    if (place == kInfinity) return (a < 0 && b < 0) ? -1 : 1;
    if (place < 2 || !is_prime(place)) throw unsupported_place("hilbert_symbol: place must be prime or infinity");
    const long p = place;
    int alpha = val_p(a, p), beta = val_p(b, p);
    Rational u = unit_part(a, p), v = unit_part(b, p);
    if (p == 2) {
        int u8 = unit_mod8(u), v8 = unit_mod8(v);
        int e = eps2(u8) * eps2(v8) + (alpha & 1) * omega2(v8) + (beta & 1) * omega2(u8);
        return (e & 1) ? -1 : 1;
    }
    int s = 1;
    if ((alpha & 1) && (beta & 1) && ((p - 1) / 2) % 2 == 1) s = -s;
    if (beta & 1) s *= legendre_unit(u, p);
    if (alpha & 1) s *= legendre_unit(v, p);
    return s;
}

int kronecker_symbol(const Integer& D, const Integer& n) {
    if (n < 1) throw domain_error("kronecker_symbol: n must be positive");
    return mpz_kronecker(D.get_mpz_t(), n.get_mpz_t());
}

Fundamental fundamental_decomposition(const Rational& xi) {
    if (xi <= 0) throw domain_error("fundamental_decomposition: xi must be positive");
    Integer nd = xi.get_num() * xi.get_den();
    Integer t = 1;
    for (auto& [p, e] : factor(nd))
        if (e & 1) t *= p;
    Integer d = (t % 4 == 3) ? t : 4 * t;
    Rational f2 = xi / Rational(d);
    Integer fn, fd;
    if (!mpz_perfect_square_p(f2.get_num_mpz_t()) || !mpz_perfect_square_p(f2.get_den_mpz_t()))
        throw domain_error("fundamental_decomposition: internal square-root failure");
    mpz_sqrt(fn.get_mpz_t(), f2.get_num_mpz_t());
    mpz_sqrt(fd.get_mpz_t(), f2.get_den_mpz_t());
    return {d, make_rational(fn, fd)};
}

Integer gamma0_index(const Integer& t) {
    if (t < 1) throw domain_error("gamma0_index: t must be positive");
    Integer r = 1;
    for (auto& [p, e] : factor(t)) {
        if (e > 1) throw domain_error("gamma0_index: level not squarefree");
        r *= (p + 1);
    }
    return r;
}

int omega_count(const Integer& n) {
    if (n == 1) return 0;
    return static_cast<int>(factor(n).size());
}

}  // namespace sl2p
