#include "sl2p/padic_oracle.hpp"

#include "sl2p/weil_cells.hpp"

#include <regex>
#include <thread>

namespace sl2p {

Mat2 Mat2::inverse() const {
    Rational dt = det();
    if (dt == 0) throw domain_error("Mat2: singular matrix");
    return {d / dt, -b / dt, -c / dt, a / dt};
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

bool Mat2::is_integral(long p) const {
    for (const Rational* v : {&a, &b, &c, &d})
        if (*v != 0 && val_p(*v, p) < 0) return false;
    return true;
}

std::string Mat2::to_string() const {
    return "(" + sl2p::to_string(a) + " " + sl2p::to_string(b) + "; " + sl2p::to_string(c) + " " +
           sl2p::to_string(d) + ")";
}

Mat2 Mat2::alpha(int n, long p) { return t(rpow(Rational(p), n)); }
Mat2 Mat2::beta(int m, long p) { return s() * alpha(m, p); }

Rational x_of(const Mat2& g) { return g.c != 0 ? g.c : g.d; }

int metaplectic_cocycle(const Mat2& g1, const Mat2& g2, long p) {
    Rational x1 = x_of(g1), x2 = x_of(g2), x3 = x_of(g1 * g2);
    return hilbert_symbol(x1 * x3, x2 * x3, p);
}

int splitting_sp(const Mat2& g, long p) {
    if (g.c != 0 && g.d != 0 && (val_p(g.c, p) & 1)) return hilbert_symbol(g.c, g.d, p);
    return 1;
}

MetaplecticElement metaplectic_multiply(const MetaplecticElement& e1, const MetaplecticElement& e2, long p) {
    return {e1.g * e2.g, metaplectic_cocycle(e1.g, e2.g, p) * e1.eps * e2.eps};
}

Iwasawa iwasawa_decompose(const Mat2& y, long p) {
    if (y.det() == 0) throw domain_error("iwasawa_decompose: singular matrix");
    Iwasawa out;
    const Rational& c = y.c;
    const Rational& d = y.d;
    bool use_d = d != 0 && (c == 0 || val_p(d, p) <= val_p(c, p));
    if (use_d) {
        out.k = Mat2{1, 0, c / d, 1};
        out.diagD = d;
        out.inK0 = (c == 0) || val_p(c, p) >= val_p(d, p) + 1;
    } else {
        out.k = Mat2{0, -1, 1, d / c};
        out.diagD = c;
        out.inK0 = false;
    }
    out.diagA = y.det() / out.diagD;
    out.borel = y * out.k.inverse();
    out.valA = val_p(out.diagA, p);
    out.valD = val_p(out.diagD, p);
    return out;
}

LaurentPoly eval_tau_vector(TauVariant variant, const Mat2& y, long p, int chiSign) {
    switch (variant) {
        case TauVariant::unramified: {
            Iwasawa iw = iwasawa_decompose(y, p);
            int e = iw.valA - iw.valD;
            return LaurentPoly::monomial(e, ExactScalar(Gauss(1), p, -e));
        }
        case TauVariant::oldvector_Mg:
            return eval_tau_vector(TauVariant::unramified, y * Mat2::varpi(p), p);
        case TauVariant::newvector_Ng: {
            Iwasawa iw = iwasawa_decompose(y, p);
            int sign = ((iw.valA + iw.valD) & 1) ? chiSign : 1;
            Rational v = Rational(sign) * rpow(Rational(p), -(iw.valA - iw.valD));
            if (!iw.inK0) v *= Rational(-1, p);
            return LaurentPoly(ExactScalar(v));
        }
    }
    throw domain_error("eval_tau_vector: unknown variant");
}

ExactScalar eval_h_vector(const MetaplecticElement& e, const HConfig& cfg) {
    const long p = cfg.p;
    if (p == 2 || !is_prime(p)) throw unsupported_place("eval_h_vector: p must be an odd prime");
    if (val_p(cfg.D, p) != 0) throw unsupported_place("eval_h_vector: p divides D");
    if (val_p(cfg.delta, p) != 0 || legendre_unit(cfg.delta, p) != -1)
        throw domain_error("eval_h_vector: delta must be a nonresidue unit");
    if (e.g.det() != 1) throw domain_error("eval_h_vector: matrix not in SL2");
    Iwasawa iw = iwasawa_decompose(e.g, p);
    int eps_k = e.eps * metaplectic_cocycle(iw.borel, iw.k, p);
    const Rational& a = iw.diagA;
    ExactScalar borel_factor = weil_gamma_chi(a, p, -cfg.D).chi *
                               ExactScalar(hilbert_symbol(a, cfg.delta, p)) *
                               ExactScalar(Gauss(1), p, -3L * val_p(a, p));
    long restricted = eps_k * splitting_sp(iw.k, p);
    if (iw.inK0) restricted *= -p;  // 1 - (p+1) on Gamma_0(p)
    return borel_factor * ExactScalar(restricted);
}

std::string Element::to_string() const {
    return std::string(kind == alpha ? "alpha" : "beta") + "(" + std::to_string(index) + ")";
}

Element Element::parse(const std::string& text) {
    static const std::regex re(R"(\s*(alpha|beta)\s*[:(]\s*(-?\d+)\s*\)?\s*)");
    std::smatch m;
    if (!std::regex_match(text, m, re)) throw std::invalid_argument("bad element: " + text);
    return {m[1].str() == "alpha" ? alpha : beta, std::stoi(m[2].str())};
}

Mat2 Element::matrix(long p) const { return kind == alpha ? Mat2::alpha(index, p) : Mat2::beta(index, p); }

MetaplecticElement metaplectic_lift(const Element& e, long p) {
    MetaplecticElement am{Mat2::alpha(e.index, p), 1};
    if (e.kind == Element::alpha) return am;
    return metaplectic_multiply({Mat2::s(), 1}, am, p);
}

std::vector<std::pair<Integer, Integer>> projective_line(long p, int M) {
    Integer pm = ipow(p, static_cast<unsigned long>(M));
    std::vector<std::pair<Integer, Integer>> rows;
    for (Integer c = 0; c < pm; ++c) rows.emplace_back(c, 1);
    for (Integer d = 0; d < pm; d += p) rows.emplace_back(1, d);
    return rows;
}

namespace {

// SL2 representative with the given primitive bottom row
Mat2 row_matrix(const Integer& c, const Integer& d) {
    if (d == 1) return Mat2{1, 0, Rational(c), 1};
    return Mat2{0, -1, 1, Rational(d)};
}

void check_cost(double count, const OracleConfig& cfg) {
    if (count > cfg.costGuard)
        throw cost_guard_error("oracle enumeration of " + std::to_string(count) + " cells exceeds the cost guard");
}

template <class T, class F>
T parallel_sum(const std::vector<Mat2>& reps, unsigned threads, F f) {
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(reps.size())));
    std::vector<T> partial(threads);
    std::size_t chunk = (reps.size() + threads - 1) / threads;
    auto work = [&](unsigned t) {
        T acc{};
        std::size_t lo = t * chunk, hi = std::min(reps.size(), lo + chunk);
        for (std::size_t i = lo; i < hi; ++i) acc += f(reps[i]);
        partial[t] = acc;
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }
    T total{};
    for (auto& x : partial) total += x;
    return total;
}

std::vector<Mat2> line_reps(const OracleConfig& cfg) {
    check_cost(std::pow(double(cfg.p), cfg.M) * (1.0 + 1.0 / cfg.p), cfg);
    std::vector<Mat2> reps;
    for (auto& [c, d] : projective_line(cfg.p, cfg.M)) reps.push_back(row_matrix(c, d));
    return reps;
}

LaurentPoly tau_average(const Mat2& g, const std::vector<Mat2>& reps, const OracleConfig& cfg) {
    LaurentPoly sum = parallel_sum<LaurentPoly>(reps, cfg.threads, [&](const Mat2& x) {
        return eval_tau_vector(cfg.variant, x * g, cfg.p) * eval_tau_vector(cfg.variant, x, cfg.p).conj();
    });
    return ExactScalar(Rational(1, static_cast<long>(reps.size()))) * sum;
}

ExactScalar h_average(const MetaplecticElement& g, const std::vector<Mat2>& reps, const OracleConfig& cfg) {
    return ExactScalar(Rational(1, static_cast<long>(reps.size()))) *
           parallel_sum<ExactScalar>(reps, cfg.threads, [&](const Mat2& k) {
               MetaplecticElement kk{k, 1};
               return eval_h_vector(metaplectic_multiply(kk, g, cfg.h.p), cfg.h) *
                      eval_h_vector(kk, cfg.h).conj();
           });
}

LaurentPoly normalize_by(const LaurentPoly& v, const LaurentPoly& norm) {
    if (norm.terms().size() != 1 || norm.terms().begin()->first != 0)
        throw domain_error("tau oracle: norm is not a constant");
    return norm.coeff(0).inverse() * v;
}

std::vector<Mat2> gl2_literal(const OracleConfig& cfg, bool special) {
    const long p = cfg.p;
    long pm = ipow(p, static_cast<unsigned long>(cfg.M)).get_si();
    check_cost(std::pow(double(pm), 4), cfg);
    std::vector<Mat2> out;
    for (long a = 0; a < pm; ++a)
        for (long b = 0; b < pm; ++b)
            for (long c = 0; c < pm; ++c)
                for (long d = 0; d < pm; ++d) {
                    long det = ((a * d - b * c) % pm + pm) % pm;
                    if (det % p == 0) continue;
                    if (!special) {
                        out.push_back(Mat2{a, b, c, d});
                        continue;
                    }
                    if (det != 1 % pm) continue;
                    // adjust one unit-determined entry so the determinant is exactly 1
                    if (a % p != 0) out.push_back(Mat2{a, b, c, Rational(1 + b * c) / Rational(a)});
                    else if (d % p != 0) out.push_back(Mat2{Rational(1 + b * c) / Rational(d), b, c, d});
                    else out.push_back(Mat2{a, Rational(a * d - 1) / Rational(c), c, d});
                }
    return out;
}

}  // namespace

LaurentPoly tau_norm_oracle(const OracleConfig& cfg) {
    return tau_average(Mat2::identity(), line_reps(cfg), cfg);
}

LaurentPoly tau_oracle(const Element& e, const OracleConfig& cfg) {
    auto reps = line_reps(cfg);
    return normalize_by(tau_average(e.matrix(cfg.p), reps, cfg), tau_average(Mat2::identity(), reps, cfg));
}

LaurentPoly tau_oracle_literal(const Element& e, const OracleConfig& cfg) {
    auto reps = gl2_literal(cfg, false);
    return normalize_by(tau_average(e.matrix(cfg.p), reps, cfg), tau_average(Mat2::identity(), reps, cfg));
}

ExactScalar h_norm_oracle(const OracleConfig& cfg) {
    return h_average({Mat2::identity(), 1}, line_reps(cfg), cfg);
}

ExactScalar pi_tilde_oracle(const Element& e, const OracleConfig& cfg) {
    auto reps = line_reps(cfg);
    return h_average(metaplectic_lift(e, cfg.h.p), reps, cfg) / h_average({Mat2::identity(), 1}, reps, cfg);
}

ExactScalar pi_tilde_oracle_literal(const Element& e, const OracleConfig& cfg) {
    auto reps = gl2_literal(cfg, true);
    return h_average(metaplectic_lift(e, cfg.h.p), reps, cfg) / h_average({Mat2::identity(), 1}, reps, cfg);
}

cplx omega_oracle(const Element& e, const OracleConfig& cfg) {
    Rational a = rpow(Rational(cfg.p), e.index);
    std::vector<WeilStep> word;
    if (e.kind == Element::beta) word.push_back({WeilStep::s, 1, 1});
    word.push_back({WeilStep::t, a, 1});
    CellFunction one = CellFunction::indicator_Zp(cfg.p, cfg.M);
    CellFunction img = weil_action(word, one);
    return img.inner(one) / one.inner(one);
}

}  // namespace sl2p
