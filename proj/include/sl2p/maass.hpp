#pragma once

// Maass raising operators on e^{2 pi i Tr(BZ)}: a small polynomial algebra in
// b1, b2, b3, y1, y2, v, det(Y)^{+-1}, pi^{+-1} with Gaussian rational
// coefficients, the symbolic cofactor C(B,Y), the closed triple sum for it,
// and the coefficients of the twisted lift.

#include "sl2p/forms_engine.hpp"

#include <array>
#include <map>
#include <vector>

namespace sl2p {

enum MaassVar { mv_b1, mv_b2, mv_b3, mv_y1, mv_y2, mv_v, mv_D, mv_pi, mv_count };

using MaassMono = std::array<int, mv_count>;

// D stands for det Y = y1 y2 - v^2; kept reduced so that no monomial has both y1 and y2
class MaassExpr {
public:
    MaassExpr() = default;
    MaassExpr(const Gauss& c);
    static MaassExpr var(MaassVar x, int e = 1, const Gauss& c = Gauss(1));

    const std::map<MaassMono, Gauss>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Gauss coeff(const MaassMono& m) const;

    // d/dy1, d/dy2, d/dv with D as a function of Y
    MaassExpr diff(MaassVar x) const;

    struct Point {
        Rational b1, b2, b3, y1, y2, v;
    };
    // exact value as a Laurent polynomial in pi; throws if Y is singular or the value is not real
    PiPoly eval_exact(const Point& at) const;
    std::complex<long double> eval(const std::array<long double, 6>& byv) const;

    std::string to_string() const;

    friend MaassExpr operator+(const MaassExpr& x, const MaassExpr& y);
    friend MaassExpr operator-(const MaassExpr& x, const MaassExpr& y);
    friend MaassExpr operator*(const MaassExpr& x, const MaassExpr& y);
    friend bool operator==(const MaassExpr& x, const MaassExpr& y) { return x.terms_ == y.terms_; }
    MaassExpr& operator+=(const MaassExpr& y) { return *this = *this + y; }

private:
    void add_term(MaassMono m, const Gauss& c);
    std::map<MaassMono, Gauss> terms_;
};

MaassExpr maass_det_B();
MaassExpr maass_trace_BY();

// cofactor of Delta_kappa (P e^{2 pi i Tr(BZ)})
MaassExpr maass_step(const MaassExpr& P, int kappa);
// Delta_{ell-1} ... Delta_{k+1} applied to e^{2 pi i Tr(BZ)}, ell = k + 2m; m <= 3
MaassExpr maass_oracle(int k, int m);
// the closed triple sum, expanded
MaassExpr const_diff_symbolic(int k, int m);

PiPoly maass_C(const SymHalfIntegralMatrix& B, const Rational& y1, const Rational& v, const Rational& y2, int k, int m);
PiPoly maass_C_oracle(const SymHalfIntegralMatrix& B, const Rational& y1, const Rational& v, const Rational& y2, int k,
                      int m);

// numeric Delta_kappa on P e^{2 pi i Tr(BZ)} by central differences in the six real coordinates,
// divided by the exponential; byv = (b1, b2, b3, y1, y2, v)
std::complex<long double> maass_step_numeric(const MaassExpr& P, int kappa, const std::array<long double, 6>& byv,
                                             long double h = 1e-4L);

struct MaassCheck {
    int k = 1, m = 1;
    long double maxRelError = 0;
    bool passed = false;
};
// stepwise finite-difference check of the symbolic oracle at random points
MaassCheck maass_fd_check(int k, int m, int points, unsigned long seed, long double tol = 1e-6L);

struct MaassReportRow {
    int k = 1, m = 0;
    bool agree = false;
    Gauss traceCoeffConstDiff;  // coefficient of b1 y1 / (pi det Y)
    Gauss traceCoeffOracle;
    std::size_t differingMonomials = 0;
};
std::vector<MaassReportRow> maass_report(int kMax, int mMax);

enum class MaassSource { oracle, const_diff };

PiPoly breve_coefficient(const HalfIntegralData& h, const SymHalfIntegralMatrix& B, const Rational& y1,
                         const Rational& v, const Rational& y2, int k, int m, const Integer& Mg, const Rational& delta,
                         MaassSource source = MaassSource::oracle);

}  // namespace sl2p
