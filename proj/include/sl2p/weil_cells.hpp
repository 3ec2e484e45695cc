#pragma once

// Cell model of Bruhat-Schwartz functions on Q_p: functions supported on
// p^{-M} Z_p and constant on cosets of p^M Z_p.

#include "sl2p/exact.hpp"

#include <vector>

namespace sl2p {

struct resolution_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class CellFunction {
public:
    CellFunction(long p, int M);
    static CellFunction indicator_Zp(long p, int M);

    long p() const { return p_; }
    int M() const { return M_; }
    std::size_t size() const { return values_.size(); }
    // cell j represents j * p^{-M} + p^M Z_p
    cplx& operator[](std::size_t j) { return values_[j]; }
    const cplx& operator[](std::size_t j) const { return values_[j]; }

    cplx inner(const CellFunction& other) const;

private:
    long p_;
    int M_;
    std::vector<cplx> values_;
};

struct WeilStep {
    enum Kind { u, t, s } kind = s;
    Rational arg = 1;  // b for u(b), a for t(a)
    int eps = 1;       // metaplectic sign for t(a)
};

// omega_{psibar} on the line with Q(x) = x^2, (x,y) = 2xy; the word acts right to left
CellFunction weil_action(const std::vector<WeilStep>& word, const CellFunction& f);

}  // namespace sl2p
