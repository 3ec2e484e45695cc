#pragma once

// The ten acceptance criteria as runnable checks, shared by the acceptance
// binary and the selftest subcommand.

#include "sl2p/forms_engine.hpp"

#include <functional>
#include <string>
#include <vector>

namespace sl2p {

struct AcceptanceOptions {
    bool full = true;  // false skips the enumeration oracles (criteria 1-3)
    unsigned threads = 1;
    unsigned long seed = 20240607;
    int M = 5;
};

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    bool skipped = false;
    std::string detail;
    double seconds = 0;
};

CriterionResult run_criterion(int id, const AcceptanceOptions& opts);
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts,
                                            const std::function<void(const CriterionResult&)>& onResult = {});

// synthetic multiplicative data: random a(p) for p <= 100 off the level, random c(d)
// on the fundamental d <= dMax that satisfy every local sign
HalfIntegralData synthetic_halfint(const Integer& level, int k, const std::map<long, int>& signs, unsigned long seed,
                                   long dMax = 40000);

}  // namespace sl2p
