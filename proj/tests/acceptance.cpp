// One line per acceptance criterion; exit status is nonzero if any fails.

#include "sl2p/acceptance.hpp"

#include <cstdio>
#include <cstdlib>
#include <string>

int main(int argc, char** argv) {
    sl2p::AcceptanceOptions opts;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "--quick") opts.full = false;
        else if (a.rfind("--threads=", 0) == 0) opts.threads = static_cast<unsigned>(std::stoul(a.substr(10)));
    }
    if (const char* t = std::getenv("SL2P_THREADS")) opts.threads = static_cast<unsigned>(std::stoul(t));
    int failures = 0;
    sl2p::run_acceptance(opts, [&](const sl2p::CriterionResult& r) {
        const char* tag = r.skipped ? "SKIP" : (r.passed ? "PASS" : "FAIL");
        if (!r.passed) ++failures;
        std::printf("[%s] criterion %2d: %s -- %s (%.2fs)\n", tag, r.id, r.title.c_str(), r.detail.c_str(), r.seconds);
        std::fflush(stdout);
    });
    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
