// One line per acceptance criterion; exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <string>

#include "minppr/error.hpp"
#include "minppr/harness.hpp"

int main()
{
    using clock = std::chrono::steady_clock;
    const char* criteria[] = {"min-closure", "median-failure", "clique-tightness", "upr-distortion",
        "contraction-bound", "tv-bound", "minppr-distortion", "series-oracle", "linearity", "minppr-spam",
        "spammer-bound", "zero-resistance"};
    const std::uint64_t seed = 7;
    int failures = 0;
    int index = 0;
    for (const char* name : criteria) {
        ++index;
        const auto start = clock::now();
        bool ok = false;
        std::string detail;
        double limit = 0.0;
        try {
            auto r = minppr::harness::run_suite(name, seed);
            const double seconds = std::chrono::duration<double>(clock::now() - start).count();
            limit = r.time_limit_seconds;
            ok = r.verdict && seconds < limit;
            detail = std::to_string(r.passed) + "/" + std::to_string(r.trials) + " trials (need "
                + std::to_string(r.required) + "), " + std::to_string(seconds) + " s (limit "
                + std::to_string(limit) + " s)";
        } catch (const std::exception& e) {
            detail = std::string("error: ") + e.what();
        }
        std::printf("criterion %2d %-18s %s  %s\n", index, name, ok ? "PASS" : "FAIL", detail.c_str());
        failures += ok ? 0 : 1;
    }
    std::printf("%d/12 criteria passed\n", 12 - failures);
    return failures == 0 ? 0 : 1;
}
