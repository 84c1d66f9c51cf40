// Acceptance battery: runs every end-to-end criterion and prints one
// pass/fail line each. Exit status is nonzero when any criterion fails.

#include <cstdio>

#include "liebra/verify.hpp"

int main() {
    const auto results = liebra::run_acceptance();
    int failed = 0;
    for (const liebra::AcceptanceResult& r : results) {
        std::printf("[%s] criterion %d: %s (%.2fs)%s%s\n", r.pass ? "PASS" : "FAIL", r.id,
                    r.title.c_str(), r.seconds, r.detail.empty() ? "" : " — ", r.detail.c_str());
        if (!r.pass) ++failed;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(results.size()) - failed,
                results.size());
    return failed == 0 ? 0 : 1;
}
