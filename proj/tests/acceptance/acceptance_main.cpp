/* Acceptance suite: runs every pinned verification end to end and prints one
 * pass/fail line per criterion. All expectations are exact (the toolkit has
 * no floating point); the single documented discrepancy (dim B_4 = 9 against
 * the closed formula's 10) is pinned to the independently computed value.
 * Exit code is the number of failing criteria. */

#include <cstdio>
#include <exception>

#include "nakhom/propstar.hpp"

int main() {
    using namespace nakhom;
    try {
        const PaperVerification V = run_paper_verification(3);
        int failures = 0;
        for (const auto& c : V.checks) {
            std::printf("[%s] %s: %s%s%s\n", c.pass ? "PASS" : "FAIL", c.id.c_str(),
                        c.name.c_str(), c.details.empty() ? "" : " -- ",
                        c.details.c_str());
            failures += c.pass ? 0 : 1;
        }
        std::printf("%d/%zu criteria pass\n", static_cast<int>(V.checks.size()) - failures,
                    V.checks.size());
        return failures;
    } catch (const std::exception& e) {
        std::printf("[FAIL] acceptance suite aborted: %s\n", e.what());
        return 1;
    }
}
