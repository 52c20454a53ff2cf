#include "opcyl/verify.hpp"

#include <chrono>
#include <cstdio>

// Runs every acceptance check at its pinned bound and prints one
// pass/fail line per check. Exit status 0 iff all pass.
int main()
{
    auto t0 = std::chrono::steady_clock::now();
    std::vector<opcyl::Check> checks = opcyl::acceptance_checks();
    double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    bool all = true;
    for (const opcyl::Check& c : checks) {
        std::printf("[%s] %s%s%s\n", c.pass ? "PASS" : "FAIL", c.name.c_str(),
                    c.detail.empty() ? "" : " -- ", c.detail.c_str());
        all = all && c.pass;
    }
    std::printf("%s (%.1fs)\n", all ? "acceptance: all criteria hold" : "acceptance: FAILURES above", total);
    return all ? 0 : 1;
}
