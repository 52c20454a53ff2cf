#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace opcyl {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyOptions {
    int max_arity = 5;
    int max_vertices = 3;
    uint64_t seed = 1;
    int count = 1000;
    std::string presentation = "ainf";
};

// named suites: sdr | d2 | vanishing | ainf-formula | tech | conder |
// linear | unital-H | braces | suspension
std::vector<Check> verify_suite(const std::string& suite, const VerifyOptions& opt);

// the acceptance run: every check at its pinned bound
std::vector<Check> acceptance_checks();

} // namespace opcyl
