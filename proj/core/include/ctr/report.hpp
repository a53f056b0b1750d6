#pragma once

#include <string>
#include <vector>

namespace ctr {

// Minimal pass/fail accumulator shared by the verification operations.
struct CheckReport {
    bool pass = true;
    std::vector<std::string> failures;
    void fail(std::string msg) {
        pass = false;
        failures.push_back(std::move(msg));
    }
};

}  // namespace ctr
