#include "hamloc/selftest.hpp"

#include <iostream>

int main() {
    int failed = 0;
    for (const auto& r : hamloc::run_acceptance_suite()) {
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << std::endl;
        if (!r.passed) ++failed;
    }
    std::cout << failed << " criteria failed" << std::endl;
    return failed == 0 ? 0 : 1;
}
