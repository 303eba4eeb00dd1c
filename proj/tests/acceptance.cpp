// One line per acceptance criterion; exit status 1 if any fails.
#include <iostream>

#include "equichar/acceptance.hpp"

int main() {
    int failed = 0;
    for (const auto& r : equichar::acceptance::run_all()) {
        std::cout << equichar::acceptance::format(r) << std::endl;
        failed += r.passed ? 0 : 1;
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
    return failed == 0 ? 0 : 1;
}
