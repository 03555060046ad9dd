#include <iostream>

#include "wact/acceptance.hpp"

int main() {
    bool ok = wact::run_paper_suite(std::cout);
    std::cout << (ok ? "ALL CRITERIA PASSED" : "SOME CRITERIA FAILED") << "\n";
    return ok ? 0 : 1;
}
