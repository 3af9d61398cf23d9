// One PASS/FAIL line per acceptance criterion; exit status 1 on any failure.

#include "triconic/acceptance.hpp"

#include <chrono>
#include <cstdio>
#include <iostream>

int main(int argc, char **argv) {
    triconic::AcceptanceOptions opts;
    for (int i = 1; i < argc; ++i)
        opts.filter.emplace_back(argv[i]);
    auto t0 = std::chrono::steady_clock::now();
    auto results = triconic::run_acceptance(opts);
    bool ok = true;
    for (const auto &r : results) {
        std::cout << triconic::format_result(r) << "\n";
        ok = ok && r.passed;
    }
    double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s: %zu criteria in %.1f s\n", ok ? "all passed" : "FAILED", results.size(), total);
    return ok ? 0 : 1;
}
