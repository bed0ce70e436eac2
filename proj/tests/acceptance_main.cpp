// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Same checks as `reglat verify-paper`.

#include <cstdio>
#include <iostream>

#include "reglat/acceptance.hpp"

int main(int argc, char** argv) {
    reglat::i64 bound = 100000;
    int jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;
    std::string only;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--bound" && i + 1 < argc) bound = std::stoll(argv[++i]);
        if (arg == "--jobs" && i + 1 < argc) jobs = std::stoi(argv[++i]);
        if (arg == "--only" && i + 1 < argc) only = argv[++i];
    }
    if (!only.empty()) {
        bool known = false;
        for (const auto& c : reglat::acceptance::all_checks())
            if (c.name == only) known = true;
        if (!known) {
            std::fprintf(stderr, "unknown check '%s'\n", only.c_str());
            return 2;
        }
    }
    auto report = reglat::acceptance::run_suite(bound, jobs, only);
    for (const auto& r : report.results) {
        std::printf("%s  %-22s (%7.0f ms)", r.pass ? "PASS" : "FAIL", r.name.c_str(), r.ms);
        if (!r.pass) std::printf("  expected: %s  actual: %s", r.expected.c_str(), r.actual.c_str());
        std::printf("\n");
    }
    std::printf("%s\n", report.all_pass() ? "ALL PASS" : "FAILURES PRESENT");
    return report.all_pass() ? 0 : 1;
}
