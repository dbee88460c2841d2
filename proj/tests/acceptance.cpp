// Acceptance battery: runs every library-level verification end to end and
// prints one PASS/FAIL line per criterion. Exits nonzero when any fails.

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "quon/checks.hpp"

namespace {

void usage(const char* prog) {
    std::fprintf(stderr,
                 "usage: %s [--extended] [--max-n N] [--samples N] [--seed S]\n"
                 "  --extended   also run the size-five denominator bound (slow)\n"
                 "  --max-n N    ceiling for the block-size sweeps (default 4)\n"
                 "  --samples N  evaluation points per item (default 25)\n"
                 "  --seed S     random seed (default 20260813)\n",
                 prog);
}

}  // namespace

int main(int argc, char** argv) {
    quon::CheckOptions opts;
    for (int k = 1; k < argc; ++k) {
        const std::string arg = argv[k];
        auto next_value = [&](const char* flag) -> long {
            if (k + 1 >= argc) {
                std::fprintf(stderr, "%s requires a value\n", flag);
                usage(argv[0]);
                std::exit(2);
            }
            return std::strtol(argv[++k], nullptr, 10);
        };
        if (arg == "--extended") {
            opts.extended = true;
        } else if (arg == "--max-n") {
            opts.max_n = static_cast<int>(next_value("--max-n"));
        } else if (arg == "--samples") {
            opts.samples = static_cast<std::size_t>(next_value("--samples"));
        } else if (arg == "--seed") {
            opts.seed = static_cast<std::uint64_t>(next_value("--seed"));
        } else if (arg == "--help" || arg == "-h") {
            usage(argv[0]);
            return 0;
        } else {
            std::fprintf(stderr, "unknown argument: %s\n", arg.c_str());
            usage(argv[0]);
            return 2;
        }
    }

    const std::vector<quon::CheckResult> results = quon::acceptance_checks(opts);
    bool all_pass = true;
    for (std::size_t k = 0; k < results.size(); ++k) {
        const quon::CheckResult& r = results[k];
        all_pass = all_pass && r.pass;
        const std::string label =
            k < 10 ? "criterion-" + std::to_string(k + 1) : "criterion-7-extended";
        std::printf("%s %-20s %-28s %9.1f ms  %s\n", r.pass ? "PASS" : "FAIL", label.c_str(),
                    r.name.c_str(), r.ms, r.detail.c_str());
    }
    std::printf("%s\n", all_pass ? "ALL CHECKS PASSED" : "CHECK FAILURES PRESENT");
    return all_pass ? 0 : 1;
}
