// Acceptance suite entry point: runs every verification criterion at the
// requested level, prints one pass/fail line per criterion, and exits
// nonzero if any criterion failed.

#include <cstring>
#include <iostream>
#include <string>
#include <thread>

#include "irg/verify.hpp"

int main(int argc, char** argv) {
    std::string level = "full";
    std::string workdir = "acceptance-work";
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        auto next = [&]() -> std::string {
            if (i + 1 >= argc) {
                std::cerr << "missing value for " << arg << "\n";
                std::exit(1);
            }
            return argv[++i];
        };
        if (arg == "--level") level = next();
        else if (arg == "--workdir") workdir = next();
        else if (arg == "--threads") threads = static_cast<unsigned>(std::stoul(next()));
        else {
            std::cerr << "usage: acceptance [--level fast|full] [--workdir DIR] "
                         "[--threads N]\n";
            return 1;
        }
    }
    auto lvl = level == "fast" ? irg::verify::Level::fast : irg::verify::Level::full;
    auto report = irg::verify::run(lvl, threads, workdir, &std::cout);
    std::cout << (report.all_pass ? "ALL CRITERIA PASSED" : "SOME CRITERIA FAILED")
              << "  (total " << report.total_runtime_s << " s)\n";
    return report.all_pass ? 0 : 2;
}
