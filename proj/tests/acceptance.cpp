#include <cstdio>
#include <thread>

#include "cyclohecke/verify.hpp"

int main() {
    const int jobs = std::max(1u, std::thread::hardware_concurrency());
    auto results = ch::run_suite("all", ch::SweepLimits{}, static_cast<int>(jobs));
    bool all = true;
    for (const auto& r : results) {
        std::printf("%s %d %s checked=%ld fail=%ld%s%s\n", r.ok ? "PASS" : "FAIL", r.id, r.name.c_str(), r.checked,
                    r.failures, r.note.empty() ? "" : " ", r.note.c_str());
        for (const auto& ex : r.examples) std::printf("    %s\n", ex.c_str());
        all = all && r.ok;
    }
    return all && results.size() == 14 ? 0 : 1;
}
