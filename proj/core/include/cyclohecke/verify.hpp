#pragma once

#include <string>
#include <vector>

#include "cyclohecke/multipartition.hpp"

namespace ch {

struct SweepLimits {
    int classify_n = 8;
    int classify_ell = 3;
    int seminormal_n = 5;
    int seminormal_e = 6;
    int geometry_n = 8;
    int degree_n = 6;
    int degree_ell = 3;
    int bgg_n = 8;
    int level1_n = 8;
    int level1_e = 12;
    int dominance_n = 6;

    // Caps every size bound at n (used for quick runs).
    SweepLimits capped(int n) const;
};

struct SweepResult {
    int id = 0;
    std::string name;
    bool ok = true;
    long checked = 0;
    long failures = 0;
    std::string note;
    std::vector<std::string> examples;  // first few failures, in sweep order
};

// Cylindrical charges of level ell with s_1 = 0.
std::vector<Charge> cylindrical_charges(int e, int ell, int a = 1);
// hbar with h = sum in [1, e) that is s-admissible.
std::vector<std::vector<int>> admissible_heights(const Charge& ch);

std::vector<SweepResult> classification_sweep(const SweepLimits& lim, int jobs);  // 1, 2, 3
std::vector<SweepResult> seminormal_sweep(const SweepLimits& lim, int jobs);      // 4, 5, 6
SweepResult geometry_sweep(const SweepLimits& lim, int jobs);                     // 7
SweepResult degree_sweep(const SweepLimits& lim, int jobs);                       // 8
std::vector<SweepResult> bgg_sweep(const SweepLimits& lim, int jobs);             // 9, 10, 11, 12
SweepResult level1_sweep(const SweepLimits& lim, int jobs);                       // 13
SweepResult dominance_sweep(const SweepLimits& lim, int jobs);                    // 14

// Named groups: classify, seminormal, geometry, degree, bgg, level1, dominance, all.
std::vector<std::string> suite_names();
std::vector<SweepResult> run_suite(const std::string& suite, const SweepLimits& lim, int jobs);

}  // namespace ch
