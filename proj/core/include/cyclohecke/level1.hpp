#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "cyclohecke/multipartition.hpp"
#include "cyclohecke/seminormal.hpp"

namespace ch {

struct HookStats {
    int ell = 0;  // principal hook length
    int m = 0;    // hook length of the box (1, lambda_h)
};
HookStats hook_stats(const Partition& la);

bool is_row(const Partition& la);
bool is_column(const Partition& la);
// (a^x, (a-1)^y) with a > 1, x > 0, y >= 0
bool is_almost_rectangle(const Partition& la);

// Subset of (-1/2, 1/2]. Either the whole half-open interval minus finitely many
// points, or a closed interval [-radius, radius] plus finitely many points.
struct UnitaryLocus {
    bool full = false;
    mpq_class radius;
    std::vector<mpq_class> points;    // sorted, outside the interval
    std::vector<mpq_class> excluded;  // sorted, only when full

    bool contains(const mpq_class& c) const;
    bool operator==(const UnitaryLocus& o) const;
    std::string str() const;
};

// c must lie in (-1/2, 1/2].
bool in_half_circle(const mpq_class& c);
UnitaryLocus unitary_locus(const Partition& la);
bool locus_contains(const Partition& la, const mpq_class& c);

// An irrational number known to lie strictly between lo and hi. Returns nullopt
// when the window straddles an endpoint of the interval.
struct IrrationalWindow {
    mpq_class lo, hi;
};
std::optional<bool> irrational_locus_contains(const Partition& la, const IrrationalWindow& w);

// Level-one charge (0) at quantum characteristic e.
Charge level1_charge(int e, int a = 1);
Tableau column_reading_tableau(const Partition& la);
// e = 0 means q is not a root of unity.
std::vector<Tableau> q_admissible_tableaux(const Partition& la, int e);
bool is_q_admissible(const Tableau& t, int e);
// The criterion |B| < e from the hook statistic m.
bool is_calibrated_level1(const Partition& la, int e);
// D(lambda) nonzero and calibrated, decided by the crystal.
bool is_calibrated_crystal(const Partition& la, int e);

// Weight class of the column-reading tableau (weights are minus contents).
std::vector<Weight> column_reading_class(const Partition& la, int e);
// All form signs positive on D(lambda) at q = exp(2 pi i a/e). Throws unless
// D(lambda) is calibrated.
bool positivity_oracle(const Partition& la, int a, int e);

}  // namespace ch
