#include <doctest.h>

#include <numeric>

#include "cyclohecke/level1.hpp"

using namespace ch;

namespace {
mpq_class q(long a, long b) {
    mpq_class x(a, b);
    x.canonicalize();
    return x;
}
}  // namespace

TEST_CASE("hook statistics and shape families") {
    for (int n = 1; n <= 6; ++n) {
        CHECK(hook_stats(Partition{n}).ell == n);
        CHECK(hook_stats(Partition{n}).m == 1);
    }
    CHECK(hook_stats({2, 1}).ell == 3);
    CHECK(hook_stats({2, 1}).m == 3);
    CHECK(is_row({4}));
    CHECK(is_column({1, 1, 1}));
    CHECK(is_almost_rectangle({3, 3, 2}));
    CHECK(is_almost_rectangle({2, 2}));
    CHECK_FALSE(is_almost_rectangle({3, 1}));
    CHECK_FALSE(is_almost_rectangle({1, 1}));
    // (a^x, (a-1)^y) with y > 0: m = x + y + 1
    for (int a = 2; a <= 4; ++a)
        for (int x = 1; x <= 3; ++x)
            for (int y = 1; y <= 3; ++y) {
                Partition la(x, a);
                la.insert(la.end(), y, a - 1);
                CHECK(hook_stats(la).m == x + y + 1);
            }
    CHECK_THROWS(hook_stats({}));
}

TEST_CASE("loci of rows, columns and small shapes") {
    auto row = unitary_locus({5});
    CHECK(row.full);
    CHECK(row.excluded.empty());
    CHECK(row.contains(q(1, 2)));
    CHECK(locus_contains({5}, q(1, 2)));

    auto col = unitary_locus({1, 1, 1});
    CHECK(col.full);
    CHECK(col.excluded == std::vector<mpq_class>{q(-1, 3), q(1, 3), q(1, 2)});
    CHECK(col.contains(q(1, 4)));
    CHECK_FALSE(col.contains(q(1, 3)));

    auto hook = unitary_locus({2, 1});
    CHECK_FALSE(hook.full);
    CHECK(hook.radius == q(1, 3));
    CHECK(hook.points.empty());
    CHECK(hook.str() == "[-1/3,1/3]");
    CHECK_FALSE(hook.contains(q(1, 2)));

    auto rect = unitary_locus({2, 2, 2, 2});
    CHECK(rect.radius == q(1, 5));
    CHECK(rect.contains(q(2, 5)));
    CHECK(rect.contains(q(-2, 5)));
    CHECK_FALSE(rect.contains(q(1, 3)));

    auto gen = unitary_locus({3, 2, 1});
    CHECK(gen.radius == q(1, 5));
    CHECK(gen.points.empty());
    CHECK_FALSE(gen.contains(q(1, 4)));

    CHECK_THROWS(locus_contains({2, 1}, q(3, 5)));
    CHECK_THROWS(locus_contains({2, 1}, q(-1, 2)));
}

TEST_CASE("irrational parameters") {
    CHECK(*irrational_locus_contains({2, 1}, {q(1, 10), q(1, 5)}));
    CHECK_FALSE(*irrational_locus_contains({2, 1}, {q(2, 5), q(9, 20)}));
    CHECK_FALSE(irrational_locus_contains({2, 1}, {q(3, 10), q(7, 20)}).has_value());
    CHECK(*irrational_locus_contains({4}, {q(2, 5), q(9, 20)}));
    CHECK(*irrational_locus_contains({1, 1, 1, 1}, {q(2, 5), q(9, 20)}));
}

TEST_CASE("small e outside the locus") {
    // m = 5 for (3,2,1)
    for (int e = 2; e < 5; ++e)
        for (int a = 1; 2 * a <= e; ++a)
            if (std::gcd(a, e) == 1 && q(a, e) > q(1, 5)) CHECK_FALSE(locus_contains({3, 2, 1}, q(a, e)));
}

TEST_CASE("admissible tableaux") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& la : partitions(n)) {
            CHECK(q_admissible_tableaux(la, 0).size() == count_standard_tableaux(Multipartition(std::vector<Partition>{la})));
            for (int e = 2; e <= 7; ++e) {
                if (!is_calibrated_crystal(la, e)) continue;
                CHECK(is_q_admissible(column_reading_tableau(la), e));
                CHECK(q_admissible_tableaux(la, e).size() == column_reading_class(la, e).size());
            }
        }
}

TEST_CASE("calibration criteria") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& la : partitions(n))
            for (int e = 2; e <= 8; ++e) {
                int m = hook_stats(la).m;
                if (m < e) CHECK(is_calibrated_crystal(la, e));
                if (m > e) CHECK_FALSE(is_calibrated_crystal(la, e));
                CHECK(is_calibrated_level1(la, e) == (m < e));
            }
}

TEST_CASE("almost rectangles at e = x + y + 1 are one dimensional and positive") {
    for (const Partition& la : std::vector<Partition>{{2, 1}, {2, 2}, {3, 3}, {3, 2}, {3, 3, 2}, {2, 2, 1}}) {
        const int e = static_cast<int>(la.size()) + 1;
        REQUIRE(is_calibrated_crystal(la, e));
        CHECK(column_reading_class(la, e).size() == 1);
        for (int d = 1; d < e; ++d)
            if (std::gcd(d, e) == 1) CHECK(positivity_oracle(la, d, e));
    }
}

TEST_CASE("oracle agrees with the closed form") {
    CHECK(positivity_oracle({2, 1}, 2, 5) == locus_contains({2, 1}, q(2, 5)));
    CHECK_THROWS(positivity_oracle({2, 1}, 1, 2));
    for (int n = 1; n <= 5; ++n)
        for (const auto& la : partitions(n))
            for (int e = 2; e <= 9; ++e) {
                if (!is_calibrated_crystal(la, e)) continue;
                for (int a = -(e - 1) / 2; a <= e / 2; ++a) {
                    if (std::gcd(a, e) != 1) continue;
                    CHECK(positivity_oracle(la, a, e) == locus_contains(la, q(a, e)));
                }
            }
}
