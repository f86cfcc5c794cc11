#include <doctest.h>

#include <random>
#include <stdexcept>

#include "cyclohecke/multipartition.hpp"

using namespace ch;

namespace {
const Charge kS3({-1, 2, 0}, 4);
const Multipartition kLam({{2, 1}, {4, 2, 1}, {5}});
}  // namespace

TEST_CASE("charged content and residue") {
    CHECK(charged_content({1, 1, 1}, kS3) == -1);
    CHECK(charged_content({3, 1, 2}, kS3) == 0);
    CHECK(charged_content({1, 1, 3}, kS3) == 0);
    CHECK(residue({1, 1, 1}, kS3) == 3);
    CHECK(residue({1, 5, 3}, kS3) == 0);
    CHECK(residue({3, 1, 2}, kS3) == 0);
}

TEST_CASE("reverse column reading tableau") {
    Tableau t = reverse_column_reading_tableau(kLam, 1);
    CHECK(is_standard(t));
    std::vector<std::vector<std::vector<int>>> fill{{{5, 10}, {6}}, {{2, 8, 12, 14}, {3, 9}, {4}}, {{1, 7, 11, 13, 15}}};
    CHECK(t.filling() == fill);
    CHECK(residue_sequence(t, kS3) == ResidueSequence{0, 2, 1, 0, 3, 2, 1, 3, 2, 0, 2, 0, 3, 1, 0});
}

TEST_CASE("reverse reading tableau, small shapes") {
    Tableau e = reverse_column_reading_tableau(Multipartition::empty(2), 1);
    CHECK(e.size() == 0);
    CHECK(residue_sequence(e, Charge({0, 1}, 3)).empty());

    Tableau one = reverse_column_reading_tableau(Multipartition(std::vector<Partition>{{1}}), 1);
    CHECK(one.filling() == std::vector<std::vector<std::vector<int>>>{{{1}}});
    CHECK(residue_sequence(one, Charge({0}, 2)) == ResidueSequence{0});

    Tableau sq = reverse_column_reading_tableau(Multipartition(std::vector<Partition>{{2, 2}}), 1);
    CHECK(sq.filling() == std::vector<std::vector<std::vector<int>>>{{{1, 3}, {2, 4}}});
}

TEST_CASE("tableau from filling round trip") {
    Tableau t = reverse_column_reading_tableau(kLam, 1);
    CHECK(Tableau::from_filling(t.filling()) == t);
    CHECK(t.prefix_shape(t.size()) == kLam);
    CHECK(t.prefix_shape(0) == Multipartition::empty(3));
}

TEST_CASE("tableau degree by hand") {
    const Charge c({0}, 2);
    Tableau row = Tableau::from_filling({{{1, 2}}});
    Tableau col = Tableau::from_filling({{{1}, {2}}});
    CHECK(tableau_degree(row, c) == 0);
    // second box has residue 1 and the addable box (1,2) sits above it
    CHECK(tableau_degree(col, c) == 1);
    CHECK(tableau_degree(Tableau::from_filling({{{1}}}), c) == 0);
}

TEST_CASE("step change tableau has degree zero") {
    const Charge c({0, 3, 4}, 7);
    const std::vector<int> hbar{2, 3, 1};
    auto adm = s_admissibility(hbar, c);
    REQUIRE(adm.admissible);
    CHECK(std::find(adm.step_changes.begin(), adm.step_changes.end(), 1) != adm.step_changes.end());
    for (int n = 1; n <= 7; ++n)
        for (const auto& mp : multipartitions(n, 3, &hbar))
            for (int m : adm.step_changes) {
                if (mp.comp(m).empty()) continue;
                CHECK(tableau_degree(reverse_column_reading_tableau(mp, m), c, &hbar) == 0);
            }
}

TEST_CASE("admissibility") {
    CHECK(is_s_admissible({1}, Charge({0}, 2)));
    CHECK_FALSE(is_s_admissible({2}, Charge({0}, 2)));
    // equality everywhere: h_1 = e + s_1 - s_2, h_2 = s_2 - s_1
    CHECK_FALSE(is_s_admissible({3, 2}, Charge({0, 2}, 5)));
    CHECK(is_s_admissible({2, 2}, Charge({0, 2}, 5)));
}

TEST_CASE("addable and removable boxes") {
    const Charge c({0, 1}, 3);
    auto add = addable_boxes(Multipartition::empty(2), c);
    REQUIRE(add.size() == 2);
    for (const Box& b : add) {
        CHECK(b.r == 1);
        CHECK(b.c == 1);
        CHECK(residue(b, c) == mod(c.s[b.m - 1], 3));
    }
    CHECK(removable_boxes(Multipartition::empty(2), c).empty());

    const Charge c1({0}, 3);
    auto rem = removable_boxes(Multipartition(std::vector<Partition>{{2, 1}}), c1);
    REQUIRE(rem.size() == 2);
    CHECK(std::find(rem.begin(), rem.end(), Box{1, 2, 1}) != rem.end());
    CHECK(std::find(rem.begin(), rem.end(), Box{2, 1, 1}) != rem.end());
    CHECK(residue({1, 2, 1}, c1) == 1);
    CHECK(residue({2, 1, 1}, c1) == 2);
    CHECK(removable_boxes(Multipartition(std::vector<Partition>{{2, 1}}), c1, 1).size() == 1);

    for (int k = 1; k <= 6; ++k) CHECK(removable_boxes(Multipartition(std::vector<Partition>{{k}}), c1).size() == 1);
}

TEST_CASE("hbar caps addable rows") {
    const Charge c({0}, 5);
    const std::vector<int> hbar{1};
    for (const Box& b : addable_boxes(Multipartition(std::vector<Partition>{{3}}), c, std::nullopt, &hbar)) CHECK(b.r == 1);
}

TEST_CASE("dominance: reflexive, residue content, agrees with exhaustive search") {
    const Charge c({0, 2}, 3);
    auto mps = multipartitions(4, 2);
    for (const auto& mp : mps) CHECK(dominates(mp, mp, c));
    CHECK_FALSE(dominates(Multipartition(std::vector<Partition>{{2}}), Multipartition(std::vector<Partition>{{1, 1}}), Charge({0}, 3)));
    CHECK_THROWS_AS(dominates(Multipartition(std::vector<Partition>{{2}}), Multipartition(std::vector<Partition>{{1}}), Charge({0}, 3)), std::invalid_argument);

    std::mt19937 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const auto& a = mps[rng() % mps.size()];
        const auto& b = mps[rng() % mps.size()];
        CHECK(dominates(a, b, c) == dominates_exhaustive(a, b, c));
    }
}

TEST_CASE("counting") {
    CHECK(partitions(5).size() == 7);
    CHECK(partitions(0).size() == 1);
    CHECK(multipartitions(2, 2).size() == 5);
    CHECK(count_standard_tableaux(Multipartition(std::vector<Partition>{{2, 1}})) == 2);
    CHECK(count_standard_tableaux(Multipartition(std::vector<Partition>{{1}, {1}})) == 2);
    for (const auto& mp : multipartitions(4, 2))
        CHECK(standard_tableaux(mp).size() == count_standard_tableaux(mp));
}

TEST_CASE("charge validation") {
    CHECK(Charge({0, 1, 4}, 7).cylindrical());
    CHECK_FALSE(Charge({0, 4}, 3).cylindrical());
    CHECK_THROWS(Charge({0}, 4, 2));
}
