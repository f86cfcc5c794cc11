#include <doctest.h>

#include <random>

#include "cyclohecke/alcove.hpp"
#include "cyclohecke/calibrated.hpp"

using namespace ch;

TEST_CASE("frame coordinates") {
    AlcoveFrame f0(Charge({0}, 2), {1});
    CHECK(f0.embed(Multipartition::empty(1)) == std::vector<int>{0});
    CHECK(f0.rho() == std::vector<int>{0});

    AlcoveFrame f(Charge({0, 3, 4}, 7), {2, 3, 1});
    CHECK(f.rho() == std::vector<int>{4, 3, 2, 1, 0, -1});
    CHECK(rho(Charge({0, 3, 4}, 7), {2, 3, 1}) == f.rho());
    CHECK(f.row_of(0) == std::pair<int, int>{3, 1});
    CHECK(f.index(1, 2) == 5);
    for (int k = 0; k <= 3; ++k) {
        Multipartition delta({Partition(2, k), Partition(3, k), Partition(1, k)});
        if (k == 0) delta = Multipartition::empty(3);
        CHECK(f.embed(delta) == std::vector<int>(6, k));
        CHECK(f.unembed(f.embed(delta)) == delta);
    }
    CHECK(f.is_multipartition({0, 1, 0, 0, 0, 0}));
    CHECK_FALSE(f.is_multipartition({0, 0, 1, 0, 0, 0}));
}

TEST_CASE("reflections") {
    AlcoveFrame f(Charge({0, 2}, 5), {2, 2});
    std::mt19937 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<int> x(4);
        for (int& v : x) v = static_cast<int>(rng() % 9) - 4;
        int a = static_cast<int>(rng() % 3);
        int b = a + 1 + static_cast<int>(rng() % (3 - a));
        int r = static_cast<int>(rng() % 5) - 2;
        auto y = reflect(x, {a, b}, r, f);
        CHECK(reflect(y, {a, b}, r, f) == x);
        int gap = (x[a] + f.rho()[a]) - (x[b] + f.rho()[b]);
        if (gap % 5 == 0) CHECK(reflect(x, {a, b}, gap / 5, f) == x);
    }
}

TEST_CASE("fundamental alcove and length") {
    AlcoveFrame f(Charge({0}, 5), {3});
    auto origin = f.embed(Multipartition::empty(1));
    CHECK(in_fundamental_alcove(origin, f));
    CHECK(alcove_length(origin, f) == 0);
    auto across = reflect(origin, {0, 2}, 1, f);
    CHECK_FALSE(in_fundamental_alcove(across, f));
    CHECK(alcove_length(across, f) == 1);
    // period larger than e leaves the alcove
    CHECK_FALSE(in_fundamental_alcove(Multipartition(std::vector<Partition>{{5}}), Charge({0}, 5), {3}));
    CHECK(count_fundamental_paths(Multipartition::empty(1), f) == 1);
}

TEST_CASE("alcove membership agrees with the classification") {
    for (const auto& [s, e] : std::vector<std::pair<std::vector<int>, int>>{{{0}, 4}, {{0, 1}, 4}, {{0, 2}, 5}}) {
        const Charge c(s, e);
        for (int n = 0; n <= 6; ++n)
            for (const auto& mp : multipartitions(n, c.level())) {
                auto hv = mp.heights();
                int h = 0;
                for (int v : hv) h += v;
                if (h == 0 || !is_s_admissible(hv, c)) continue;
                CHECK(in_fundamental_alcove(mp, c, hv) == is_cali(mp, c));
            }
    }
}

TEST_CASE("path degree equals tableau degree") {
    const Charge c({0, 1}, 4);
    const std::vector<int> hbar{2, 1};
    AlcoveFrame f(c, hbar);
    for (int n = 1; n <= 5; ++n)
        for (const auto& mp : multipartitions(n, 2, &hbar))
            for (const auto& t : standard_tableaux(mp)) {
                Path p = path_of_tableau(t, f);
                CHECK(tableau_of_path(p, f) == t);
                CHECK(path_degree(p, f) == tableau_degree(t, c, &hbar));
                CHECK(path_degree(p, f, true) == 2 * path_degree(p, f));
                CHECK(path_residues(p, f) == residue_sequence(t, c));
            }
}

TEST_CASE("fundamental paths stay in the alcove") {
    const Charge c({0}, 4);
    AlcoveFrame f(c, {2});
    Multipartition mp({{2, 1}});
    auto paths = fundamental_paths(mp, f);
    CHECK(paths.size() == count_fundamental_paths(mp, f));
    for (const auto& t : paths)
        for (int k = 0; k <= t.size(); ++k) CHECK(in_fundamental_alcove(f.embed(t.prefix_shape(k)), f));
}

TEST_CASE("wall distances") {
    AlcoveFrame f(Charge({0, 3, 4}, 7), {2, 3, 1});
    CHECK(b_alpha(1, f) == 1);
    CHECK(b_alpha_formula(1, f) == 1);
    for (int h = 1; h <= 4; ++h) {
        AlcoveFrame g(Charge({0}, 6), {h});
        CHECK(b_alpha_formula(h - 1, g) == 6 - h + 1);
        CHECK(b_alpha(h - 1, g) == 6 - h + 1);
    }
    // the quoted closed form and the geometry disagree across components
    AlcoveFrame x(Charge({0, 3}, 5), {2, 1});
    CHECK(b_alpha_formula(0, x) == 2);
    CHECK(b_alpha(0, x) == 3);
}
