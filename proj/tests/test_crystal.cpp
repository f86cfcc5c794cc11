#include <doctest.h>

#include "cyclohecke/calibrated.hpp"
#include "cyclohecke/crystal.hpp"

using namespace ch;

TEST_CASE("i-words") {
    const Charge c({0, 2}, 3);
    for (int i = 0; i < 3; ++i) {
        IWord w = i_word(Multipartition::empty(2), c, i);
        int expect = 0;
        for (int s : c.s) expect += mod(s, 3) == i;
        CHECK(static_cast<int>(w.size()) == expect);
        for (const auto& l : w) CHECK(l.sign == +1);
    }

    IWord w = i_word(Multipartition(std::vector<Partition>{{1}}), Charge({0}, 2), 1);
    REQUIRE(w.size() == 2);
    CHECK(w[0] == IWordLetter{{2, 1, 1}, +1});
    CHECK(w[1] == IWordLetter{{1, 2, 1}, +1});

    IWord mp{{{1, 2, 1}, -1}, {{2, 1, 1}, +1}};
    CHECK(reduced_i_word(mp).empty());
    IWord keep{{{1, 2, 1}, +1}, {{2, 1, 1}, -1}};
    CHECK(reduced_i_word(keep) == keep);
}

TEST_CASE("operators on the empty multipartition") {
    const Charge c({0, 1}, 3);
    for (int i = 0; i < 3; ++i) CHECK_FALSE(e_tilde(Multipartition::empty(2), c, i).has_value());
    auto f = f_tilde(Multipartition::empty(2), c, 0);
    REQUIRE(f.has_value());
    CHECK(*f == Multipartition(std::vector<Partition>{{1}, {}}));
    auto tie = f_tilde(Multipartition::empty(2), Charge({0, 0}, 3), 0);
    REQUIRE(tie.has_value());
    CHECK(*tie == Multipartition(std::vector<Partition>{{1}, {}}));
    CHECK_FALSE(f_tilde(Multipartition::empty(2), c, 2).has_value());
}

TEST_CASE("build from word") {
    const Charge c({0}, 3);
    CHECK(*build_from_word({}, c) == Multipartition::empty(1));
    CHECK_FALSE(build_from_word({1}, c).has_value());
    CHECK(*build_from_word({0, 1, 2}, c) == Multipartition(std::vector<Partition>{{3}}));
}

TEST_CASE("e_tilde undoes f_tilde") {
    const Charge c({0, 1, 4}, 5);
    for (const auto& layer : crystal_layers(6, c))
        for (const auto& mp : layer) {
            CHECK(is_crystal_reachable(mp, c));
            for (int i = 0; i < 5; ++i) {
                auto f = f_tilde(mp, c, i);
                if (f) CHECK(*e_tilde(*f, c, i) == mp);
                auto e = e_tilde(mp, c, i);
                if (e) CHECK(*f_tilde(*e, c, i) == mp);
            }
        }
}

TEST_CASE("layer sizes at level one, e = 2") {
    // 2-restricted partitions: distinct parts
    auto layers = crystal_layers(8, Charge({0}, 2));
    std::vector<std::size_t> sizes;
    for (const auto& l : layers) sizes.push_back(l.size());
    CHECK(sizes == std::vector<std::size_t>{1, 1, 1, 2, 2, 3, 4, 5, 6});
}

TEST_CASE("no-stuttering") {
    CHECK(is_no_stuttering(Multipartition::empty(3), Charge({0, 1, 2}, 4)));
    const Charge big({14, 16, 17, 23}, 12);
    CHECK_FALSE(is_no_stuttering(Multipartition(std::vector<Partition>{{12, 12, 10}, {13, 1}, {13}, {10, 9}}), big));

    const Charge c({0, 2}, 4);
    NoStutteringOracle ns(c);
    for (int n = 0; n <= 6; ++n)
        for (const auto& mp : enumerate_cali(n, c)) CHECK(ns(mp));
}
