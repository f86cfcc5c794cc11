#include <doctest.h>

#include "cyclohecke/seminormal.hpp"

using namespace ch;

TEST_CASE("calibrated weights and classes") {
    CHECK(is_calibrated_weight({0, 1}, 0));
    CHECK_FALSE(is_calibrated_weight({0, 2, 0}, 0));
    CHECK(normalize_weight({0, -1}, 5) == Weight{0, 4});
    CHECK(weight_class({3}, 5) == std::vector<Weight>{{3}});
    CHECK(weight_class({0, 1, 2, 3}, 0).size() == 1);
    auto cls = weight_class({0, 2}, 5);
    CHECK(cls.size() == 2);
    // the classes partition the calibrated weights
    for (int e : {3, 4, 5}) {
        std::size_t total = 0;
        for (const auto& c : calibrated_classes(3, e)) total += c.size();
        CHECK(total == calibrated_weights(3, e).size());
    }
}

TEST_CASE("one dimensional classes") {
    auto triv = seminormal_module({{0, 1}}, 5, 1);
    REQUIRE(triv.dim() == 1);
    CHECK(triv.T[0].at(0, 0) == triv.q);
    auto sign = seminormal_module({{0, 4}}, 5, 1);
    CHECK(sign.T[0].at(0, 0) == Cyc(sign.field_order, -1));
    CHECK(all_relations_hold(verify_hecke_relations(triv)));
    CHECK(all_relations_hold(verify_hecke_relations(sign)));
    auto f = form_signs(sign);
    CHECK(f.signs == std::vector<int>{1});
    CHECK(is_unitary_class(sign));
}

TEST_CASE("two dimensional class") {
    auto mod = seminormal_module(weight_class({0, 2}, 5), 5, 1);
    CHECK(mod.dim() == 2);
    CHECK(mod.T.size() == 1);
    CHECK(mod.X.size() == 2);
    CHECK(all_relations_hold(verify_hecke_relations(mod)));
    auto f = form_signs(mod);
    CHECK(f.consistent);
    CHECK(hermitian_invariant(mod, f));
}

TEST_CASE("relations hold on every class, and corruption is caught") {
    for (int e : {3, 4, 5})
        for (int n = 1; n <= 4; ++n)
            for (const auto& cls : calibrated_classes(n, e)) {
                auto mod = seminormal_module(cls, e, 1);
                CHECK(all_relations_hold(verify_hecke_relations(mod)));
                CHECK(is_unitary_class(mod));
            }
    auto mod = seminormal_module(weight_class({0, 2, 4}, 7), 7, 1);
    REQUIRE(mod.dim() > 1);
    mod.T[0].set(0, 0, mod.T[0].at(0, 0) + Cyc(mod.field_order, 1));
    CHECK_FALSE(all_relations_hold(verify_hecke_relations(mod)));
}

TEST_CASE("the unsimplified ratio breaks invariance") {
    auto mod = seminormal_module(weight_class({0, 2}, 5), 5, 1);
    auto f = form_signs(mod);
    REQUIRE(hermitian_invariant(mod, f));
    const Weight& b = mod.cls[0];
    const Cyc one(mod.field_order, 1);
    Cyc x = mod.eigenvalue(b[0] - b[1]);
    int k = mod.index.at(Weight{b[1], b[0]});
    FormData g = f;
    g.A[k] = f.A[0] * (x - mod.q) / (mod.q * (x - one));
    CHECK(g.A[k] != f.A[k]);
    CHECK_FALSE(hermitian_invariant(mod, g));
}

TEST_CASE("non-primitive a can give negative signs") {
    bool negative = false;
    for (int n = 2; n <= 4 && !negative; ++n)
        for (const auto& cls : calibrated_classes(n, 5)) {
            auto mod = seminormal_module(cls, 5, 2);
            CHECK(all_relations_hold(verify_hecke_relations(mod)));
            if (!is_unitary_class(mod)) negative = true;
        }
    CHECK(negative);
}

TEST_CASE("cyclotomic quotient membership") {
    auto mod = seminormal_module({{0, 1, 2}}, 5, 1);
    CHECK(cyclotomic_membership(mod, Charge({0}, 5)));
    CHECK_FALSE(cyclotomic_membership(mod, Charge({1}, 5)));
    CHECK(cyclotomic_membership(mod, Charge({1, 5}, 5)));
}

TEST_CASE("generic q needs a surrogate") {
    CHECK_THROWS_AS(seminormal_module({{0, 1}}, 0, 1), std::invalid_argument);
    auto mod = seminormal_module(weight_class({0, 2}, 0), 0, 1, 12);
    CHECK(mod.heuristic);
    CHECK(all_relations_hold(verify_hecke_relations(mod)));
    CHECK_FALSE(seminormal_module({{0, 1}}, 5, 1).heuristic);
    CHECK_THROWS(seminormal_module({{0, 0}}, 5, 1));
}
