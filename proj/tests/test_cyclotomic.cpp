#include <doctest.h>

#include <cmath>

#include "cyclohecke/cyclotomic.hpp"

using namespace ch;

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == std::vector<long long>{-1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<long long>{1, 0, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<long long>{1, -1, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<long long>{1, 0, -1, 0, 1});
    for (int e = 1; e <= 30; ++e) CHECK(static_cast<int>(cyclotomic_polynomial(e).size()) == euler_phi(e) + 1);
}

TEST_CASE("field arithmetic") {
    for (int e : {3, 4, 5, 6, 7, 9, 12}) {
        Cyc z = Cyc::zeta_power(e, 1);
        CHECK(z * Cyc::zeta_power(e, e - 1) == Cyc(e, 1));
        CHECK(z.conj() == Cyc::zeta_power(e, e - 1));
        Cyc x = z + Cyc(e, mpq_class(3, 2)) * Cyc::zeta_power(e, 2);
        CHECK(x * x.inv() == Cyc(e, 1));
        CHECK((x - x).is_zero());
        auto zc = x.to_complex();
        auto expect = std::polar(1.0, 2 * M_PI / e) + 1.5 * std::polar(1.0, 4 * M_PI / e);
        CHECK(std::abs(zc - expect) < 1e-9);
    }
    for (int e : {3, 5, 7, 11}) {
        Cyc s(e);
        for (int k = 0; k < e; ++k) s += Cyc::zeta_power(e, k);
        CHECK(s.is_zero());
    }
    CHECK(Cyc(5, 2).is_rational());
    CHECK_FALSE(Cyc::zeta_power(5, 1).is_rational());
}

TEST_CASE("real part comparison") {
    for (int e = 3; e <= 12; ++e) {
        CHECK(re_compare(0, 1, e) == std::strong_ordering::greater);
        CHECK(re_compare(e - 1, 1, e) == std::strong_ordering::equal);
    }
    CHECK(re_compare(2, 1, 5) == std::strong_ordering::less);
    for (int e = 2; e <= 24; ++e)
        for (int d1 = 0; d1 < e; ++d1)
            for (int d2 = 0; d2 < e; ++d2) {
                double a = std::cos(2 * M_PI * d1 / e), b = std::cos(2 * M_PI * d2 / e);
                auto r = re_compare(d1, d2, e);
                if (std::abs(a - b) > 1e-9) CHECK((r < 0) == (a < b));
                else CHECK(r == 0);
            }
}

TEST_CASE("primitive powers") {
    CHECK(is_primitive_power_one(1, 6));
    CHECK(is_primitive_power_one(5, 6));
    CHECK_FALSE(is_primitive_power_one(2, 6));
}

TEST_CASE("matrices") {
    CycMatrix I = CycMatrix::identity(3, 5);
    CycMatrix M(3, 5);
    M.set(0, 1, Cyc::zeta_power(5, 1));
    M.set(2, 0, Cyc(5, 2));
    CHECK(M * I == M);
    CHECK(I * M == M);
    CHECK((M - M).is_zero());
    CHECK((M + M) == M.scaled(Cyc(5, 2)));
    CHECK(M.at(1, 1).is_zero());
    CHECK(M.max_column_support() == 1);
}
