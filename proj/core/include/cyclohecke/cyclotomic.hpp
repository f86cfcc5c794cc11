#pragma once

#include <gmpxx.h>

#include <compare>
#include <complex>
#include <map>
#include <string>
#include <vector>

namespace ch {

// Integer coefficients, lowest degree first.
std::vector<long long> cyclotomic_polynomial(int e);
int euler_phi(int e);
// True when zeta_e^d is a primitive e-th root of unity.
bool is_primitive_power_one(long long d, int e);

// Element of Q(zeta_e), zeta_e = exp(2 pi i / e), kept reduced modulo Phi_e.
class Cyc {
public:
    Cyc() = default;
    explicit Cyc(int e, const mpq_class& x = 0);
    static Cyc zeta_power(int e, long long k);
    // Sum_k coeffs[k] zeta^k for an arbitrary length coefficient list.
    static Cyc from_coeffs(int e, const std::vector<mpq_class>& coeffs);

    int order() const { return e_; }
    // Canonical coefficients, padded with zeros to length e.
    std::vector<mpq_class> coeffs() const;
    bool is_zero() const;
    bool is_rational() const;

    Cyc operator+(const Cyc& o) const;
    Cyc operator-(const Cyc& o) const;
    Cyc operator-() const;
    Cyc operator*(const Cyc& o) const;
    Cyc operator/(const Cyc& o) const { return *this * o.inv(); }
    Cyc& operator+=(const Cyc& o) { return *this = *this + o; }
    Cyc& operator-=(const Cyc& o) { return *this = *this - o; }
    Cyc& operator*=(const Cyc& o) { return *this = *this * o; }
    Cyc inv() const;
    Cyc conj() const;
    bool operator==(const Cyc& o) const;
    bool operator!=(const Cyc& o) const { return !(*this == o); }

    std::complex<double> to_complex() const;
    std::string str() const;

private:
    int e_ = 1;
    std::vector<mpq_class> c_;  // length phi(e)
    void check(const Cyc& o) const;
};

// Orders cos(2 pi d1 / e) against cos(2 pi d2 / e) without floating point.
std::strong_ordering re_compare(long long d1, long long d2, int e);

// Sparse square matrix over Q(zeta_e), stored by columns.
class CycMatrix {
public:
    CycMatrix() = default;
    CycMatrix(int dim, int e);
    static CycMatrix identity(int dim, int e);

    int dim() const { return dim_; }
    int order() const { return e_; }
    Cyc at(int row, int col) const;
    void set(int row, int col, const Cyc& v);
    const std::map<int, Cyc>& column(int col) const { return cols_.at(col); }

    CycMatrix operator*(const CycMatrix& o) const;
    CycMatrix operator+(const CycMatrix& o) const;
    CycMatrix operator-(const CycMatrix& o) const;
    CycMatrix scaled(const Cyc& x) const;
    bool operator==(const CycMatrix& o) const;
    bool is_zero() const;
    std::size_t max_column_support() const;

private:
    int dim_ = 0;
    int e_ = 1;
    std::vector<std::map<int, Cyc>> cols_;
};

}  // namespace ch
