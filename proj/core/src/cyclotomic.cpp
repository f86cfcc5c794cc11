#include "cyclohecke/cyclotomic.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace ch {

namespace {

std::vector<long long> poly_divide_exact(std::vector<long long> num, const std::vector<long long>& den) {
    // den is monic
    int dn = static_cast<int>(den.size()) - 1;
    int nn = static_cast<int>(num.size()) - 1;
    std::vector<long long> q(nn - dn + 1, 0);
    for (int k = nn - dn; k >= 0; --k) {
        long long coef = num[k + dn];
        q[k] = coef;
        for (int j = 0; j <= dn; ++j) num[k + j] -= coef * den[j];
    }
    for (long long x : num)
        if (x != 0) throw std::logic_error("cyclotomic polynomial division left a remainder");
    return q;
}

struct Field {
    int e = 1;
    int phi = 1;
    std::vector<long long> poly;
    // red[k] = x^k mod Phi_e for 0 <= k < max(e, 2 phi - 1)
    std::vector<std::vector<mpq_class>> red;
};

const Field& field(int e) {
    thread_local std::unordered_map<int, Field> cache;
    auto it = cache.find(e);
    if (it != cache.end()) return it->second;
    Field f;
    f.e = e;
    f.poly = cyclotomic_polynomial(e);
    f.phi = static_cast<int>(f.poly.size()) - 1;
    int top = std::max(e, 2 * f.phi - 1);
    std::vector<mpq_class> cur(f.phi, 0);
    cur[0] = 1;
    if (f.phi == 0) cur.clear();
    for (int k = 0; k < top; ++k) {
        f.red.push_back(cur);
        // multiply by x and reduce
        mpq_class carry = f.phi ? cur[f.phi - 1] : mpq_class(0);
        for (int j = f.phi - 1; j > 0; --j) cur[j] = cur[j - 1];
        if (f.phi) cur[0] = 0;
        for (int j = 0; j < f.phi; ++j) cur[j] -= carry * static_cast<long>(f.poly[j]);
    }
    return cache.emplace(e, std::move(f)).first->second;
}

}  // namespace

std::vector<long long> cyclotomic_polynomial(int e) {
    if (e < 1) throw std::invalid_argument("cyclotomic_polynomial: e must be positive");
    std::vector<long long> p(e + 1, 0);
    p[0] = -1;
    p[e] = 1;
    for (int d = 1; d < e; ++d)
        if (e % d == 0) p = poly_divide_exact(p, cyclotomic_polynomial(d));
    return p;
}

int euler_phi(int e) {
    int r = 0;
    for (int k = 1; k <= e; ++k)
        if (std::gcd(k, e) == 1) ++r;
    return r;
}

bool is_primitive_power_one(long long d, int e) {
    long long r = ((d % e) + e) % e;
    return std::gcd(r, static_cast<long long>(e)) == 1;
}

Cyc::Cyc(int e, const mpq_class& x) : e_(e) {
    if (e < 1) throw std::invalid_argument("Cyc: order must be positive");
    c_.assign(field(e).phi, 0);
    c_[0] = x;
}

Cyc Cyc::zeta_power(int e, long long k) {
    Cyc z(e);
    const Field& f = field(e);
    z.c_ = f.red[((k % e) + e) % e];
    return z;
}

Cyc Cyc::from_coeffs(int e, const std::vector<mpq_class>& coeffs) {
    Cyc z(e);
    const Field& f = field(e);
    z.c_.assign(f.phi, 0);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k] == 0) continue;
        const auto& r = f.red[k % e];
        for (int j = 0; j < f.phi; ++j) z.c_[j] += coeffs[k] * r[j];
    }
    return z;
}

std::vector<mpq_class> Cyc::coeffs() const {
    std::vector<mpq_class> out(e_, 0);
    for (std::size_t j = 0; j < c_.size(); ++j) out[j] = c_[j];
    return out;
}

bool Cyc::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool Cyc::is_rational() const {
    for (std::size_t j = 1; j < c_.size(); ++j)
        if (c_[j] != 0) return false;
    return true;
}

void Cyc::check(const Cyc& o) const {
    if (e_ != o.e_) throw std::invalid_argument("Cyc: mixed cyclotomic fields");
}

Cyc Cyc::operator+(const Cyc& o) const {
    check(o);
    Cyc r = *this;
    for (std::size_t j = 0; j < c_.size(); ++j) r.c_[j] += o.c_[j];
    return r;
}

Cyc Cyc::operator-(const Cyc& o) const {
    check(o);
    Cyc r = *this;
    for (std::size_t j = 0; j < c_.size(); ++j) r.c_[j] -= o.c_[j];
    return r;
}

Cyc Cyc::operator-() const {
    Cyc r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Cyc Cyc::operator*(const Cyc& o) const {
    check(o);
    const Field& f = field(e_);
    int phi = f.phi;
    std::vector<mpq_class> prod(phi ? 2 * phi - 1 : 0, 0);
    for (int i = 0; i < phi; ++i) {
        if (c_[i] == 0) continue;
        for (int j = 0; j < phi; ++j)
            if (o.c_[j] != 0) prod[i + j] += c_[i] * o.c_[j];
    }
    Cyc r(e_);
    for (int k = 0; k < static_cast<int>(prod.size()); ++k) {
        if (prod[k] == 0) continue;
        if (k < phi) {
            r.c_[k] += prod[k];
            continue;
        }
        const auto& red = f.red[k];
        for (int j = 0; j < phi; ++j) r.c_[j] += prod[k] * red[j];
    }
    return r;
}

Cyc Cyc::inv() const {
    if (is_zero()) throw std::domain_error("Cyc: division by zero");
    const Field& f = field(e_);
    int phi = f.phi;
    // Solve (multiplication by this) * v = 1 by Gaussian elimination.
    std::vector<std::vector<mpq_class>> M(phi, std::vector<mpq_class>(phi + 1, 0));
    for (int j = 0; j < phi; ++j) {
        Cyc basis = zeta_power(e_, j) * *this;
        for (int i = 0; i < phi; ++i) M[i][j] = basis.c_[i];
    }
    M[0][phi] = 1;
    for (int col = 0; col < phi; ++col) {
        int piv = col;
        while (M[piv][col] == 0) ++piv;
        std::swap(M[piv], M[col]);
        mpq_class p = M[col][col];
        for (int k = col; k <= phi; ++k) M[col][k] /= p;
        for (int r = 0; r < phi; ++r) {
            if (r == col || M[r][col] == 0) continue;
            mpq_class factor = M[r][col];
            for (int k = col; k <= phi; ++k) M[r][k] -= factor * M[col][k];
        }
    }
    Cyc r(e_);
    for (int i = 0; i < phi; ++i) r.c_[i] = M[i][phi];
    return r;
}

Cyc Cyc::conj() const {
    std::vector<mpq_class> out(e_, 0);
    for (std::size_t k = 0; k < c_.size(); ++k) out[(e_ - static_cast<int>(k)) % e_] += c_[k];
    return from_coeffs(e_, out);
}

bool Cyc::operator==(const Cyc& o) const {
    check(o);
    return c_ == o.c_;
}

std::complex<double> Cyc::to_complex() const {
    std::complex<double> z = 0;
    for (std::size_t k = 0; k < c_.size(); ++k)
        z += c_[k].get_d() * std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / e_);
    return z;
}

std::string Cyc::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << c_[k].get_str();
        if (k) os << "*z^" << k;
    }
    if (first) os << "0";
    return os.str();
}

std::strong_ordering re_compare(long long d1, long long d2, int e) {
    if (e < 1) throw std::invalid_argument("re_compare: e must be positive");
    auto dist = [e](long long d) {
        long long r = ((d % e) + e) % e;
        return std::min(r, static_cast<long long>(e) - r);
    };
    // cosine decreases on [0, pi]
    return dist(d2) <=> dist(d1);
}

CycMatrix::CycMatrix(int dim, int e) : dim_(dim), e_(e), cols_(dim) {}

CycMatrix CycMatrix::identity(int dim, int e) {
    CycMatrix m(dim, e);
    for (int i = 0; i < dim; ++i) m.cols_[i][i] = Cyc(e, 1);
    return m;
}

Cyc CycMatrix::at(int row, int col) const {
    const auto& c = cols_.at(col);
    auto it = c.find(row);
    return it == c.end() ? Cyc(e_) : it->second;
}

void CycMatrix::set(int row, int col, const Cyc& v) {
    if (row < 0 || row >= dim_) throw std::out_of_range("CycMatrix: row");
    if (v.is_zero())
        cols_.at(col).erase(row);
    else
        cols_.at(col)[row] = v;
}

CycMatrix CycMatrix::operator*(const CycMatrix& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("CycMatrix: dimension mismatch");
    CycMatrix r(dim_, e_);
    for (int j = 0; j < dim_; ++j) {
        std::map<int, Cyc> acc;
        for (const auto& [k, v] : o.cols_[j])
            for (const auto& [i, w] : cols_[k]) {
                auto it = acc.find(i);
                if (it == acc.end())
                    acc.emplace(i, w * v);
                else
                    it->second += w * v;
            }
        for (auto& [i, v] : acc)
            if (!v.is_zero()) r.cols_[j].emplace(i, std::move(v));
    }
    return r;
}

CycMatrix CycMatrix::operator+(const CycMatrix& o) const {
    CycMatrix r = *this;
    for (int j = 0; j < dim_; ++j)
        for (const auto& [i, v] : o.cols_.at(j)) r.set(i, j, r.at(i, j) + v);
    return r;
}

CycMatrix CycMatrix::operator-(const CycMatrix& o) const { return *this + o.scaled(Cyc(e_, -1)); }

CycMatrix CycMatrix::scaled(const Cyc& x) const {
    CycMatrix r(dim_, e_);
    for (int j = 0; j < dim_; ++j)
        for (const auto& [i, v] : cols_[j]) r.set(i, j, v * x);
    return r;
}

bool CycMatrix::operator==(const CycMatrix& o) const { return (*this - o).is_zero(); }

bool CycMatrix::is_zero() const {
    for (const auto& c : cols_)
        for (const auto& [i, v] : c)
            if (!v.is_zero()) return false;
    return true;
}

std::size_t CycMatrix::max_column_support() const {
    std::size_t best = 0;
    for (const auto& c : cols_) best = std::max(best, c.size());
    return best;
}

}  // namespace ch
