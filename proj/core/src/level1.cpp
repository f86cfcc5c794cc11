#include "cyclohecke/level1.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "cyclohecke/calibrated.hpp"
#include "cyclohecke/crystal.hpp"

namespace ch {

namespace {

const mpq_class kHalf(1, 2);

mpq_class frac(long num, long den) {
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

int height(const Partition& la) { return static_cast<int>(la.size()); }

Multipartition as_mp(const Partition& la) { return Multipartition({la}); }

}  // namespace

bool in_half_circle(const mpq_class& c) { return c > -kHalf && c <= kHalf; }

HookStats hook_stats(const Partition& la) {
    if (la.empty()) throw std::invalid_argument("hook_stats: empty partition");
    const int h = height(la);
    return {la.front() + h - 1, la.front() - la.back() + h};
}

bool is_row(const Partition& la) { return height(la) == 1; }

bool is_column(const Partition& la) { return !la.empty() && la.front() == 1; }

bool is_almost_rectangle(const Partition& la) {
    if (la.empty() || la.front() <= 1) return false;
    const int a = la.front();
    for (int p : la)
        if (p != a && p != a - 1) return false;
    return true;
}

bool UnitaryLocus::contains(const mpq_class& c) const {
    if (!in_half_circle(c)) return false;
    if (full) return !std::binary_search(excluded.begin(), excluded.end(), c);
    if (abs(c) <= radius) return true;
    return std::binary_search(points.begin(), points.end(), c);
}

bool UnitaryLocus::operator==(const UnitaryLocus& o) const {
    return full == o.full && radius == o.radius && points == o.points && excluded == o.excluded;
}

std::string UnitaryLocus::str() const {
    std::ostringstream os;
    if (full) {
        os << "(-1/2,1/2]";
        if (!excluded.empty()) {
            os << " minus {";
            for (std::size_t i = 0; i < excluded.size(); ++i) os << (i ? "," : "") << excluded[i].get_str();
            os << "}";
        }
        return os.str();
    }
    os << "[" << mpq_class(-radius).get_str() << "," << radius.get_str() << "]";
    if (!points.empty()) {
        os << " u {";
        for (std::size_t i = 0; i < points.size(); ++i) os << (i ? "," : "") << points[i].get_str();
        os << "}";
    }
    return os.str();
}

UnitaryLocus unitary_locus(const Partition& la) {
    if (la.empty()) throw std::invalid_argument("unitary_locus: empty partition");
    UnitaryLocus U;
    const int n = std::accumulate(la.begin(), la.end(), 0);
    if (is_row(la)) {
        U.full = true;
        return U;
    }
    if (is_column(la)) {
        U.full = true;
        for (int e = 2; e <= n; ++e)
            for (int a = -e; a <= e; ++a) {
                mpq_class c = frac(a, e);
                if (std::gcd(a, e) == 1 && in_half_circle(c)) U.excluded.push_back(c);
            }
        std::sort(U.excluded.begin(), U.excluded.end());
        U.excluded.erase(std::unique(U.excluded.begin(), U.excluded.end()), U.excluded.end());
        return U;
    }
    auto [ell, m] = hook_stats(la);
    const bool rect = is_almost_rectangle(la);
    // x + y + 1 for (a^x, (a-1)^y); differs from m only for rectangles
    if (rect) m = height(la) + 1;
    U.radius = frac(1, ell);
    std::vector<mpq_class> pts;
    for (int L = m; L <= ell; ++L) {
        pts.push_back(frac(1, L));
        pts.push_back(frac(-1, L));
    }
    if (rect)
        for (int d = -m; d <= m; ++d)
            if (std::gcd(d, m) == 1) pts.push_back(frac(d, m));
    for (const auto& c : pts)
        if (in_half_circle(c) && abs(c) > U.radius) U.points.push_back(c);
    std::sort(U.points.begin(), U.points.end());
    U.points.erase(std::unique(U.points.begin(), U.points.end()), U.points.end());
    return U;
}

bool locus_contains(const Partition& la, const mpq_class& c) {
    if (!in_half_circle(c)) throw std::invalid_argument("locus_contains: c outside (-1/2, 1/2]");
    return unitary_locus(la).contains(c);
}

std::optional<bool> irrational_locus_contains(const Partition& la, const IrrationalWindow& w) {
    if (!(w.lo < w.hi) || w.lo < -kHalf || w.hi > kHalf)
        throw std::invalid_argument("irrational_locus_contains: bad window");
    if (la.empty()) throw std::invalid_argument("irrational_locus_contains: empty partition");
    // rows and columns only lose rational points
    if (is_row(la) || is_column(la)) return true;
    mpq_class r = frac(1, hook_stats(la).ell);
    if (w.lo >= -r && w.hi <= r) return true;
    if (w.hi <= -r || w.lo >= r) return false;
    return std::nullopt;
}

Charge level1_charge(int e, int a) { return Charge({0}, e, a); }

Tableau column_reading_tableau(const Partition& la) { return reverse_column_reading_tableau(as_mp(la), 1); }

bool is_q_admissible(const Tableau& t, int e) {
    if (e == 0) return is_standard(t);
    if (!is_standard(t)) return false;
    const Charge ch = level1_charge(e);
    if (!is_crystal_reachable(t.shape, ch)) return false;
    for (int k = t.size(); k >= 1; --k) {
        const Box& b = t.seq[k - 1];
        auto down = e_tilde(t.prefix_shape(k), ch, residue(b, ch));
        if (!down || *down != t.prefix_shape(k - 1)) return false;
    }
    return true;
}

std::vector<Tableau> q_admissible_tableaux(const Partition& la, int e) {
    std::vector<Tableau> out;
    for (const Tableau& t : standard_tableaux(as_mp(la)))
        if (is_q_admissible(t, e)) out.push_back(t);
    return out;
}

bool is_calibrated_level1(const Partition& la, int e) {
    if (e == 0) return true;
    if (la.empty()) return true;
    return hook_stats(la).m < e;
}

bool is_calibrated_crystal(const Partition& la, int e) {
    if (e == 0) return true;
    return is_no_stuttering(as_mp(la), level1_charge(e));
}

std::vector<Weight> column_reading_class(const Partition& la, int e) {
    const Tableau C = column_reading_tableau(la);
    Weight w;
    for (const Box& b : C.seq) w.push_back(b.r - b.c);
    return weight_class(w, e);
}

bool positivity_oracle(const Partition& la, int a, int e) {
    if (e < 2 || std::gcd(a, e) != 1) throw std::invalid_argument("positivity_oracle: need e >= 2 and gcd(a, e) = 1");
    if (!is_calibrated_crystal(la, e)) throw std::invalid_argument("positivity_oracle: D(lambda) is not calibrated");
    if (la.empty()) return true;
    auto mod = seminormal_module(column_reading_class(la, e), e, a);
    return is_unitary_class(mod);
}

}  // namespace ch
