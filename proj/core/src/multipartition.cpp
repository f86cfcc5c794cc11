#include "cyclohecke/multipartition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ch {

Charge::Charge(std::vector<int> s_, int e_, int a_) : s(std::move(s_)), e(e_), a(a_) {
    if (e < 2) throw std::invalid_argument("charge: e must be at least 2");
    if (s.empty()) throw std::invalid_argument("charge: level must be positive");
    if (std::gcd(a, e) != 1) throw std::invalid_argument("charge: a must be coprime to e");
}

bool Charge::cylindrical() const {
    for (std::size_t m = 1; m < s.size(); ++m)
        if (s[m - 1] > s[m]) return false;
    return s.back() < s.front() + e;
}

Multipartition::Multipartition(std::vector<Partition> comps) : comps_(std::move(comps)) {
    for (auto& p : comps_) {
        while (!p.empty() && p.back() == 0) p.pop_back();
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (p[i] <= 0) throw std::invalid_argument("multipartition: parts must be positive");
            if (i > 0 && p[i] > p[i - 1])
                throw std::invalid_argument("multipartition: parts must weakly decrease");
        }
    }
}

Multipartition Multipartition::empty(int ell) { return Multipartition(std::vector<Partition>(ell)); }

int Multipartition::size() const {
    int n = 0;
    for (const auto& p : comps_)
        for (int x : p) n += x;
    return n;
}

std::vector<int> Multipartition::heights() const {
    std::vector<int> h;
    for (const auto& p : comps_) h.push_back(static_cast<int>(p.size()));
    return h;
}

int Multipartition::height() const {
    int h = 0;
    for (const auto& p : comps_) h += static_cast<int>(p.size());
    return h;
}

int Multipartition::part(int m, int i) const {
    const auto& p = comps_.at(m - 1);
    return i >= 1 && i <= static_cast<int>(p.size()) ? p[i - 1] : 0;
}

bool Multipartition::contains(const Box& b) const {
    if (b.m < 1 || b.m > level() || b.r < 1 || b.c < 1) return false;
    return b.c <= part(b.m, b.r);
}

Multipartition Multipartition::with_box(const Box& b) const {
    auto c = comps_;
    auto& p = c.at(b.m - 1);
    if (b.r == static_cast<int>(p.size()) + 1 && b.c == 1)
        p.push_back(1);
    else if (b.r <= static_cast<int>(p.size()) && p[b.r - 1] + 1 == b.c)
        ++p[b.r - 1];
    else
        throw std::invalid_argument("with_box: box is not addable");
    return Multipartition(std::move(c));
}

Multipartition Multipartition::without_box(const Box& b) const {
    auto c = comps_;
    auto& p = c.at(b.m - 1);
    if (b.r > static_cast<int>(p.size()) || p[b.r - 1] != b.c)
        throw std::invalid_argument("without_box: box is not at the end of its row");
    --p[b.r - 1];
    return Multipartition(std::move(c));
}

std::vector<Box> Multipartition::boxes() const {
    std::vector<Box> out;
    for (int m = 1; m <= level(); ++m)
        for (int r = 1; r <= static_cast<int>(comps_[m - 1].size()); ++r)
            for (int c = 1; c <= comps_[m - 1][r - 1]; ++c) out.push_back({r, c, m});
    return out;
}

std::string Multipartition::str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t m = 0; m < comps_.size(); ++m) {
        if (m) os << ',';
        os << '(';
        for (std::size_t i = 0; i < comps_[m].size(); ++i) {
            if (i) os << ',';
            os << comps_[m][i];
        }
        os << ')';
    }
    os << ')';
    return os.str();
}

int charged_content(const Box& b, const Charge& ch) { return ch.s.at(b.m - 1) + b.c - b.r; }

int residue(const Box& b, const Charge& ch) { return mod(charged_content(b, ch), ch.e); }

bool more_dominant(const Box& b1, const Box& b2, const Charge& ch) {
    int c1 = charged_content(b1, ch), c2 = charged_content(b2, ch);
    if (c1 != c2) return c1 > c2;
    return b1.m < b2.m;
}

std::vector<Box> addable_boxes(const Multipartition& mp, const Charge& ch, std::optional<int> res,
                               const std::vector<int>* hbar) {
    std::vector<Box> out;
    for (int m = 1; m <= mp.level(); ++m) {
        const auto& p = mp.comp(m);
        int rows = static_cast<int>(p.size());
        for (int r = 1; r <= rows + 1; ++r) {
            if (hbar && r > (*hbar).at(m - 1)) break;
            if (r > 1 && mp.part(m, r - 1) <= mp.part(m, r)) continue;
            Box b{r, mp.part(m, r) + 1, m};
            if (!res || residue(b, ch) == *res) out.push_back(b);
        }
    }
    return out;
}

std::vector<Box> removable_boxes(const Multipartition& mp, const Charge& ch, std::optional<int> res) {
    std::vector<Box> out;
    for (int m = 1; m <= mp.level(); ++m) {
        int rows = static_cast<int>(mp.comp(m).size());
        for (int r = 1; r <= rows; ++r) {
            if (mp.part(m, r) <= mp.part(m, r + 1)) continue;
            Box b{r, mp.part(m, r), m};
            if (!res || residue(b, ch) == *res) out.push_back(b);
        }
    }
    return out;
}

Tableau Tableau::from_filling(const std::vector<std::vector<std::vector<int>>>& fill) {
    std::vector<Partition> comps;
    int n = 0;
    for (const auto& comp : fill) {
        Partition p;
        for (const auto& row : comp) {
            p.push_back(static_cast<int>(row.size()));
            n += static_cast<int>(row.size());
        }
        comps.push_back(p);
    }
    Tableau t{Multipartition(comps), std::vector<Box>(n, Box{0, 0, 0})};
    for (std::size_t m = 0; m < fill.size(); ++m)
        for (std::size_t r = 0; r < fill[m].size(); ++r)
            for (std::size_t c = 0; c < fill[m][r].size(); ++c) {
                int k = fill[m][r][c];
                if (k < 1 || k > n || t.seq[k - 1].m != 0)
                    throw std::invalid_argument("tableau: entries must be a permutation of 1..n");
                t.seq[k - 1] = Box{static_cast<int>(r) + 1, static_cast<int>(c) + 1, static_cast<int>(m) + 1};
            }
    return t;
}

std::vector<std::vector<std::vector<int>>> Tableau::filling() const {
    std::vector<std::vector<std::vector<int>>> f(shape.level());
    for (int m = 1; m <= shape.level(); ++m)
        for (int x : shape.comp(m)) f[m - 1].emplace_back(x, 0);
    for (int k = 0; k < size(); ++k) {
        const Box& b = seq[k];
        f.at(b.m - 1).at(b.r - 1).at(b.c - 1) = k + 1;
    }
    return f;
}

Multipartition Tableau::prefix_shape(int k) const {
    std::vector<Partition> comps(shape.level());
    for (int j = 0; j < k; ++j) {
        const Box& b = seq[j];
        auto& p = comps[b.m - 1];
        if (static_cast<int>(p.size()) < b.r) p.resize(b.r, 0);
        p[b.r - 1] = std::max(p[b.r - 1], b.c);
    }
    for (auto& p : comps)
        for (std::size_t i = 1; i < p.size(); ++i)
            if (p[i] > p[i - 1]) throw std::invalid_argument("prefix is not a multipartition");
    return Multipartition(comps);
}

Tableau Tableau::swapped(int k) const {
    Tableau t = *this;
    std::swap(t.seq.at(k - 1), t.seq.at(k));
    return t;
}

bool is_standard(const Tableau& t) {
    Multipartition cur = Multipartition::empty(t.shape.level());
    for (const Box& b : t.seq) {
        if (!t.shape.contains(b)) return false;
        if (b.c != cur.part(b.m, b.r) + 1) return false;
        if (b.r > 1 && cur.part(b.m, b.r - 1) < b.c) return false;
        cur = cur.with_box(b);
    }
    return cur == t.shape;
}

ResidueSequence residue_sequence(const Tableau& t, const Charge& ch) {
    if (!is_standard(t)) throw std::invalid_argument("residue_sequence: tableau is not standard");
    ResidueSequence r;
    for (const Box& b : t.seq) r.push_back(residue(b, ch));
    return r;
}

Tableau reverse_column_reading_tableau(const Multipartition& mp, int m) {
    int ell = mp.level();
    if (m < 1 || m > ell) throw std::invalid_argument("reverse column reading: bad step index");
    std::vector<int> order;
    for (int j = 1; j <= ell; ++j) order.push_back(((m - 1 - j) % ell + ell) % ell + 1);
    int width = 0;
    for (const auto& p : mp.comps())
        if (!p.empty()) width = std::max(width, p[0]);
    Tableau t{mp, {}};
    for (int c = 1; c <= width; ++c)
        for (int comp : order)
            for (int r = 1; mp.part(comp, r) >= c; ++r) t.seq.push_back({r, c, comp});
    return t;
}

int tableau_degree(const Tableau& t, const Charge& ch, const std::vector<int>* hbar) {
    Multipartition cur = Multipartition::empty(t.shape.level());
    int deg = 0;
    for (const Box& b : t.seq) {
        cur = cur.with_box(b);
        int i = residue(b, ch);
        for (const Box& a : addable_boxes(cur, ch, i, hbar))
            if (more_dominant(a, b, ch)) ++deg;
        for (const Box& r : removable_boxes(cur, ch, i))
            if (more_dominant(r, b, ch)) --deg;
    }
    return deg;
}

namespace {

// Sort key realising the order on boxes: larger key means more dominant.
std::pair<int, int> box_key(const Box& b, const Charge& ch) { return {charged_content(b, ch), -b.m}; }

}  // namespace

bool dominates(const Multipartition& mu, const Multipartition& la, const Charge& ch) {
    if (mu.size() != la.size()) throw std::invalid_argument("dominates: sizes differ");
    std::map<int, std::vector<std::pair<int, int>>> A, B;
    for (const Box& b : mu.boxes()) A[residue(b, ch)].push_back(box_key(b, ch));
    for (const Box& b : la.boxes()) B[residue(b, ch)].push_back(box_key(b, ch));
    for (auto& [i, ka] : A) {
        auto it = B.find(i);
        if (it == B.end() || it->second.size() != ka.size()) return false;
        auto& kb = it->second;
        std::sort(ka.rbegin(), ka.rend());
        std::sort(kb.rbegin(), kb.rend());
        for (std::size_t k = 0; k < ka.size(); ++k)
            if (kb[k] > ka[k]) return false;
    }
    return A.size() == B.size();
}

bool dominates_exhaustive(const Multipartition& mu, const Multipartition& la, const Charge& ch) {
    if (mu.size() != la.size()) throw std::invalid_argument("dominates: sizes differ");
    auto src = mu.boxes();
    auto dst = la.boxes();
    std::vector<bool> used(dst.size(), false);
    std::function<bool(std::size_t)> place = [&](std::size_t k) {
        if (k == src.size()) return true;
        for (std::size_t j = 0; j < dst.size(); ++j) {
            if (used[j] || residue(src[k], ch) != residue(dst[j], ch)) continue;
            if (!(dst[j] == src[k] || more_dominant(src[k], dst[j], ch) ||
                  box_key(src[k], ch) == box_key(dst[j], ch)))
                continue;
            used[j] = true;
            if (place(k + 1)) return true;
            used[j] = false;
        }
        return false;
    };
    return place(0);
}

Admissibility s_admissibility(const std::vector<int>& hbar, const Charge& ch) {
    int ell = ch.level();
    if (static_cast<int>(hbar.size()) != ell) throw std::invalid_argument("admissibility: level mismatch");
    Admissibility out;
    bool ok = true;
    for (int m = 1; m <= ell; ++m) {
        int bound = m == 1 ? ch.e + ch.s[0] - ch.s[ell - 1] : ch.s[m - 1] - ch.s[m - 2];
        if (hbar[m - 1] > bound) ok = false;
        if (hbar[m - 1] < bound) out.step_changes.push_back(m);
    }
    out.admissible = ok && !out.step_changes.empty();
    return out;
}

std::vector<Partition> partitions(int n, int max_len) {
    std::vector<Partition> out;
    Partition cur;
    std::function<void(int, int)> rec = [&](int left, int maxpart) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        if (max_len >= 0 && static_cast<int>(cur.size()) >= max_len) return;
        for (int p = std::min(left, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(left - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

std::vector<Multipartition> multipartitions(int n, int ell, const std::vector<int>* hbar) {
    std::vector<Multipartition> out;
    std::vector<Partition> cur(ell);
    std::function<void(int, int)> rec = [&](int m, int left) {
        if (m == ell - 1) {
            for (auto& p : partitions(left, hbar ? (*hbar)[m] : -1)) {
                cur[m] = p;
                out.emplace_back(cur);
            }
            return;
        }
        for (int k = left; k >= 0; --k)
            for (auto& p : partitions(k, hbar ? (*hbar)[m] : -1)) {
                cur[m] = p;
                rec(m + 1, left - k);
            }
    };
    if (ell > 0) rec(0, n);
    return out;
}

std::vector<Tableau> standard_tableaux(const Multipartition& mp) {
    std::vector<Tableau> out;
    Charge dummy(std::vector<int>(mp.level(), 0), 2);
    Tableau cur{mp, {}};
    Multipartition shape = Multipartition::empty(mp.level());
    int n = mp.size();
    std::function<void()> rec = [&]() {
        if (static_cast<int>(cur.seq.size()) == n) {
            out.push_back(cur);
            return;
        }
        for (const Box& b : addable_boxes(shape, dummy)) {
            if (!mp.contains(b)) continue;
            Multipartition saved = shape;
            shape = shape.with_box(b);
            cur.seq.push_back(b);
            rec();
            cur.seq.pop_back();
            shape = saved;
        }
    };
    rec();
    return out;
}

std::uint64_t count_standard_tableaux(const Multipartition& mp) {
    std::map<Multipartition, std::uint64_t> memo;
    Charge dummy(std::vector<int>(mp.level(), 0), 2);
    std::function<std::uint64_t(const Multipartition&)> rec = [&](const Multipartition& x) -> std::uint64_t {
        if (x.size() == 0) return 1;
        auto it = memo.find(x);
        if (it != memo.end()) return it->second;
        std::uint64_t total = 0;
        for (const Box& b : removable_boxes(x, dummy)) total += rec(x.without_box(b));
        memo[x] = total;
        return total;
    };
    return rec(mp);
}

}  // namespace ch
