#include "cyclohecke/calibrated.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "cyclohecke/crystal.hpp"

namespace ch {

std::vector<int> BorderMultiset::reading_word() const {
    std::vector<int> w;
    for (const auto& c : per_component) w.insert(w.end(), c.begin(), c.end());
    return w;
}

std::vector<int> BorderMultiset::sorted() const {
    auto w = reading_word();
    std::sort(w.begin(), w.end());
    return w;
}

std::size_t BorderMultiset::size() const {
    std::size_t n = 0;
    for (const auto& c : per_component) n += c.size();
    return n;
}

BorderMultiset border_multiset(const Multipartition& mp, const Charge& ch) {
    if (mp.level() != ch.level()) throw std::invalid_argument("border_multiset: level mismatch");
    BorderMultiset b;
    for (int m = 1; m <= mp.level(); ++m) {
        std::vector<int> row_ends;
        const auto& p = mp.comp(m);
        for (int r = static_cast<int>(p.size()); r >= 1; --r)
            row_ends.push_back(charged_content(Box{r, p[r - 1], m}, ch));
        b.per_component.push_back(std::move(row_ends));
    }
    return b;
}

bool is_increasing(const BorderMultiset& b) {
    auto w = b.reading_word();
    return std::adjacent_find(w.begin(), w.end(), std::greater_equal<int>()) == w.end();
}

bool has_period_at_most_e(const BorderMultiset& b, int e) {
    auto w = b.reading_word();
    if (w.empty()) return true;
    auto [lo, hi] = std::minmax_element(w.begin(), w.end());
    return *hi - *lo <= e - 1;
}

bool is_cylindrical_mp(const Multipartition& mp, const Charge& ch) {
    if (!ch.cylindrical() || mp.level() != ch.level()) return false;
    const int ell = mp.level();
    for (int j = 1; j < ell; ++j) {
        int shift = ch.s[j] - ch.s[j - 1];
        int rows = static_cast<int>(mp.comp(j + 1).size());
        for (int k = 1; k + shift <= rows; ++k)
            if (mp.part(j, k) < mp.part(j + 1, k + shift)) return false;
    }
    int shift = ch.e + ch.s[0] - ch.s[ell - 1];
    int rows = static_cast<int>(mp.comp(1).size());
    for (int k = 1; k + shift <= rows; ++k)
        if (mp.part(ell, k) < mp.part(1, k + shift)) return false;
    return true;
}

bool flotw_residue_condition(const Multipartition& mp, const Charge& ch) {
    std::map<int, std::set<int>> by_length;
    for (int m = 1; m <= mp.level(); ++m) {
        const auto& p = mp.comp(m);
        for (int r = 1; r <= static_cast<int>(p.size()); ++r)
            by_length[p[r - 1]].insert(residue(Box{r, p[r - 1], m}, ch));
    }
    for (const auto& [len, res] : by_length)
        if (static_cast<int>(res.size()) == ch.e) return false;
    return true;
}

bool is_flotw(const Multipartition& mp, const Charge& ch) {
    return is_cylindrical_mp(mp, ch) && flotw_residue_condition(mp, ch);
}

bool satisfies_border_conditions(const Multipartition& mp, const Charge& ch) {
    auto b = border_multiset(mp, ch);
    return has_period_at_most_e(b, ch.e) && is_increasing(b);
}

bool is_cylindrical_mp_from_border(const Multipartition& mp, const Charge& ch) {
    if (!ch.cylindrical()) throw std::invalid_argument("is_cylindrical_mp_from_border: charge not cylindrical");
    if (!satisfies_border_conditions(mp, ch))
        throw std::invalid_argument("is_cylindrical_mp_from_border: border conditions fail");
    auto min_content = [&](int j) { return ch.s[j - 1] - static_cast<int>(mp.comp(j).size()) + 1; };
    int first = 0;
    for (int j = 1; j <= mp.level(); ++j) {
        if (mp.comp(j).empty()) continue;
        if (!first) first = j;
        if (j >= 2 && !(ch.s[j - 2] < min_content(j))) return false;
    }
    if (first && !(ch.s.back() < min_content(first) + ch.e)) return false;
    return true;
}

bool is_cali_literal(const Multipartition& mp, const Charge& ch) {
    if (!ch.cylindrical()) throw std::invalid_argument("is_cali: charge not cylindrical");
    return satisfies_border_conditions(mp, ch) && is_cylindrical_mp(mp, ch);
}

bool is_cali(const Multipartition& mp, const Charge& ch) {
    return is_cali_literal(mp, ch) && flotw_residue_condition(mp, ch);
}

std::vector<Multipartition> enumerate_cali(int n, const Charge& ch) {
    if (!ch.cylindrical()) throw std::invalid_argument("enumerate_cali: charge not cylindrical");
    auto layers = crystal_layers(n, ch);
    std::vector<Multipartition> out;
    for (const auto& mp : layers.back())
        if (is_cali(mp, ch)) out.push_back(mp);
    return out;
}

int SkewShape::size() const {
    int n = 0;
    for (auto [lo, hi] : rows) n += hi - lo + 1;
    return n;
}

SkewShape skew_shape(const Multipartition& mp, const Charge& ch) {
    if (!is_cali(mp, ch)) throw std::invalid_argument("skew_shape: not calibrated");
    SkewShape sh;
    for (int m = mp.level(); m >= 1; --m) {
        const auto& p = mp.comp(m);
        for (int r = 1; r <= static_cast<int>(p.size()); ++r)
            sh.rows.emplace_back(ch.s[m - 1] + 1 - r, ch.s[m - 1] + p[r - 1] - r);
    }
    return sh;
}

namespace {

struct ChargedKey {
    std::vector<Partition> comps;
    std::vector<int> s;
    auto operator<=>(const ChargedKey&) const = default;
};

std::vector<ChargedMultipartition> dedupe(std::vector<ChargedMultipartition> v) {
    std::set<ChargedKey> seen;
    std::vector<ChargedMultipartition> out;
    for (auto& cm : v)
        if (seen.insert({cm.first.comps(), cm.second.s}).second) out.push_back(std::move(cm));
    return out;
}

}  // namespace

std::vector<ChargedMultipartition> splittings_of_skew(const SkewShape& sh, int e) {
    const int h = static_cast<int>(sh.rows.size());
    if (h == 0) return {};
    for (auto [lo, hi] : sh.rows)
        if (hi < lo) throw std::invalid_argument("splittings_of_skew: empty row");
    auto start_col = [&](int x) { return sh.rows[x].first + x; };  // x is 0-based from the top
    std::vector<int> optional_gaps;
    std::vector<bool> forced(h - 1, false);
    for (int x = 0; x + 1 < h; ++x) {
        if (start_col(x) != start_col(x + 1))
            forced[x] = true;
        else
            optional_gaps.push_back(x);
    }
    std::vector<ChargedMultipartition> out;
    const std::size_t choices = std::size_t{1} << optional_gaps.size();
    for (std::size_t mask = 0; mask < choices; ++mask) {
        std::vector<bool> cut = forced;
        for (std::size_t k = 0; k < optional_gaps.size(); ++k)
            if (mask >> k & 1) cut[optional_gaps[k]] = true;
        std::vector<Partition> comps;
        std::vector<int> s;
        int top = 0;
        for (int x = 0; x < h; ++x) {
            if (x + 1 < h && !cut[x]) continue;
            Partition p;
            for (int r = top; r <= x; ++r) p.push_back(sh.rows[r].second - sh.rows[r].first + 1);
            comps.push_back(p);
            s.push_back(sh.rows[top].first);
            top = x + 1;
        }
        std::reverse(comps.begin(), comps.end());
        std::reverse(s.begin(), s.end());
        Charge ch(s, e);
        if (!ch.cylindrical()) continue;
        Multipartition mp(comps);
        if (!is_cali(mp, ch)) continue;
        out.emplace_back(std::move(mp), std::move(ch));
    }
    return out;
}

std::vector<ChargedMultipartition> pad_with_empty(const Multipartition& mp, const Charge& ch, int ell) {
    const int k = ell - mp.level();
    if (k < 0) throw std::invalid_argument("pad_with_empty: target level too small");
    if (k == 0) return {{mp, ch}};
    auto [smin, smax] = std::minmax_element(ch.s.begin(), ch.s.end());
    const int lo = *smax - ch.e + 1;
    const int hi = *smin + ch.e - 1;
    std::vector<ChargedMultipartition> out;
    std::vector<Partition> comps;
    std::vector<int> s;
    std::function<void(int, int)> rec = [&](int next, int left) {
        if (next == mp.level() && left == 0) {
            Charge c(s, ch.e, ch.a);
            Multipartition cand(comps);
            if (is_cylindrical_mp(cand, c)) out.emplace_back(std::move(cand), std::move(c));
            return;
        }
        int last = s.empty() ? lo : s.back();
        if (next < mp.level() && ch.s[next] >= last) {
            comps.push_back(mp.comp(next + 1));
            s.push_back(ch.s[next]);
            rec(next + 1, left);
            comps.pop_back();
            s.pop_back();
        }
        if (left > 0) {
            int cap = next < mp.level() ? std::min(hi, ch.s[next]) : hi;
            for (int t = last; t <= cap; ++t) {
                comps.emplace_back();
                s.push_back(t);
                rec(next, left - 1);
                comps.pop_back();
                s.pop_back();
            }
        }
    };
    rec(0, k);
    return dedupe(std::move(out));
}

std::vector<ChargedMultipartition> charged_splittings_of_border(const std::vector<int>& I_in, int ell, int e) {
    std::vector<int> I = I_in;
    std::sort(I.begin(), I.end(), std::greater<int>());
    if (I.empty()) throw std::invalid_argument("charged_splittings_of_border: empty border set");
    if (std::adjacent_find(I.begin(), I.end()) != I.end())
        throw std::invalid_argument("charged_splittings_of_border: repeated border content");
    const int h = static_cast<int>(I.size());
    if (h >= e || I.front() - I.back() >= e)
        throw std::invalid_argument("charged_splittings_of_border: border set too wide for e");
    if (ell < 1) throw std::invalid_argument("charged_splittings_of_border: ell must be positive");

    // Row x (1-based from the top) ends at column I[x-1] + x.
    auto row_end = [&](int x) { return I[x - 1] + x; };
    std::vector<ChargedMultipartition> out;
    std::vector<Partition> comps;
    std::vector<int> s;

    auto emit = [&]() {
        Multipartition mp(comps);
        Charge c(s, e);
        for (auto& padded : pad_with_empty(mp, c, ell)) out.push_back(std::move(padded));
    };
    auto block = [&](int x_top, int x_bottom, int y) {
        Partition p;
        for (int x = x_top; x <= x_bottom; ++x) p.push_back(row_end(x) - y + 1);
        return p;
    };

    for (int alpha = I.back() - h + 1; alpha <= I.back(); ++alpha) {
        const int y1 = alpha + h;
        std::function<void(int, int)> rec = [&](int x_prev, int y_prev) {
            if (x_prev == 1) {
                if (static_cast<int>(comps.size()) <= ell) emit();
                return;
            }
            if (static_cast<int>(comps.size()) >= ell) return;
            for (int x = 1; x < x_prev; ++x)
                for (int y = y_prev; y <= row_end(x_prev - 1); ++y) {
                    int si = y - x;
                    if (si <= s.back() || si >= alpha + e) continue;
                    if (si == alpha + e - 1 && x != 1) continue;
                    comps.push_back(block(x, x_prev - 1, y));
                    s.push_back(si);
                    rec(x, y);
                    comps.pop_back();
                    s.pop_back();
                }
        };
        for (int x1 = 1; x1 <= h; ++x1) {
            int s1 = y1 - x1;
            comps = {block(x1, h, y1)};
            s = {s1};
            rec(x1, y1);
        }
    }
    return dedupe(std::move(out));
}

}  // namespace ch
