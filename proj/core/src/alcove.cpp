#include "cyclohecke/alcove.hpp"

#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace ch {

namespace {

int floor_div(int x, int e) { return x >= 0 ? x / e : -((-x + e - 1) / e); }

int sign(int x) { return (x > 0) - (x < 0); }

}  // namespace

AlcoveFrame::AlcoveFrame(Charge ch, std::vector<int> hbar) : ch_(std::move(ch)), hbar_(std::move(hbar)) {
    const int ell = ch_.level();
    if (static_cast<int>(hbar_.size()) != ell) throw std::invalid_argument("alcove: hbar has the wrong length");
    for (int h : hbar_)
        if (h < 0) throw std::invalid_argument("alcove: negative height");
    h_ = std::accumulate(hbar_.begin(), hbar_.end(), 0);
    if (h_ == 0) throw std::invalid_argument("alcove: zero dimensional frame");
    if (ch_.e <= h_) throw std::invalid_argument("alcove: requires e > h");
    block_start_.assign(ell + 1, 0);
    for (int m = ell; m >= 1; --m) {
        block_start_[m - 1] = static_cast<int>(rows_.size());
        for (int i = 1; i <= hbar_[m - 1]; ++i) {
            rows_.emplace_back(m, i);
            rho_.push_back(ch_.s[m - 1] - i + 1);
        }
    }
    for (int a = 0; a < h_; ++a)
        for (int b = a + 1; b < h_; ++b)
            if (ch::mod(rho_[a] - rho_[b], ch_.e) == 0) throw std::invalid_argument("alcove: origin lies on a wall");
}

int AlcoveFrame::index(int m, int i) const {
    if (m < 1 || m > ch_.level() || i < 1 || i > hbar_[m - 1]) throw std::out_of_range("alcove: row outside frame");
    return block_start_[m - 1] + i - 1;
}

std::vector<int> AlcoveFrame::embed(const Multipartition& mp) const {
    if (mp.level() != ch_.level()) throw std::invalid_argument("alcove: level mismatch");
    std::vector<int> x(h_, 0);
    for (int m = 1; m <= mp.level(); ++m) {
        const auto& p = mp.comp(m);
        if (static_cast<int>(p.size()) > hbar_[m - 1]) throw std::invalid_argument("alcove: component taller than hbar");
        for (int i = 1; i <= static_cast<int>(p.size()); ++i) x[index(m, i)] = p[i - 1];
    }
    return x;
}

std::vector<int> AlcoveFrame::shifted(const Multipartition& mp) const {
    auto x = embed(mp);
    for (int t = 0; t < h_; ++t) x[t] += rho_[t];
    return x;
}

bool AlcoveFrame::is_multipartition(const std::vector<int>& x) const {
    if (static_cast<int>(x.size()) != h_) return false;
    for (int t = 0; t < h_; ++t) {
        if (x[t] < 0) return false;
        auto [m, i] = rows_[t];
        if (i > 1 && x[t - 1] < x[t]) return false;
    }
    return true;
}

Multipartition AlcoveFrame::unembed(const std::vector<int>& x) const {
    if (!is_multipartition(x)) throw std::invalid_argument("alcove: point is not a multipartition");
    std::vector<Partition> comps(ch_.level());
    for (int t = 0; t < h_; ++t) {
        auto [m, i] = rows_[t];
        if (x[t] > 0) comps[m - 1].push_back(x[t]);
    }
    return Multipartition(comps);
}

std::vector<int> rho(const Charge& ch, const std::vector<int>& hbar) { return AlcoveFrame(ch, hbar).rho(); }

std::vector<int> reflect(const std::vector<int>& x, Root alpha, int r, const AlcoveFrame& f) {
    if (alpha.a == alpha.b) throw std::invalid_argument("reflect: not a root");
    const auto& rh = f.rho();
    int pairing = (x[alpha.a] + rh[alpha.a]) - (x[alpha.b] + rh[alpha.b]);
    int shift = pairing - r * f.e();
    std::vector<int> out = x;
    out[alpha.a] -= shift;
    out[alpha.b] += shift;
    return out;
}

bool on_some_wall(const std::vector<int>& x, const AlcoveFrame& f) {
    const auto& rh = f.rho();
    for (int a = 0; a < f.dim(); ++a)
        for (int b = a + 1; b < f.dim(); ++b)
            if (ch::mod((x[a] + rh[a]) - (x[b] + rh[b]), f.e()) == 0) return true;
    return false;
}

bool in_fundamental_alcove(const std::vector<int>& x, const AlcoveFrame& f) {
    const auto& rh = f.rho();
    const int e = f.e();
    for (int a = 0; a < f.dim(); ++a)
        for (int b = a + 1; b < f.dim(); ++b) {
            int d = (x[a] + rh[a]) - (x[b] + rh[b]);
            if (ch::mod(d, e) == 0 || floor_div(d, e) != floor_div(rh[a] - rh[b], e)) return false;
        }
    return true;
}

bool in_fundamental_alcove(const Multipartition& mp, const Charge& ch, const std::vector<int>& hbar) {
    AlcoveFrame f(ch, hbar);
    return in_fundamental_alcove(f.embed(mp), f);
}

int alcove_length(const std::vector<int>& x, const AlcoveFrame& f) {
    const auto& rh = f.rho();
    const int e = f.e();
    int len = 0;
    for (int a = 0; a < f.dim(); ++a)
        for (int b = a + 1; b < f.dim(); ++b) {
            int d = (x[a] + rh[a]) - (x[b] + rh[b]);
            if (ch::mod(d, e) == 0) throw std::invalid_argument("alcove_length: point on a wall");
            len += std::abs(floor_div(d, e) - floor_div(rh[a] - rh[b], e));
        }
    return len;
}

int alcove_length(const Multipartition& mp, const AlcoveFrame& f) { return alcove_length(f.embed(mp), f); }

Path path_of_tableau(const Tableau& t, const AlcoveFrame& f) {
    Path p;
    for (const Box& b : t.seq) p.push_back(f.index(b.m, b.r));
    return p;
}

Tableau tableau_of_path(const Path& p, const AlcoveFrame& f) {
    std::vector<int> x(f.dim(), 0);
    Tableau t;
    for (int step : p) {
        auto [m, i] = f.row_of(step);
        ++x[step];
        t.seq.push_back(Box{i, x[step], m});
    }
    t.shape = f.unembed(x);
    return t;
}

int path_degree(const Path& p, const AlcoveFrame& f, bool over_all_roots) {
    const auto& rh = f.rho();
    const int e = f.e();
    std::vector<int> y = rh;
    int deg = 0;
    for (int t : p) {
        for (int u = 0; u < f.dim(); ++u) {
            if (u == t) continue;
            int a = std::min(t, u), b = std::max(t, u);
            int before = y[a] - y[b];
            int after = before + (a == t ? 1 : -1);
            int origin = rh[a] - rh[b];
            if (ch::mod(before, e) == 0) {
                int wall = before;
                if (sign(after - wall) == sign(origin - wall)) ++deg;
            }
            if (ch::mod(after, e) == 0) {
                int wall = after;
                if (sign(before - wall) == -sign(origin - wall)) --deg;
            }
        }
        ++y[t];
    }
    return over_all_roots ? 2 * deg : deg;
}

ResidueSequence path_residues(const Path& p, const AlcoveFrame& f) {
    std::vector<int> y = f.rho();
    ResidueSequence r;
    for (int t : p) {
        r.push_back(ch::mod(y[t], f.e()));  // content of the new box is y_t before the step
        ++y[t];
    }
    return r;
}

std::vector<Tableau> fundamental_paths(const Multipartition& mp, const AlcoveFrame& f) {
    const auto target = f.embed(mp);
    if (!in_fundamental_alcove(target, f)) throw std::invalid_argument("fundamental_paths: shape not in the fundamental alcove");
    std::vector<Tableau> out;
    std::vector<int> x(f.dim(), 0);
    Path p;
    std::function<void()> rec = [&]() {
        if (x == target) {
            out.push_back(tableau_of_path(p, f));
            return;
        }
        for (int t = 0; t < f.dim(); ++t) {
            if (x[t] >= target[t]) continue;
            ++x[t];
            if (f.is_multipartition(x) && in_fundamental_alcove(x, f)) {
                p.push_back(t);
                rec();
                p.pop_back();
            }
            --x[t];
        }
    };
    rec();
    return out;
}

std::uint64_t count_fundamental_paths(const Multipartition& mp, const AlcoveFrame& f) {
    const auto target = f.embed(mp);
    if (!in_fundamental_alcove(target, f)) throw std::invalid_argument("count_fundamental_paths: shape not in the fundamental alcove");
    std::map<std::vector<int>, std::uint64_t> memo;
    std::function<std::uint64_t(std::vector<int>&)> count = [&](std::vector<int>& x) -> std::uint64_t {
        bool zero = true;
        for (int v : x) zero = zero && v == 0;
        if (zero) return 1;
        auto it = memo.find(x);
        if (it != memo.end()) return it->second;
        std::uint64_t total = 0;
        for (int t = 0; t < f.dim(); ++t) {
            if (x[t] == 0) continue;
            --x[t];
            if (f.is_multipartition(x) && in_fundamental_alcove(x, f)) total += count(x);
            ++x[t];
        }
        memo.emplace(x, total);
        return total;
    };
    std::vector<int> x = target;
    return count(x);
}

int b_alpha(int t, const AlcoveFrame& f) {
    const int h = f.dim();
    if (t < 0 || t >= h) throw std::out_of_range("b_alpha: bad simple root");
    const auto& rh = f.rho();
    if (t == h - 1) return rh[h - 1] - rh[0] + f.e();
    return rh[t] - rh[t + 1];
}

int b_alpha_formula(int t, const AlcoveFrame& f) {
    const int h = f.dim();
    if (t < 0 || t >= h) throw std::out_of_range("b_alpha: bad simple root");
    const auto& s = f.charge().s;
    const auto& hb = f.hbar();
    const int ell = f.charge().level();
    if (t == h - 1) return f.e() + s[0] - s[ell - 1] - hb[ell - 1] + 1;
    int m_up = f.row_of(t).first, m_down = f.row_of(t + 1).first;
    if (m_up == m_down) return 1;
    // boundary between the blocks of components m_up > m_down
    return s[m_up - 1] - s[m_down - 1] - hb[m_down - 1] + 1;
}

}  // namespace ch
