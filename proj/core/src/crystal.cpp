#include "cyclohecke/crystal.hpp"

#include <algorithm>
#include <set>

namespace ch {

IWord i_word(const Multipartition& mp, const Charge& ch, int i) {
    IWord w;
    for (const Box& b : addable_boxes(mp, ch, i)) w.push_back({b, +1});
    for (const Box& b : removable_boxes(mp, ch, i)) w.push_back({b, -1});
    std::sort(w.begin(), w.end(), [&](const IWordLetter& x, const IWordLetter& y) {
        return more_dominant(y.box, x.box, ch);
    });
    return w;
}

IWord reduced_i_word(const IWord& w) {
    IWord out;
    for (const auto& letter : w) {
        if (letter.sign > 0 && !out.empty() && out.back().sign < 0)
            out.pop_back();
        else
            out.push_back(letter);
    }
    return out;
}

std::optional<Multipartition> f_tilde(const Multipartition& mp, const Charge& ch, int i) {
    IWord r = reduced_i_word(i_word(mp, ch, mod(i, ch.e)));
    for (auto it = r.rbegin(); it != r.rend(); ++it)
        if (it->sign > 0) return mp.with_box(it->box);
    return std::nullopt;
}

std::optional<Multipartition> e_tilde(const Multipartition& mp, const Charge& ch, int i) {
    IWord r = reduced_i_word(i_word(mp, ch, mod(i, ch.e)));
    for (const auto& letter : r)
        if (letter.sign < 0) return mp.without_box(letter.box);
    return std::nullopt;
}

std::optional<Multipartition> build_from_word(const std::vector<int>& word, const Charge& ch) {
    Multipartition cur = Multipartition::empty(ch.level());
    for (int i : word) {
        auto next = f_tilde(cur, ch, i);
        if (!next) return std::nullopt;
        cur = *next;
    }
    return cur;
}

bool is_crystal_reachable(const Multipartition& mp, const Charge& ch) {
    Multipartition cur = mp;
    while (cur.size() > 0) {
        bool moved = false;
        for (int i = 0; i < ch.e && !moved; ++i)
            if (auto next = e_tilde(cur, ch, i)) {
                cur = *next;
                moved = true;
            }
        if (!moved) return false;
    }
    return true;
}

std::vector<std::vector<Multipartition>> crystal_layers(int nmax, const Charge& ch) {
    std::vector<std::vector<Multipartition>> layers;
    layers.push_back({Multipartition::empty(ch.level())});
    for (int n = 1; n <= nmax; ++n) {
        std::set<Multipartition> next;
        for (const auto& mp : layers.back())
            for (int i = 0; i < ch.e; ++i)
                if (auto f = f_tilde(mp, ch, i)) next.insert(*f);
        layers.emplace_back(next.begin(), next.end());
    }
    return layers;
}

bool NoStutteringOracle::stutters(const Multipartition& mp) {
    auto it = memo_.find(mp);
    if (it != memo_.end()) return it->second;
    bool result = false;
    for (int i = 0; i < ch_.e && !result; ++i) {
        auto down = e_tilde(mp, ch_, i);
        if (!down) continue;
        if (e_tilde(*down, ch_, i) || stutters(*down)) result = true;
    }
    memo_[mp] = result;
    return result;
}

bool NoStutteringOracle::operator()(const Multipartition& mp) {
    return is_crystal_reachable(mp, ch_) && !stutters(mp);
}

bool is_no_stuttering(const Multipartition& mp, const Charge& ch) {
    NoStutteringOracle o(ch);
    return o(mp);
}

}  // namespace ch
