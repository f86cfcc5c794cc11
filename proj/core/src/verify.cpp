#include "cyclohecke/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "cyclohecke/alcove.hpp"
#include "cyclohecke/bgg.hpp"
#include "cyclohecke/calibrated.hpp"
#include "cyclohecke/crystal.hpp"
#include "cyclohecke/level1.hpp"
#include "cyclohecke/seminormal.hpp"

namespace ch {

namespace {

constexpr std::size_t kMaxExamples = 5;

struct Tally {
    long checked = 0;
    long failures = 0;
    std::vector<std::string> examples;

    void check(bool ok, const std::function<std::string()>& what) {
        ++checked;
        if (ok) return;
        ++failures;
        if (examples.size() < kMaxExamples) examples.push_back(what());
    }
    void merge(const Tally& o) {
        checked += o.checked;
        failures += o.failures;
        for (const auto& s : o.examples)
            if (examples.size() < kMaxExamples) examples.push_back(s);
    }
};

// Runs fn on every item; results come back in item order whatever the schedule.
template <class Item, class R>
std::vector<R> parallel_map(const std::vector<Item>& items, int jobs, const std::function<R(const Item&)>& fn) {
    std::vector<R> out(items.size());
    const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(items.size())));
    if (workers == 1) {
        for (std::size_t i = 0; i < items.size(); ++i) out[i] = fn(items[i]);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = next++; i < items.size(); i = next++) out[i] = fn(items[i]);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

std::vector<Tally> merge_all(const std::vector<std::vector<Tally>>& parts, std::size_t k) {
    std::vector<Tally> total(k);
    for (const auto& p : parts)
        for (std::size_t i = 0; i < k; ++i) total[i].merge(p[i]);
    return total;
}

SweepResult finish(int id, std::string name, const Tally& t, std::string note = {}) {
    SweepResult r;
    r.id = id;
    r.name = std::move(name);
    r.checked = t.checked;
    r.failures = t.failures;
    r.ok = t.failures == 0 && t.checked > 0;
    r.note = std::move(note);
    r.examples = t.examples;
    return r;
}

std::string charge_str(const Charge& ch) {
    std::ostringstream os;
    os << "e=" << ch.e << " s=(";
    for (std::size_t i = 0; i < ch.s.size(); ++i) os << (i ? "," : "") << ch.s[i];
    os << ")";
    if (ch.a != 1) os << " a=" << ch.a;
    return os.str();
}

std::string vec_str(const std::vector<int>& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

std::vector<Charge> all_charges(int emin, int emax, int ellmax) {
    std::vector<Charge> out;
    for (int e = emin; e <= emax; ++e)
        for (int ell = 1; ell <= ellmax; ++ell)
            for (auto& c : cylindrical_charges(e, ell)) out.push_back(c);
    return out;
}

}  // namespace

SweepLimits SweepLimits::capped(int n) const {
    SweepLimits l = *this;
    for (int* p : {&l.classify_n, &l.seminormal_n, &l.geometry_n, &l.degree_n, &l.bgg_n, &l.level1_n, &l.dominance_n})
        *p = std::min(*p, n);
    return l;
}

std::vector<Charge> cylindrical_charges(int e, int ell, int a) {
    std::vector<Charge> out;
    std::vector<int> s(ell, 0);
    std::function<void(int)> rec = [&](int k) {
        if (k == ell) {
            out.emplace_back(s, e, a);
            return;
        }
        for (int v = s[k - 1]; v < e; ++v) {
            s[k] = v;
            rec(k + 1);
        }
    };
    if (ell == 1) out.emplace_back(s, e, a);
    else rec(1);
    return out;
}

std::vector<std::vector<int>> admissible_heights(const Charge& ch) {
    std::vector<std::vector<int>> out;
    const int ell = ch.level();
    std::vector<int> hb(ell, 0);
    std::function<void(int, int)> rec = [&](int k, int used) {
        if (k == ell) {
            if (used >= 1 && used < ch.e && is_s_admissible(hb, ch)) out.push_back(hb);
            return;
        }
        for (int v = 0; used + v < ch.e; ++v) {
            hb[k] = v;
            rec(k + 1, used + v);
        }
    };
    rec(0, 0);
    return out;
}

std::vector<SweepResult> classification_sweep(const SweepLimits& lim, int jobs) {
    const auto charges = all_charges(2, 6, lim.classify_ell);
    std::function<std::vector<Tally>(const Charge&)> work = [&](const Charge& ch) {
        std::vector<Tally> t(3);
        NoStutteringOracle oracle(ch);
        auto layers = crystal_layers(lim.classify_n, ch);
        for (int n = 0; n <= lim.classify_n; ++n) {
            std::set<Multipartition> reachable(layers[n].begin(), layers[n].end());
            for (const auto& mp : multipartitions(n, ch.level())) {
                const bool cali = is_cali(mp, ch);
                t[0].check(oracle(mp) == cali, [&] { return charge_str(ch) + " " + mp.str(); });
                t[1].check(reachable.count(mp) == static_cast<std::size_t>(is_flotw(mp, ch)),
                           [&] { return charge_str(ch) + " " + mp.str(); });
                if (!cali) continue;
                for (int i = 0; i < ch.e; ++i) {
                    auto down = e_tilde(mp, ch, i);
                    t[2].check(!down || is_cali(*down, ch),
                               [&] { return charge_str(ch) + " " + mp.str() + " i=" + std::to_string(i); });
                }
            }
        }
        return t;
    };
    auto t = merge_all(parallel_map(charges, jobs, work), 3);
    const std::string note = std::to_string(charges.size()) + " charges, n<=" + std::to_string(lim.classify_n);
    return {finish(1, "no-stuttering set equals Cali set", t[0], note),
            finish(2, "crystal component equals FLOTW set", t[1], note),
            finish(3, "e_tilde preserves Cali", t[2], note)};
}

std::vector<SweepResult> seminormal_sweep(const SweepLimits& lim, int jobs) {
    struct Item {
        int e, a, n;
    };
    std::vector<Item> items;
    for (int e = 2; e <= lim.seminormal_e; ++e)
        for (int a = 1; a < e; ++a)
            if (std::gcd(a, e) == 1)
                for (int n = 1; n <= lim.seminormal_n; ++n) items.push_back({e, a, n});
    // tallies: relations, a=1 positivity, a>1 negative witnesses, hermitian, a=1 membership classes
    std::function<std::vector<Tally>(const Item&)> work = [&](const Item& it) {
        std::vector<Tally> t(5);
        std::vector<Charge> charges;
        for (int ell = 1; ell <= 2; ++ell)
            for (auto& c : cylindrical_charges(it.e, ell, it.a)) charges.push_back(c);
        for (const auto& cls : calibrated_classes(it.n, it.e)) {
            auto mod = seminormal_module(cls, it.e, it.a);
            auto where = [&] { return "e=" + std::to_string(it.e) + " a=" + std::to_string(it.a) + " " + vec_str(cls.front()); };
            t[0].check(all_relations_hold(verify_hecke_relations(mod)), where);
            FormData form = form_signs(mod);
            t[3].check(form.consistent && hermitian_invariant(mod, form), where);
            const bool positive = form.consistent && std::all_of(form.signs.begin(), form.signs.end(), [](int s) { return s > 0; });
            if (it.a == 1) {
                t[1].check(positive, where);
                bool member = std::any_of(charges.begin(), charges.end(), [&](const Charge& c) { return cyclotomic_membership(mod, c); });
                if (member) ++t[4].checked;
            } else if (!positive) {
                ++t[2].checked;
            }
        }
        return t;
    };
    auto t = merge_all(parallel_map(items, jobs, work), 5);
    Tally witness;
    witness.checked = t[2].checked;
    if (witness.checked == 0) {
        witness.failures = 1;
        witness.examples.push_back("no class with a > 1 has a negative sign");
    }
    SweepResult r5 = finish(5, "unitary equals calibrated at a=1; a>1 has a negative sign", t[1],
                            std::to_string(t[4].checked) + " classes lie in a cyclotomic quotient of level <= 2; " +
                                std::to_string(witness.checked) + " classes with a > 1 have a negative sign");
    r5.ok = r5.ok && witness.failures == 0;
    if (witness.failures) r5.examples.push_back(witness.examples.front());
    return {finish(4, "seminormal Hecke relations", t[0], std::to_string(t[0].checked) + " classes"), r5,
            finish(6, "Hermitian invariance of the form", t[3])};
}

SweepResult geometry_sweep(const SweepLimits& lim, int jobs) {
    const auto charges = all_charges(2, 6, 3);
    std::function<std::vector<Tally>(const Charge&)> work = [&](const Charge& ch) {
        std::vector<Tally> t(1);
        for (int n = 1; n <= lim.geometry_n; ++n)
            for (const auto& mp : multipartitions(n, ch.level())) {
                auto hb = mp.heights();
                int h = std::accumulate(hb.begin(), hb.end(), 0);
                if (h >= ch.e || !is_s_admissible(hb, ch)) continue;
                AlcoveFrame f(ch, hb);
                t[0].check(is_cali(mp, ch) == in_fundamental_alcove(f.embed(mp), f),
                           [&] { return charge_str(ch) + " " + mp.str(); });
            }
        return t;
    };
    auto t = merge_all(parallel_map(charges, jobs, work), 1);
    return finish(7, "Cali equals fundamental alcove", t[0]);
}

SweepResult degree_sweep(const SweepLimits& lim, int jobs) {
    struct Item {
        Charge ch;
        std::vector<int> hbar;
    };
    std::vector<Item> items;
    for (const auto& ch : all_charges(2, 6, lim.degree_ell))
        for (auto& hb : admissible_heights(ch)) items.push_back({ch, hb});
    std::function<std::vector<Tally>(const Item&)> work = [&](const Item& it) {
        std::vector<Tally> t(1);
        AlcoveFrame f(it.ch, it.hbar);
        for (int n = 1; n <= lim.degree_n; ++n)
            for (const auto& mp : multipartitions(n, it.ch.level(), &it.hbar))
                for (const Tableau& tab : standard_tableaux(mp))
                    t[0].check(path_degree(path_of_tableau(tab, f), f) == tableau_degree(tab, it.ch),
                               [&] { return charge_str(it.ch) + " hbar=" + vec_str(it.hbar) + " " + mp.str(); });
        return t;
    };
    auto t = merge_all(parallel_map(items, jobs, work), 1);
    return finish(8, "path degree equals tableau degree", t[0], std::to_string(items.size()) + " frames");
}

std::vector<SweepResult> bgg_sweep(const SweepLimits& lim, int jobs) {
    struct Item {
        Charge ch;
        std::vector<int> hbar;
    };
    std::vector<Item> items;
    for (const auto& ch : all_charges(2, 6, 2))
        for (auto& hb : admissible_heights(ch)) items.push_back({ch, hb});
    // tallies: euler, c=1, c=2, klr, signs, node set cross-check, c=0
    std::function<std::vector<Tally>(const Item&)> work = [&](const Item& it) {
        std::vector<Tally> t(7);
        AlcoveFrame f(it.ch, it.hbar);
        for (int n = 0; n <= lim.bgg_n; ++n)
            for (const auto& la : multipartitions(n, it.ch.level(), &it.hbar)) {
                if (!in_fundamental_alcove(f.embed(la), f)) continue;
                auto where = [&] { return charge_str(it.ch) + " hbar=" + vec_str(it.hbar) + " " + la.str(); };
                BlockPoset P = block_poset(la, f);
                t[0].check(euler_check(P, la, f).ok, where);
                auto conv = graded_character_identity(P, la, f);
                t[1].check(conv.at(1), where);
                t[2].check(conv.at(2), where);
                t[6].check(conv.at(0), where);
                auto report = verify_klr_relations(build_klr_module(la, f));
                t[3].check(std::all_of(report.begin(), report.end(), [](const KLRCheck& c) { return c.ok; }), where);
                auto signs = sign_assignment(P);
                t[4].check(signs.feasible && signs.kernel_dim == signs.coboundary_dim && P.max_midpoints <= 2, where);
                auto nodes = P.nodes;
                std::sort(nodes.begin(), nodes.end());
                t[5].check(nodes == dominance_block(la, it.ch, it.hbar) && P.length.front() == 0 && P.nodes.front() == la &&
                               std::count(P.length.begin(), P.length.end(), 0) == 1,
                           where);
            }
        return t;
    };
    auto t = merge_all(parallel_map(items, jobs, work), 7);
    const bool c1 = t[1].failures == 0, c2 = t[2].failures == 0;
    Tally conv;
    conv.checked = t[1].checked;
    conv.failures = (c1 != c2) ? 0 : 1;
    if (conv.failures) conv.examples.push_back(c1 ? "both conventions hold" : "neither convention holds");
    const std::string convention = c1 && !c2 ? "c=1" : (c2 && !c1 ? "c=2" : "none");
    std::ostringstream note10;
    note10 << "convention " << convention << "; failures c=0: " << t[6].failures << ", c=1: " << t[1].failures
           << ", c=2: " << t[2].failures;
    SweepResult r9 = finish(9, "BGG Euler identity", t[0], "node sets cross-checked against dominance on " +
                                                               std::to_string(t[5].checked) + " blocks");
    r9.ok = r9.ok && t[5].failures == 0;
    for (const auto& s : t[5].examples) r9.examples.push_back("node set: " + s);
    return {r9, finish(10, "graded character identity, one convention", conv, note10.str()),
            finish(11, "KLR relations on D(lambda)", t[3]), finish(12, "diamond sign system solvable", t[4])};
}

SweepResult level1_sweep(const SweepLimits& lim, int jobs) {
    std::vector<Partition> parts;
    for (int n = 1; n <= lim.level1_n; ++n)
        for (auto& p : partitions(n)) parts.push_back(p);
    std::function<std::vector<Tally>(const Partition&)> work = [&](const Partition& la) {
        std::vector<Tally> t(1);
        for (int e = 2; e <= lim.level1_e; ++e) {
            const bool cal = is_calibrated_crystal(la, e);
            for (int a = -(e - 1) / 2; a <= e / 2; ++a) {
                if (std::gcd(a, e) != 1) continue;
                mpq_class c(a, e);
                c.canonicalize();
                const bool oracle = cal && positivity_oracle(la, a, e);
                t[0].check(locus_contains(la, c) == oracle,
                           [&] { return vec_str(la) + " c=" + c.get_str(); });
            }
        }
        return t;
    };
    auto t = merge_all(parallel_map(parts, jobs, work), 1);
    return finish(13, "level-1 loci match the positivity oracle", t[0]);
}

SweepResult dominance_sweep(const SweepLimits& lim, int jobs) {
    const auto charges = all_charges(2, 4, 3);
    std::function<std::vector<Tally>(const Charge&)> work = [&](const Charge& ch) {
        std::vector<Tally> t(1);
        for (int n = 0; n <= lim.dominance_n; ++n) {
            std::map<std::vector<int>, std::vector<Multipartition>> by_content;
            for (const auto& mp : multipartitions(n, ch.level())) {
                std::vector<int> cnt(ch.e, 0);
                for (const Box& b : mp.boxes()) ++cnt[residue(b, ch)];
                by_content[cnt].push_back(mp);
            }
            std::vector<const std::vector<Multipartition>*> groups;
            for (const auto& [k, v] : by_content) groups.push_back(&v);
            for (std::size_t g = 0; g < groups.size(); ++g) {
                for (const auto& mu : *groups[g])
                    for (const auto& la : *groups[g])
                        t[0].check(dominates(mu, la, ch) == dominates_exhaustive(mu, la, ch),
                                   [&] { return charge_str(ch) + " " + mu.str() + " vs " + la.str(); });
                // different residue content never dominates
                if (g + 1 < groups.size())
                    t[0].check(!dominates(groups[g]->front(), groups[g + 1]->front(), ch) &&
                                   !dominates_exhaustive(groups[g]->front(), groups[g + 1]->front(), ch),
                               [&] { return charge_str(ch) + " content mismatch"; });
            }
        }
        return t;
    };
    auto t = merge_all(parallel_map(charges, jobs, work), 1);
    return finish(14, "greedy dominance equals exhaustive search", t[0]);
}

std::vector<std::string> suite_names() {
    return {"classify", "seminormal", "geometry", "degree", "bgg", "level1", "dominance", "all"};
}

std::vector<SweepResult> run_suite(const std::string& suite, const SweepLimits& lim, int jobs) {
    std::vector<SweepResult> out;
    auto add = [&](std::vector<SweepResult> v) { out.insert(out.end(), v.begin(), v.end()); };
    const bool all = suite == "all";
    bool known = all;
    if (all || suite == "classify") known = true, add(classification_sweep(lim, jobs));
    if (all || suite == "seminormal") known = true, add(seminormal_sweep(lim, jobs));
    if (all || suite == "geometry") known = true, out.push_back(geometry_sweep(lim, jobs));
    if (all || suite == "degree") known = true, out.push_back(degree_sweep(lim, jobs));
    if (all || suite == "bgg" || suite == "klr") known = true, add(bgg_sweep(lim, jobs));
    if (all || suite == "level1") known = true, out.push_back(level1_sweep(lim, jobs));
    if (all || suite == "dominance") known = true, out.push_back(dominance_sweep(lim, jobs));
    if (!known) throw std::invalid_argument("unknown suite: " + suite);
    std::sort(out.begin(), out.end(), [](const SweepResult& x, const SweepResult& y) { return x.id < y.id; });
    return out;
}

}  // namespace ch
