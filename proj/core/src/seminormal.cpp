#include "cyclohecke/seminormal.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ch {

namespace {

bool same(long long x, long long y, int e) { return e == 0 ? x == y : ch::mod(x - y, e) == 0; }

}  // namespace

Weight normalize_weight(Weight m, int e) {
    if (e < 0 || e == 1) throw std::invalid_argument("weight: e must be 0 or at least 2");
    if (e > 0)
        for (int& x : m) x = ch::mod(x, e);
    return m;
}

bool is_calibrated_weight(const Weight& m, int e) {
    const int n = static_cast<int>(m.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (!same(m[i], m[j], e)) continue;
            bool up = false, down = false;
            for (int k = i + 1; k < j; ++k) {
                up = up || same(m[k], m[i] + 1, e);
                down = down || same(m[k], m[i] - 1, e);
            }
            if (!up || !down) return false;
            break;  // later equal entries are covered by the pair starting at j
        }
    return true;
}

bool is_admissible(const Weight& m, int i, int e) {
    long long x = m.at(i - 1), y = m.at(i);
    return !same(y, x + 1, e) && !same(y, x - 1, e);
}

std::vector<Weight> weight_class(const Weight& m0, int e) {
    Weight m = normalize_weight(m0, e);
    if (!is_calibrated_weight(m, e)) throw std::invalid_argument("weight_class: weight is not calibrated");
    std::set<Weight> seen{m};
    std::deque<Weight> todo{m};
    while (!todo.empty()) {
        Weight b = todo.front();
        todo.pop_front();
        for (int i = 1; i < static_cast<int>(b.size()); ++i) {
            if (!is_admissible(b, i, e)) continue;
            Weight c = b;
            std::swap(c[i - 1], c[i]);
            if (seen.insert(c).second) todo.push_back(c);
        }
    }
    return {seen.begin(), seen.end()};
}

std::vector<Weight> calibrated_weights(int n, int e) {
    if (e < 2) throw std::invalid_argument("calibrated_weights: needs e >= 2");
    std::vector<Weight> out;
    Weight m(n, 0);
    while (true) {
        if (is_calibrated_weight(m, e)) out.push_back(m);
        int k = n - 1;
        while (k >= 0 && m[k] == e - 1) m[k--] = 0;
        if (k < 0) break;
        ++m[k];
    }
    return out;
}

std::vector<std::vector<Weight>> calibrated_classes(int n, int e) {
    std::set<Weight> done;
    std::vector<std::vector<Weight>> out;
    for (const Weight& m : calibrated_weights(n, e)) {
        if (done.count(m)) continue;
        auto cls = weight_class(m, e);
        done.insert(cls.begin(), cls.end());
        out.push_back(std::move(cls));
    }
    return out;
}

Weight tableau_weight(const Tableau& t, const Charge& ch) {
    Weight m;
    for (const Box& b : t.seq) m.push_back(charged_content(b, ch));
    return m;
}

Cyc SeminormalModule::eigenvalue(int exponent) const {
    return Cyc::zeta_power(field_order, static_cast<long long>(a) * exponent);
}

SeminormalModule seminormal_module(const std::vector<Weight>& cls, int e, int a, std::optional<int> surrogate) {
    if (cls.empty()) throw std::invalid_argument("seminormal_module: empty class");
    SeminormalModule mod;
    mod.e = e;
    mod.a = a;
    if (e == 0) {
        if (!surrogate || *surrogate < 3) throw std::invalid_argument("seminormal_module: generic q needs a surrogate order");
        mod.field_order = *surrogate;
        mod.heuristic = true;
    } else {
        if (e < 2) throw std::invalid_argument("seminormal_module: e must be 0 or at least 2");
        mod.field_order = e;
    }
    if (std::gcd(a, mod.field_order) != 1) throw std::invalid_argument("seminormal_module: a must be coprime to e");
    const int E = mod.field_order;
    for (const Weight& w : cls) {
        Weight m = normalize_weight(w, e);
        if (!is_calibrated_weight(m, e)) throw std::invalid_argument("seminormal_module: weight is not calibrated");
        if (!mod.index.emplace(m, static_cast<int>(mod.cls.size())).second)
            throw std::invalid_argument("seminormal_module: repeated weight");
        mod.cls.push_back(m);
    }
    const int n = mod.n();
    const int dim = mod.dim();
    mod.q = Cyc::zeta_power(E, a);
    const Cyc one(E, 1);

    // Diagonal coefficient b_{i+1}(q-1)/(b_{i+1}-b_i) = (q-1)/(1-x), x = b_i/b_{i+1}.
    std::map<int, Cyc> diag_cache;
    auto diag = [&](int d) -> const Cyc& {
        int key = ch::mod(d, E);
        auto it = diag_cache.find(key);
        if (it != diag_cache.end()) return it->second;
        Cyc x = mod.eigenvalue(d);
        return diag_cache.emplace(key, (mod.q - one) / (one - x)).first->second;
    };

    for (int i = 1; i <= n; ++i) {
        CycMatrix Xi(dim, E);
        for (int j = 0; j < dim; ++j) Xi.set(j, j, mod.eigenvalue(mod.cls[j][i - 1]));
        mod.X.push_back(std::move(Xi));
    }
    for (int i = 1; i < n; ++i) {
        CycMatrix Ti(dim, E);
        for (int j = 0; j < dim; ++j) {
            const Weight& b = mod.cls[j];
            const int d = b[i - 1] - b[i];
            if (same(d, 0, e)) throw std::invalid_argument("seminormal_module: equal adjacent eigenvalues");
            const Cyc& D = diag(d);
            Ti.set(j, j, D);
            if (!is_admissible(b, i, e)) continue;
            Weight c = b;
            std::swap(c[i - 1], c[i]);
            auto it = mod.index.find(c);
            if (it == mod.index.end()) throw std::invalid_argument("seminormal_module: class not closed");
            Ti.set(it->second, j, D - mod.q);
        }
        mod.T.push_back(std::move(Ti));
    }
    return mod;
}

std::vector<RelationCheck> verify_hecke_relations(const SeminormalModule& mod) {
    std::vector<RelationCheck> out;
    const int n = mod.n();
    const int E = mod.field_order;
    const int dim = mod.dim();
    const CycMatrix I = CycMatrix::identity(dim, E);
    const Cyc one(E, 1);
    auto T = [&](int i) -> const CycMatrix& { return mod.T.at(i - 1); };
    auto X = [&](int i) -> const CycMatrix& { return mod.X.at(i - 1); };

    bool quad = true;
    for (int i = 1; i < n; ++i)
        quad = quad && ((T(i) + I) * (T(i) - I.scaled(mod.q))).is_zero();
    out.push_back({"quadratic", quad});

    bool braid = true;
    for (int i = 1; i + 1 < n; ++i)
        braid = braid && T(i) * T(i + 1) * T(i) == T(i + 1) * T(i) * T(i + 1);
    out.push_back({"braid", braid});

    bool far = true;
    for (int i = 1; i < n; ++i)
        for (int j = i + 2; j < n; ++j) far = far && T(i) * T(j) == T(j) * T(i);
    out.push_back({"distant_commutation", far});

    bool xx = true;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) xx = xx && X(i) * X(j) == X(j) * X(i);
    out.push_back({"x_commute", xx});

    bool txt = true;
    for (int i = 1; i < n; ++i) txt = txt && T(i) * X(i) * T(i) == X(i + 1).scaled(mod.q);
    out.push_back({"txt", txt});

    bool tx = true;
    for (int i = 1; i < n; ++i)
        for (int j = 1; j <= n; ++j)
            if (j != i && j != i + 1) tx = tx && T(i) * X(j) == X(j) * T(i);
    out.push_back({"tx_commute", tx});
    return out;
}

bool all_relations_hold(const std::vector<RelationCheck>& report) {
    return std::all_of(report.begin(), report.end(), [](const RelationCheck& r) { return r.ok; });
}

FormData form_signs(const SeminormalModule& mod) {
    const int dim = mod.dim();
    const int n = mod.n();
    const int E = mod.field_order;
    const Cyc one(E, 1);
    FormData f;
    f.A.assign(dim, Cyc(E));
    f.signs.assign(dim, 0);
    std::vector<bool> seen(dim, false);

    // A_{s_i b} / A_b = (q - x)/(1 - q x) with x = b_i / b_{i+1}
    std::map<int, Cyc> ratio_cache;
    auto ratio = [&](int d) -> const Cyc& {
        int key = ch::mod(d, E);
        auto it = ratio_cache.find(key);
        if (it != ratio_cache.end()) return it->second;
        Cyc x = mod.eigenvalue(d);
        return ratio_cache.emplace(key, (mod.q - x) / (one - mod.q * x)).first->second;
    };
    auto ratio_sign = [&](int d) {
        auto c = re_compare(mod.a, static_cast<long long>(mod.a) * d, E);
        return c > 0 ? 1 : (c < 0 ? -1 : 0);
    };

    f.A[0] = one;
    f.signs[0] = 1;
    seen[0] = true;
    std::deque<int> todo{0};
    while (!todo.empty()) {
        int j = todo.front();
        todo.pop_front();
        const Weight& b = mod.cls[j];
        for (int i = 1; i < n; ++i) {
            if (!is_admissible(b, i, mod.e)) continue;
            Weight c = b;
            std::swap(c[i - 1], c[i]);
            int k = mod.index.at(c);
            const int d = b[i - 1] - b[i];
            Cyc Ak = f.A[j] * ratio(d);
            int sk = f.signs[j] * ratio_sign(d);
            if (!seen[k]) {
                seen[k] = true;
                f.A[k] = Ak;
                f.signs[k] = sk;
                todo.push_back(k);
            } else if (f.A[k] != Ak || f.signs[k] != sk) {
                f.consistent = false;
            }
        }
    }
    return f;
}

bool hermitian_invariant(const SeminormalModule& mod, const FormData& form) {
    const int dim = mod.dim();
    const int E = mod.field_order;
    const CycMatrix I = CycMatrix::identity(dim, E);
    const Cyc one(E, 1);
    const Cyc qinv = mod.q.inv();
    // <M w_b, w_c> = A_c M_{cb} must equal <w_b, N w_c> = A_b conj(N_{bc}).
    auto invariant = [&](const CycMatrix& M, const CycMatrix& N) {
        for (int b = 0; b < dim; ++b)
            for (int c = 0; c < dim; ++c)
                if (form.A[c] * M.at(c, b) != form.A[b] * N.at(b, c).conj()) return false;
        return true;
    };
    for (const CycMatrix& T : mod.T) {
        CycMatrix Tinv = (T + I.scaled(one - mod.q)).scaled(qinv);
        if (!invariant(T, Tinv)) return false;
    }
    for (const CycMatrix& X : mod.X) {
        CycMatrix Xinv(dim, E);
        for (int j = 0; j < dim; ++j) Xinv.set(j, j, X.at(j, j).inv());
        if (!invariant(X, Xinv)) return false;
    }
    return true;
}

bool is_unitary_class(const SeminormalModule& mod) {
    FormData f = form_signs(mod);
    return f.consistent && std::all_of(f.signs.begin(), f.signs.end(), [](int s) { return s > 0; });
}

bool cyclotomic_membership(const SeminormalModule& mod, const Charge& ch) {
    if (mod.e != ch.e || mod.a != ch.a) throw std::invalid_argument("cyclotomic_membership: parameters differ");
    const int E = mod.field_order;
    CycMatrix P = CycMatrix::identity(mod.dim(), E);
    const CycMatrix I = CycMatrix::identity(mod.dim(), E);
    for (int s : ch.s) P = P * (mod.X.front() - I.scaled(mod.eigenvalue(s)));
    return P.is_zero();
}

}  // namespace ch
