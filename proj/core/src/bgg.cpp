#include "cyclohecke/bgg.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ch {

namespace {

std::vector<int> residue_content(const Multipartition& mp, const Charge& ch) {
    std::vector<int> cnt(ch.e, 0);
    for (const Box& b : mp.boxes()) ++cnt[residue(b, ch)];
    return cnt;
}

// y and z differ by an affine reflection: two coordinates change, the sum is
// kept, and the new values are the old ones swapped modulo e.
bool reflection_related(const std::vector<int>& y, const std::vector<int>& z, int e) {
    std::vector<int> diff;
    for (int t = 0; t < static_cast<int>(y.size()); ++t)
        if (y[t] != z[t]) diff.push_back(t);
    if (diff.size() != 2) return false;
    int a = diff[0], b = diff[1];
    return y[a] + y[b] == z[a] + z[b] && ch::mod(z[a] - y[b], e) == 0;
}

}  // namespace

int BlockPoset::find(const Multipartition& mp) const {
    auto it = std::find(nodes.begin(), nodes.end(), mp);
    return it == nodes.end() ? -1 : static_cast<int>(it - nodes.begin());
}

BlockPoset block_poset(const Multipartition& la, const AlcoveFrame& f) {
    const auto x0 = f.embed(la);
    if (!in_fundamental_alcove(x0, f)) throw std::invalid_argument("block_poset: lambda is not in the fundamental alcove");
    const int e = f.e();
    const int h = f.dim();
    const auto& rh = f.rho();

    std::set<std::vector<int>> seen{x0};
    std::deque<std::vector<int>> todo{x0};
    while (!todo.empty()) {
        auto x = todo.front();
        todo.pop_front();
        for (int a = 0; a < h; ++a)
            for (int b = a + 1; b < h; ++b) {
                int D = (x[a] + rh[a]) - (x[b] + rh[b]);
                // shift = D - r e must keep both coordinates nonnegative
                int lo = -x[b], hi = x[a];
                int first = lo + ch::mod(D - lo, e);
                for (int shift = first; shift <= hi; shift += e) {
                    if (shift == 0) continue;
                    auto z = x;
                    z[a] -= shift;
                    z[b] += shift;
                    if (!f.is_multipartition(z) || seen.count(z)) continue;
                    seen.insert(z);
                    todo.push_back(z);
                }
            }
    }

    BlockPoset P;
    std::vector<std::pair<int, Multipartition>> ranked;
    for (const auto& x : seen) ranked.emplace_back(alcove_length(x, f), f.unembed(x));
    std::sort(ranked.begin(), ranked.end());
    for (auto& [l, mp] : ranked) {
        P.length.push_back(l);
        P.nodes.push_back(std::move(mp));
    }
    const int N = static_cast<int>(P.nodes.size());
    std::vector<std::vector<int>> shifted(N);
    for (int i = 0; i < N; ++i) shifted[i] = f.shifted(P.nodes[i]);

    std::vector<std::vector<int>> down(N);
    for (int u = 0; u < N; ++u)
        for (int v = 0; v < N; ++v)
            if (P.length[v] == P.length[u] - 1 && reflection_related(shifted[u], shifted[v], e)) {
                P.edges.emplace_back(u, v);
                down[u].push_back(v);
            }

    for (int w = 0; w < N; ++w) {
        std::set<int> below2;
        for (int x : down[w])
            for (int z : down[x]) below2.insert(z);
        for (int z : below2) {
            std::vector<int> mids;
            for (int x : down[w])
                if (std::find(down[x].begin(), down[x].end(), z) != down[x].end()) mids.push_back(x);
            P.max_midpoints = std::max(P.max_midpoints, static_cast<int>(mids.size()));
            if (mids.size() == 1) P.strands.push_back({w, mids[0], z});
            else if (mids.size() == 2) P.diamonds.push_back({w, mids[0], mids[1], z});
            else throw std::logic_error("block_poset: interval with more than two mid-points");
        }
    }
    return P;
}

std::vector<Multipartition> dominance_block(const Multipartition& la, const Charge& ch, const std::vector<int>& hbar) {
    const auto target = residue_content(la, ch);
    std::vector<Multipartition> out;
    for (const auto& mu : multipartitions(la.size(), la.level(), &hbar))
        if (residue_content(mu, ch) == target && dominates(mu, la, ch)) out.push_back(mu);
    std::sort(out.begin(), out.end());
    return out;
}

SignAssignment sign_assignment(const BlockPoset& P) {
    const int E = static_cast<int>(P.edges.size());
    const int N = static_cast<int>(P.nodes.size());
    std::map<std::pair<int, int>, int> edge_id;
    for (int i = 0; i < E; ++i) edge_id[P.edges[i]] = i;

    // rows over GF(2): E coefficient bits plus the right hand side
    const int words = (E + 1 + 63) / 64;
    std::vector<std::vector<std::uint64_t>> rows;
    auto set_bit = [](std::vector<std::uint64_t>& r, int k) { r[k / 64] ^= (std::uint64_t{1} << (k % 64)); };
    auto get_bit = [](const std::vector<std::uint64_t>& r, int k) { return (r[k / 64] >> (k % 64)) & 1; };
    for (const auto& d : P.diamonds) {
        std::vector<std::uint64_t> r(words, 0);
        set_bit(r, edge_id.at({d[0], d[1]}));
        set_bit(r, edge_id.at({d[0], d[2]}));
        set_bit(r, edge_id.at({d[1], d[3]}));
        set_bit(r, edge_id.at({d[2], d[3]}));
        set_bit(r, E);  // product -1
        rows.push_back(std::move(r));
    }

    std::vector<int> pivot_col;
    int rank = 0;
    for (int c = 0; c < E && rank < static_cast<int>(rows.size()); ++c) {
        int p = -1;
        for (int i = rank; i < static_cast<int>(rows.size()); ++i)
            if (get_bit(rows[i], c)) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(rows[p], rows[rank]);
        for (int i = 0; i < static_cast<int>(rows.size()); ++i)
            if (i != rank && get_bit(rows[i], c))
                for (int w = 0; w < words; ++w) rows[i][w] ^= rows[rank][w];
        pivot_col.push_back(c);
        ++rank;
    }

    SignAssignment out;
    out.feasible = true;
    for (int i = rank; i < static_cast<int>(rows.size()); ++i)
        if (get_bit(rows[i], E)) out.feasible = false;
    out.kernel_dim = E - rank;

    std::vector<int> parent(N);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> root = [&](int v) { return parent[v] == v ? v : parent[v] = root(parent[v]); };
    int comps = N;
    for (auto [u, v] : P.edges) {
        int a = root(u), b = root(v);
        if (a != b) {
            parent[a] = b;
            --comps;
        }
    }
    out.coboundary_dim = N - comps;

    if (!out.feasible) return out;
    out.sign.assign(E, 1);
    for (int i = 0; i < rank; ++i)
        if (get_bit(rows[i], E)) out.sign[pivot_col[i]] = -1;  // free variables are +1
    return out;
}

GradedCharacter graded_specht_character(const Multipartition& mu, const Charge& ch) {
    GradedCharacter g;
    for (const Tableau& t : standard_tableaux(mu)) ++g[tableau_degree(t, ch)];
    return g;
}

std::string format_character(const GradedCharacter& c) {
    std::ostringstream os;
    bool first = true;
    for (auto [d, k] : c) {
        if (k == 0) continue;
        if (!first) os << (k > 0 ? " + " : " - ");
        else if (k < 0) os << "-";
        first = false;
        os << (k < 0 ? -k : k) << "t^" << d;
    }
    if (first) os << "0";
    return os.str();
}

EulerReport euler_check(const BlockPoset& P, const Multipartition& la, const AlcoveFrame& f) {
    EulerReport r;
    for (std::size_t i = 0; i < P.nodes.size(); ++i) {
        auto k = static_cast<std::int64_t>(count_standard_tableaux(P.nodes[i]));
        r.alternating_sum += (P.length[i] % 2 == 0) ? k : -k;
    }
    r.fundamental_paths = count_fundamental_paths(la, f);
    r.ok = r.alternating_sum == static_cast<std::int64_t>(r.fundamental_paths);
    return r;
}

EulerReport euler_check(const Multipartition& la, const AlcoveFrame& f) {
    return euler_check(block_poset(la, f), la, f);
}

GradedCharacter graded_alternating_sum(const BlockPoset& P, const Charge& ch, int c) {
    GradedCharacter total;
    for (std::size_t i = 0; i < P.nodes.size(); ++i) {
        const int l = P.length[i];
        const int sgn = l % 2 == 0 ? 1 : -1;
        for (auto [d, k] : graded_specht_character(P.nodes[i], ch)) total[d + c * l] += sgn * k;
    }
    for (auto it = total.begin(); it != total.end();) it = it->second == 0 ? total.erase(it) : std::next(it);
    return total;
}

std::map<int, bool> graded_character_identity(const BlockPoset& P, const Multipartition& la, const AlcoveFrame& f) {
    const auto paths = static_cast<std::int64_t>(count_fundamental_paths(la, f));
    GradedCharacter want;
    if (paths != 0) want[0] = paths;
    std::map<int, bool> out;
    for (int c = 0; c <= 2; ++c) out[c] = graded_alternating_sum(P, f.charge(), c) == want;
    return out;
}

IntMatrix IntMatrix::identity(int dim) {
    IntMatrix m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (n != o.n) throw std::invalid_argument("IntMatrix: size mismatch");
    IntMatrix r(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            std::int64_t v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < n; ++j) r.at(i, j) += v * o.at(k, j);
        }
    return r;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
    if (n != o.n) throw std::invalid_argument("IntMatrix: size mismatch");
    IntMatrix r = *this;
    for (std::size_t i = 0; i < a.size(); ++i) r.a[i] += o.a[i];
    return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const { return *this + o.scaled(-1); }

IntMatrix IntMatrix::scaled(std::int64_t k) const {
    IntMatrix r = *this;
    for (auto& v : r.a) v *= k;
    return r;
}

bool IntMatrix::is_zero() const {
    return std::all_of(a.begin(), a.end(), [](std::int64_t v) { return v == 0; });
}

IntMatrix KLRModule::idempotent(const ResidueSequence& i) const {
    IntMatrix m(dim());
    for (int b = 0; b < dim(); ++b)
        if (res[b] == i) m.at(b, b) = 1;
    return m;
}

KLRModule build_klr_module(const Multipartition& la, const AlcoveFrame& f) {
    KLRModule mod;
    mod.e = f.e();
    mod.ch = f.charge();
    mod.basis = fundamental_paths(la, f);  // throws when lambda is not in F
    for (const Tableau& t : mod.basis) mod.res.push_back(residue_sequence(t, mod.ch));
    const int d = mod.dim();
    const int n = la.size();
    const int e = mod.e;
    for (int k = 1; k < n; ++k) {
        IntMatrix P(d);
        for (int b = 0; b < d; ++b) {
            int diff = ch::mod(mod.res[b][k - 1] - mod.res[b][k], e);
            if (diff == 0 || diff == 1 || diff == e - 1) continue;
            Tableau s = mod.basis[b].swapped(k);
            auto it = std::find(mod.basis.begin(), mod.basis.end(), s);
            if (it == mod.basis.end()) {
                mod.closed = false;
                continue;
            }
            P.at(static_cast<int>(it - mod.basis.begin()), b) = 1;
        }
        mod.psi.push_back(std::move(P));
    }
    for (int k = 1; k <= n; ++k) mod.y.emplace_back(d);
    return mod;
}

std::vector<KLRCheck> verify_klr_relations(const KLRModule& mod) {
    std::vector<KLRCheck> out;
    const int d = mod.dim();
    const int n = mod.n();
    const int e = mod.e;
    const IntMatrix I = IntMatrix::identity(d);
    const IntMatrix Z(d);
    auto psi = [&](int r) -> const IntMatrix& { return mod.psi.at(r - 1); };
    auto y = [&](int r) -> const IntMatrix& { return mod.y.at(r - 1); };

    // Sequences that occur, together with their images under the s_r. Idempotents
    // of all other sequences act by zero and satisfy every relation trivially.
    std::set<ResidueSequence> occurring(mod.res.begin(), mod.res.end());
    std::set<ResidueSequence> seqs = occurring;
    for (const auto& i : occurring)
        for (int r = 1; r < n; ++r) {
            auto j = i;
            std::swap(j[r - 1], j[r]);
            seqs.insert(j);
        }
    std::map<ResidueSequence, IntMatrix> E;
    for (const auto& i : seqs) E.emplace(i, mod.idempotent(i));
    auto eq = [&](int a, int b) { return ch::mod(a - b, e) == 0; };

    out.push_back({"closure", mod.closed});

    bool orth = true;
    for (const auto& i : occurring)
        for (const auto& j : occurring) orth = orth && E.at(i) * E.at(j) == (i == j ? E.at(i) : Z);
    out.push_back({"R1_idempotents_orthogonal", orth});

    IntMatrix sum(d);
    for (const auto& i : occurring) sum = sum + E.at(i);
    out.push_back({"R1_idempotents_complete", sum == I});

    bool ye = true, pe = true, yy = true;
    for (const auto& [i, Ei] : E)
        for (int r = 1; r <= n; ++r) {
            ye = ye && y(r) * Ei == Ei * y(r);
            if (r < n) {
                auto j = i;
                std::swap(j[r - 1], j[r]);
                auto it = E.find(j);
                pe = pe && psi(r) * Ei == (it == E.end() ? Z : it->second) * psi(r);
            }
        }
    for (int r = 1; r <= n; ++r)
        for (int s = r + 1; s <= n; ++s) yy = yy && y(r) * y(s) == y(s) * y(r);
    out.push_back({"R1_y_idempotent", ye});
    out.push_back({"R1_psi_idempotent", pe});
    out.push_back({"R1_y_commute", yy});

    bool py = true, pp = true;
    for (int r = 1; r < n; ++r) {
        for (int s = 1; s <= n; ++s)
            if (s != r && s != r + 1) py = py && psi(r) * y(s) == y(s) * psi(r);
        for (int s = r + 2; s < n; ++s) pp = pp && psi(r) * psi(s) == psi(s) * psi(r);
    }
    out.push_back({"R2_psi_y", py});
    out.push_back({"R2_psi_commute", pp});

    bool r3 = true;
    for (const auto& [i, Ei] : E)
        for (int r = 1; r < n; ++r) {
            IntMatrix delta = eq(i[r - 1], i[r]) ? Ei : Z;
            r3 = r3 && y(r) * psi(r) * Ei == psi(r) * y(r + 1) * Ei - delta;
            r3 = r3 && y(r + 1) * psi(r) * Ei == psi(r) * y(r) * Ei + delta;
        }
    out.push_back({"R3", r3});

    bool r4 = true;
    for (const auto& [i, Ei] : E)
        for (int r = 1; r < n; ++r) {
            const int a = i[r - 1], b = i[r];
            IntMatrix rhs;
            if (eq(a, b)) rhs = Z;
            else if (e == 2) rhs = (y(r) - y(r + 1)) * (y(r + 1) - y(r)) * Ei;  // doubled edge
            else if (eq(b, a + 1)) rhs = (y(r + 1) - y(r)) * Ei;
            else if (eq(b, a - 1)) rhs = (y(r) - y(r + 1)) * Ei;
            else rhs = Ei;
            r4 = r4 && psi(r) * psi(r) * Ei == rhs;
        }
    out.push_back({"R4", r4});

    bool r5 = true;
    for (const auto& [i, Ei] : E)
        for (int r = 1; r + 1 < n; ++r) {
            const int a = i[r - 1], b = i[r], c = i[r + 1];
            IntMatrix lhs = psi(r) * psi(r + 1) * psi(r) * Ei;
            IntMatrix rhs = psi(r + 1) * psi(r) * psi(r + 1) * Ei;
            if (eq(a, c) && !eq(a, b)) {
                if (e == 2) rhs = rhs + (y(r) + y(r + 2) - y(r + 1).scaled(2)) * Ei;
                else if (eq(a, b + 1)) rhs = rhs - Ei;
                else if (eq(a, b - 1)) rhs = rhs + Ei;
            }
            r5 = r5 && lhs == rhs;
        }
    out.push_back({"R5", r5});

    bool cyc = true;
    for (const auto& [i, Ei] : E) {
        if (n == 0) break;
        int k = 0;
        for (int s : mod.ch.s) k += eq(s, i[0]) ? 1 : 0;
        IntMatrix p = Ei;
        for (int j = 0; j < k; ++j) p = y(1) * p;
        cyc = cyc && p.is_zero();
    }
    out.push_back({"cyclotomic", cyc});
    return out;
}

}  // namespace ch
