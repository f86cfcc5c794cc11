#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyclohecke/alcove.hpp"
#include "cyclohecke/multipartition.hpp"

namespace ch {

struct BlockPoset {
    std::vector<Multipartition> nodes;  // sorted by length, then lexicographically
    std::vector<int> length;
    std::vector<std::pair<int, int>> edges;           // (upper, lower), length drops by one
    std::vector<std::array<int, 4>> diamonds;         // (w, x, y, z), x < y
    std::vector<std::array<int, 3>> strands;          // (w, x, z)
    int max_midpoints = 0;                            // largest number of mid-points seen in a 2-interval

    int find(const Multipartition& mp) const;
};

// Orbit of lambda + rho under the shifted affine Weyl group, restricted to
// multipartitions with heights bounded by hbar.
BlockPoset block_poset(const Multipartition& la, const AlcoveFrame& f);
// Same node set described by dominance and residue content.
std::vector<Multipartition> dominance_block(const Multipartition& la, const Charge& ch,
                                            const std::vector<int>& hbar);

struct SignAssignment {
    bool feasible = false;
    std::vector<int> sign;  // per edge, +1 or -1
    int kernel_dim = 0;     // solutions of the homogeneous system
    int coboundary_dim = 0; // nodes minus connected components of the cover graph
};
// One GF(2) equation per diamond: the product of its four signs is -1.
SignAssignment sign_assignment(const BlockPoset& P);

using GradedCharacter = std::map<int, std::int64_t>;  // degree -> multiplicity

GradedCharacter graded_specht_character(const Multipartition& mu, const Charge& ch);
std::string format_character(const GradedCharacter& c);

struct EulerReport {
    std::int64_t alternating_sum = 0;
    std::uint64_t fundamental_paths = 0;
    bool ok = false;
};
EulerReport euler_check(const Multipartition& la, const AlcoveFrame& f);
EulerReport euler_check(const BlockPoset& P, const Multipartition& la, const AlcoveFrame& f);

// Sum over the block of (-1)^l t^{c l} grchar(S(mu)).
GradedCharacter graded_alternating_sum(const BlockPoset& P, const Charge& ch, int c);
// Which of the conventions c = 0, 1, 2 give |Path^F(lambda)| t^0.
std::map<int, bool> graded_character_identity(const BlockPoset& P, const Multipartition& la,
                                              const AlcoveFrame& f);

// Dense integer matrix, enough for the module D(lambda).
struct IntMatrix {
    int n = 0;
    std::vector<std::int64_t> a;

    IntMatrix() = default;
    explicit IntMatrix(int dim) : n(dim), a(static_cast<std::size_t>(dim) * dim, 0) {}
    static IntMatrix identity(int dim);
    std::int64_t& at(int r, int c) { return a[static_cast<std::size_t>(r) * n + c]; }
    std::int64_t at(int r, int c) const { return a[static_cast<std::size_t>(r) * n + c]; }
    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator+(const IntMatrix& o) const;
    IntMatrix operator-(const IntMatrix& o) const;
    IntMatrix scaled(std::int64_t k) const;
    bool operator==(const IntMatrix& o) const = default;
    bool is_zero() const;
};

struct KLRModule {
    int e = 2;
    Charge ch;
    std::vector<Tableau> basis;
    std::vector<ResidueSequence> res;
    std::vector<IntMatrix> psi;  // psi[k-1] = psi_k
    std::vector<IntMatrix> y;    // y[k-1] = y_k, identically zero
    bool closed = true;          // every nonzero psi_k image is again a basis path

    int dim() const { return static_cast<int>(basis.size()); }
    int n() const { return basis.empty() ? 0 : basis.front().size(); }
    IntMatrix idempotent(const ResidueSequence& i) const;
};

KLRModule build_klr_module(const Multipartition& la, const AlcoveFrame& f);

struct KLRCheck {
    std::string name;
    bool ok = true;
};
std::vector<KLRCheck> verify_klr_relations(const KLRModule& mod);

}  // namespace ch
