#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cyclohecke/multipartition.hpp"

namespace ch {

// Coordinates of E_h. Index t (0-based) runs over the rows (i, m) with component ell
// occupying the first block, then ell-1, ..., 1.
class AlcoveFrame {
public:
    AlcoveFrame(Charge ch, std::vector<int> hbar);

    const Charge& charge() const { return ch_; }
    const std::vector<int>& hbar() const { return hbar_; }
    int dim() const { return h_; }
    int e() const { return ch_.e; }
    const std::vector<int>& rho() const { return rho_; }
    int index(int m, int i) const;
    std::pair<int, int> row_of(int t) const { return rows_.at(t); }  // (m, i)

    // Lattice point of mp (rows beyond hbar must be empty).
    std::vector<int> embed(const Multipartition& mp) const;
    std::vector<int> shifted(const Multipartition& mp) const;  // mp + rho
    Multipartition unembed(const std::vector<int>& x) const;  // throws if x is not a multipartition
    bool is_multipartition(const std::vector<int>& x) const;

private:
    Charge ch_;
    std::vector<int> hbar_;
    int h_ = 0;
    std::vector<int> rho_;
    std::vector<std::pair<int, int>> rows_;
    std::vector<int> block_start_;  // by component
};

std::vector<int> rho(const Charge& ch, const std::vector<int>& hbar);

// Positive root eps_a - eps_b, a < b.
struct Root {
    int a = 0;
    int b = 1;
};

// Shifted reflection s_{alpha, r e} . x for unshifted lattice coordinates x.
std::vector<int> reflect(const std::vector<int>& x, Root alpha, int r, const AlcoveFrame& f);

bool on_some_wall(const std::vector<int>& x, const AlcoveFrame& f);
bool in_fundamental_alcove(const std::vector<int>& x, const AlcoveFrame& f);
bool in_fundamental_alcove(const Multipartition& mp, const Charge& ch, const std::vector<int>& hbar);

// Number of hyperplanes separating x + rho from rho.
int alcove_length(const std::vector<int>& x, const AlcoveFrame& f);
int alcove_length(const Multipartition& mp, const AlcoveFrame& f);

using Path = std::vector<int>;  // coordinate index of each step

Path path_of_tableau(const Tableau& t, const AlcoveFrame& f);
Tableau tableau_of_path(const Path& p, const AlcoveFrame& f);
// With over_all_roots the wall contributions are summed over Phi rather than over
// the hyperplanes; each hyperplane is then counted twice.
int path_degree(const Path& p, const AlcoveFrame& f, bool over_all_roots = false);
ResidueSequence path_residues(const Path& p, const AlcoveFrame& f);

// Standard tableaux of mp whose prefix shapes all lie in the fundamental alcove.
std::vector<Tableau> fundamental_paths(const Multipartition& mp, const AlcoveFrame& f);
std::uint64_t count_fundamental_paths(const Multipartition& mp, const AlcoveFrame& f);

// Distance from the origin to the wall of the fundamental alcove labelled by the
// simple root eps_t - eps_{t+1}; t = h-1 is the affine root eps_h - eps_1.
int b_alpha(int t, const AlcoveFrame& f);
// The closed formulas quoted alongside the definition, kept for comparison.
int b_alpha_formula(int t, const AlcoveFrame& f);

}  // namespace ch
