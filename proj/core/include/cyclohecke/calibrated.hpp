#pragma once

#include <utility>
#include <vector>

#include "cyclohecke/multipartition.hpp"

namespace ch {

struct BorderMultiset {
    // Charged contents of the last box of each row, increasing within each component.
    std::vector<std::vector<int>> per_component;

    std::vector<int> reading_word() const;
    std::vector<int> sorted() const;
    std::size_t size() const;
};

BorderMultiset border_multiset(const Multipartition& mp, const Charge& ch);
bool is_increasing(const BorderMultiset& b);
bool has_period_at_most_e(const BorderMultiset& b, int e);

// Cylindricity of the multipartition itself (both families of row inequalities).
bool is_cylindrical_mp(const Multipartition& mp, const Charge& ch);
bool is_flotw(const Multipartition& mp, const Charge& ch);
// Rows of equal length must not end on every residue.
bool flotw_residue_condition(const Multipartition& mp, const Charge& ch);

// Period and increasing reading word.
bool satisfies_border_conditions(const Multipartition& mp, const Charge& ch);
// Cylindricity read off the smallest contents; requires the border conditions.
bool is_cylindrical_mp_from_border(const Multipartition& mp, const Charge& ch);

// Border conditions plus cylindricity, exactly as in the definition.
bool is_cali_literal(const Multipartition& mp, const Charge& ch);
// The classification set: the literal conditions together with the FLOTW residue
// condition, which the literal conditions miss when e rows share one length.
bool is_cali(const Multipartition& mp, const Charge& ch);
std::vector<Multipartition> enumerate_cali(int n, const Charge& ch);

// Skew diagram with rows listed top to bottom; each row is its content interval.
struct SkewShape {
    std::vector<std::pair<int, int>> rows;  // (lowest content, highest content)
    int size() const;
    bool operator==(const SkewShape&) const = default;
};

SkewShape skew_shape(const Multipartition& mp, const Charge& ch);

using ChargedMultipartition = std::pair<Multipartition, Charge>;

// Cuts of a fixed skew shape into left justified row blocks, one block per component.
std::vector<ChargedMultipartition> splittings_of_skew(const SkewShape& sh, int e);
// Staircase cuts of the semi-infinite diagram with border set I, padded to ell components.
std::vector<ChargedMultipartition> charged_splittings_of_border(const std::vector<int>& I, int ell, int e);
// All ways to insert empty components (with their charges) reaching ell components.
std::vector<ChargedMultipartition> pad_with_empty(const Multipartition& mp, const Charge& ch, int ell);

}  // namespace ch
