#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ch {

// Least nonnegative residue of x modulo e (e > 0).
inline int mod(long long x, int e) {
    long long r = x % e;
    return static_cast<int>(r < 0 ? r + e : r);
}

using Partition = std::vector<int>;

struct Charge {
    std::vector<int> s;
    int e = 2;
    int a = 1;

    Charge() = default;
    Charge(std::vector<int> s_, int e_, int a_ = 1);

    int level() const { return static_cast<int>(s.size()); }
    bool cylindrical() const;
};

struct Box {
    int r = 1;
    int c = 1;
    int m = 1;
    auto operator<=>(const Box&) const = default;
};

class Multipartition {
public:
    Multipartition() = default;
    explicit Multipartition(std::vector<Partition> comps);
    static Multipartition empty(int ell);

    int level() const { return static_cast<int>(comps_.size()); }
    int size() const;
    std::vector<int> heights() const;
    int height() const;

    const std::vector<Partition>& comps() const { return comps_; }
    const Partition& comp(int m) const { return comps_.at(m - 1); }
    // Length of row i of component m, 0 past the last row.
    int part(int m, int i) const;
    bool contains(const Box& b) const;

    Multipartition with_box(const Box& b) const;
    Multipartition without_box(const Box& b) const;
    std::vector<Box> boxes() const;

    std::string str() const;

    auto operator<=>(const Multipartition&) const = default;

private:
    std::vector<Partition> comps_;
};

int charged_content(const Box& b, const Charge& ch);
int residue(const Box& b, const Charge& ch);

// b1 strictly above b2 in the order on boxes: larger charged content, ties go to
// the smaller component index.
bool more_dominant(const Box& b1, const Box& b2, const Charge& ch);

// Addable and removable boxes. `res` filters by residue; `hbar` caps the row
// index of addable boxes per component.
std::vector<Box> addable_boxes(const Multipartition& mp, const Charge& ch,
                               std::optional<int> res = std::nullopt,
                               const std::vector<int>* hbar = nullptr);
std::vector<Box> removable_boxes(const Multipartition& mp, const Charge& ch,
                                 std::optional<int> res = std::nullopt);

// A tableau stored as the sequence of boxes holding 1, 2, ..., n.
struct Tableau {
    Multipartition shape;
    std::vector<Box> seq;

    int size() const { return static_cast<int>(seq.size()); }
    // Build from a row-major filling: fill[m-1][r-1][c-1] = entry.
    static Tableau from_filling(const std::vector<std::vector<std::vector<int>>>& fill);
    std::vector<std::vector<std::vector<int>>> filling() const;
    Multipartition prefix_shape(int k) const;
    Tableau swapped(int k) const;  // exchange entries k and k+1
    bool operator==(const Tableau& o) const { return seq == o.seq; }
};

bool is_standard(const Tableau& t);

using ResidueSequence = std::vector<int>;
ResidueSequence residue_sequence(const Tableau& t, const Charge& ch);

Tableau reverse_column_reading_tableau(const Multipartition& mp, int m);

int tableau_degree(const Tableau& t, const Charge& ch, const std::vector<int>* hbar = nullptr);

// mu dominates la: there is a residue preserving bijection [mu] -> [la] sending
// every box to a box which is not above it.
bool dominates(const Multipartition& mu, const Multipartition& la, const Charge& ch);
// Same relation decided by trying every residue preserving bijection.
bool dominates_exhaustive(const Multipartition& mu, const Multipartition& la, const Charge& ch);

struct Admissibility {
    bool admissible = false;
    std::vector<int> step_changes;
};
Admissibility s_admissibility(const std::vector<int>& hbar, const Charge& ch);
inline bool is_s_admissible(const std::vector<int>& hbar, const Charge& ch) {
    return s_admissibility(hbar, ch).admissible;
}

std::vector<Partition> partitions(int n, int max_len = -1);
// All ell-multipartitions of n, optionally with heights bounded by hbar.
std::vector<Multipartition> multipartitions(int n, int ell, const std::vector<int>* hbar = nullptr);
std::vector<Tableau> standard_tableaux(const Multipartition& mp);
std::uint64_t count_standard_tableaux(const Multipartition& mp);

}  // namespace ch
