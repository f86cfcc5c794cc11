#pragma once

#include <map>
#include <optional>
#include <vector>

#include "cyclohecke/multipartition.hpp"

namespace ch {

struct IWordLetter {
    Box box;
    int sign = +1;  // +1 addable, -1 removable
    bool operator==(const IWordLetter&) const = default;
};
using IWord = std::vector<IWordLetter>;

// Addable (+) and removable (-) i-boxes, least dominant first.
IWord i_word(const Multipartition& mp, const Charge& ch, int i);
// Cancels adjacent (-+) pairs until the word reads (+)^a (-)^b.
IWord reduced_i_word(const IWord& w);

std::optional<Multipartition> f_tilde(const Multipartition& mp, const Charge& ch, int i);
std::optional<Multipartition> e_tilde(const Multipartition& mp, const Charge& ch, int i);

std::optional<Multipartition> build_from_word(const std::vector<int>& word, const Charge& ch);

// Follows e_tilde arrows down to a highest weight vertex; reachable iff it is empty.
bool is_crystal_reachable(const Multipartition& mp, const Charge& ch);

// Breadth first layers of the component of the empty multipartition, sizes 0..nmax.
std::vector<std::vector<Multipartition>> crystal_layers(int nmax, const Charge& ch);

class NoStutteringOracle {
public:
    explicit NoStutteringOracle(Charge ch) : ch_(std::move(ch)) {}
    bool operator()(const Multipartition& mp);
    // True when some build word for mp repeats a residue in adjacent steps.
    bool stutters(const Multipartition& mp);

private:
    Charge ch_;
    std::map<Multipartition, bool> memo_;
};

bool is_no_stuttering(const Multipartition& mp, const Charge& ch);

}  // namespace ch
