#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cyclohecke/cyclotomic.hpp"
#include "cyclohecke/multipartition.hpp"

namespace ch {

// Exponent vector m of the weight b = (zeta_e^{a m_1}, ..., zeta_e^{a m_n}).
// For e > 0 entries are kept in [0, e); e = 0 means q is not a root of unity.
using Weight = std::vector<int>;

Weight normalize_weight(Weight m, int e);
bool is_calibrated_weight(const Weight& m, int e);
// s_i (1-based) is admissible when m_{i+1} differs from m_i by neither +1 nor -1.
bool is_admissible(const Weight& m, int i, int e);
// Closure under admissible transpositions, sorted lexicographically.
std::vector<Weight> weight_class(const Weight& m, int e);

std::vector<Weight> calibrated_weights(int n, int e);
std::vector<std::vector<Weight>> calibrated_classes(int n, int e);

// Charged contents of the boxes holding 1..n.
Weight tableau_weight(const Tableau& t, const Charge& ch);

struct SeminormalModule {
    int e = 0;             // 0 when q is generic
    int a = 1;
    int field_order = 0;   // order of the cyclotomic field the matrices live in
    bool heuristic = false;  // true when a surrogate root of unity stands in for generic q
    std::vector<Weight> cls;
    std::map<Weight, int> index;
    Cyc q;
    std::vector<CycMatrix> T;  // T[i-1] is T_i
    std::vector<CycMatrix> X;  // X[i-1] is X_i

    int dim() const { return static_cast<int>(cls.size()); }
    int n() const { return cls.empty() ? 0 : static_cast<int>(cls.front().size()); }
    Cyc eigenvalue(int exponent) const;
};

// For e = 0 a surrogate order E must be supplied; the result is flagged heuristic.
SeminormalModule seminormal_module(const std::vector<Weight>& cls, int e, int a,
                                   std::optional<int> surrogate = std::nullopt);

struct RelationCheck {
    std::string name;
    bool ok = true;
};
std::vector<RelationCheck> verify_hecke_relations(const SeminormalModule& mod);
bool all_relations_hold(const std::vector<RelationCheck>& report);

struct FormData {
    std::vector<Cyc> A;      // exact diagonal Gram entries, A[0] = 1
    std::vector<int> signs;  // +1 / -1 from the real part comparison
    bool consistent = true;  // every cycle closes up, for both A and signs
};
FormData form_signs(const SeminormalModule& mod);
// <T_i u, v> = <u, T_i^{-1} v> and <X_i u, v> = <u, X_i^{-1} v> for the diagonal form A.
bool hermitian_invariant(const SeminormalModule& mod, const FormData& form);
bool is_unitary_class(const SeminormalModule& mod);

// prod_j (X_1 - q^{s_j}) vanishes on the module.
bool cyclotomic_membership(const SeminormalModule& mod, const Charge& ch);

}  // namespace ch
