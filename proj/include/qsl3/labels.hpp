#pragma once

#include "qsl3/weights.hpp"

#include <map>
#include <string>
#include <string_view>

namespace qsl3 {

enum class Family { L, M, P, K, R, S, Q };
char family_char(Family f);

/**
 * @brief Symbolic name of a module: family, dimension tag and highest weight.
 *
 * The R family needs an extra root index j in {1,2}, written R(8,j)[c1,c2].
 */
struct ModuleLabel {
    Family family = Family::L;
    int dim = 0;
    Weight weight;
    int index = 0;

    std::string str() const;
    friend bool operator==(const ModuleLabel& a, const ModuleLabel& b)
    {
        return a.family == b.family && a.dim == b.dim && a.weight == b.weight && a.index == b.index;
    }
    friend bool operator!=(const ModuleLabel& a, const ModuleLabel& b) { return !(a == b); }
    friend bool operator<(const ModuleLabel& a, const ModuleLabel& b);
};

/// Dimension tag forced by the family and the weight's class.
int expected_dim(Family f, const Weight& w);
ModuleLabel L_label(const Weight& w);
/// Projective cover label P_w (P(8) coincides with the typical L(8)).
ModuleLabel P_label(const Weight& w);
ModuleLabel make_label(Family f, const Weight& w, int index = 0);
/// Parses FAMILY "(" dim ["," j] ")" "[" c1 "," c2 "]"; checks the dimension tag.
ModuleLabel parse_label(std::string_view text);

/// Formal multiset of module labels.
struct DecompositionExpr {
    std::map<ModuleLabel, int> terms;

    void add(const ModuleLabel& l, int m = 1);
    int dim() const;
    int size() const;
    /// " ⊕ "-joined sorted terms, multiplicities as "m*" prefixes.
    std::string str() const;
    friend bool operator==(const DecompositionExpr& a, const DecompositionExpr& b)
    {
        return a.terms == b.terms;
    }
};

DecompositionExpr parse_decomposition(std::string_view text);

} // namespace qsl3
