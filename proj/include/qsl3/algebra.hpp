#pragma once

#include "qsl3/module.hpp"

#include <string>
#include <vector>

namespace qsl3 {

/// X_{±1}^{n1} X_{±3}^{n3} X_{±2}^{n2}.
struct PBWMonomial {
    int sign = -1;  ///< +1 raising, -1 lowering
    int n1 = 0, n3 = 0, n2 = 0;
    std::string str() const;
    Weight weight() const;
};

/// The 8 monomials of one sign in lexicographic (n1, n3, n2) order.
std::vector<PBWMonomial> pbw_monomials(int sign);

/// Scalar by which K_{alpha_j} (j = 1, 2, 3) acts on weight w.
CycNum k_value(int j, const Weight& w, const CycField* f);

struct RootVectors {
    Mat x3, xm3;
};
RootVectors root_vectors(const WeightModule& V);
Mat pbw_matrix(const WeightModule& V, const PBWMonomial& m);

struct RelationReport {
    struct Item {
        std::string relation;
        bool ok = true;
        std::string first_failure;  ///< offending weight block
    };
    std::vector<Item> items;
    bool ok() const;
    std::string str() const;
};

RelationReport verify_relations(const WeightModule& V);

/// Coproduct action on A (x) B.
WeightModule tensor_action(const WeightModule& A, const WeightModule& B);
/// The dual module: x acts by the transpose of (S o Omega)(x); weights preserved.
WeightModule dual_rep(const WeightModule& V);
/// Twist by the grading-preserving antiautomorphism X_{±j} -> X_{∓j}, then transpose.
WeightModule chevalley_transpose(const WeightModule& V);

} // namespace qsl3
