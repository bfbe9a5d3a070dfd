#pragma once

#include "qsl3/algebra.hpp"

#include <map>
#include <vector>

namespace qsl3 {

/// Field order used for modules built from the given weights (honours QSL3_FIELD_ORDER).
int default_field_order(const std::vector<Weight>& weights);

/// Verma module on the PBW basis X_{-1}^{n1} X_{-3}^{n3} X_{-2}^{n2} m.
WeightModule verma(const Weight& l, int N = 0);
/// PBW monomial of each basis vector of verma(l), in module order.
std::vector<PBWMonomial> verma_basis_labels(const WeightModule& M);

/// Gram matrices of the contravariant form on M_l, keyed by weight.
std::map<Weight, Mat> contravariant_gram(const Weight& l, int N = 0);

/// M_l modulo the radical of the contravariant form.
WeightModule irreducible(const Weight& l, int N = 0);

/// A module homomorphism, one block per weight space of the source.
struct HomMap {
    std::vector<Mat> blocks;  ///< blocks[k]: dim B(w_k) x dim A(w_k), zero rows if absent
};

std::vector<HomMap> hom_space(const WeightModule& A, const WeightModule& B);
bool is_homomorphism(const WeightModule& A, const WeightModule& B, const HomMap& f);
/// Image of a map as a graded subspace of B.
GradedSubspace image(const WeightModule& A, const WeightModule& B, const HomMap& f);
/// Kernel of a map as a graded subspace of A.
GradedSubspace kernel_of(const WeightModule& A, const WeightModule& B, const HomMap& f);
/// g o f for f: A -> B, g: B -> C.
HomMap compose(const WeightModule& A, const WeightModule& B, const HomMap& f, const HomMap& g,
               const WeightModule& C);
CycNum trace(const WeightModule& A, const HomMap& f);
/// Dense matrix of a map in the global bases.
Mat dense(const WeightModule& A, const WeightModule& B, const HomMap& f);
/// An isomorphism A -> B if one exists.
bool find_isomorphism(const WeightModule& A, const WeightModule& B, HomMap* out = nullptr);

Character character(const WeightModule& V);

} // namespace qsl3
