#pragma once

#include "qsl3/character.hpp"
#include "qsl3/linalg.hpp"

#include <array>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace qsl3 {

/// Generators whose matrices are stored; H and K act through the grading.
enum Gen { X1 = 0, X2 = 1, Xm1 = 2, Xm2 = 3 };
constexpr std::array<Gen, 4> all_gens{X1, X2, Xm1, Xm2};
/// Weight shift of a generator.
Weight gen_shift(Gen g);
const char* gen_name(Gen g);

/// Canonical ordering of weights: descending height, then descending c1.
bool weight_order(const Weight& a, const Weight& b);

struct Presentation;

/**
 * @brief Weight-graded exact matrix representation.
 *
 * Weight spaces are listed in canonical order; the action of each generator is
 * stored as one block per source weight space.
 */
class WeightModule {
public:
    struct Block {
        int tgt = -1;  ///< index of the target weight space, -1 if the shift leaves the support
        Mat m;         ///< dims[tgt] x dims[src]
    };

    WeightModule() = default;
    /// Zero action on the given weight spaces (weights need not be sorted).
    WeightModule(const CycField* f, const std::vector<std::pair<Weight, int>>& spaces);

    const CycField* field() const { return f_; }
    int num_weights() const { return static_cast<int>(wts_.size()); }
    const Weight& weight(int k) const { return wts_[k]; }
    int wdim(int k) const { return dims_[k]; }
    int offset(int k) const { return offs_[k]; }
    int dim() const { return total_; }
    /// Index of the weight space, -1 if absent.
    int index_of(const Weight& w) const;

    const Block& block(Gen g, int src) const { return act_[g][src]; }
    Block& block(Gen g, int src) { return act_[g][src]; }
    /// Applies g to a vector of weight space src; result lives in block(g,src).tgt.
    Vec apply(Gen g, int src, const Vec& v) const;

    Character character() const;
    /// The full dim x dim matrix of a generator.
    Mat dense(Gen g) const;
    WeightModule embed(const CycField* target) const;

    std::string name;

    /// Cached generating set and spanning tree (built on first use).
    const Presentation& presentation() const;

private:
    const CycField* f_ = nullptr;
    std::vector<Weight> wts_;
    std::vector<int> dims_, offs_;
    int total_ = 0;
    std::map<Weight, int> idx_;
    std::array<std::vector<Block>, 4> act_;
    mutable std::shared_ptr<const Presentation> pres_;
};

/// A subspace of each weight space of a module.
struct GradedSubspace {
    std::vector<Subspace> parts;

    static GradedSubspace zero(const WeightModule& V);
    static GradedSubspace full(const WeightModule& V);
    int dim() const;
    bool contains(const GradedSubspace& o) const;
    GradedSubspace intersect(const GradedSubspace& o) const;
    GradedSubspace sum(const GradedSubspace& o) const;
    bool operator==(const GradedSubspace& o) const;
    Character character(const WeightModule& V) const;
};

/// Smallest submodule containing the given homogeneous vectors (weight index, vector).
GradedSubspace generated_submodule(const WeightModule& V,
                                   const std::vector<std::pair<int, Vec>>& seeds);
/// Submodule generated by a graded subspace.
GradedSubspace generated_submodule(const WeightModule& V, const GradedSubspace& S);
bool is_submodule(const WeightModule& V, const GradedSubspace& S);

/// The module structure on a submodule, in the echelon basis of S.
WeightModule submodule(const WeightModule& V, const GradedSubspace& S);
/// Image in V of a subspace of submodule(V, S).
GradedSubspace push_forward(const WeightModule& V, const GradedSubspace& S,
                            const WeightModule& sub, const GradedSubspace& T);

/// V / S with the induced basis: the standard basis vectors at non-pivot coordinates of S.
struct Quotient {
    WeightModule module;
    std::vector<std::vector<int>> keep;  ///< per weight of V, the retained coordinates
};
Quotient quotient(const WeightModule& V, const GradedSubspace& S);
/// Preimage in V of a subspace of the quotient.
GradedSubspace preimage(const WeightModule& V, const GradedSubspace& S, const Quotient& q,
                        const GradedSubspace& T);
/// Image in the quotient of a subspace of V.
GradedSubspace project(const WeightModule& V, const GradedSubspace& S, const Quotient& q,
                       const GradedSubspace& T);

WeightModule direct_sum(const WeightModule& A, const WeightModule& B);

/// Common field for two modules; both are embedded when orders differ.
const CycField* common_field(const CycField* a, const CycField* b);

} // namespace qsl3
