#pragma once

#include "qsl3/labels.hpp"
#include "qsl3/repmod.hpp"

#include <functional>
#include <string>
#include <vector>

namespace qsl3 {

/// Basis of the Jacobson radical of the algebra generated by the action (trace-form criterion).
std::vector<Mat> acting_radical(const WeightModule& V);
/// rad^j V = J^j V from the acting radical; only practical for small modules.
std::vector<GradedSubspace> acting_radical_series(const WeightModule& V);

/// Smallest submodule with semisimple quotient: intersection of kernels of maps to simples.
GradedSubspace radical(const WeightModule& V);
/// Largest semisimple submodule: sum of images of maps from simples.
GradedSubspace socle(const WeightModule& V);

enum class SeriesKind { radical, socle };
/// Radical series V = R0 > R1 > ... > 0, or socle series 0 = S0 < S1 < ... < V.
std::vector<GradedSubspace> series(const WeightModule& V, SeriesKind kind);

/// Irreducible labels of a semisimple character, peeling off maximal weights.
DecompositionExpr decompose_semisimple(Character ch);
DecompositionExpr composition_factors(const WeightModule& V);
/// Labels of each layer of a filtration (top first for the radical series).
std::vector<DecompositionExpr> layers_of(const WeightModule& V,
                                         const std::vector<GradedSubspace>& filtration);

enum class ArrowTag { standard, costandard, other, unresolved };
const char* tag_name(ArrowTag t);

struct LoewyNode {
    ModuleLabel label;
    int mult = 1;
};

struct LoewyArrow {
    int layer = 0;  ///< layer of the source; the target is in layer + 1
    ModuleLabel from, to;
    ArrowTag tag = ArrowTag::other;
    friend bool operator<(const LoewyArrow& a, const LoewyArrow& b);
    friend bool operator==(const LoewyArrow& a, const LoewyArrow& b)
    {
        return a.layer == b.layer && a.from == b.from && a.to == b.to;
    }
};

struct LoewyDiagram {
    std::vector<std::vector<LoewyNode>> layers;
    std::vector<LoewyArrow> arrows;

    std::vector<DecompositionExpr> layer_exprs() const;
    DecompositionExpr factors() const;
    /// Node has multiplicity > 1 in its layer.
    bool collapsed(int layer, const ModuleLabel& l) const;
    std::string str() const;
    std::string to_dot(const std::string& title = "loewy") const;
    std::string to_json() const;
};

/// Layers from the radical series and arrows from the subquotient test.
LoewyDiagram loewy(const WeightModule& V, bool with_arrows = true);

using Constructor = std::function<WeightModule(const ModuleLabel&)>;

struct Certificate {
    struct Summand {
        ModuleLabel label;
        int mult = 0;
        int hom_in = 0, hom_out = 0, split_rank = 0;
        bool composite_invertible = false;
    };
    bool character_ok = false;
    std::vector<Summand> summands;
    bool span_ok = false;
    std::string failing;
    bool ok() const;
    std::string str() const;
};

/// Certificate without throwing.
Certificate check_decomposition(const WeightModule& V, const DecompositionExpr& predicted,
                                const Constructor& make);
/// Throws VerificationFailure carrying the failing label.
Certificate verify_decomposition(const WeightModule& V, const DecompositionExpr& predicted,
                                 const Constructor& make);

/// Splits off the given summands (built by make) and returns the complement V / (their images).
WeightModule split_off(const WeightModule& V, const DecompositionExpr& summands,
                       const Constructor& make);

} // namespace qsl3
