#pragma once

#include "qsl3/structure.hpp"

#include <string>

namespace qsl3 {

/// Parity signature "oen/eeo/nnn" of the indices of a, b and a+b.
std::string parity_signature(const Weight& a, const Weight& b);

/// Closed-form decomposition of L_a (x) L_b; symmetric in the arguments.
DecompositionExpr tensor_rule(const ModuleLabel& a, const ModuleLabel& b);

/// A non-split extension between L_l and L_m exists.
bool ext_exists(const Weight& l, const Weight& m);

/// Parametric Loewy diagram of an M, P, K, R, S or Q module with standard/costandard arrow tags.
LoewyDiagram static_loewy(const ModuleLabel& label);
Character static_char(const ModuleLabel& label);

/// How a reference module is obtained: the whole of left (x) right, or its complement after splitting.
struct TensorRecipe {
    ModuleLabel left, right;
    DecompositionExpr split;
};
TensorRecipe reference_recipe(const ModuleLabel& label);

/// Concrete module for a label (irreducibles directly, the rest by recipe); cached.
WeightModule reference_module(const ModuleLabel& label);
/// Constructor suitable for verify_decomposition.
Constructor reference_constructor();

} // namespace qsl3
