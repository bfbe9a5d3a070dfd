#pragma once

#include "qsl3/module.hpp"

namespace qsl3 {

/**
 * @brief Generators of a module together with a spanning tree of words.
 *
 * Every tree node is either a generator or X_g applied to an earlier node, and the
 * nodes at each weight form a basis of that weight space.  A homomorphism out of the
 * module is therefore fixed by its values on the generators.
 */
struct Presentation {
    struct Node {
        int w = -1;       ///< weight index
        int gen = -1;     ///< generator number, or -1
        int parent = -1;  ///< parent node when gen == -1
        Gen g = X1;       ///< operator applied to the parent
        Vec vec;          ///< the node vector in standard coordinates
    };
    std::vector<std::pair<int, Vec>> gens;
    std::vector<Node> nodes;
    std::vector<std::vector<int>> at;  ///< node ids per weight index, in order
    std::vector<Mat> tinv;             ///< per weight: standard coords -> node coords
};

Presentation build_presentation(const WeightModule& V);

} // namespace qsl3
