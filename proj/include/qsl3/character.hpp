#pragma once

#include "qsl3/weights.hpp"

#include <map>
#include <string>

namespace qsl3 {

/// Finite formal sum of z^lambda with positive multiplicities.
class Character {
public:
    Character() = default;

    static Character monomial(const Weight& w, int mult = 1);

    void add(const Weight& w, int mult = 1);
    /// Subtracts; throws InternalInconsistency if a multiplicity would go negative.
    void subtract(const Character& o);
    bool contains(const Character& o) const;

    int mult(const Weight& w) const;
    int dim() const;
    bool empty() const { return terms_.empty(); }
    const std::map<Weight, int>& terms() const { return terms_; }

    Character shifted(const Weight& by) const;

    Character& operator+=(const Character& o);
    friend Character operator+(Character a, const Character& b) { return a += b; }
    friend Character operator*(const Character& a, const Character& b);
    friend bool operator==(const Character& a, const Character& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Character& a, const Character& b) { return !(a == b); }

    /// Sorted term list "m * z^[p/q,r/s] + ...".
    std::string str() const;

private:
    std::map<Weight, int> terms_;
};

/// Character of the Verma module: z^l (1 + z^-a1)(1 + z^-a2)(1 + z^-a3).
Character verma_char(const Weight& l);
/// Irreducible characters by typicality class.
Character irrep_char(const Weight& l);

} // namespace qsl3
