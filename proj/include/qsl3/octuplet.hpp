#pragma once

#include "qsl3/kl.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace qsl3 {

enum class OctFamily { W1, W3, W3bar, W8, Q9, Q9bar, P24, P24bar, P48 };
const char* oct_family_name(OctFamily f);

/// Octuplet module labelled by a class modulo 3P.
struct OctLabel {
    OctFamily family = OctFamily::W1;
    Weight cls;

    std::string str() const;
    friend bool operator==(const OctLabel& a, const OctLabel& b)
    {
        return a.family == b.family && a.cls == b.cls;
    }
    friend bool operator<(const OctLabel& a, const OctLabel& b);
};

/// Reduces rep modulo 3P onto {0, rho, -rho} or {-rho/2, rho/2, 3rho/2}.
OctLabel make_oct(OctFamily f, const Weight& rep);
OctLabel parse_oct_label(std::string_view text);

/// Centre of the family's base ground states: 0, -rho/2 or rho/2.
Weight oct_centre(OctFamily f);
/// Z3 grade in Q/3P: the class, less 3rho/2 for the half-integral families.
Weight oct_grade(const OctLabel& l);

/// Untwisted induction; TwistedModule outside (1/2)Q, UnsupportedCase if the result is reducible.
OctLabel octuplet_induce(const CosetLabel& c);
CosetLabel oct_to_coset(const OctLabel& l);

/// The twelve untwisted irreducibles in table order.
std::vector<OctLabel> octuplet_irreducibles();

struct OctRow {
    OctLabel label;
    int top_dim = 0;
    std::vector<Weight> top_weights;  ///< sorted
    Rat conformal_weight;

    friend bool operator==(const OctRow& a, const OctRow& b)
    {
        return a.label == b.label && a.top_dim == b.top_dim && a.top_weights == b.top_weights &&
               a.conformal_weight == b.conformal_weight;
    }
};

/// Lowest conformal weights of the simple currents I1 at 0, the roots and +-3 omega_i.
Rat simple_current_delta(const Weight& l);
std::vector<OctRow> octuplet_table();
/// The table as printed.
const std::vector<OctRow>& octuplet_table_printed();

struct OctExpr {
    std::map<OctLabel, int> terms;
    void add(const OctLabel& l, int m = 1);
    int size() const;
    std::string str(const char* sep = " + ") const;
    friend bool operator==(const OctExpr& a, const OctExpr& b) { return a.terms == b.terms; }
};

OctExpr octuplet_fuse(const OctLabel& a, const OctLabel& b,
                      FusionLevel level = FusionLevel::full);
/// Composition factors of any octuplet label.
OctExpr octuplet_factors(const OctLabel& l);

/// Orbits under fusion with W1[rho], starting at the four orbit representatives.
std::vector<std::vector<OctLabel>> octuplet_orbits();
const std::vector<std::vector<OctLabel>>& octuplet_orbits_printed();

struct OctRule {
    OctLabel left, right;
    OctExpr result;
};
const std::vector<OctRule>& octuplet_rules_printed();

using OctDiagram = LayeredLabels<OctLabel>;
std::string str(const OctDiagram& d);
OctDiagram octuplet_loewy(const OctLabel& l);
/// Printed diagrams (Q9, P24 at 3rho/2 and P48 at 0), barred by exchange, moved by simple currents.
OctDiagram octuplet_loewy_fixture(const OctLabel& l);

} // namespace qsl3
