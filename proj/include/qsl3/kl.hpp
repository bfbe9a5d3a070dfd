#pragma once

#include "qsl3/labels.hpp"
#include "qsl3/structure.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace qsl3 {

// ---------------------------------------------------------------- coset side

enum class CosetFamily { I1, I3, I3bar, I4, I8, P16, P24, P24bar, P48 };
const char* coset_family_name(CosetFamily f);

struct CosetLabel {
    CosetFamily family = CosetFamily::I8;
    Weight weight;

    std::string str() const;
    friend bool operator==(const CosetLabel& a, const CosetLabel& b)
    {
        return a.family == b.family && a.weight == b.weight;
    }
    friend bool operator!=(const CosetLabel& a, const CosetLabel& b) { return !(a == b); }
    friend bool operator<(const CosetLabel& a, const CosetLabel& b);
};

/// Parses e.g. "I3bar[-1/2,-1/2]" or "P16[1/3,-1/2]".
CosetLabel parse_coset_label(std::string_view text);

/// The three atypical lines of the coset, named by their direction.
enum class CosetLine { alpha1 = 1, alpha2 = 2, alpha3 = 3 };
/// Lines (modulo Q) through the weight; two lines meet at the degree-2 points.
std::vector<CosetLine> coset_lines(const Weight& l);
int coset_degree(const Weight& l);

/// Throws InvalidCosetWeight when the weight is outside the family's domain.
void validate(const CosetLabel& c);

ModuleLabel to_quantum(const CosetLabel& c);
/// Inverse dictionary on L, M and P labels.
CosetLabel from_quantum(const ModuleLabel& m);

/// Labelled layers of a transported Loewy diagram.
template <class Label>
struct LayeredLabels {
    std::vector<std::map<Label, int>> layers;

    friend bool operator==(const LayeredLabels& a, const LayeredLabels& b)
    {
        return a.layers == b.layers;
    }
};

using CosetDiagram = LayeredLabels<CosetLabel>;
std::string str(const CosetDiagram& d);

/// Dictionary applied factor-by-factor to the quantum Loewy diagram of to_quantum(c).
CosetDiagram coset_loewy(const CosetLabel& c);
/// The coset projective-cover diagrams as printed (P16, P24, P24bar, P48).
CosetDiagram coset_loewy_fixture(const CosetLabel& c);

// ---------------------------------------------------------------- affine side

/// A = highest-weight (weight 0 or -rho/2), E = semirelaxed, R = relaxed, PA/PE their covers.
enum class AffBase { A, E, R, PA, PE };
enum class WeylTwist { id, w2, w1w2 };

/**
 * @brief sf(flow) * [c] * [w] * BASE[weight].
 *
 * The E weight is the semirelaxed parameter on -3/2 omega1 + R alpha1 modulo Z alpha1;
 * the R weight is a class modulo Q. Labels are kept canonical by the constructors.
 */
struct AffineLabel {
    Weight flow;
    bool conj = false;
    WeylTwist weyl = WeylTwist::id;
    AffBase base = AffBase::A;
    Weight weight;

    std::string str() const;
    bool irreducible() const;
    friend bool operator==(const AffineLabel& a, const AffineLabel& b)
    {
        return a.flow == b.flow && a.conj == b.conj && a.weyl == b.weyl && a.base == b.base &&
               a.weight == b.weight;
    }
    friend bool operator!=(const AffineLabel& a, const AffineLabel& b) { return !(a == b); }
    friend bool operator<(const AffineLabel& a, const AffineLabel& b);
};

namespace aff {
AffineLabel vac();                        ///< A[0,0]
AffineLabel L();                          ///< A[-1/2,-1/2]
AffineLabel Lbar();                       ///< c*A[-1/2,-1/2]
AffineLabel E(const Weight& mu, WeylTwist w = WeylTwist::id);
AffineLabel R(const Weight& mu);
AffineLabel PE(const Weight& mu, WeylTwist w = WeylTwist::id);
AffineLabel PA(const Weight& top);        ///< top 0 or -rho/2
AffineLabel sf(const Weight& flow, AffineLabel a);
} // namespace aff

/// Parses "[sf(p,q)*] [c*] [w2*|w1w2*] BASE[c1,c2]"; A[-3/2,0] and A[0,-3/2] read as sf(omega_i)*A[0,0].
AffineLabel parse_affine_label(std::string_view text);
/// Puts the weight in canonical form; throws InvalidCosetWeight on excluded parameters.
AffineLabel canonical(AffineLabel a);

AffineLabel twist(const AffineLabel& a, const Weight& flow);
AffineLabel conj(const AffineLabel& a);
/// The Weyl twist w2 applied to a label (only where the result stays in the list of bases).
AffineLabel weyl2(const AffineLabel& a);

struct AffineExpr {
    std::map<AffineLabel, int> terms;

    void add(const AffineLabel& l, int m = 1);
    void add(const AffineExpr& e, int m = 1);
    int size() const;
    std::string str(const char* sep = " + ") const;
    friend bool operator==(const AffineExpr& a, const AffineExpr& b) { return a.terms == b.terms; }
};

AffineExpr twist(const AffineExpr& e, const Weight& flow);

/// Coset label and Fock weight of one summand of the restriction.
struct Restriction {
    CosetLabel coset;
    Weight fock;
};
Restriction restrict_label(const AffineLabel& a);

/// Conformal-weight offset of I8_l (x) F_m: (1/3)<l - m, l + m> - 1/2.
Rat delta(const Weight& l, const Weight& m);
/// Induces I_c (x) F_fock; throws NotLocal unless c.weight - fock lies in (3/2)P.
AffineLabel induce(const CosetLabel& c, const Weight& fock);

/// Irreducible composition factors: atypical R by the degeneration table, covers by their diagrams.
AffineExpr affine_factors(const AffineLabel& a);
AffineExpr affine_factors(const AffineExpr& e);
/// The degeneration table for R at an atypical class, as printed.
AffineExpr rdegen_factors(const Weight& mu);

using AffineDiagram = LayeredLabels<AffineLabel>;
std::string str(const AffineDiagram& d);
/// Transport of the coset diagram of the restriction, induced with the label's Fock weight.
AffineDiagram affine_loewy(const AffineLabel& a);
/// The affine projective-cover diagrams as printed, twisted factor-by-factor.
AffineDiagram affine_loewy_fixture(const AffineLabel& a);

enum class FusionLevel { grothendieck, full };

struct FusionResult {
    AffineExpr sum;
    /// Quantum tensor products that fell back to character decomposition.
    std::vector<std::string> fallbacks;
};
FusionResult affine_fuse_report(const AffineLabel& a, const AffineLabel& b, FusionLevel level);
AffineExpr affine_fuse(const AffineLabel& a, const AffineLabel& b,
                       FusionLevel level = FusionLevel::full);

struct GrothendieckReport {
    int rule = 0;                ///< 1..9, 0 for the unit rule, -1 if nothing matched
    std::string rule_text;
    std::string twist_text;      ///< global twist applied to match the rule
    AffineExpr lhs, rhs;         ///< both as irreducible factors
    AffineExpr only_lhs, only_rhs;
    std::vector<std::string> fallbacks;
    bool match = false;
    std::string str() const;
};

/// Texts of the nine Grothendieck fusion rules.
const std::vector<std::string>& grothendieck_rules();
/// Right-hand side of rule k for the given (untwisted) arguments, unexpanded.
AffineExpr grothendieck_rhs(int rule, const AffineLabel& a, const AffineLabel& b);
GrothendieckReport grothendieck_check(const AffineLabel& a, const AffineLabel& b);

} // namespace qsl3
