#pragma once

#include "qsl3/rational.hpp"

#include <array>
#include <string>
#include <string_view>

namespace qsl3 {

/// Element of h* in the fundamental-weight basis: c1*omega1 + c2*omega2.
struct Weight {
    Rat c1, c2;

    Weight() = default;
    Weight(Rat a, Rat b) : c1(std::move(a)), c2(std::move(b))
    {
        c1.canonicalize();
        c2.canonicalize();
    }

    Weight& operator+=(const Weight& o);
    Weight& operator-=(const Weight& o);
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    friend Weight operator-(const Weight& a) { return Weight(-a.c1, -a.c2); }
    friend Weight operator*(const Rat& s, const Weight& w) { return Weight(s * w.c1, s * w.c2); }
    friend bool operator==(const Weight& a, const Weight& b) { return a.c1 == b.c1 && a.c2 == b.c2; }
    friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
    friend bool operator<(const Weight& a, const Weight& b)
    {
        return a.c1 < b.c1 || (a.c1 == b.c1 && a.c2 < b.c2);
    }

    /// Compact form "[c1,c2]".
    std::string str() const;
    /// Denominator lcm of both coordinates.
    mpz_class denominator() const;
};

/// Parses "[p/q, r/s]" (whitespace optional).
Weight parse_weight(std::string_view text);

namespace wt {
Weight alpha(int j);   ///< j = 1, 2, 3
Weight omega(int j);   ///< j = 1, 2, 3 with omega3 = omega2 - omega1
Weight rho();
Weight zero();
} // namespace wt

Rat killing(const Weight& a, const Weight& b);
Rat norm2(const Weight& a);
/// <lambda, alpha_j> for j = 1, 2, 3.
Rat pair_alpha(const Weight& l, int j);
/// Height c1 + c2; positive on every positive root.
Rat height(const Weight& l);
/// Coordinates (a1, a2) with l = a1 alpha1 + a2 alpha2.
std::array<Rat, 2> root_coords(const Weight& l);

/// The indices lambda_j = <lambda + rho, alpha_j>.
std::array<Rat, 3> indices(const Weight& l);

enum class Parity { Odd, Even, NonIntegral };
Parity parity(const Rat& x);
char parity_char(Parity p);

enum class ClassTag { Typical, Atyp1, Atyp2Root3Odd, Atyp2Root3Even };

struct TypicalityClass {
    ClassTag tag = ClassTag::Typical;
    int i = 0;                        ///< odd index for Atyp1 / Atyp2Root3Odd
    std::array<Parity, 3> parities{};

    std::string name() const;
    int degree() const;
    friend bool operator==(const TypicalityClass& a, const TypicalityClass& b)
    {
        return a.tag == b.tag && a.i == b.i;
    }
};

TypicalityClass classify(const Weight& l);
/// Dimension of the irreducible with highest weight l: 8, 4, 3 or 1.
int irrep_dim(const Weight& l);

Weight phi(const Weight& l);
Weight phi_inv(const Weight& l);

enum class Lattice { Q, P, HalfQ, ThreeHalvesP };
bool lattice_member(const Weight& l, Lattice L);
/// Membership of l in the coset mu + L.
bool coset_member(const Weight& l, const Weight& mu, Lattice L);

/// 4 * lcm of the coordinate denominators (the minimal field order for the weight).
int field_order_for(const Weight& l);
int lcm_order(int a, int b);

} // namespace qsl3
