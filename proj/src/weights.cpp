#include "qsl3/weights.hpp"

#include "qsl3/errors.hpp"

#include <numeric>

namespace qsl3 {

Weight& Weight::operator+=(const Weight& o)
{
    c1 += o.c1;
    c2 += o.c2;
    return *this;
}

Weight& Weight::operator-=(const Weight& o)
{
    c1 -= o.c1;
    c2 -= o.c2;
    return *this;
}

std::string Weight::str() const
{
    return "[" + c1.get_str() + "," + c2.get_str() + "]";
}

mpz_class Weight::denominator() const
{
    return lcm(c1.get_den(), c2.get_den());
}

Weight parse_weight(std::string_view text)
{
    std::size_t a = text.find('[');
    std::size_t b = text.rfind(']');
    if (a == std::string_view::npos)
        throw ParseError("weight must start with '[' (position 0): '" + std::string(text) + "'");
    if (b == std::string_view::npos || b < a)
        throw ParseError("weight missing ']' at position " + std::to_string(text.size()) + " in '" +
                         std::string(text) + "'");
    for (std::size_t k = 0; k < a; ++k)
        if (!std::isspace(static_cast<unsigned char>(text[k])))
            throw ParseError("unexpected character at position " + std::to_string(k) + " in '" +
                             std::string(text) + "'");
    for (std::size_t k = b + 1; k < text.size(); ++k)
        if (!std::isspace(static_cast<unsigned char>(text[k])))
            throw ParseError("trailing character at position " + std::to_string(k) + " in '" +
                             std::string(text) + "'");
    std::string_view inner = text.substr(a + 1, b - a - 1);
    std::size_t comma = inner.find(',');
    if (comma == std::string_view::npos || inner.find(',', comma + 1) != std::string_view::npos)
        throw ParseError("weight needs exactly two coordinates at position " + std::to_string(a + 1) +
                         " in '" + std::string(text) + "'");
    return Weight(parse_rat(inner.substr(0, comma)), parse_rat(inner.substr(comma + 1)));
}

namespace wt {

Weight alpha(int j)
{
    switch (j) {
    case 1:
        return Weight(2, -1);
    case 2:
        return Weight(-1, 2);
    case 3:
        return Weight(1, 1);
    }
    throw InternalInconsistency("root index out of range");
}

Weight omega(int j)
{
    switch (j) {
    case 1:
        return Weight(1, 0);
    case 2:
        return Weight(0, 1);
    case 3:
        return Weight(-1, 1);
    }
    throw InternalInconsistency("fundamental weight index out of range");
}

Weight rho()
{
    return Weight(1, 1);
}

Weight zero()
{
    return Weight(0, 0);
}

} // namespace wt

Rat killing(const Weight& a, const Weight& b)
{
    // Gram matrix of the omega basis is (1/3)[[2,1],[1,2]]
    Rat r = (2 * a.c1 * b.c1 + a.c1 * b.c2 + a.c2 * b.c1 + 2 * a.c2 * b.c2) / 3;
    r.canonicalize();
    return r;
}

Rat norm2(const Weight& a)
{
    return killing(a, a);
}

Rat pair_alpha(const Weight& l, int j)
{
    switch (j) {
    case 1:
        return l.c1;
    case 2:
        return l.c2;
    case 3:
        return l.c1 + l.c2;
    }
    throw InternalInconsistency("root index out of range");
}

Rat height(const Weight& l)
{
    return l.c1 + l.c2;
}

std::array<Rat, 2> root_coords(const Weight& l)
{
    Rat a1 = (2 * l.c1 + l.c2) / 3;
    Rat a2 = (l.c1 + 2 * l.c2) / 3;
    a1.canonicalize();
    a2.canonicalize();
    return {a1, a2};
}

std::array<Rat, 3> indices(const Weight& l)
{
    Rat l1 = l.c1 + 1;
    Rat l2 = l.c2 + 1;
    return {l1, l2, l1 + l2};
}

Parity parity(const Rat& x)
{
    if (!is_integer(x))
        return Parity::NonIntegral;
    return is_odd(x) ? Parity::Odd : Parity::Even;
}

char parity_char(Parity p)
{
    switch (p) {
    case Parity::Odd:
        return 'o';
    case Parity::Even:
        return 'e';
    case Parity::NonIntegral:
        return 'n';
    }
    return '?';
}

std::string TypicalityClass::name() const
{
    switch (tag) {
    case ClassTag::Typical:
        return "Typical";
    case ClassTag::Atyp1:
        return "Atyp1(" + std::to_string(i) + ")";
    case ClassTag::Atyp2Root3Odd:
        return "Atyp2Root3Odd(" + std::to_string(i) + ")";
    case ClassTag::Atyp2Root3Even:
        return "Atyp2Root3Even";
    }
    return "?";
}

int TypicalityClass::degree() const
{
    switch (tag) {
    case ClassTag::Typical:
        return 0;
    case ClassTag::Atyp1:
        return 1;
    default:
        return 2;
    }
}

TypicalityClass classify(const Weight& l)
{
    auto idx = indices(l);
    TypicalityClass c;
    int odd = 0;
    for (int k = 0; k < 3; ++k) {
        c.parities[k] = parity(idx[k]);
        if (c.parities[k] == Parity::Odd)
            ++odd;
    }
    bool o1 = c.parities[0] == Parity::Odd;
    bool o2 = c.parities[1] == Parity::Odd;
    bool o3 = c.parities[2] == Parity::Odd;
    if (odd == 0) {
        c.tag = ClassTag::Typical;
    } else if (odd == 1) {
        c.tag = ClassTag::Atyp1;
        c.i = o1 ? 1 : (o2 ? 2 : 3);
    } else if (o1 && o2) {
        c.tag = ClassTag::Atyp2Root3Even;
    } else {
        c.tag = ClassTag::Atyp2Root3Odd;
        c.i = o1 ? 1 : 2;
        (void)o3;
    }
    return c;
}

int irrep_dim(const Weight& l)
{
    switch (classify(l).tag) {
    case ClassTag::Typical:
        return 8;
    case ClassTag::Atyp1:
        return 4;
    case ClassTag::Atyp2Root3Odd:
        return 3;
    case ClassTag::Atyp2Root3Even:
        return 1;
    }
    return 0;
}

Weight phi(const Weight& l)
{
    return Weight((2 * l.c1 - 2 * l.c2) / 3, (2 * l.c1 + 4 * l.c2) / 3);
}

Weight phi_inv(const Weight& l)
{
    return Weight((2 * l.c1 + l.c2) / 2, (l.c2 - l.c1) / 2);
}

bool lattice_member(const Weight& l, Lattice L)
{
    switch (L) {
    case Lattice::P:
        return is_integer(l.c1) && is_integer(l.c2);
    case Lattice::Q: {
        auto a = root_coords(l);
        return is_integer(a[0]) && is_integer(a[1]);
    }
    case Lattice::HalfQ:
        return lattice_member(Rat(2) * l, Lattice::Q);
    case Lattice::ThreeHalvesP:
        return lattice_member(Rat(2, 3) * l, Lattice::P);
    }
    return false;
}

bool coset_member(const Weight& l, const Weight& mu, Lattice L)
{
    return lattice_member(l - mu, L);
}

int lcm_order(int a, int b)
{
    return std::lcm(a, b);
}

int field_order_for(const Weight& l)
{
    mpz_class d = l.denominator();
    if (!d.fits_sint_p())
        throw FieldMismatch("weight denominator too large: " + l.str());
    return 4 * static_cast<int>(d.get_si());
}

} // namespace qsl3
