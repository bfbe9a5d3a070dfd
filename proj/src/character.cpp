#include "qsl3/character.hpp"

#include "qsl3/errors.hpp"

#include <sstream>

namespace qsl3 {

Character Character::monomial(const Weight& w, int mult)
{
    Character c;
    c.add(w, mult);
    return c;
}

void Character::add(const Weight& w, int mult)
{
    if (mult == 0)
        return;
    int& m = terms_[w];
    m += mult;
    if (m < 0)
        throw InternalInconsistency("negative multiplicity at " + w.str());
    if (m == 0)
        terms_.erase(w);
}

void Character::subtract(const Character& o)
{
    for (const auto& [w, m] : o.terms_)
        add(w, -m);
}

bool Character::contains(const Character& o) const
{
    for (const auto& [w, m] : o.terms_)
        if (mult(w) < m)
            return false;
    return true;
}

int Character::mult(const Weight& w) const
{
    auto it = terms_.find(w);
    return it == terms_.end() ? 0 : it->second;
}

int Character::dim() const
{
    int d = 0;
    for (const auto& kv : terms_)
        d += kv.second;
    return d;
}

Character Character::shifted(const Weight& by) const
{
    Character c;
    for (const auto& [w, m] : terms_)
        c.add(w + by, m);
    return c;
}

Character& Character::operator+=(const Character& o)
{
    for (const auto& [w, m] : o.terms_)
        add(w, m);
    return *this;
}

Character operator*(const Character& a, const Character& b)
{
    Character c;
    for (const auto& [w, m] : a.terms_)
        for (const auto& [v, n] : b.terms_)
            c.add(w + v, m * n);
    return c;
}

std::string Character::str() const
{
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, m] : terms_) {
        if (!first)
            os << " + ";
        first = false;
        os << m << " * z^" << w.str();
    }
    if (first)
        os << "0";
    return os.str();
}

Character verma_char(const Weight& l)
{
    Character c;
    for (int n1 = 0; n1 < 2; ++n1)
        for (int n2 = 0; n2 < 2; ++n2)
            for (int n3 = 0; n3 < 2; ++n3)
                c.add(l - Rat(n1) * wt::alpha(1) - Rat(n2) * wt::alpha(2) - Rat(n3) * wt::alpha(3));
    return c;
}

Character irrep_char(const Weight& l)
{
    TypicalityClass cls = classify(l);
    const Weight a3 = wt::alpha(3);
    auto a = [](int j) { return wt::alpha(j); };
    Character c;
    switch (cls.tag) {
    case ClassTag::Typical:
        return verma_char(l);
    case ClassTag::Atyp1: {
        int j = cls.i == 1 ? 2 : 1;
        int k = cls.i == 3 ? 2 : 3;
        c.add(l);
        c.add(l - a(j));
        c.add(l - a(k));
        c.add(l - a(j) - a(k));
        return c;
    }
    case ClassTag::Atyp2Root3Odd: {
        int j = cls.i == 1 ? 2 : 1;
        c.add(l);
        c.add(l - a(j));
        c.add(l - a3);
        return c;
    }
    case ClassTag::Atyp2Root3Even:
        c.add(l);
        return c;
    }
    return c;
}

} // namespace qsl3
