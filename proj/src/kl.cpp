#include "qsl3/kl.hpp"

#include "qsl3/character.hpp"
#include "qsl3/errors.hpp"
#include "qsl3/rules.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <functional>
#include <sstream>
#include <tuple>

namespace qsl3 {

namespace {

using wt::alpha;
using wt::omega;
using wt::rho;

Weight from_root(const Rat& a, const Rat& b)
{
    return a * alpha(1) + b * alpha(2);
}

Weight half_rho()
{
    return Rat(1, 2) * rho();
}

bool half_odd(const Rat& x)
{
    return !is_integer(x) && is_integer(Rat(2) * x);
}

Weight refl1(const Weight& l)
{
    return Weight(-l.c1, l.c1 + l.c2);
}

Weight refl2(const Weight& l)
{
    return Weight(l.c1 + l.c2, -l.c2);
}

Weight dot(const std::function<Weight(const Weight&)>& w, const Weight& l)
{
    return w(l + rho()) - rho();
}

/// Linear action of the Weyl decoration on h*.
Weight apply_weyl(WeylTwist w, const Weight& l)
{
    switch (w) {
    case WeylTwist::id:
        return l;
    case WeylTwist::w2:
        return refl2(l);
    case WeylTwist::w1w2:
        return refl1(refl2(l));
    }
    return l;
}

Weight apply_weyl_inverse(WeylTwist w, const Weight& l)
{
    switch (w) {
    case WeylTwist::id:
        return l;
    case WeylTwist::w2:
        return refl2(l);
    case WeylTwist::w1w2:
        return refl2(refl1(l));
    }
    return l;
}

WeylTwist weyl_for_line(CosetLine line)
{
    switch (line) {
    case CosetLine::alpha1:
        return WeylTwist::id;
    case CosetLine::alpha3:
        return WeylTwist::w2;
    case CosetLine::alpha2:
        return WeylTwist::w1w2;
    }
    return WeylTwist::id;
}

std::string skip_space(std::string_view s)
{
    std::string out;
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            out += ch;
    return out;
}

} // namespace

// ---------------------------------------------------------------- coset labels

const char* coset_family_name(CosetFamily f)
{
    static const char* names[] = {"I1", "I3", "I3bar", "I4", "I8", "P16", "P24", "P24bar", "P48"};
    return names[static_cast<int>(f)];
}

std::string CosetLabel::str() const
{
    return coset_family_name(family) + weight.str();
}

bool operator<(const CosetLabel& a, const CosetLabel& b)
{
    return std::make_tuple(static_cast<int>(a.family), a.weight) <
           std::make_tuple(static_cast<int>(b.family), b.weight);
}

CosetLabel parse_coset_label(std::string_view text)
{
    std::string s = skip_space(text);
    std::size_t br = s.find('[');
    if (br == std::string::npos)
        throw ParseError("coset label needs a weight at position " + std::to_string(s.size()) + " in '" +
                         std::string(text) + "'");
    std::string name = s.substr(0, br);
    for (int k = 0; k <= static_cast<int>(CosetFamily::P48); ++k)
        if (name == coset_family_name(static_cast<CosetFamily>(k))) {
            CosetLabel c{static_cast<CosetFamily>(k), parse_weight(s.substr(br))};
            validate(c);
            return c;
        }
    throw ParseError("unknown coset family '" + name + "' at position 0 in '" + std::string(text) +
                     "'");
}

std::vector<CosetLine> coset_lines(const Weight& l)
{
    auto rc = root_coords(l);
    std::vector<CosetLine> out;
    if (half_odd(rc[1]))
        out.push_back(CosetLine::alpha1);
    if (half_odd(rc[0]))
        out.push_back(CosetLine::alpha2);
    if (half_odd(rc[0] - rc[1]))
        out.push_back(CosetLine::alpha3);
    return out;
}

int coset_degree(const Weight& l)
{
    return static_cast<int>(coset_lines(l).size());
}

void validate(const CosetLabel& c)
{
    auto fail = [&](const char* why) {
        throw InvalidCosetWeight(c.str() + ": " + why);
    };
    switch (c.family) {
    case CosetFamily::I1:
    case CosetFamily::P48:
        if (!lattice_member(c.weight, Lattice::Q))
            fail("weight must lie in Q");
        break;
    case CosetFamily::I3:
    case CosetFamily::I3bar:
    case CosetFamily::P24:
    case CosetFamily::P24bar:
        if (!coset_member(c.weight, -half_rho(), Lattice::Q))
            fail("weight must lie in -rho/2 + Q");
        break;
    case CosetFamily::I4:
    case CosetFamily::P16:
        if (coset_degree(c.weight) != 1)
            fail("weight must lie on exactly one atypical line");
        break;
    case CosetFamily::I8:
        break;
    }
}

ModuleLabel to_quantum(const CosetLabel& c)
{
    validate(c);
    const Weight p = phi(c.weight);
    const Weight pr = p + rho();
    switch (c.family) {
    case CosetFamily::I1:
        return L_label(p);
    case CosetFamily::I3:
        return L_label(pr);
    case CosetFamily::I3bar:
        return L_label(p);
    case CosetFamily::I4:
        return L_label(coset_lines(c.weight)[0] == CosetLine::alpha2 ? p : pr);
    case CosetFamily::I8:
        return classify(pr).tag == ClassTag::Typical ? L_label(pr) : make_label(Family::M, pr);
    case CosetFamily::P16:
        return P_label(coset_lines(c.weight)[0] == CosetLine::alpha2 ? p : pr);
    case CosetFamily::P24:
        return P_label(pr);
    case CosetFamily::P24bar:
    case CosetFamily::P48:
        return P_label(p);
    }
    throw InternalInconsistency("unknown coset family");
}

CosetLabel from_quantum(const ModuleLabel& m)
{
    const Weight& mu = m.weight;
    const TypicalityClass c = classify(mu);
    const Weight shifted = phi_inv(mu - rho());
    const Weight plain = phi_inv(mu);
    CosetLabel out;
    auto pick = [&](CosetFamily f, const Weight& w) {
        out = CosetLabel{f, w};
    };
    if (m.family == Family::M) {
        pick(CosetFamily::I8, shifted);
    } else if (m.family == Family::L || m.family == Family::P) {
        const bool proj = m.family == Family::P;
        switch (c.tag) {
        case ClassTag::Typical:
            pick(CosetFamily::I8, shifted);
            break;
        case ClassTag::Atyp1:
            pick(proj ? CosetFamily::P16 : CosetFamily::I4, c.i == 3 ? plain : shifted);
            break;
        case ClassTag::Atyp2Root3Odd:
            if (c.i == 2)
                pick(proj ? CosetFamily::P24 : CosetFamily::I3, shifted);
            else
                pick(proj ? CosetFamily::P24bar : CosetFamily::I3bar, plain);
            break;
        case ClassTag::Atyp2Root3Even:
            pick(proj ? CosetFamily::P48 : CosetFamily::I1, plain);
            break;
        }
    } else {
        throw UnsupportedCase("no coset family for " + m.str());
    }
    validate(out);
    return out;
}

std::string str(const CosetDiagram& d)
{
    std::ostringstream os;
    for (std::size_t k = 0; k < d.layers.size(); ++k) {
        os << "layer " << k << ":";
        for (const auto& [l, m] : d.layers[k])
            os << " " << (m > 1 ? std::to_string(m) + "*" : "") << l.str();
        os << "\n";
    }
    return os.str();
}

CosetDiagram coset_loewy(const CosetLabel& c)
{
    LoewyDiagram q = static_loewy(to_quantum(c));
    CosetDiagram out;
    for (const auto& layer : q.layers) {
        std::map<CosetLabel, int> m;
        for (const auto& n : layer)
            m[from_quantum(n.label)] += n.mult;
        out.layers.push_back(std::move(m));
    }
    return out;
}

CosetDiagram coset_loewy_fixture(const CosetLabel& c)
{
    validate(c);
    const Weight& l = c.weight;
    const Weight w1 = omega(1), w2 = omega(2), w3 = omega(3), r = rho();
    const Rat h(3, 2);
    using F = CosetFamily;
    CosetDiagram d;
    auto layer = [&](std::initializer_list<std::tuple<F, Weight, int>> nodes) {
        std::map<CosetLabel, int> m;
        for (const auto& [f, w, k] : nodes)
            m[CosetLabel{f, w}] += k;
        d.layers.push_back(std::move(m));
    };
    switch (c.family) {
    case F::P16: {
        Weight s;
        switch (coset_lines(l)[0]) {
        case CosetLine::alpha1:
            s = h * w2;
            break;
        case CosetLine::alpha3:
            s = h * w3;
            break;
        case CosetLine::alpha2:
            s = h * w1;
            break;
        }
        layer({{F::I4, l, 1}});
        layer({{F::I4, l + s, 1}, {F::I4, l - s, 1}});
        layer({{F::I4, l, 1}});
        break;
    }
    case F::P24:
        layer({{F::I3, l, 1}});
        layer({{F::I1, l + h * r, 1}, {F::I1, l - h * w3, 1}, {F::I1, l + h * w3, 1}});
        layer({{F::I3bar, l + 3 * w1, 1},
               {F::I3bar, l + 3 * w2, 1},
               {F::I3, l, 1},
               {F::I3bar, l, 1}});
        layer({{F::I1, l + h * r, 1}, {F::I1, l - h * w3, 1}, {F::I1, l + h * w3, 1}});
        layer({{F::I3, l, 1}});
        break;
    case F::P24bar:
        layer({{F::I3bar, l, 1}});
        layer({{F::I1, l - h * w3, 1}, {F::I1, l + h * w3, 1}, {F::I1, l - h * r, 1}});
        layer({{F::I3, l, 1},
               {F::I3, l - 3 * w2, 1},
               {F::I3bar, l, 1},
               {F::I3, l - 3 * w1, 1}});
        layer({{F::I1, l - h * w3, 1}, {F::I1, l + h * w3, 1}, {F::I1, l - h * r, 1}});
        layer({{F::I3bar, l, 1}});
        break;
    case F::P48: {
        auto second = [&] {
            layer({{F::I3bar, l + h * r, 1},
                   {F::I3, l - h * w3, 1},
                   {F::I3, l + h * w3, 1},
                   {F::I3bar, l - h * w3, 1},
                   {F::I3bar, l + h * w3, 1},
                   {F::I3, l - h * r, 1}});
        };
        layer({{F::I1, l, 1}});
        second();
        layer({{F::I1, l + 3 * w1, 1},
               {F::I1, l + 3 * w2, 1},
               {F::I1, l - 3 * w3, 1},
               {F::I1, l, 4},
               {F::I1, l + 3 * w3, 1},
               {F::I1, l - 3 * w2, 1},
               {F::I1, l - 3 * w1, 1}});
        second();
        layer({{F::I1, l, 1}});
        break;
    }
    default:
        layer({{c.family, l, 1}});
        break;
    }
    return d;
}

// ---------------------------------------------------------------- affine labels

namespace {

const char* base_name(AffBase b)
{
    static const char* names[] = {"A", "E", "R", "PA", "PE"};
    return names[static_cast<int>(b)];
}

bool is_A(AffBase b)
{
    return b == AffBase::A || b == AffBase::PA;
}

/// Representative of the class of x on -3/2 omega1 + R alpha1, modulo Z alpha1.
Weight e_parameter(const Weight& x)
{
    auto rc = root_coords(x);
    if (!half_odd(rc[1]))
        throw InvalidCosetWeight("semirelaxed parameter " + x.str() +
                                 " is not on the alpha1 line modulo Q");
    Rat a = mod(rc[0], Rat(1));
    if (is_integer(Rat(2) * a))
        throw InvalidCosetWeight("semirelaxed parameter " + x.str() +
                                 " is one of the excluded degree-2 classes");
    return from_root(a, Rat(-1, 2));
}

Weight q_class(const Weight& x)
{
    auto rc = root_coords(x);
    return from_root(mod(rc[0], Rat(1)), mod(rc[1], Rat(1)));
}

} // namespace

std::string AffineLabel::str() const
{
    std::string s;
    if (flow != Weight())
        s += "sf(" + to_string(flow.c1) + "," + to_string(flow.c2) + ")*";
    if (conj)
        s += "c*";
    if (weyl == WeylTwist::w2)
        s += "w2*";
    else if (weyl == WeylTwist::w1w2)
        s += "w1w2*";
    return s + base_name(base) + weight.str();
}

bool AffineLabel::irreducible() const
{
    if (base == AffBase::A || base == AffBase::E)
        return true;
    if (base == AffBase::R)
        return coset_degree(weight) == 0;
    return false;
}

bool operator<(const AffineLabel& a, const AffineLabel& b)
{
    return std::make_tuple(static_cast<int>(a.base), static_cast<int>(a.weyl), a.conj, a.weight,
                           a.flow) < std::make_tuple(static_cast<int>(b.base),
                                                     static_cast<int>(b.weyl), b.conj, b.weight,
                                                     b.flow);
}

AffineLabel canonical(AffineLabel a)
{
    if (!lattice_member(a.flow, Lattice::P))
        throw InvalidCosetWeight("spectral flow " + a.flow.str() + " is not in P");
    switch (a.base) {
    case AffBase::A:
    case AffBase::PA:
        if (a.weyl != WeylTwist::id)
            throw UnsupportedCase("Weyl twists of " + std::string(base_name(a.base)) +
                                  " labels are not in the list of bases");
        if (a.weight == Weight()) {
            a.conj = false;
        } else if (a.weight != -half_rho()) {
            throw InvalidCosetWeight("highest-weight base needs weight [0,0] or [-1/2,-1/2], got " +
                                     a.weight.str());
        }
        break;
    case AffBase::R:
        a.weight = apply_weyl(a.weyl, a.weight);
        if (a.conj)
            a.weight = -a.weight;
        a.conj = false;
        a.weyl = WeylTwist::id;
        a.weight = q_class(a.weight);
        break;
    case AffBase::E:
    case AffBase::PE:
        a.weight = e_parameter(a.weight);
        break;
    }
    return a;
}

namespace aff {

AffineLabel vac()
{
    return AffineLabel{};
}

AffineLabel L()
{
    AffineLabel a;
    a.weight = -half_rho();
    return a;
}

AffineLabel Lbar()
{
    AffineLabel a = L();
    a.conj = true;
    return a;
}

AffineLabel E(const Weight& mu, WeylTwist w)
{
    AffineLabel a;
    a.base = AffBase::E;
    a.weyl = w;
    a.weight = mu;
    return canonical(a);
}

AffineLabel R(const Weight& mu)
{
    AffineLabel a;
    a.base = AffBase::R;
    a.weight = mu;
    return canonical(a);
}

AffineLabel PE(const Weight& mu, WeylTwist w)
{
    AffineLabel a = E(mu, w);
    a.base = AffBase::PE;
    return a;
}

AffineLabel PA(const Weight& top)
{
    AffineLabel a;
    a.base = AffBase::PA;
    a.weight = top;
    return canonical(a);
}

AffineLabel sf(const Weight& flow, AffineLabel a)
{
    return twist(a, flow);
}

} // namespace aff

AffineLabel parse_affine_label(std::string_view text)
{
    const std::string s = skip_space(text);
    std::size_t pos = 0;
    AffineLabel a;
    auto error = [&](const std::string& why) {
        throw ParseError(why + " at position " + std::to_string(pos) + " in '" + std::string(text) +
                         "'");
    };
    auto starts = [&](const char* p) { return s.compare(pos, std::string(p).size(), p) == 0; };
    if (starts("sf(")) {
        std::size_t close = s.find(")*", pos);
        if (close == std::string::npos)
            error("unterminated spectral flow");
        std::string inner = s.substr(pos + 3, close - pos - 3);
        std::size_t comma = inner.find(',');
        if (comma == std::string::npos)
            error("spectral flow needs two coordinates");
        a.flow = Weight(parse_rat(inner.substr(0, comma)), parse_rat(inner.substr(comma + 1)));
        pos = close + 2;
    }
    if (starts("c*")) {
        a.conj = true;
        pos += 2;
    }
    if (starts("w1w2*")) {
        a.weyl = WeylTwist::w1w2;
        pos += 5;
    } else if (starts("w2*")) {
        a.weyl = WeylTwist::w2;
        pos += 3;
    }
    std::size_t br = s.find('[', pos);
    if (br == std::string::npos)
        error("missing weight");
    std::string name = s.substr(pos, br - pos);
    bool found = false;
    for (int k = 0; k <= static_cast<int>(AffBase::PE); ++k)
        if (name == base_name(static_cast<AffBase>(k))) {
            a.base = static_cast<AffBase>(k);
            found = true;
        }
    if (!found)
        error("unknown base '" + name + "'");
    pos = br;
    a.weight = parse_weight(s.substr(br));
    if (is_A(a.base)) {
        for (int i = 1; i <= 2; ++i)
            if (a.weight == Rat(-3, 2) * omega(i)) {
                a.weight = Weight();
                a.flow += omega(i);
            }
    }
    return canonical(a);
}

AffineLabel twist(const AffineLabel& a, const Weight& flow)
{
    if (!lattice_member(flow, Lattice::P))
        throw InvalidCosetWeight("spectral flow " + flow.str() + " is not in P");
    AffineLabel b = a;
    b.flow += flow;
    return b;
}

AffineLabel conj(const AffineLabel& a)
{
    AffineLabel b = a;
    b.flow = -a.flow;
    b.conj = !a.conj;
    return canonical(b);
}

AffineLabel weyl2(const AffineLabel& a)
{
    AffineLabel b = a;
    b.flow = refl2(a.flow);
    switch (a.base) {
    case AffBase::A:
    case AffBase::PA:
        if (a.weight != Weight())
            throw UnsupportedCase("w2 twist of " + a.str() + " is not in the list of bases");
        break;
    case AffBase::R:
        b.weight = refl2(a.weight);
        break;
    case AffBase::E:
    case AffBase::PE:
        if (a.weyl == WeylTwist::id)
            b.weyl = WeylTwist::w2;
        else if (a.weyl == WeylTwist::w2)
            b.weyl = WeylTwist::id;
        else
            throw UnsupportedCase("w2 twist of " + a.str() + " is not in the list of bases");
        break;
    }
    return canonical(b);
}

void AffineExpr::add(const AffineLabel& l, int m)
{
    if (m == 0)
        return;
    int& v = terms[l];
    v += m;
    if (v == 0)
        terms.erase(l);
}

void AffineExpr::add(const AffineExpr& e, int m)
{
    for (const auto& [l, k] : e.terms)
        add(l, m * k);
}

int AffineExpr::size() const
{
    int n = 0;
    for (const auto& [l, k] : terms)
        n += k;
    return n;
}

std::string AffineExpr::str(const char* sep) const
{
    if (terms.empty())
        return "0";
    std::string s;
    for (const auto& [l, k] : terms) {
        if (!s.empty())
            s += sep;
        if (k != 1)
            s += std::to_string(k) + "*";
        s += l.str();
    }
    return s;
}

AffineExpr twist(const AffineExpr& e, const Weight& flow)
{
    AffineExpr out;
    for (const auto& [l, k] : e.terms)
        out.add(twist(l, flow), k);
    return out;
}

namespace {

AffineExpr map_expr(const AffineExpr& e, const std::function<AffineLabel(const AffineLabel&)>& f)
{
    AffineExpr out;
    for (const auto& [l, k] : e.terms)
        out.add(f(l), k);
    return out;
}

} // namespace

// ---------------------------------------------------------------- restriction and induction

Restriction restrict_label(const AffineLabel& a0)
{
    const AffineLabel a = canonical(a0);
    Restriction r;
    switch (a.base) {
    case AffBase::A:
    case AffBase::PA: {
        const bool proj = a.base == AffBase::PA;
        if (a.weight == Weight())
            r.coset = {proj ? CosetFamily::P48 : CosetFamily::I1, Weight()};
        else if (a.conj)
            r.coset = {proj ? CosetFamily::P24bar : CosetFamily::I3bar, a.weight};
        else
            r.coset = {proj ? CosetFamily::P24 : CosetFamily::I3, a.weight};
        r.fock = a.weight;
        break;
    }
    case AffBase::E:
    case AffBase::PE: {
        if (a.conj)
            throw UnsupportedCase("no coset decomposition for the conjugate " + a.str());
        Weight nu = apply_weyl(a.weyl, a.weight);
        r.coset = {a.base == AffBase::PE ? CosetFamily::P16 : CosetFamily::I4, nu};
        r.fock = nu;
        break;
    }
    case AffBase::R:
        r.coset = {CosetFamily::I8, a.weight};
        r.fock = a.weight;
        break;
    }
    r.fock -= Rat(3, 2) * a.flow;
    return r;
}

Rat delta(const Weight& l, const Weight& m)
{
    return killing(l - m, l + m) / 3 - Rat(1, 2);
}

AffineLabel induce(const CosetLabel& c, const Weight& fock)
{
    validate(c);
    const Weight d = c.weight - fock;
    if (!lattice_member(d, Lattice::ThreeHalvesP))
        throw NotLocal(c.str() + " with Fock weight " + fock.str() + ": difference " + d.str() +
                       " is not in (3/2)P");
    const Weight flow = Rat(2, 3) * d;
    const Weight& nu = c.weight;
    AffineLabel base;
    switch (c.family) {
    case CosetFamily::I1:
        base = aff::vac();
        break;
    case CosetFamily::I3:
        base = aff::L();
        break;
    case CosetFamily::I3bar:
        base = aff::Lbar();
        break;
    case CosetFamily::I8:
        base = aff::R(nu);
        break;
    case CosetFamily::I4:
    case CosetFamily::P16: {
        WeylTwist w = weyl_for_line(coset_lines(nu)[0]);
        Weight x = apply_weyl_inverse(w, nu);
        base = c.family == CosetFamily::I4 ? aff::E(x, w) : aff::PE(x, w);
        break;
    }
    case CosetFamily::P24:
        base = aff::PA(-half_rho());
        break;
    case CosetFamily::P24bar:
        base = conj(aff::PA(-half_rho()));
        break;
    case CosetFamily::P48:
        base = aff::PA(Weight());
        break;
    }
    return twist(base, flow);
}

// ---------------------------------------------------------------- composition factors

AffineExpr rdegen_factors(const Weight& mu)
{
    using aff::sf;
    const Weight w1 = omega(1), w2 = omega(2), w3 = omega(3);
    const Weight half_a1 = Rat(1, 2) * alpha(1);
    const Rat h(3, 2);
    auto lines = coset_lines(mu);
    auto rc = root_coords(mu);
    AffineExpr e;
    if (lines.empty()) {
        e.add(aff::R(mu));
    } else if (lines.size() == 2) {
        if (coset_member(mu, -h * w1, Lattice::Q)) {
            e.add(sf(w1, aff::vac()));
            e.add(sf(-w1, aff::vac()));
            e.add(sf(w2, aff::Lbar()));
            e.add(sf(-w2, aff::L()));
        } else if (coset_member(mu, -half_rho(), Lattice::Q)) {
            e.add(aff::L());
            e.add(aff::Lbar());
            e.add(sf(w3, aff::vac()));
            e.add(sf(-w3, aff::vac()));
        } else {
            e.add(sf(w2, aff::vac()));
            e.add(sf(-w2, aff::vac()));
            e.add(sf(w1, aff::Lbar()));
            e.add(sf(-w1, aff::L()));
        }
    } else if (lines[0] == CosetLine::alpha1) {
        const Weight m = from_root(rc[0], Rat(-1, 2));
        e.add(aff::E(m));
        e.add(sf(-w2, aff::E(m - half_a1)));
    } else if (lines[0] == CosetLine::alpha2) {
        const Weight m = from_root(Rat(-1, 2), rc[1]);
        e.add(aff::E(dot(refl2, refl1(m)), WeylTwist::w1w2));
        e.add(sf(w1, aff::E(dot([](const Weight& x) { return refl2(refl1(x)); }, m) + h * w2,
                            WeylTwist::w1w2)));
    } else {
        const Rat t = rc[1] + Rat(1, 2);
        const Weight m = from_root(t - 1, t - Rat(1, 2));
        e.add(aff::E(refl2(m), WeylTwist::w2));
        e.add(sf(w3, aff::E(dot(refl2, m) + h * w2, WeylTwist::w2)));
    }
    return e;
}

namespace {

/// Applies the Weyl decoration of a cover to one of its untwisted E factors.
AffineLabel weyl_factor(WeylTwist w, const AffineLabel& f)
{
    AffineLabel g = f;
    g.flow = apply_weyl(w, f.flow);
    g.weyl = w;
    return canonical(g);
}

AffineDiagram fixture_untwisted(const AffineLabel& a)
{
    using aff::sf;
    const Weight w1 = omega(1), w2 = omega(2), w3 = omega(3), r = rho();
    AffineDiagram d;
    auto layer = [&](std::initializer_list<std::pair<AffineLabel, int>> nodes) {
        std::map<AffineLabel, int> m;
        for (const auto& [l, k] : nodes)
            m[l] += k;
        d.layers.push_back(std::move(m));
    };
    if (a.base == AffBase::PE) {
        const Weight& l = a.weight;
        const Weight h = Rat(1, 2) * alpha(1);
        layer({{aff::E(l), 1}});
        layer({{sf(-w2, aff::E(l - h)), 1}, {sf(w2, aff::E(l + h)), 1}});
        layer({{aff::E(l), 1}});
    } else if (a.weight == Weight()) {
        auto second = [&] {
            layer({{sf(r, aff::Lbar()), 1},
                   {sf(-w3, aff::L()), 1},
                   {sf(w3, aff::L()), 1},
                   {sf(-w3, aff::Lbar()), 1},
                   {sf(w3, aff::Lbar()), 1},
                   {sf(-r, aff::L()), 1}});
        };
        layer({{aff::vac(), 1}});
        second();
        layer({{sf(2 * w1, aff::vac()), 1},
               {sf(2 * w2, aff::vac()), 1},
               {sf(-2 * w3, aff::vac()), 1},
               {aff::vac(), 4},
               {sf(2 * w3, aff::vac()), 1},
               {sf(-2 * w2, aff::vac()), 1},
               {sf(-2 * w1, aff::vac()), 1}});
        second();
        layer({{aff::vac(), 1}});
    } else {
        auto second = [&] {
            layer({{sf(r, aff::vac()), 1}, {sf(-w3, aff::vac()), 1}, {sf(w3, aff::vac()), 1}});
        };
        layer({{aff::L(), 1}});
        second();
        layer({{sf(2 * w1, aff::Lbar()), 1},
               {sf(2 * w2, aff::Lbar()), 1},
               {aff::L(), 1},
               {aff::Lbar(), 1}});
        second();
        layer({{aff::L(), 1}});
    }
    return d;
}

AffineDiagram map_diagram(const AffineDiagram& d,
                          const std::function<AffineLabel(const AffineLabel&)>& f)
{
    AffineDiagram out;
    for (const auto& layer : d.layers) {
        std::map<AffineLabel, int> m;
        for (const auto& [l, k] : layer)
            m[f(l)] += k;
        out.layers.push_back(std::move(m));
    }
    return out;
}

} // namespace

std::string str(const AffineDiagram& d)
{
    std::ostringstream os;
    for (std::size_t k = 0; k < d.layers.size(); ++k) {
        os << "layer " << k << ":";
        for (const auto& [l, m] : d.layers[k])
            os << " " << (m > 1 ? std::to_string(m) + "*" : "") << l.str();
        os << "\n";
    }
    return os.str();
}

AffineDiagram affine_loewy_fixture(const AffineLabel& a0)
{
    const AffineLabel a = canonical(a0);
    if (a.base != AffBase::PA && a.base != AffBase::PE) {
        AffineDiagram d;
        d.layers.push_back({{a, 1}});
        return d;
    }
    AffineLabel plain = a;
    plain.flow = Weight();
    plain.conj = false;
    plain.weyl = WeylTwist::id;
    AffineDiagram d = fixture_untwisted(plain);
    if (a.base == AffBase::PE && a.weyl != WeylTwist::id)
        d = map_diagram(d, [&](const AffineLabel& f) { return weyl_factor(a.weyl, f); });
    if (a.conj)
        d = map_diagram(d, [](const AffineLabel& f) { return conj(f); });
    return map_diagram(d, [&](const AffineLabel& f) { return twist(f, a.flow); });
}

AffineDiagram affine_loewy(const AffineLabel& a)
{
    Restriction r = restrict_label(a);
    CosetDiagram c = coset_loewy(r.coset);
    AffineDiagram out;
    for (const auto& layer : c.layers) {
        std::map<AffineLabel, int> m;
        for (const auto& [l, k] : layer)
            m[induce(l, r.fock)] += k;
        out.layers.push_back(std::move(m));
    }
    return out;
}

AffineExpr affine_factors(const AffineLabel& a0)
{
    const AffineLabel a = canonical(a0);
    AffineExpr e;
    switch (a.base) {
    case AffBase::A:
    case AffBase::E:
        e.add(a);
        break;
    case AffBase::R:
        e.add(twist(rdegen_factors(a.weight), a.flow));
        break;
    case AffBase::PA:
    case AffBase::PE:
        for (const auto& layer : affine_loewy_fixture(a).layers)
            for (const auto& [l, k] : layer)
                e.add(l, k);
        break;
    }
    return e;
}

AffineExpr affine_factors(const AffineExpr& e)
{
    AffineExpr out;
    for (const auto& [l, k] : e.terms)
        out.add(affine_factors(l), k);
    return out;
}

// ---------------------------------------------------------------- fusion

namespace {

DecompositionExpr quantum_factors(const ModuleLabel& q)
{
    if (q.family == Family::L) {
        DecompositionExpr e;
        e.add(q);
        return e;
    }
    return static_loewy(q).factors();
}

DecompositionExpr tensor_factors(const ModuleLabel& x, const ModuleLabel& y,
                                 std::vector<std::string>& fallbacks)
{
    DecompositionExpr prod;
    try {
        prod = tensor_rule(x, y);
    } catch (const UnsupportedCase& err) {
        fallbacks.push_back(x.str() + " x " + y.str() + " (" + err.what() + ")");
        return decompose_semisimple(irrep_char(x.weight) * irrep_char(y.weight));
    }
    DecompositionExpr out;
    for (const auto& [l, m] : prod.terms)
        for (const auto& [f, k] : quantum_factors(l).terms)
            out.add(f, m * k);
    return out;
}

} // namespace

FusionResult affine_fuse_report(const AffineLabel& a, const AffineLabel& b, FusionLevel level)
{
    const Restriction ra = restrict_label(a), rb = restrict_label(b);
    const Weight fock = ra.fock + rb.fock;
    const ModuleLabel qa = to_quantum(ra.coset), qb = to_quantum(rb.coset);
    FusionResult res;
    if (level == FusionLevel::grothendieck) {
        for (const auto& [x, m] : quantum_factors(qa).terms)
            for (const auto& [y, n] : quantum_factors(qb).terms)
                for (const auto& [z, k] : tensor_factors(x, y, res.fallbacks).terms)
                    res.sum.add(induce(from_quantum(z), fock), m * n * k);
        return res;
    }
    if (qa.family != Family::L || qb.family != Family::L)
        throw UnsupportedCase("full fusion needs irreducible arguments, got " + a.str() + " and " +
                              b.str());
    for (const auto& [z, k] : tensor_rule(qa, qb).terms) {
        if (z.family != Family::L && z.family != Family::P)
            throw UnsupportedCase("summand " + z.str() + " of " + qa.str() + " x " + qb.str() +
                                  " has no affine counterpart in the label set");
        res.sum.add(induce(from_quantum(z), fock), k);
    }
    return res;
}

AffineExpr affine_fuse(const AffineLabel& a, const AffineLabel& b, FusionLevel level)
{
    return affine_fuse_report(a, b, level).sum;
}

// ---------------------------------------------------------------- Grothendieck rules

const std::vector<std::string>& grothendieck_rules()
{
    static const std::vector<std::string> rules = {
        "L x L = A0 + sf(2w1)A0 + sf(2w2)A0 + 2 sf(rho)cL",
        "L x cL = A0 + R[0]",
        "L x E[mu] = sf(w1)E[mu+a1/2] + sf(w2)R[mu+a2/2]",
        "L x R[mu] = R[mu-rho/2] + sf(w1)R[mu+a1/2] + sf(w2)R[mu+a2/2]",
        "E[l] x E[mu] = sf(w1)E[l+mu+3w1/2] + sf(w2)R[l+mu+3w2/2] + sf(w3)E[l+mu+3w3/2]",
        "E[l] x w2E[mu] = R[l+w2(mu)] + sf(w1)R[l+w2(mu)+3w1/2]",
        "E[l] x w1w2E[mu] = R[l+w1w2(mu)] + sf(w3)R[l+w1w2(mu)+3w3/2]",
        "E[l] x R[mu] = R[l+mu] + sum_i sf(wi)R[l+mu+3wi/2]",
        "R[l] x R[mu] = 2R[l+mu] + sum_i (sf(wi)R[l+mu+3wi/2] + sf(-wi)R[l+mu+3wi/2])",
    };
    return rules;
}

AffineExpr grothendieck_rhs(int rule, const AffineLabel& a, const AffineLabel& b)
{
    using aff::sf;
    const Weight w[4] = {Weight(), omega(1), omega(2), omega(3)};
    const Rat h(3, 2);
    const Weight& l = a.weight;
    const Weight& m = b.weight;
    AffineExpr e;
    switch (rule) {
    case 0:
        e.add(b);
        break;
    case 1:
        e.add(aff::vac());
        e.add(sf(2 * w[1], aff::vac()));
        e.add(sf(2 * w[2], aff::vac()));
        e.add(sf(rho(), aff::Lbar()), 2);
        break;
    case 2:
        e.add(aff::vac());
        e.add(aff::R(Weight()));
        break;
    case 3:
        e.add(sf(w[1], aff::E(m + Rat(1, 2) * alpha(1))));
        e.add(sf(w[2], aff::R(m + Rat(1, 2) * alpha(2))));
        break;
    case 4:
        e.add(aff::R(m - half_rho()));
        e.add(sf(w[1], aff::R(m + Rat(1, 2) * alpha(1))));
        e.add(sf(w[2], aff::R(m + Rat(1, 2) * alpha(2))));
        break;
    case 5:
        e.add(sf(w[1], aff::E(l + m + h * w[1])));
        e.add(sf(w[2], aff::R(l + m + h * w[2])));
        e.add(sf(w[3], aff::E(l + m + h * w[3])));
        break;
    case 6: {
        const Weight s = l + refl2(m);
        e.add(aff::R(s));
        e.add(sf(w[1], aff::R(s + h * w[1])));
        break;
    }
    case 7: {
        const Weight s = l + refl1(refl2(m));
        e.add(aff::R(s));
        e.add(sf(w[3], aff::R(s + h * w[3])));
        break;
    }
    case 8:
        e.add(aff::R(l + m));
        for (int i = 1; i <= 3; ++i)
            e.add(sf(w[i], aff::R(l + m + h * w[i])));
        break;
    case 9:
        e.add(aff::R(l + m), 2);
        for (int i = 1; i <= 3; ++i) {
            e.add(sf(w[i], aff::R(l + m + h * w[i])));
            e.add(sf(-w[i], aff::R(l + m + h * w[i])));
        }
        break;
    default:
        throw UnsupportedCase("no Grothendieck rule " + std::to_string(rule));
    }
    return e;
}

namespace {

enum class Kind { vac, L, Lbar, E, Ew2, Ew1w2, R, other };

Kind kind_of(const AffineLabel& a)
{
    if (a.flow != Weight())
        return Kind::other;
    switch (a.base) {
    case AffBase::A:
        if (a.weight == Weight())
            return Kind::vac;
        return a.conj ? Kind::Lbar : Kind::L;
    case AffBase::E:
        if (a.conj)
            return Kind::other;
        return a.weyl == WeylTwist::id ? Kind::E
                                       : (a.weyl == WeylTwist::w2 ? Kind::Ew2 : Kind::Ew1w2);
    case AffBase::R:
        return Kind::R;
    default:
        return Kind::other;
    }
}

/// Rule index for an ordered pair of untwisted labels, or -1.
int match_rule(Kind x, Kind y)
{
    if (x == Kind::vac && y != Kind::other)
        return 0;
    if (x == Kind::L) {
        switch (y) {
        case Kind::L:
            return 1;
        case Kind::Lbar:
            return 2;
        case Kind::E:
            return 3;
        case Kind::R:
            return 4;
        default:
            return -1;
        }
    }
    if (x == Kind::E) {
        switch (y) {
        case Kind::E:
            return 5;
        case Kind::Ew2:
            return 6;
        case Kind::Ew1w2:
            return 7;
        case Kind::R:
            return 8;
        default:
            return -1;
        }
    }
    if (x == Kind::R && y == Kind::R)
        return 9;
    return -1;
}

struct GlobalTwist {
    const char* name;
    std::function<AffineLabel(const AffineLabel&)> apply;
};

} // namespace

std::string GrothendieckReport::str() const
{
    std::ostringstream os;
    if (rule < 0) {
        os << "no matching rule\n";
        return os.str();
    }
    os << "rule " << rule << ": " << rule_text;
    if (!twist_text.empty())
        os << " [twisted by " << twist_text << "]";
    os << "\n";
    os << "fusion factors: " << lhs.str() << "\n";
    os << "rule factors:   " << rhs.str() << "\n";
    os << (match ? "match" : "MISMATCH") << "\n";
    if (!match) {
        os << "only in fusion: " << only_lhs.str() << "\n";
        os << "only in rule:   " << only_rhs.str() << "\n";
    }
    for (const auto& f : fallbacks)
        os << "character fallback: " << f << "\n";
    return os.str();
}

GrothendieckReport grothendieck_check(const AffineLabel& a0, const AffineLabel& b0)
{
    const AffineLabel a = canonical(a0), b = canonical(b0);
    const Weight total = a.flow + b.flow;
    AffineLabel x = a, y = b;
    x.flow = Weight();
    y.flow = Weight();

    static const std::vector<GlobalTwist> twists = {
        {"", [](const AffineLabel& l) { return l; }},
        {"c", [](const AffineLabel& l) { return conj(l); }},
        {"w2", [](const AffineLabel& l) { return weyl2(l); }},
        {"c w2", [](const AffineLabel& l) { return conj(weyl2(l)); }},
    };

    GrothendieckReport rep;
    rep.rule = -1;
    for (const auto& t : twists) {
        AffineLabel tx, ty;
        try {
            tx = t.apply(x);
            ty = t.apply(y);
        } catch (const Error&) {
            continue;
        }
        int k = match_rule(kind_of(tx), kind_of(ty));
        bool swapped = false;
        if (k < 0) {
            k = match_rule(kind_of(ty), kind_of(tx));
            swapped = true;
        }
        if (k < 0)
            continue;
        AffineExpr rhs = swapped ? grothendieck_rhs(k, ty, tx) : grothendieck_rhs(k, tx, ty);
        rhs = map_expr(rhs, t.apply);
        rep.rule = k;
        rep.rule_text = k == 0 ? "A0 x M = M" : grothendieck_rules()[k - 1];
        rep.twist_text = t.name;
        rep.rhs = affine_factors(twist(rhs, total));
        break;
    }
    if (rep.rule < 0)
        return rep;

    FusionResult f = affine_fuse_report(a, b, FusionLevel::grothendieck);
    rep.lhs = f.sum;
    rep.fallbacks = f.fallbacks;
    rep.match = rep.lhs == rep.rhs;
    rep.only_lhs = rep.lhs;
    rep.only_lhs.add(rep.rhs, -1);
    rep.only_rhs = rep.rhs;
    rep.only_rhs.add(rep.lhs, -1);
    AffineExpr pos_l, pos_r;
    for (const auto& [l, k] : rep.only_lhs.terms)
        (k > 0 ? pos_l : pos_r).add(l, k > 0 ? k : -k);
    rep.only_lhs = pos_l;
    rep.only_rhs = pos_r;
    return rep;
}

} // namespace qsl3
