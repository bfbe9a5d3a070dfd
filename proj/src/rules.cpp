#include "qsl3/rules.hpp"

#include "qsl3/algebra.hpp"
#include "qsl3/errors.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace qsl3 {

namespace {

Weight A(int k)
{
    return wt::alpha(k);
}

bool odd(const Rat& x)
{
    return parity(x) == Parity::Odd;
}
bool even(const Rat& x)
{
    return parity(x) == Parity::Even;
}
bool nonint(const Rat& x)
{
    return parity(x) == Parity::NonIntegral;
}

std::string sig_of(const Weight& w)
{
    std::string s;
    for (const auto& x : indices(w))
        s.push_back(parity_char(parity(x)));
    return s;
}

/// Parities of both tensorands, their raw index sums s_k and the indices n_k of the sum.
struct Pair {
    Weight l, m, nu;
    TypicalityClass cl, cm;
    std::array<Rat, 3> li, mi, s, n;
    std::string sig;

    // 1-based accessors
    const Rat& L(int k) const { return li[k - 1]; }
    const Rat& M(int k) const { return mi[k - 1]; }
    const Rat& S(int k) const { return s[k - 1]; }
    const Rat& N(int k) const { return n[k - 1]; }
};

Pair make_pair(const Weight& l, const Weight& m)
{
    Pair p;
    p.l = l;
    p.m = m;
    p.nu = l + m;
    p.cl = classify(l);
    p.cm = classify(m);
    p.li = indices(l);
    p.mi = indices(m);
    p.n = indices(p.nu);
    for (int k = 0; k < 3; ++k)
        p.s[k] = p.li[k] + p.mi[k];
    p.sig = parity_signature(l, m);
    return p;
}

int other(int i)
{
    return 3 - i;
}

/// A label of the stated dimension; a mismatch means the case hypotheses are not met.
ModuleLabel lab(const Pair& p, Family f, const Weight& w, int dim, int index = 0)
{
    ModuleLabel l = make_label(f, w, index);
    bool ok = l.dim == dim;
    ClassTag t = classify(w).tag;
    if (f == Family::K || f == Family::Q)
        ok = ok && t == ClassTag::Atyp2Root3Odd;
    if (f == Family::R || f == Family::S)
        ok = ok && t == ClassTag::Atyp2Root3Even;
    if (!ok)
        throw UnsupportedCase("no tensor rule for parity signature " + p.sig + " (" +
                              family_char(f) + std::to_string(dim) + " at " + w.str() + ")");
    return l;
}

ModuleLabel P(const Pair& p, const Weight& w, int dim)
{
    return lab(p, Family::P, w, dim);
}

ModuleLabel Lb(const Pair& p, const Weight& w, int dim)
{
    return lab(p, Family::L, w, dim);
}

[[noreturn]] void unsupported(const Pair& p)
{
    throw UnsupportedCase("no tensor rule for parity signature " + p.sig);
}

DecompositionExpr rule_3x8(const Pair& p)
{
    const int i = p.cl.i, j = other(i);
    const Weight& v = p.nu;
    DecompositionExpr e;
    bool e1 = even(p.M(1)), e2 = even(p.M(2)), e3 = even(p.M(3));
    bool ei = i == 1 ? e1 : e2, ej = i == 1 ? e2 : e1;
    if (e1 && e2 && e3) {
        e.add(P(p, v - A(3), 24));
    } else if (ei) {
        e.add(P(p, v, 8));
        e.add(P(p, v - A(3), 16));
    } else if (ej) {
        e.add(P(p, v - A(j), 16));
        e.add(P(p, v - A(3), 8));
    } else if (e3) {
        e.add(P(p, v - A(j), 8));
        e.add(P(p, v - A(3), 16));
    } else {
        e.add(P(p, v, 8));
        e.add(P(p, v - A(j), 8));
        e.add(P(p, v - A(3), 8));
    }
    return e;
}

DecompositionExpr rule_4x8(const Pair& p)
{
    const Weight& v = p.nu;
    DecompositionExpr e;
    if (p.cl.i != 3) {
        const int i = p.cl.i, j = other(i);
        const Rat &mi = p.M(i), &sj = p.S(j), &s3 = p.S(3);
        if (even(mi)) {
            if (even(sj) && odd(s3)) {
                e.add(P(p, v - A(3), 24));
                e.add(P(p, v - A(j) - A(3), 8));
            } else if (even(s3) && odd(sj)) {
                e.add(P(p, v, 8));
                e.add(P(p, v - A(j) - A(3), 24));
            } else if (nonint(sj) && nonint(s3)) {
                e.add(P(p, v, 8));
                e.add(P(p, v - A(3), 16));
                e.add(P(p, v - A(j) - A(3), 8));
            } else {
                unsupported(p);
            }
        } else if (even(sj)) {
            e.add(P(p, v - A(j), 16));
            e.add(P(p, v - A(3), 8));
            e.add(P(p, v - A(j) - A(3), 8));
        } else if (odd(sj)) {
            e.add(P(p, v, 8));
            e.add(P(p, v - A(j), 8));
            e.add(P(p, v - A(j) - A(3), 16));
        } else if (even(s3)) {
            e.add(P(p, v, 8));
            e.add(P(p, v - A(3), 8));
            e.add(P(p, v - A(j) - A(3), 16));
        } else if (odd(s3)) {
            e.add(P(p, v - A(j), 8));
            e.add(P(p, v - A(3), 16));
            e.add(P(p, v - A(j) - A(3), 8));
        } else {
            e.add(P(p, v, 8));
            e.add(P(p, v - A(j), 8));
            e.add(P(p, v - A(3), 8));
            e.add(P(p, v - A(j) - A(3), 8));
        }
        return e;
    }
    const Rat &s1 = p.S(1), &s2 = p.S(2);
    if (even(p.M(3))) {
        if ((even(s1) && odd(s2)) || (even(s2) && odd(s1))) {
            const int j = odd(s1) ? 1 : 2;
            e.add(P(p, v - A(j), 8));
            e.add(P(p, v - A(3), 24));
        } else if (nonint(s1) && nonint(s2)) {
            e.add(P(p, v - A(1), 8));
            e.add(P(p, v - A(2), 8));
            e.add(P(p, v - A(3), 16));
        } else {
            unsupported(p);
        }
    } else if (even(s1) || even(s2)) {
        const int i = even(s1) ? 1 : 2, j = other(i);
        e.add(P(p, v - A(i), 16));
        e.add(P(p, v - A(j), 8));
        e.add(P(p, v - A(3), 8));
    } else if (odd(s1) || odd(s2)) {
        const int i = odd(s1) ? 1 : 2;
        e.add(P(p, v, 8));
        e.add(P(p, v - A(i), 8));
        e.add(P(p, v - A(3), 16));
    } else {
        e.add(P(p, v, 8));
        e.add(P(p, v - A(1), 8));
        e.add(P(p, v - A(2), 8));
        e.add(P(p, v - A(3), 8));
    }
    return e;
}

DecompositionExpr rule_8x8(const Pair& p)
{
    const Weight& v = p.nu;
    const Rat &s1 = p.S(1), &s2 = p.S(2), &s3 = p.S(3);
    DecompositionExpr e;
    if (even(s1) && even(s2) && even(s3)) {
        e.add(P(p, v - A(3), 8), 2);
        e.add(P(p, v - 2 * A(3), 48));
    } else if ((even(s1) && odd(s2)) || (even(s2) && odd(s1))) {
        const int i = even(s1) ? 1 : 2, j = other(i);
        e.add(P(p, v - A(j), 8));
        e.add(P(p, v - A(i) - A(3), 8));
        e.add(P(p, v - A(3), 24));
        e.add(P(p, v - 2 * A(3), 24));
    } else if (odd(s1) && odd(s2)) {
        e.add(P(p, v, 8));
        e.add(P(p, v - A(1) - A(3), 24));
        e.add(P(p, v - A(2) - A(3), 24));
        e.add(P(p, v - 2 * A(3), 8));
    } else if (even(s1) || even(s2)) {
        const int i = even(s1) ? 1 : 2, j = other(i);
        e.add(P(p, v - A(i), 16));
        e.add(P(p, v - A(j), 8));
        e.add(P(p, v - A(3), 8), 2);
        e.add(P(p, v - A(i) - A(3), 8));
        e.add(P(p, v - 2 * A(3), 16));
    } else if (odd(s1) || odd(s2)) {
        const int i = odd(s1) ? 1 : 2, j = other(i);
        e.add(P(p, v, 8));
        e.add(P(p, v - A(i), 8));
        e.add(P(p, v - A(3), 16));
        e.add(P(p, v - A(i) - A(3), 16));
        e.add(P(p, v - A(j) - A(3), 8));
        e.add(P(p, v - 2 * A(3), 8));
    } else if (even(s3)) {
        e.add(P(p, v, 8));
        e.add(P(p, v - A(3), 8), 2);
        e.add(P(p, v - A(1) - A(3), 16));
        e.add(P(p, v - A(2) - A(3), 16));
        e.add(P(p, v - 2 * A(3), 8));
    } else if (odd(s3)) {
        e.add(P(p, v - A(1), 8));
        e.add(P(p, v - A(2), 8));
        e.add(P(p, v - A(3), 16));
        e.add(P(p, v - A(1) - A(3), 8));
        e.add(P(p, v - A(2) - A(3), 8));
        e.add(P(p, v - 2 * A(3), 16));
    } else {
        e.add(P(p, v, 8));
        e.add(P(p, v - A(1), 8));
        e.add(P(p, v - A(2), 8));
        e.add(P(p, v - A(3), 8), 2);
        e.add(P(p, v - A(1) - A(3), 8));
        e.add(P(p, v - A(2) - A(3), 8));
        e.add(P(p, v - 2 * A(3), 8));
    }
    return e;
}

DecompositionExpr rule_4x4(const Pair& p)
{
    const Weight& v = p.nu;
    const int a = p.cl.i, b = p.cm.i;
    DecompositionExpr e;
    if (a != b) {
        const int k = 6 - a - b;
        if (odd(p.N(k))) {
            e.add(P(p, v - A(k), 16));
        } else {
            e.add(P(p, v, 8));
            e.add(P(p, v - A(k), 8));
        }
        return e;
    }
    if (a != 3) {
        const int j = other(a);
        if (nonint(p.N(j))) {
            e.add(Lb(p, v, 4));
            e.add(P(p, v - A(j), 8));
            e.add(Lb(p, v - A(j) - A(3), 4));
        } else if (odd(p.N(j))) {
            e.add(lab(p, Family::K, v - A(j), 16));
        } else {
            e.add(lab(p, Family::R, v - A(j) - A(3), 8, j));
            e.add(P(p, v - A(j), 8));
        }
        return e;
    }
    if (nonint(p.N(1))) {
        e.add(P(p, v, 8));
        e.add(Lb(p, v - A(1), 4));
        e.add(Lb(p, v - A(2), 4));
    } else if (odd(p.N(1))) {
        e.add(lab(p, Family::S, v, 16));
    } else {
        unsupported(p);
    }
    return e;
}

DecompositionExpr rule_3x4(const Pair& p)
{
    const Weight& v = p.nu;
    const int i = p.cl.i, m = p.cm.i;
    DecompositionExpr e;
    if (m != i) {
        const int k = 6 - i - m;
        e.add(P(p, v, 8));
        e.add(Lb(p, v - A(k), 4));
    } else {
        const int j = other(i);
        e.add(Lb(p, v, 4));
        e.add(P(p, v - A(j), 8));
    }
    return e;
}

DecompositionExpr rule_3x3(const Pair& p)
{
    const Weight& v = p.nu;
    DecompositionExpr e;
    if (p.cl.i != p.cm.i) {
        e.add(P(p, v, 8));
        e.add(Lb(p, v - A(3), 1));
    } else {
        e.add(lab(p, Family::Q, v - A(other(p.cl.i)), 9));
    }
    return e;
}

} // namespace

std::string parity_signature(const Weight& a, const Weight& b)
{
    return sig_of(a) + "/" + sig_of(b) + "/" + sig_of(a + b);
}

DecompositionExpr tensor_rule(const ModuleLabel& a, const ModuleLabel& b)
{
    if (a.family != Family::L || b.family != Family::L)
        throw UnsupportedCase("tensor_rule takes irreducible labels, got " + a.str() + " and " +
                              b.str());
    // order the tensorands by dimension; the rules are stated with the smaller one first
    const bool swap = irrep_dim(a.weight) > irrep_dim(b.weight);
    Pair p = swap ? make_pair(b.weight, a.weight) : make_pair(a.weight, b.weight);
    const int da = irrep_dim(p.l), db = irrep_dim(p.m);
    if (da == 1) {
        DecompositionExpr e;
        e.add(L_label(p.nu));
        return e;
    }
    if (db == 8) {
        if (da == 3)
            return rule_3x8(p);
        if (da == 4)
            return rule_4x8(p);
        return rule_8x8(p);
    }
    if (da == 3 && db == 3)
        return rule_3x3(p);
    if (da == 3 && db == 4)
        return rule_3x4(p);
    if (da == 4 && db == 4)
        return rule_4x4(p);
    unsupported(p);
}

bool ext_exists(const Weight& l, const Weight& m)
{
    auto one_way = [](const Weight& x, const Weight& y) {
        TypicalityClass c = classify(x);
        std::vector<Weight> shifts;
        switch (c.tag) {
        case ClassTag::Typical:
            return false;
        case ClassTag::Atyp1:
            shifts = {A(c.i), -A(c.i)};
            break;
        case ClassTag::Atyp2Root3Even:
            shifts = {A(1), -A(1), A(2), -A(2), 2 * A(3) - A(1), 2 * A(3) - A(2)};
            break;
        case ClassTag::Atyp2Root3Odd:
            shifts = {A(c.i), -A(c.i), A(c.i) - 2 * A(3)};
            break;
        }
        for (const auto& s : shifts)
            if (y == x + s)
                return true;
        return false;
    };
    return one_way(l, m) || one_way(m, l);
}

namespace {

struct DiagramBuilder {
    LoewyDiagram d;

    explicit DiagramBuilder(int layers) { d.layers.resize(layers); }

    ModuleLabel node(int layer, const Weight& w, int mult = 1)
    {
        ModuleLabel l = L_label(w);
        for (auto& n : d.layers[layer])
            if (n.label == l) {
                n.mult += mult;
                return l;
            }
        d.layers[layer].push_back({l, mult});
        return l;
    }

    void arrow(int layer, const Weight& from, const Weight& to, ArrowTag tag)
    {
        d.arrows.push_back({layer, L_label(from), L_label(to), tag});
    }

    LoewyDiagram done()
    {
        for (auto& layer : d.layers)
            std::sort(layer.begin(), layer.end(),
                      [](const LoewyNode& a, const LoewyNode& b) { return a.label < b.label; });
        std::sort(d.arrows.begin(), d.arrows.end());
        return d;
    }
};

constexpr ArrowTag red = ArrowTag::standard;
constexpr ArrowTag blue = ArrowTag::costandard;
constexpr ArrowTag green = ArrowTag::other;

LoewyDiagram single(const Weight& w)
{
    DiagramBuilder b(1);
    b.node(0, w);
    return b.done();
}

LoewyDiagram verma_diagram(const Weight& l)
{
    TypicalityClass c = classify(l);
    switch (c.tag) {
    case ClassTag::Typical:
        return single(l);
    case ClassTag::Atyp1: {
        DiagramBuilder b(2);
        b.node(0, l);
        b.node(1, l - A(c.i));
        b.arrow(0, l, l - A(c.i), red);
        return b.done();
    }
    case ClassTag::Atyp2Root3Odd: {
        const int i = c.i;
        DiagramBuilder b(3);
        Weight m1 = l - A(i), m2 = l + A(i) - 2 * A(3), bot = l - A(3);
        b.node(0, l);
        b.node(1, m1);
        b.node(1, m2);
        b.node(2, bot);
        b.arrow(0, l, m1, red);
        b.arrow(0, l, m2, red);
        b.arrow(1, m1, bot, red);
        b.arrow(1, m2, bot, red);
        return b.done();
    }
    case ClassTag::Atyp2Root3Even: {
        DiagramBuilder b(3);
        Weight m1 = l - A(1), m2 = l - A(2), bot = l - 2 * A(3);
        b.node(0, l);
        b.node(1, m1);
        b.node(1, m2);
        b.node(2, bot);
        b.arrow(0, l, m1, red);
        b.arrow(0, l, m2, red);
        b.arrow(1, m1, bot, red);
        b.arrow(1, m2, bot, red);
        return b.done();
    }
    }
    return single(l);
}

LoewyDiagram p16(const Weight& l, int i)
{
    DiagramBuilder b(3);
    Weight r = l + A(i), s = l - A(i);
    b.node(0, l);
    b.node(1, r);
    b.node(1, s);
    b.node(2, l);
    b.arrow(0, l, s, red);
    b.arrow(0, l, r, blue);
    b.arrow(1, s, l, blue);
    b.arrow(1, r, l, red);
    return b.done();
}

LoewyDiagram p24(const Weight& l, int i)
{
    DiagramBuilder b(5);
    const Weight a = A(i), a3 = A(3);
    Weight n21 = l + a, n22 = l - a, n23 = l + a - 2 * a3;
    Weight n31 = l + a3, n32 = l + 2 * a - a3, n33 = l, n34 = l - a3;
    b.node(0, l);
    for (const auto& w : {n21, n22, n23}) {
        b.node(1, w);
        b.node(3, w);
    }
    for (const auto& w : {n31, n32, n33, n34})
        b.node(2, w);
    b.node(4, l);
    // top to layer 2
    b.arrow(0, l, n22, red);
    b.arrow(0, l, n23, red);
    b.arrow(0, l, n21, blue);
    // layer 2 to layer 3
    b.arrow(1, n22, n34, red);
    b.arrow(1, n23, n34, red);
    b.arrow(1, n21, n32, red);
    b.arrow(1, n21, n33, red);
    b.arrow(1, n21, n31, blue);
    b.arrow(1, n22, n31, blue);
    b.arrow(1, n23, n32, blue);
    b.arrow(1, n23, n33, blue);
    b.arrow(1, n22, n33, green);
    // layer 3 to layer 4
    b.arrow(2, n32, n23, red);
    b.arrow(2, n33, n23, red);
    b.arrow(2, n31, n21, red);
    b.arrow(2, n31, n22, red);
    b.arrow(2, n32, n21, blue);
    b.arrow(2, n33, n21, blue);
    b.arrow(2, n34, n22, blue);
    b.arrow(2, n34, n23, blue);
    b.arrow(2, n33, n22, green);
    // layer 4 to bottom
    b.arrow(3, n21, l, red);
    b.arrow(3, n22, l, red);
    b.arrow(3, n23, l, blue);
    return b.done();
}

LoewyDiagram p48(const Weight& l)
{
    DiagramBuilder b(5);
    const Weight a1 = A(1), a2 = A(2), a3 = A(3);
    Weight n21 = l + a2 + a3, n22 = l + a1 + a3, n23 = l + a2, n24 = l + a1, n25 = l - a1,
           n26 = l - a2;
    Weight n31 = l + 2 * a3, n32 = l + 2 * a2, n33 = l + 2 * a1, n34 = l, n35 = l - 2 * a1,
           n36 = l - 2 * a2, n37 = l - 2 * a3;
    b.node(0, l);
    for (const auto& w : {n21, n22, n23, n24, n25, n26}) {
        b.node(1, w);
        b.node(3, w);
    }
    for (const auto& w : {n31, n32, n33, n35, n36, n37})
        b.node(2, w);
    b.node(2, n34, 4);
    b.node(4, l);
    // layer 1 -> 2 (source layer index 0), 2 -> 3 (index 1) and so on
    b.arrow(0, l, n25, red);
    b.arrow(0, l, n26, red);
    b.arrow(0, l, n21, blue);
    b.arrow(0, l, n22, blue);
    b.arrow(0, l, n23, green);
    b.arrow(0, l, n24, green);

    b.arrow(1, n25, n37, red);
    b.arrow(1, n26, n37, red);
    b.arrow(1, n21, n32, red);
    b.arrow(1, n21, n34, red);
    b.arrow(1, n22, n33, red);
    b.arrow(1, n22, n34, red);
    b.arrow(1, n23, n34, red);
    b.arrow(1, n23, n35, red);
    b.arrow(1, n24, n34, red);
    b.arrow(1, n24, n36, red);
    b.arrow(1, n21, n31, blue);
    b.arrow(1, n22, n31, blue);
    b.arrow(1, n23, n32, blue);
    b.arrow(1, n24, n33, blue);
    b.arrow(1, n25, n34, blue);
    b.arrow(1, n25, n35, blue);
    b.arrow(1, n26, n34, blue);
    b.arrow(1, n26, n36, blue);

    b.arrow(2, n32, n23, red);
    b.arrow(2, n34, n23, red);
    b.arrow(2, n33, n24, red);
    b.arrow(2, n34, n24, red);
    b.arrow(2, n34, n25, red);
    b.arrow(2, n35, n25, red);
    b.arrow(2, n34, n26, red);
    b.arrow(2, n36, n26, red);
    b.arrow(2, n31, n21, red);
    b.arrow(2, n31, n22, red);
    b.arrow(2, n32, n21, blue);
    b.arrow(2, n34, n21, blue);
    b.arrow(2, n33, n22, blue);
    b.arrow(2, n34, n22, blue);
    b.arrow(2, n35, n23, blue);
    b.arrow(2, n36, n24, blue);
    b.arrow(2, n37, n25, blue);
    b.arrow(2, n37, n26, blue);

    b.arrow(3, n21, l, red);
    b.arrow(3, n22, l, red);
    b.arrow(3, n25, l, blue);
    b.arrow(3, n26, l, blue);
    b.arrow(3, n23, l, green);
    b.arrow(3, n24, l, green);
    return b.done();
}

LoewyDiagram k16(const Weight& l, int i)
{
    DiagramBuilder b(3);
    const Weight a = A(i), a3 = A(3);
    Weight t2 = l - a3;
    Weight m1 = l + a, m2 = l - a, m3 = l + a - 2 * a3, m4 = l - a - 2 * a3;
    b.node(0, l);
    b.node(0, t2);
    for (const auto& w : {m1, m2, m3, m4})
        b.node(1, w);
    b.node(2, l);
    b.node(2, t2);
    b.arrow(0, l, m2, green);
    b.arrow(0, l, m3, green);
    b.arrow(0, l, m1, green);
    b.arrow(0, t2, m2, green);
    b.arrow(0, t2, m3, green);
    b.arrow(0, t2, m4, green);
    b.arrow(1, m1, l, green);
    b.arrow(1, m2, l, green);
    b.arrow(1, m3, l, green);
    b.arrow(1, m4, t2, green);
    b.arrow(1, m2, t2, green);
    b.arrow(1, m3, t2, green);
    return b.done();
}

LoewyDiagram r8(const Weight& l, int j)
{
    DiagramBuilder b(3);
    Weight m1 = l + A(j) + A(3), m2 = l - A(j);
    b.node(0, l);
    b.node(1, m1);
    b.node(1, m2);
    b.node(2, l);
    b.arrow(0, l, m1, green);
    b.arrow(0, l, m2, green);
    b.arrow(1, m1, l, green);
    b.arrow(1, m2, l, green);
    return b.done();
}

LoewyDiagram s16(const Weight& l)
{
    DiagramBuilder b(3);
    Weight t1 = l - A(1), t2 = l - A(2);
    Weight m1 = l - 2 * A(1), m2 = l, m3 = l - 2 * A(3), m4 = l - 2 * A(2);
    b.node(0, t1);
    b.node(0, t2);
    for (const auto& w : {m1, m2, m3, m4})
        b.node(1, w);
    b.node(2, t1);
    b.node(2, t2);
    b.arrow(0, t1, m1, green);
    b.arrow(0, t1, m2, green);
    b.arrow(0, t1, m3, green);
    b.arrow(0, t2, m3, green);
    b.arrow(0, t2, m2, green);
    b.arrow(0, t2, m4, green);
    b.arrow(1, m1, t1, green);
    b.arrow(1, m2, t1, green);
    b.arrow(1, m2, t2, green);
    b.arrow(1, m3, t1, green);
    b.arrow(1, m3, t2, green);
    b.arrow(1, m4, t2, green);
    return b.done();
}

LoewyDiagram q9(const Weight& l, int i)
{
    DiagramBuilder b(3);
    Weight m1 = l + A(i), m2 = l - A(i), m3 = l + A(i) - 2 * A(3);
    b.node(0, l);
    for (const auto& w : {m1, m2, m3})
        b.node(1, w);
    b.node(2, l);
    for (const auto& w : {m1, m2, m3}) {
        b.arrow(0, l, w, green);
        b.arrow(1, w, l, green);
    }
    return b.done();
}

void require_class(const ModuleLabel& label, ClassTag tag)
{
    if (classify(label.weight).tag != tag)
        throw UnsupportedCase(label.str() + " needs a weight of class " +
                              TypicalityClass{tag, 1, {}}.name());
}

} // namespace

LoewyDiagram static_loewy(const ModuleLabel& label)
{
    const Weight& l = label.weight;
    TypicalityClass c = classify(l);
    switch (label.family) {
    case Family::L:
        return single(l);
    case Family::M:
        return verma_diagram(l);
    case Family::P:
        switch (c.tag) {
        case ClassTag::Typical:
            return single(l);
        case ClassTag::Atyp1:
            return p16(l, c.i);
        case ClassTag::Atyp2Root3Odd:
            return p24(l, c.i);
        case ClassTag::Atyp2Root3Even:
            return p48(l);
        }
        break;
    case Family::K:
        require_class(label, ClassTag::Atyp2Root3Odd);
        return k16(l, c.i);
    case Family::R:
        require_class(label, ClassTag::Atyp2Root3Even);
        return r8(l, label.index);
    case Family::S:
        require_class(label, ClassTag::Atyp2Root3Even);
        return s16(l);
    case Family::Q:
        require_class(label, ClassTag::Atyp2Root3Odd);
        return q9(l, c.i);
    }
    return single(l);
}

Character static_char(const ModuleLabel& label)
{
    const Weight& l = label.weight;
    TypicalityClass c = classify(l);
    if (label.family == Family::L)
        return irrep_char(l);
    if (label.family == Family::M)
        return verma_char(l);
    if (label.family == Family::P) {
        const Weight a3 = A(3);
        switch (c.tag) {
        case ClassTag::Typical:
            return irrep_char(l);
        case ClassTag::Atyp1:
            return verma_char(l + A(c.i)) + verma_char(l);
        case ClassTag::Atyp2Root3Odd:
            return verma_char(l + a3) + verma_char(l + A(c.i)) + verma_char(l);
        case ClassTag::Atyp2Root3Even:
            return verma_char(l + 2 * a3) + verma_char(l + 2 * a3 - A(1)) +
                   verma_char(l + 2 * a3 - A(2)) + verma_char(l + A(1)) + verma_char(l + A(2)) +
                   verma_char(l);
        }
    }
    Character ch;
    for (const auto& layer : static_loewy(label).layers)
        for (const auto& n : layer)
            for (int t = 0; t < n.mult; ++t)
                ch += irrep_char(n.label.weight);
    return ch;
}

TensorRecipe reference_recipe(const ModuleLabel& label)
{
    const Weight& v = label.weight;
    TypicalityClass c = classify(v);
    const Rat h(1, 2);
    TensorRecipe r;
    // a weight with prescribed indices (x1, x2)
    auto from_indices = [](const Rat& x1, const Rat& x2) { return Weight(x1 - 1, x2 - 1); };
    auto whole = [&](const Weight& a, const Weight& b) {
        r.left = L_label(a);
        r.right = L_label(b);
    };
    switch (label.family) {
    case Family::L:
    case Family::M:
        throw UnsupportedCase("no tensor recipe for " + label.str());
    case Family::P:
        switch (c.tag) {
        case ClassTag::Typical:
            whole(wt::zero(), v);
            break;
        case ClassTag::Atyp1:
            if (c.i == 1)
                whole(wt::omega(1), v - wt::omega(1) + A(1));
            else if (c.i == 2)
                whole(wt::omega(2), v - wt::omega(2) + A(2));
            else
                whole(wt::omega(1), v - wt::omega(1) + A(3));
            break;
        case ClassTag::Atyp2Root3Odd:
            whole(v, wt::rho());
            break;
        case ClassTag::Atyp2Root3Even:
            whole(wt::rho(), v + wt::rho());
            break;
        }
        break;
    case Family::K: {
        require_class(label, ClassTag::Atyp2Root3Odd);
        const int j = c.i, i = other(j);
        Weight l = i == 1 ? from_indices(Rat(1), h) : from_indices(h, Rat(1));
        whole(l, v + A(j) - l);
        break;
    }
    case Family::R: {
        require_class(label, ClassTag::Atyp2Root3Even);
        const int j = label.index, i = other(j);
        Weight l = i == 1 ? from_indices(Rat(1), h) : from_indices(h, Rat(1));
        whole(l, v + A(j) + A(3) - l);
        break;
    }
    case Family::S: {
        require_class(label, ClassTag::Atyp2Root3Even);
        Weight l = from_indices(h, h);
        whole(l, v - l);
        break;
    }
    case Family::Q: {
        require_class(label, ClassTag::Atyp2Root3Odd);
        const int j = c.i, i = other(j);
        Weight l = wt::omega(i == 1 ? 2 : 1);
        whole(l, v + A(j) - l);
        break;
    }
    }
    DecompositionExpr full = tensor_rule(r.left, r.right);
    auto it = full.terms.find(label);
    if (it == full.terms.end() || it->second != 1)
        throw InternalInconsistency("recipe " + r.left.str() + " x " + r.right.str() +
                                    " does not contain " + label.str() + ": " + full.str());
    full.terms.erase(it);
    r.split = full;
    return r;
}

WeightModule reference_module(const ModuleLabel& label)
{
    static std::mutex mu;
    static std::map<ModuleLabel, WeightModule> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(label);
        if (it != cache.end())
            return it->second;
    }
    WeightModule out;
    if (label.family == Family::L || (label.family == Family::P && label.dim == 8)) {
        out = irreducible(label.weight);
    } else if (label.family == Family::M) {
        out = verma(label.weight);
    } else {
        TensorRecipe r = reference_recipe(label);
        WeightModule T = tensor_action(reference_module(r.left), reference_module(r.right));
        out = r.split.terms.empty() ? T : split_off(T, r.split, reference_module);
    }
    out.name = label.str();
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(label, out).first->second;
}

Constructor reference_constructor()
{
    return [](const ModuleLabel& l) { return reference_module(l); };
}

} // namespace qsl3
