#include "qsl3/octuplet.hpp"

#include "qsl3/errors.hpp"
#include "qsl3/rules.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <tuple>

namespace qsl3 {

namespace {

using wt::alpha;
using wt::omega;
using wt::rho;

Weight half_rho()
{
    return Rat(1, 2) * rho();
}

bool centred_at_zero(OctFamily f)
{
    return f == OctFamily::W1 || f == OctFamily::W8 || f == OctFamily::P48;
}

bool in_3P(const Weight& l)
{
    return lattice_member(Rat(1, 3) * l, Lattice::P);
}

OctFamily oct_family_of(CosetFamily f)
{
    switch (f) {
    case CosetFamily::I1:
        return OctFamily::W1;
    case CosetFamily::I3:
        return OctFamily::W3;
    case CosetFamily::I3bar:
        return OctFamily::W3bar;
    case CosetFamily::I8:
        return OctFamily::W8;
    case CosetFamily::P24:
        return OctFamily::P24;
    case CosetFamily::P24bar:
        return OctFamily::P24bar;
    case CosetFamily::P48:
        return OctFamily::P48;
    default:
        break;
    }
    throw UnsupportedCase(std::string("coset family ") + coset_family_name(f) +
                          " induces to reducible octuplet modules at untwisted weights");
}

/// Octuplet label of a quantum summand (irreducible, projective or Q9).
OctLabel oct_of_quantum(const ModuleLabel& m)
{
    if (m.family == Family::Q) {
        CosetLabel top = from_quantum(L_label(m.weight));
        return make_oct(top.family == CosetFamily::I3 ? OctFamily::Q9 : OctFamily::Q9bar,
                        top.weight);
    }
    return octuplet_induce(from_quantum(m));
}

ModuleLabel quantum_of(const OctLabel& l)
{
    switch (l.family) {
    case OctFamily::Q9:
        return make_label(Family::Q, phi(l.cls) + rho());
    case OctFamily::Q9bar:
        return make_label(Family::Q, phi(l.cls));
    default:
        return to_quantum(oct_to_coset(l));
    }
}

std::vector<Weight> class_window(const Weight& cls, int radius)
{
    std::vector<Weight> out;
    for (int a = -radius; a <= radius; ++a)
        for (int b = -radius; b <= radius; ++b)
            out.push_back(cls + Weight(3 * a, 3 * b));
    return out;
}

} // namespace

const char* oct_family_name(OctFamily f)
{
    static const char* names[] = {"W1", "W3", "W3bar", "W8", "Q9", "Q9bar", "P24", "P24bar", "P48"};
    return names[static_cast<int>(f)];
}

std::string OctLabel::str() const
{
    return oct_family_name(family) + cls.str();
}

bool operator<(const OctLabel& a, const OctLabel& b)
{
    return std::make_tuple(static_cast<int>(a.family), a.cls) <
           std::make_tuple(static_cast<int>(b.family), b.cls);
}

Weight oct_centre(OctFamily f)
{
    if (centred_at_zero(f))
        return Weight();
    if (f == OctFamily::W3 || f == OctFamily::Q9 || f == OctFamily::P24)
        return -half_rho();
    return half_rho();
}

OctLabel make_oct(OctFamily f, const Weight& rep)
{
    const std::vector<Weight> cands =
        centred_at_zero(f) ? std::vector<Weight>{Weight(), rho(), -rho()}
                           : std::vector<Weight>{-half_rho(), half_rho(), Rat(3, 2) * rho()};
    for (const auto& c : cands)
        if (in_3P(rep - c))
            return OctLabel{f, c};
    throw InvalidCosetWeight(std::string(oct_family_name(f)) + " needs a weight in " +
                             (centred_at_zero(f) ? "Q" : "-rho/2 + Q") + ", got " + rep.str());
}

OctLabel parse_oct_label(std::string_view text)
{
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            s += ch;
    std::size_t br = s.find('[');
    if (br == std::string::npos)
        throw ParseError("octuplet label needs a weight at position " + std::to_string(s.size()) +
                         " in '" + std::string(text) + "'");
    std::string name = s.substr(0, br);
    for (int k = 0; k <= static_cast<int>(OctFamily::P48); ++k)
        if (name == oct_family_name(static_cast<OctFamily>(k)))
            return make_oct(static_cast<OctFamily>(k), parse_weight(s.substr(br)));
    throw ParseError("unknown octuplet family '" + name + "' at position 0 in '" +
                     std::string(text) + "'");
}

Weight oct_grade(const OctLabel& l)
{
    Weight g = centred_at_zero(l.family) ? l.cls : l.cls - Rat(3, 2) * rho();
    for (const auto& c : {Weight(), rho(), -rho()})
        if (in_3P(g - c))
            return c;
    throw InternalInconsistency("grade of " + l.str() + " outside Q/3P");
}

OctLabel octuplet_induce(const CosetLabel& c)
{
    validate(c);
    if (!lattice_member(c.weight, Lattice::HalfQ))
        throw TwistedModule(c.str() + " induces to a twisted module (weight not in Q/2)");
    if (c.family == CosetFamily::I8 && !lattice_member(c.weight, Lattice::Q))
        throw UnsupportedCase(c.str() + " is reducible at a weight in Q/2 outside Q");
    return make_oct(oct_family_of(c.family), c.weight);
}

CosetLabel oct_to_coset(const OctLabel& l)
{
    switch (l.family) {
    case OctFamily::W1:
        return {CosetFamily::I1, l.cls};
    case OctFamily::W3:
        return {CosetFamily::I3, l.cls};
    case OctFamily::W3bar:
        return {CosetFamily::I3bar, l.cls};
    case OctFamily::W8:
        return {CosetFamily::I8, l.cls};
    case OctFamily::P24:
        return {CosetFamily::P24, l.cls};
    case OctFamily::P24bar:
        return {CosetFamily::P24bar, l.cls};
    case OctFamily::P48:
        return {CosetFamily::P48, l.cls};
    default:
        break;
    }
    throw UnsupportedCase(l.str() + " has no single coset counterpart");
}

std::vector<OctLabel> octuplet_irreducibles()
{
    std::vector<OctLabel> out;
    const Weight h = half_rho();
    for (const auto& w : {Weight(), rho(), -rho()})
        out.push_back(make_oct(OctFamily::W1, w));
    for (const auto& w : {-h, h, Rat(3) * h})
        out.push_back(make_oct(OctFamily::W3, w));
    for (const auto& w : {-h, h, Rat(3) * h})
        out.push_back(make_oct(OctFamily::W3bar, w));
    for (const auto& w : {Weight(), rho(), -rho()})
        out.push_back(make_oct(OctFamily::W8, w));
    return out;
}

Rat simple_current_delta(const Weight& l)
{
    if (l == Weight())
        return Rat(0);
    for (int i = 1; i <= 3; ++i) {
        if (l == alpha(i) || l == -alpha(i))
            return Rat(5, 3);
        if (l == Rat(3) * omega(i) || l == Rat(-3) * omega(i))
            return Rat(4);
    }
    throw UnsupportedCase("no tabulated conformal weight for the simple current at " + l.str());
}

std::vector<OctRow> octuplet_table()
{
    std::vector<OctRow> rows;
    for (const auto& label : octuplet_irreducibles()) {
        OctRow row;
        row.label = label;
        const Weight centre = oct_centre(label.family);
        Rat best(-1);
        for (const auto& w : class_window(label.cls, 3)) {
            Rat d = norm2(w - centre);
            if (best < 0 || d < best) {
                best = d;
                row.top_weights.clear();
            }
            if (d == best)
                row.top_weights.push_back(w);
        }
        std::sort(row.top_weights.begin(), row.top_weights.end());
        row.top_dim = static_cast<int>(row.top_weights.size());

        switch (label.family) {
        case OctFamily::W8: {
            row.conformal_weight = norm2(row.top_weights[0]) / 3 - Rat(1, 2);
            for (const auto& w : row.top_weights)
                if (norm2(w) / 3 - Rat(1, 2) != row.conformal_weight)
                    throw InternalInconsistency("unequal top conformal weights for " + label.str());
            break;
        }
        case OctFamily::W1: {
            row.conformal_weight = simple_current_delta(row.top_weights[0]);
            for (const auto& w : row.top_weights)
                if (simple_current_delta(w) != row.conformal_weight)
                    throw InternalInconsistency("unequal simple-current weights for " +
                                                label.str());
            break;
        }
        default: {
            // ground states of the base lie in the cone centre -+ (N alpha1 + N alpha2)
            const Rat sign = label.family == OctFamily::W3 ? Rat(-1) : Rat(1);
            bool found = false;
            for (const auto& w : row.top_weights) {
                auto rc = root_coords(sign * (w - centre));
                if (is_integer(rc[0]) && is_integer(rc[1]) && rc[0] >= 0 && rc[1] >= 0) {
                    row.conformal_weight = norm2(w) / 3 - Rat(1, 2);
                    found = true;
                    break;
                }
            }
            if (!found)
                throw InternalInconsistency("no ground-state top weight for " + label.str());
            break;
        }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

const std::vector<OctRow>& octuplet_table_printed()
{
    static const std::vector<OctRow> rows = [] {
        const Weight r = rho(), h = half_rho(), w1 = omega(1), w2 = omega(2);
        const Weight t = Rat(3) * w1, u = Rat(3) * w2;
        auto row = [](OctFamily f, const Weight& cls, std::vector<Weight> ws, Rat cw) {
            std::sort(ws.begin(), ws.end());
            return OctRow{make_oct(f, cls), static_cast<int>(ws.size()), ws, cw};
        };
        const Weight h3 = Rat(3) * h;
        return std::vector<OctRow>{
            row(OctFamily::W1, Weight(), {Weight()}, Rat(0)),
            row(OctFamily::W1, r, {r, r - t, r - u}, Rat(5, 3)),
            row(OctFamily::W1, -r, {-r, -r + t, -r + u}, Rat(5, 3)),
            row(OctFamily::W3, -h, {-h}, Rat(-1, 3)),
            row(OctFamily::W3, h, {h, h - t, h - u}, Rat(2, 3)),
            row(OctFamily::W3, h3, {-h3, -h3 + t, -h3 + u}, Rat(1)),
            row(OctFamily::W3bar, -h, {-h, -h + t, -h + u}, Rat(-1, 3)),
            row(OctFamily::W3bar, h, {h}, Rat(2, 3)),
            row(OctFamily::W3bar, h3, {h3, h3 - t, h3 - u}, Rat(1)),
            row(OctFamily::W8, Weight(), {Weight()}, Rat(-1, 2)),
            row(OctFamily::W8, r, {r, r - t, r - u}, Rat(1, 6)),
            row(OctFamily::W8, -r, {-r, -r + t, -r + u}, Rat(1, 6)),
        };
    }();
    return rows;
}

void OctExpr::add(const OctLabel& l, int m)
{
    if (m == 0)
        return;
    int& v = terms[l];
    v += m;
    if (v == 0)
        terms.erase(l);
}

int OctExpr::size() const
{
    int n = 0;
    for (const auto& [l, k] : terms)
        n += k;
    return n;
}

std::string OctExpr::str(const char* sep) const
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

OctExpr octuplet_factors(const OctLabel& l)
{
    OctExpr e;
    for (const auto& layer : octuplet_loewy(l).layers)
        for (const auto& [x, k] : layer)
            e.add(x, k);
    return e;
}

OctExpr octuplet_fuse(const OctLabel& a, const OctLabel& b, FusionLevel level)
{
    const ModuleLabel qa = quantum_of(a), qb = quantum_of(b);
    if (qa.family != Family::L || qb.family != Family::L)
        throw UnsupportedCase("octuplet fusion needs irreducible arguments, got " + a.str() +
                              " and " + b.str());
    OctExpr e;
    for (const auto& [z, k] : tensor_rule(qa, qb).terms) {
        OctLabel o = oct_of_quantum(z);
        if (level == FusionLevel::full)
            e.add(o, k);
        else
            for (const auto& [f, m] : octuplet_factors(o).terms)
                e.add(f, k * m);
    }
    return e;
}

std::vector<std::vector<OctLabel>> octuplet_orbits()
{
    const OctLabel current = make_oct(OctFamily::W1, rho());
    std::vector<std::vector<OctLabel>> out;
    const Weight h = half_rho();
    for (const auto& start :
         {make_oct(OctFamily::W1, Weight()), make_oct(OctFamily::W8, Weight()),
          make_oct(OctFamily::W3, -h), make_oct(OctFamily::W3bar, -h)}) {
        std::vector<OctLabel> orbit{start};
        for (int k = 0; k < 3; ++k) {
            OctExpr e = octuplet_fuse(current, orbit.back());
            if (e.terms.size() != 1 || e.terms.begin()->second != 1)
                throw InternalInconsistency("fusion with the simple current is not a single label: " +
                                            e.str());
            orbit.push_back(e.terms.begin()->first);
        }
        out.push_back(std::move(orbit));
    }
    return out;
}

const std::vector<std::vector<OctLabel>>& octuplet_orbits_printed()
{
    static const std::vector<std::vector<OctLabel>> orbits = [] {
        const Weight r = rho(), h = half_rho(), h3 = Rat(3) * h;
        auto W = [](OctFamily f, const Weight& w) { return make_oct(f, w); };
        return std::vector<std::vector<OctLabel>>{
            {W(OctFamily::W1, Weight()), W(OctFamily::W1, r), W(OctFamily::W1, -r),
             W(OctFamily::W1, Weight())},
            // printed with W1[0] as the last entry
            {W(OctFamily::W8, Weight()), W(OctFamily::W8, r), W(OctFamily::W8, -r),
             W(OctFamily::W1, Weight())},
            {W(OctFamily::W3, -h), W(OctFamily::W3, h), W(OctFamily::W3, h3), W(OctFamily::W3, -h)},
            {W(OctFamily::W3bar, -h), W(OctFamily::W3bar, h), W(OctFamily::W3bar, h3),
             W(OctFamily::W3bar, -h)},
        };
    }();
    return orbits;
}

const std::vector<OctRule>& octuplet_rules_printed()
{
    static const std::vector<OctRule> rules = [] {
        const Weight h3 = Rat(3, 2) * rho();
        const OctLabel w3 = make_oct(OctFamily::W3, h3), w3b = make_oct(OctFamily::W3bar, h3),
                       w8 = make_oct(OctFamily::W8, Weight()),
                       w1 = make_oct(OctFamily::W1, Weight());
        auto expr = [](std::initializer_list<std::pair<OctLabel, int>> t) {
            OctExpr e;
            for (const auto& [l, k] : t)
                e.add(l, k);
            return e;
        };
        return std::vector<OctRule>{
            {w3, w3, expr({{make_oct(OctFamily::Q9bar, h3), 1}})},
            {w3b, w3b, expr({{make_oct(OctFamily::Q9, h3), 1}})},
            {w3, w3b, expr({{w8, 1}, {w1, 1}})},
            {w3, w8, expr({{make_oct(OctFamily::P24, h3), 1}})},
            {w3b, w8, expr({{make_oct(OctFamily::P24bar, h3), 1}})},
            {w8, w8, expr({{w8, 2}, {make_oct(OctFamily::P48, Weight()), 1}})},
        };
    }();
    return rules;
}

std::string str(const OctDiagram& d)
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

OctDiagram octuplet_loewy(const OctLabel& l)
{
    LoewyDiagram q = static_loewy(quantum_of(l));
    OctDiagram out;
    for (const auto& layer : q.layers) {
        std::map<OctLabel, int> m;
        for (const auto& n : layer)
            m[octuplet_induce(from_quantum(n.label))] += n.mult;
        out.layers.push_back(std::move(m));
    }
    return out;
}

OctDiagram octuplet_loewy_fixture(const OctLabel& l)
{
    const Weight h3 = Rat(3, 2) * rho();
    OctFamily three = OctFamily::W3, bar = OctFamily::W3bar;
    OctLabel base;
    switch (l.family) {
    case OctFamily::Q9:
    case OctFamily::P24:
        base = make_oct(l.family, h3);
        break;
    case OctFamily::Q9bar:
    case OctFamily::P24bar:
        base = make_oct(l.family, h3);
        std::swap(three, bar);
        break;
    case OctFamily::P48:
        base = make_oct(l.family, Weight());
        break;
    default: {
        OctDiagram d;
        d.layers.push_back({{l, 1}});
        return d;
    }
    }
    const OctLabel t = make_oct(three, h3), tb = make_oct(bar, h3),
                   one = make_oct(OctFamily::W1, Weight());
    OctDiagram d;
    auto layer = [&](std::initializer_list<std::pair<OctLabel, int>> nodes) {
        std::map<OctLabel, int> m;
        for (const auto& [x, k] : nodes)
            m[x] += k;
        d.layers.push_back(std::move(m));
    };
    switch (l.family) {
    case OctFamily::Q9:
    case OctFamily::Q9bar:
        layer({{t, 1}});
        layer({{one, 3}});
        layer({{t, 1}});
        break;
    case OctFamily::P24:
    case OctFamily::P24bar:
        layer({{t, 1}});
        layer({{one, 3}});
        layer({{tb, 3}, {t, 1}});
        layer({{one, 3}});
        layer({{t, 1}});
        break;
    default:
        layer({{one, 1}});
        layer({{tb, 3}, {t, 3}});
        layer({{one, 6}, {one, 4}});
        layer({{tb, 3}, {t, 3}});
        layer({{one, 1}});
        break;
    }
    // other classes: fuse every factor with the appropriate simple current
    const Weight shift = l.cls - base.cls;
    OctDiagram out;
    for (const auto& layer_map : d.layers) {
        std::map<OctLabel, int> m;
        for (const auto& [x, k] : layer_map)
            m[make_oct(x.family, x.cls + shift)] += k;
        out.layers.push_back(std::move(m));
    }
    return out;
}

} // namespace qsl3
