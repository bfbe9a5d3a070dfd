#include "qsl3/labels.hpp"

#include "qsl3/errors.hpp"

#include <cctype>
#include <tuple>

namespace qsl3 {

char family_char(Family f)
{
    static const char names[] = {'L', 'M', 'P', 'K', 'R', 'S', 'Q'};
    return names[static_cast<int>(f)];
}

static Family family_from_char(char c, std::string_view text)
{
    switch (c) {
    case 'L':
        return Family::L;
    case 'M':
        return Family::M;
    case 'P':
        return Family::P;
    case 'K':
        return Family::K;
    case 'R':
        return Family::R;
    case 'S':
        return Family::S;
    case 'Q':
        return Family::Q;
    }
    throw ParseError("unknown module family '" + std::string(1, c) + "' at position 0 in '" +
                     std::string(text) + "'");
}

std::string ModuleLabel::str() const
{
    std::string s(1, family_char(family));
    s += "(" + std::to_string(dim);
    if (family == Family::R)
        s += "," + std::to_string(index);
    s += ")" + weight.str();
    return s;
}

bool operator<(const ModuleLabel& a, const ModuleLabel& b)
{
    auto key = [](const ModuleLabel& l) {
        return std::make_tuple(static_cast<int>(l.family), l.dim, l.index);
    };
    if (key(a) != key(b))
        return key(a) < key(b);
    return a.weight < b.weight;
}

int expected_dim(Family f, const Weight& w)
{
    switch (f) {
    case Family::L:
        return irrep_dim(w);
    case Family::M:
        return 8;
    case Family::P:
        switch (classify(w).tag) {
        case ClassTag::Typical:
            return 8;
        case ClassTag::Atyp1:
            return 16;
        case ClassTag::Atyp2Root3Odd:
            return 24;
        case ClassTag::Atyp2Root3Even:
            return 48;
        }
        break;
    case Family::K:
        return 16;
    case Family::R:
        return 8;
    case Family::S:
        return 16;
    case Family::Q:
        return 9;
    }
    return 0;
}

ModuleLabel make_label(Family f, const Weight& w, int index)
{
    ModuleLabel l;
    l.family = f;
    l.weight = w;
    l.dim = expected_dim(f, w);
    l.index = f == Family::R ? index : 0;
    return l;
}

ModuleLabel L_label(const Weight& w)
{
    return make_label(Family::L, w);
}

ModuleLabel P_label(const Weight& w)
{
    return make_label(Family::P, w);
}

ModuleLabel parse_label(std::string_view text)
{
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s.push_back(c);
    if (s.empty())
        throw ParseError("empty module label");
    Family fam = family_from_char(s[0], text);
    if (s.size() < 2 || s[1] != '(')
        throw ParseError("expected '(' at position 1 in '" + std::string(text) + "'");
    auto close = s.find(')');
    if (close == std::string::npos)
        throw ParseError("missing ')' at position " + std::to_string(s.size()) + " in '" +
                         std::string(text) + "'");
    std::string inner = s.substr(2, close - 2);
    int index = 0;
    auto comma = inner.find(',');
    std::string dimtxt = inner.substr(0, comma);
    if (comma != std::string::npos) {
        if (fam != Family::R)
            throw ParseError("only the R family takes a root index (position " +
                             std::to_string(comma + 2) + "): '" + std::string(text) + "'");
        std::string idx = inner.substr(comma + 1);
        if (idx != "1" && idx != "2")
            throw ParseError("R index must be 1 or 2 at position " + std::to_string(comma + 3) +
                             " in '" + std::string(text) + "'");
        index = idx[0] - '0';
    } else if (fam == Family::R) {
        throw ParseError("R labels need a root index, e.g. R(8,1)[0,0]: '" + std::string(text) + "'");
    }
    if (dimtxt.empty() || dimtxt.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("bad dimension tag at position 2 in '" + std::string(text) + "'");
    int dim = std::stoi(dimtxt);
    Weight w = parse_weight(s.substr(close + 1));
    ModuleLabel l = make_label(fam, w, index);
    if (l.dim != dim)
        throw ParseError("dimension tag " + std::to_string(dim) + " does not match " +
                         std::string(1, family_char(fam)) + " at weight " + w.str() +
                         " (expected " + std::to_string(l.dim) + ")");
    return l;
}

void DecompositionExpr::add(const ModuleLabel& l, int m)
{
    if (m == 0)
        return;
    int& v = terms[l];
    v += m;
    if (v == 0)
        terms.erase(l);
}

int DecompositionExpr::dim() const
{
    int d = 0;
    for (const auto& [l, m] : terms)
        d += l.dim * m;
    return d;
}

int DecompositionExpr::size() const
{
    int n = 0;
    for (const auto& kv : terms)
        n += kv.second;
    return n;
}

std::string DecompositionExpr::str() const
{
    std::string out;
    for (const auto& [l, m] : terms) {
        if (!out.empty())
            out += " \xE2\x8A\x95 ";
        if (m != 1)
            out += std::to_string(m) + "*";
        out += l.str();
    }
    return out.empty() ? "0" : out;
}

DecompositionExpr parse_decomposition(std::string_view text)
{
    DecompositionExpr e;
    std::string s(text);
    const std::string oplus = "\xE2\x8A\x95";
    for (std::size_t p; (p = s.find(oplus)) != std::string::npos;)
        s.replace(p, oplus.size(), "+");
    std::size_t start = 0;
    while (start <= s.size()) {
        auto plus = s.find('+', start);
        // a '+' inside a weight is not a separator
        while (plus != std::string::npos) {
            auto lb = s.rfind('[', plus), rb = s.rfind(']', plus);
            if (lb != std::string::npos && (rb == std::string::npos || rb < lb))
                plus = s.find('+', plus + 1);
            else
                break;
        }
        std::string term = s.substr(start, plus == std::string::npos ? std::string::npos : plus - start);
        int mult = 1;
        auto star = term.find('*');
        if (star != std::string::npos) {
            mult = std::stoi(term.substr(0, star));
            term = term.substr(star + 1);
        }
        e.add(parse_label(term), mult);
        if (plus == std::string::npos)
            break;
        start = plus + 1;
    }
    return e;
}

} // namespace qsl3
