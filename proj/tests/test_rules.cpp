#include "qsl3/algebra.hpp"
#include "qsl3/errors.hpp"
#include "qsl3/repmod.hpp"
#include "qsl3/rules.hpp"

#include <doctest.h>

#include <set>

using namespace qsl3;

namespace {

std::vector<Weight> pool()
{
    std::vector<Rat> xs = {Rat(-1), Rat(0), Rat(1), Rat(2), Rat(1, 2), Rat(-1, 2), Rat(3, 2),
                           Rat(1, 3), Rat(-2, 3)};
    std::vector<Weight> out;
    for (const auto& a : xs)
        for (const auto& b : xs)
            out.emplace_back(a - 1, b - 1);
    return out;
}

} // namespace

TEST_CASE("tensor rules are symmetric and preserve characters")
{
    const auto ws = pool();
    std::set<std::string> signatures;
    int checked = 0, gaps = 0;
    for (const auto& l : ws)
        for (const auto& m : ws) {
            ModuleLabel a = L_label(l), b = L_label(m);
            DecompositionExpr e;
            try {
                e = tensor_rule(a, b);
            } catch (const UnsupportedCase&) {
                ++gaps;
                continue;
            }
            CAPTURE(a.str());
            CAPTURE(b.str());
            CHECK(e == tensor_rule(b, a));
            CHECK(e.dim() == a.dim * b.dim);
            Character lhs = irrep_char(l) * irrep_char(m), rhs;
            for (const auto& [x, k] : e.terms)
                for (int t = 0; t < k; ++t)
                    rhs += static_char(x);
            CHECK(lhs == rhs);
            signatures.insert(parity_signature(l, m));
            ++checked;
        }
    CHECK(checked > 5000);
    CHECK(signatures.size() > 30);
    MESSAGE("character-checked pairs: ", checked, ", uncovered pairs: ", gaps);
}

TEST_CASE("certified decompositions")
{
    const Rat h(1, 2);
    auto W = [](const Rat& x1, const Rat& x2) { return Weight(x1 - 1, x2 - 1); };
    const std::vector<std::pair<Weight, Weight>> cases = {
        {W(Rat(1, 3), Rat(2, 5)), W(Rat(1, 4), Rat(1, 5))},   // typical x typical
        {W(1, Rat(1, 3)), W(Rat(1, 4), Rat(1, 5))},           // L4 x L8
        {W(1, 1), W(Rat(1, 3), Rat(1, 5))},                   // L1 x L8
        {W(1, 2), W(1, 2)},                                    // L3 x L3
        {W(1, h), W(h, 1)},                                    // L4 x L4
        {W(1, 2), W(2, 1)},
    };
    for (const auto& [l, m] : cases) {
        ModuleLabel a = L_label(l), b = L_label(m);
        CAPTURE(a.str());
        CAPTURE(b.str());
        WeightModule T = tensor_action(irreducible(l), irreducible(m));
        Certificate c = check_decomposition(T, tensor_rule(a, b), reference_constructor());
        CHECK(c.ok());
    }
}

TEST_CASE("a wrong prediction fails verification")
{
    const Weight l(Rat(-1, 2), Rat(-1, 2)), m = l + wt::alpha(1);
    const ModuleLabel a = L_label(l), b = L_label(m);
    DecompositionExpr right = tensor_rule(a, b);
    bool has_cover = false;
    for (const auto& [x, k] : right.terms)
        has_cover = has_cover || x.family != Family::L;
    REQUIRE(has_cover);
    WeightModule T = tensor_action(irreducible(l), irreducible(m));
    DecompositionExpr wrong;
    for (const auto& [x, k] : composition_factors(T).terms)
        wrong.add(x, k);
    CHECK(check_decomposition(T, right, reference_constructor()).ok());
    CHECK_FALSE(check_decomposition(T, wrong, reference_constructor()).ok());
    CHECK_THROWS_AS(verify_decomposition(T, wrong, reference_constructor()), VerificationFailure);
}

TEST_CASE("the uncovered L4 x L4 case is reported")
{
    const Weight l(Rat(-1, 2), Rat(-1, 2));
    CHECK_THROWS_AS(tensor_rule(L_label(l), L_label(l)), UnsupportedCase);
}

TEST_CASE("labels round-trip through their printed form")
{
    for (const char* s : {"L(8)[1/3,2/5]", "P(24)[0,1]", "K(16)[0,1]", "R(8,2)[0,0]", "S(16)[0,0]",
                          "Q(9)[1,0]", "M(8)[0,0]", "P(16)[0,-1/2]"}) {
        ModuleLabel l = parse_label(s);
        CHECK(parse_label(l.str()) == l);
    }
    CHECK_THROWS_AS(parse_label("L(3)[0,0]"), ParseError);
    CHECK_THROWS_AS(parse_label("X(3)[0,0]"), ParseError);
    CHECK_THROWS_AS(parse_label("R(8)[0,0]"), ParseError);
}

TEST_CASE("K, R, S and Q module diagrams")
{
    for (const char* s : {"K(16)[0,1]", "R(8,1)[0,0]", "R(8,2)[0,0]", "S(16)[0,0]", "Q(9)[0,1]"}) {
        ModuleLabel l = parse_label(s);
        CAPTURE(s);
        WeightModule V = reference_module(l);
        CHECK(V.dim() == l.dim);
        CHECK(loewy(V, false).layer_exprs() == static_loewy(l).layer_exprs());
    }
}
