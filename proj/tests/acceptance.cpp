#include "qsl3/algebra.hpp"
#include "qsl3/errors.hpp"
#include "qsl3/kl.hpp"
#include "qsl3/octuplet.hpp"
#include "qsl3/qseries.hpp"
#include "qsl3/repmod.hpp"
#include "qsl3/rules.hpp"

#include "oracles.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

using namespace qsl3;
using oracle::IndexClass;
using oracle::with_indices;
using wt::alpha;
using wt::omega;
using wt::rho;

namespace {

const Rat h(1, 2);

/// Collects failures of one criterion; the first few are printed.
struct Tally {
    int checks = 0;
    std::vector<std::string> failures;
    std::vector<std::string> notes;

    void expect(bool ok, const std::string& what)
    {
        ++checks;
        if (!ok)
            failures.push_back(what);
    }
    void note(const std::string& s) { notes.push_back(s); }
};

using Criterion = std::function<void(Tally&)>;

bool run(int n, const char* title, const Criterion& body)
{
    Tally t;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(t);
    } catch (const std::exception& e) {
        t.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = t.failures.empty();
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(2);
    os << "criterion " << n << ": " << (ok ? "PASS" : "FAIL") << " " << title << " (" << t.checks
       << " checks, " << secs << " s)";
    for (const auto& s : t.notes)
        os << "; " << s;
    std::cout << os.str() << "\n";
    for (std::size_t k = 0; k < t.failures.size() && k < 8; ++k)
        std::cout << "    " << t.failures[k] << "\n";
    if (t.failures.size() > 8)
        std::cout << "    ... " << t.failures.size() - 8 << " more\n";
    std::cout << std::flush;
    return ok;
}

const char* class_name(IndexClass c)
{
    switch (c) {
    case IndexClass::typical:
        return "typical";
    case IndexClass::one:
        return "degree 1";
    case IndexClass::two_odd:
        return "degree 2, third index odd";
    case IndexClass::two_even:
        return "degree 2, third index even";
    }
    return "?";
}

std::vector<Weight> distinct_samples(IndexClass c, int n, std::mt19937& rng)
{
    std::set<Weight> seen;
    std::vector<Weight> out;
    while (static_cast<int>(out.size()) < n) {
        Weight l = oracle::sample_weight(c, rng);
        if (seen.insert(l).second)
            out.push_back(l);
    }
    return out;
}

bool same_layers(const std::vector<DecompositionExpr>& a, const std::vector<DecompositionExpr>& b)
{
    return a == b;
}

bool has_arrow(const LoewyDiagram& d, const LoewyArrow& a)
{
    return std::find(d.arrows.begin(), d.arrows.end(), a) != d.arrows.end();
}

/// Arrows of the static diagram between nodes drawn once are all present in the computed one.
void compare_arrows(Tally& t, const LoewyDiagram& computed, const LoewyDiagram& fixed,
                    const std::string& what, int* skipped = nullptr)
{
    for (const auto& a : fixed.arrows) {
        if (fixed.collapsed(a.layer, a.from) || fixed.collapsed(a.layer + 1, a.to)) {
            if (skipped)
                ++*skipped;
            continue;
        }
        t.expect(has_arrow(computed, a),
                 what + ": missing arrow " + a.from.str() + " -> " + a.to.str());
    }
}

// ------------------------------------------------------------------ 1

void irreducibles(Tally& t)
{
    std::mt19937 rng(101);
    for (IndexClass c : {IndexClass::typical, IndexClass::one, IndexClass::two_odd, IndexClass::two_even}) {
        for (const auto& l : distinct_samples(c, 100, rng)) {
            WeightModule L = irreducible(l);
            t.expect(L.dim() == oracle::irrep_dim(l), "dim L" + l.str());
            t.expect(L.character() == oracle::irrep_char(l), "character of L" + l.str());
        }
    }
    t.note("100 weights in each of the 4 classes");
}

// ------------------------------------------------------------------ 2

void vermas(Tally& t)
{
    std::mt19937 rng(202);
    for (IndexClass c : {IndexClass::one, IndexClass::two_odd, IndexClass::two_even}) {
        for (const auto& l : distinct_samples(c, 30, rng)) {
            const std::string name = "M" + l.str() + " (" + class_name(c) + ")";
            WeightModule M = verma(l);
            auto rad = series(M, SeriesKind::radical);
            auto soc = series(M, SeriesKind::socle);
            std::reverse(soc.begin(), soc.end());
            t.expect(rad == soc, name + ": radical and socle series differ");
            LoewyDiagram d = loewy(M);
            LoewyDiagram s = static_loewy(make_label(Family::M, l));
            t.expect(same_layers(d.layer_exprs(), s.layer_exprs()), name + ": layers");
            t.expect(d.arrows.size() == s.arrows.size(), name + ": arrow count");
            compare_arrows(t, d, s, name);
        }
    }
    t.note("30 Vermas in each reducible class");
}

// ------------------------------------------------------------------ 3

std::vector<ModuleLabel> projective_corpus()
{
    std::vector<ModuleLabel> out;
    for (const auto& l : {with_indices(1, h), with_indices(Rat(1, 3), 1), with_indices(Rat(2, 3), Rat(1, 3)),
                          with_indices(1, 2), with_indices(2, 1), with_indices(-1, 2), with_indices(1, 1),
                          with_indices(1, -1), with_indices(3, 1)})
        out.push_back(P_label(l));
    return out;
}

/// A tensor product containing p once, other than the reference recipe.
bool alternative_recipe(const ModuleLabel& p, TensorRecipe& out)
{
    const TensorRecipe ref = reference_recipe(p);
    const std::vector<Weight> lefts = {omega(1), omega(2), rho(), with_indices(1, h), with_indices(h, 1),
                                       with_indices(h, h), with_indices(1, 2), with_indices(2, 1),
                                       with_indices(1, 1), wt::zero()};
    const std::vector<Weight> shifts = {wt::zero(), alpha(1), alpha(2), alpha(3), alpha(1) + alpha(3),
                                        alpha(2) + alpha(3), Rat(2) * alpha(3)};
    for (const auto& a : lefts)
        for (const auto& s : shifts) {
            const ModuleLabel la = L_label(a), lb = L_label(p.weight - a + s);
            if ((la == ref.left && lb == ref.right) || (la == ref.right && lb == ref.left))
                continue;
            if (la.dim * lb.dim > 64)
                continue;
            DecompositionExpr e;
            try {
                e = tensor_rule(la, lb);
            } catch (const UnsupportedCase&) {
                continue;
            }
            auto it = e.terms.find(p);
            if (it == e.terms.end() || it->second != 1)
                continue;
            e.terms.erase(it);
            out = {la, lb, e};
            return true;
        }
    return false;
}

void duality(Tally& t)
{
    std::mt19937 rng(303);
    int irr = 0;
    for (IndexClass c : {IndexClass::typical, IndexClass::one, IndexClass::two_odd, IndexClass::two_even})
        for (const auto& l : distinct_samples(c, 10, rng)) {
            WeightModule L = irreducible(l);
            HomMap iso;
            WeightModule D = dual_rep(L);
            bool found = find_isomorphism(D, L, &iso);
            t.expect(found && is_homomorphism(D, L, iso), "dual of L" + l.str());
            ++irr;
        }
    int proj = 0, pairs = 0;
    for (const auto& p : projective_corpus()) {
        WeightModule P = reference_module(p);
        HomMap iso;
        WeightModule D = dual_rep(P);
        bool found = find_isomorphism(D, P, &iso);
        t.expect(found && is_homomorphism(D, P, iso), "dual of " + p.str());
        ++proj;

        TensorRecipe alt;
        if (!alternative_recipe(p, alt))
            continue;
        WeightModule T = tensor_action(irreducible(alt.left.weight), irreducible(alt.right.weight));
        WeightModule Q = split_off(T, alt.split, reference_constructor());
        t.expect(Q.character() == P.character(), p.str() + ": characters of the two constructions");
        t.expect(find_isomorphism(Q, P), p.str() + " from " + alt.left.str() + " x " + alt.right.str() +
                                             " is not isomorphic to the reference");
        ++pairs;
    }
    t.expect(pairs >= 6, "too few equal-character pairs");
    t.note(std::to_string(irr) + " irreducibles and " + std::to_string(proj) +
           " projectives self-dual; " + std::to_string(pairs) + " equal-character pairs isomorphic");
}

// ------------------------------------------------------------------ 4

void bgg(Tally& t)
{
    std::mt19937 rng(404);
    std::map<int, int> by_dim;
    for (IndexClass c : {IndexClass::one, IndexClass::two_odd, IndexClass::two_even}) {
        auto ws = distinct_samples(c, 4, rng);
        for (const auto& p : projective_corpus())
            if (classify(p.weight).degree() > 0)
                ws.push_back(p.weight);
        for (const auto& l : ws) {
            const ModuleLabel p = P_label(l);
            if (oracle::irrep_dim(l) == 8)
                continue;
            WeightModule P = reference_module(p);
            t.expect(P.dim() == p.dim, p.str() + ": dimension");
            t.expect(P.character() == oracle::bgg_char(l), p.str() + ": character vs Verma sum");
            t.expect(static_char(p) == oracle::bgg_char(l), p.str() + ": static character");
            ++by_dim[p.dim];
        }
    }
    std::ostringstream os;
    for (const auto& [d, k] : by_dim)
        os << k << " P(" << d << ") ";
    t.note(os.str() + "checked");
}

// ------------------------------------------------------------------ 5

std::vector<Weight> tensor_pool()
{
    std::vector<Rat> xs = {Rat(-1), Rat(0), Rat(1), Rat(2), Rat(3), h, Rat(-1, 2), Rat(3, 2),
                           Rat(1, 3), Rat(-2, 3), Rat(1, 4), Rat(3, 4), Rat(-1, 4), Rat(2, 3)};
    std::vector<Weight> out;
    for (const auto& a : xs)
        for (const auto& b : xs)
            out.push_back(with_indices(a, b));
    return out;
}

void tensors(Tally& t)
{
    const auto pool = tensor_pool();
    std::map<std::string, std::vector<std::pair<Weight, Weight>>> branches;
    std::set<std::string> gaps;
    for (const auto& l : pool)
        for (const auto& m : pool) {
            if (m < l)
                continue;
            std::string sig = parity_signature(l, m);
            try {
                tensor_rule(L_label(l), L_label(m));
            } catch (const UnsupportedCase&) {
                gaps.insert(sig);
                continue;
            }
            auto& v = branches[sig];
            if (v.size() < 3)
                v.emplace_back(l, m);
        }
    int certified = 0;
    double worst = 0;
    std::string worst_sig;
    for (const auto& [sig, pairs] : branches) {
        t.expect(pairs.size() >= 3, "branch " + sig + " has only " + std::to_string(pairs.size()) + " samples");
        const auto start = std::chrono::steady_clock::now();
        for (const auto& [l, m] : pairs) {
            const ModuleLabel a = L_label(l), b = L_label(m);
            WeightModule T = tensor_action(irreducible(l), irreducible(m));
            Certificate c = check_decomposition(T, tensor_rule(a, b), reference_constructor());
            t.expect(c.ok(), a.str() + " x " + b.str() + ": " + c.failing);
            ++certified;
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > worst) {
            worst = secs;
            worst_sig = sig;
        }
    }
    t.expect(worst <= 30.0, "branch " + worst_sig + " took longer than 30 s");

    int diagrams = 0;
    for (const char* s : {"K(16)[0,1]", "K(16)[1,0]", "R(8,1)[0,0]", "R(8,2)[0,0]", "R(8,1)[2,0]",
                          "S(16)[0,0]", "S(16)[0,2]", "Q(9)[0,1]", "Q(9)[1,0]"}) {
        ModuleLabel l = parse_label(s);
        WeightModule V = reference_module(l);
        t.expect(V.dim() == l.dim, std::string(s) + ": dimension");
        LoewyDiagram d = loewy(V);
        LoewyDiagram f = static_loewy(l);
        t.expect(same_layers(d.layer_exprs(), f.layer_exprs()), std::string(s) + ": layers");
        compare_arrows(t, d, f, s);
        ++diagrams;
    }
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(1);
    os << branches.size() << " parity signatures, " << certified << " certified products, slowest branch "
       << worst << " s; " << diagrams << " K/R/S/Q diagrams";
    t.note(os.str());
    if (!gaps.empty()) {
        std::string g;
        for (const auto& s : gaps)
            g += (g.empty() ? "" : ", ") + s;
        t.note("uncovered by the published cases (UnsupportedCase): " + g);
    }
}

// ------------------------------------------------------------------ 6

void projective_diagrams(Tally& t)
{
    int skipped = 0, n = 0;
    for (const auto& p : projective_corpus()) {
        if (classify(p.weight).degree() == 0)
            continue;
        TensorRecipe r = reference_recipe(p);
        WeightModule P = reference_module(p);
        LoewyDiagram d = loewy(P);
        LoewyDiagram s = static_loewy(p);
        const std::string name = p.str() + " from " + r.left.str() + " x " + r.right.str();
        t.expect(same_layers(d.layer_exprs(), s.layer_exprs()), name + ": layers");
        compare_arrows(t, d, s, name, &skipped);
        if (p.dim == 48) {
            bool collapsed = false;
            for (std::size_t k = 0; k < s.layers.size(); ++k)
                for (const auto& node : s.layers[k])
                    collapsed = collapsed || node.mult > 1;
            t.expect(collapsed && s.layers.size() == 5 && s.collapsed(2, L_label(p.weight)),
                     name + ": middle node is not collapsed");
        }
        ++n;
    }
    t.note(std::to_string(n) + " projective covers; " + std::to_string(skipped) +
           " arrows at the collapsed P(48) node not compared");
}

// ------------------------------------------------------------------ 7

AffineLabel A(const std::string& s)
{
    return parse_affine_label(s);
}

void grothendieck(Tally& t)
{
    std::vector<std::pair<std::string, std::string>> cases = {
        {"A[-1/2,-1/2]", "A[-1/2,-1/2]"},          {"A[-1/2,-1/2]", "c*A[-1/2,-1/2]"},
        {"A[-1/2,-1/2]", "E[-11/10,-1/5]"},        {"A[-1/2,-1/2]", "R[1/7,2/9]"},
        {"E[-11/10,-1/5]", "E[-13/14,-2/7]"},      {"E[-11/10,-1/5]", "w2*E[-13/14,-2/7]"},
        {"E[-11/10,-1/5]", "w1w2*E[-13/14,-2/7]"}, {"E[-11/10,-1/5]", "R[1/7,2/9]"},
        {"R[1/5,1/3]", "R[1/7,2/9]"},
        {"A[-1/2,-1/2]", "R[0,0]"},                {"R[1/5,1/3]", "R[-1/5,-1/3]"},
        {"sf(1,0)*c*A[-1/2,-1/2]", "sf(0,-1)*R[1/7,2/9]"},
        {"c*A[-1/2,-1/2]", "c*A[-1/2,-1/2]"},      {"w2*E[-11/10,-1/5]", "w2*E[-13/14,-2/7]"},
        {"R[1/2,1/2]", "R[-1/2,1/3]"},             {"E[-5/6,-1/3]", "R[-9/14,-3/7]"},
        {"A[-1/2,-1/2]", "R[-7/10,-1/10]"},        {"A[0,0]", "R[1/5,1/3]"},
        {"E[-7/6,-1/6]", "E[-9/10,-3/10]"},         {"E[-7/6,-1/6]", "w1w2*E[-5/6,-1/3]"},
        {"R[1/3,1/3]", "R[-1/3,-1/3]"},            {"E[-9/10,-3/10]", "R[1/2,1/3]"},
    };
    // generic parameters along the semirelaxed line
    for (int k = 1; k <= 4; ++k) {
        Rat s(2 * k + 1, 4 * k + 7), u(k, 3 * k + 5);
        auto e = [](const Rat& p) { return aff::E(Weight(Rat(-3, 2) + 2 * p, -p)).str(); };
        cases.emplace_back(e(s), e(u));
        cases.emplace_back(e(s), "w2*" + e(u));
        cases.emplace_back(e(s), aff::R(Weight(s, u)).str());
        cases.emplace_back(aff::R(Weight(u, s)).str(), aff::R(Weight(s, -u)).str());
    }
    std::map<int, int> rules;
    for (const auto& [x, y] : cases) {
        GrothendieckReport r = grothendieck_check(A(x), A(y));
        t.expect(r.rule >= 0 && r.match, x + " x " + y + ": " + r.str());
        ++rules[r.rule];
    }
    for (int k = 1; k <= 9; ++k)
        t.expect(rules[k] > 0, "rule " + std::to_string(k) + " not exercised");

    AffineExpr rr = affine_fuse(A("R[1/5,1/3]"), A("R[-1/5,-1/3]")), want;
    want.add(aff::R(wt::zero()), 2);
    want.add(aff::PA(wt::zero()));
    t.expect(rr == want, "R x conj R = " + rr.str());
    AffineExpr lr = affine_fuse(aff::L(), aff::R(wt::zero())), want2;
    want2.add(aff::PA(Weight(-h, -h)));
    t.expect(lr == want2, "L x R[0] = " + lr.str());
    t.note(std::to_string(cases.size()) + " products over rules 1-9 and the unit rule; R x conj R = " +
           rr.str() + "; L x R = " + lr.str());
}

// ------------------------------------------------------------------ 8

void transport(Tally& t)
{
    auto line1 = [](const Rat& s) { return Weight(Rat(-3, 2) + 2 * s, -s); };
    auto line2 = [](const Rat& s) { return Weight(-h - s, -h + 2 * s); };
    auto line3 = [](const Rat& s) { return Weight(Rat(-3, 2) + s, s); };
    std::vector<CosetLabel> cosets;
    for (const Rat& s : {Rat(1, 5), Rat(2, 7), Rat(-3, 8), Rat(5, 6)})
        for (const auto& l : {line1(s), line2(s), line3(s)})
            cosets.push_back({CosetFamily::P16, l});
    for (const auto& shift : {wt::zero(), alpha(1), alpha(2) - alpha(1), Rat(2) * alpha(3)}) {
        cosets.push_back({CosetFamily::P24, Weight(-h, -h) + shift});
        cosets.push_back({CosetFamily::P24bar, Weight(h, h) + shift});
        cosets.push_back({CosetFamily::P48, shift});
    }
    for (const auto& c : cosets)
        t.expect(coset_loewy(c) == coset_loewy_fixture(c), "coset diagram " + c.str());

    int affine = 0;
    for (const std::string tw : {"", "w2*", "w1w2*"})
        for (const char* p : {"PE[-11/10,-1/5]", "PE[-13/14,-2/7]", "PE[-3/4,-3/8]"}) {
            AffineLabel a = A(tw + p);
            t.expect(affine_loewy(a) == affine_loewy_fixture(a), "affine diagram " + a.str());
            ++affine;
        }
    for (const char* p : {"PA[0,0]", "PA[-1/2,-1/2]", "c*PA[-1/2,-1/2]", "sf(1,2)*PA[0,0]",
                          "sf(-1,0)*c*PA[-1/2,-1/2]", "sf(0,1)*PE[-11/10,-1/5]"}) {
        AffineLabel a = A(p);
        t.expect(affine_loewy(a) == affine_loewy_fixture(a), "affine diagram " + a.str());
        ++affine;
    }

    // seven distinct factors of the P24 cover, via the affine map
    const Weight l = Weight(-h, -h) + alpha(1) - Rat(2) * alpha(2);
    const Weight mu = phi(l) + rho();
    const std::vector<ModuleLabel> quantum = {
        L_label(mu), L_label(mu + alpha(2)), L_label(mu - alpha(2)),
        L_label(mu + alpha(2) - Rat(2) * alpha(3)), L_label(mu + alpha(3)),
        L_label(mu + Rat(2) * alpha(2) - alpha(3)), L_label(mu - alpha(3))};
    const std::vector<CosetLabel> printed = {
        {CosetFamily::I3, l},
        {CosetFamily::I1, l + Rat(3, 2) * rho()},
        {CosetFamily::I1, l - Rat(3, 2) * omega(3)},
        {CosetFamily::I1, l + Rat(3, 2) * omega(3)},
        {CosetFamily::I3bar, l + Rat(3) * omega(1)},
        {CosetFamily::I3bar, l},
        {CosetFamily::I3bar, l + Rat(3) * omega(2)}};
    std::set<CosetLabel> distinct, image, printed_set(printed.begin(), printed.end());
    for (const auto& layer : coset_loewy({CosetFamily::P24, l}).layers)
        for (const auto& [c, k] : layer)
            distinct.insert(c);
    for (const auto& q : quantum)
        image.insert(from_quantum(q));
    t.expect(distinct.size() == 7, "P24 has " + std::to_string(distinct.size()) + " distinct factors");
    t.expect(image == distinct, "quantum factors do not map onto the P24 factors");
    t.expect(printed_set == distinct, "printed coset factors differ from the transported ones");
    int order_swaps = 0;
    for (std::size_t k = 0; k < quantum.size(); ++k)
        order_swaps += from_quantum(quantum[k]) != printed[k];
    t.expect(phi_inv(alpha(1)) == Rat(-3, 2) * omega(3) && phi_inv(alpha(2)) == Rat(3, 2) * omega(2) &&
                 phi_inv(alpha(3)) == Rat(3, 2) * omega(1),
             "inverse images of the simple roots");

    // Fock shift for the semirelaxed covers
    t.expect(Rat(3, 2) * omega(2) - alpha(2) == h * alpha(1), "3/2 omega2 - alpha2 = alpha1/2");
    for (const Rat& s : {Rat(1, 5), Rat(2, 7), Rat(-3, 8)}) {
        const Weight x = line1(s);
        t.expect(induce({CosetFamily::I4, x + Rat(3, 2) * omega(2)}, x) ==
                     aff::sf(omega(2), aff::E(x + h * alpha(1))),
                 "E cover, + shift at " + x.str());
        t.expect(induce({CosetFamily::I4, x - Rat(3, 2) * omega(2)}, x) ==
                     aff::sf(-omega(2), aff::E(x - h * alpha(1))),
                 "E cover, - shift at " + x.str());
    }
    t.note(std::to_string(cosets.size()) + " coset and " + std::to_string(affine) +
           " affine diagrams; P24 list as a set, " + std::to_string(order_swaps) +
           " printed entries paired in swapped order");
}

// ------------------------------------------------------------------ 9

OctLabel conj_label(const OctLabel& l)
{
    OctFamily f = l.family;
    if (f == OctFamily::W3)
        f = OctFamily::W3bar;
    else if (f == OctFamily::W3bar)
        f = OctFamily::W3;
    return make_oct(f, -l.cls);
}

void octuplet(Tally& t)
{
    const auto rows = octuplet_table();
    const auto& printed = octuplet_table_printed();
    t.expect(rows.size() == 12 && printed.size() == 12, "table has 12 rows");
    std::map<OctLabel, OctRow> by_label;
    for (const auto& r : rows)
        by_label[r.label] = r;
    int misprints = 0;
    for (std::size_t k = 0; k < rows.size() && k < printed.size(); ++k) {
        const OctRow& c = rows[k];
        const OctRow& p = printed[k];
        t.expect(c.label == p.label && c.top_dim == p.top_dim && c.top_weights == p.top_weights,
                 c.label.str() + ": label, dimension or weights");
        // conformal weights are invariant under conjugation
        const OctRow& cc = by_label.at(conj_label(c.label));
        t.expect(cc.conformal_weight == c.conformal_weight && cc.top_dim == c.top_dim,
                 c.label.str() + ": not conjugation invariant");
        if (c.conformal_weight != p.conformal_weight) {
            ++misprints;
            const OctRow& pc = printed[static_cast<std::size_t>(
                std::find_if(printed.begin(), printed.end(),
                             [&](const OctRow& r) { return r.label == conj_label(c.label); }) -
                printed.begin())];
            t.expect(pc.conformal_weight != p.conformal_weight && pc.conformal_weight == c.conformal_weight,
                     c.label.str() + ": printed h " + to_string(p.conformal_weight) + " vs " +
                         to_string(c.conformal_weight));
        }
    }
    t.expect(misprints <= 2, "more than the two printed W3bar conformal weights differ");

    const auto orbits = octuplet_orbits();
    const auto& porbits = octuplet_orbits_printed();
    int orbit_diff = 0;
    for (std::size_t i = 0; i < orbits.size(); ++i) {
        for (std::size_t k = 0; k + 1 < orbits[i].size(); ++k) {
            auto next = octuplet_fuse(orbits[i][k], make_oct(OctFamily::W1, rho()));
            t.expect(next.size() == 1 && next.terms.begin()->first == orbits[i][k + 1],
                     "orbit step from " + orbits[i][k].str());
        }
        for (std::size_t k = 0; k < orbits[i].size(); ++k)
            if (!(orbits[i][k] == porbits[i][k]))
                ++orbit_diff;
    }
    t.expect(orbit_diff <= 1, "orbits differ from the printed ones beyond the W8 closing entry");

    for (const auto& r : octuplet_rules_printed())
        t.expect(octuplet_fuse(r.left, r.right) == r.result, r.left.str() + " x " + r.right.str());
    for (const char* s : {"Q9[3/2,3/2]", "Q9bar[3/2,3/2]", "P24[3/2,3/2]", "P24bar[3/2,3/2]", "P48[0,0]",
                          "P48[1,1]", "P48[-1,-1]", "P24[-1/2,-1/2]", "Q9[1/2,1/2]", "P24bar[1/2,1/2]"}) {
        OctLabel l = parse_oct_label(s);
        t.expect(octuplet_loewy(l) == octuplet_loewy_fixture(l), std::string("diagram ") + s);
    }
    int bad = 0;
    for (const auto& a : octuplet_irreducibles())
        for (const auto& b : octuplet_irreducibles()) {
            OctExpr g = octuplet_fuse(a, b, FusionLevel::grothendieck);
            bad += !(g == octuplet_fuse(b, a, FusionLevel::grothendieck));
            const Weight want = make_oct(OctFamily::W1, oct_grade(a) + oct_grade(b)).cls;
            for (const auto& [x, k] : g.terms)
                bad += !(oct_grade(x) == want);
        }
    t.expect(bad == 0, "Z3 grading or commutativity violated");
    t.note("12 rows (" + std::to_string(misprints) +
           " printed W3bar conformal weights break conjugation symmetry; computed values used), " +
           std::to_string(orbit_diff) + " printed orbit entry differs (W8 orbit closing on W1), 6 rules, 10 diagrams");
}

// ------------------------------------------------------------------ 10

void qseries(Tally& t)
{
    const int order = 50;
    std::vector<mpz_class> p(order, 0), sq(order, 0);
    p[0] = 1;
    for (int part = 1; part < order; ++part)
        for (int m = part; m < order; ++m)
            p[m] += p[m - part];
    for (int i = 0; i < order; ++i)
        for (int j = 0; i + j < order; ++j)
            sq[i + j] += p[i] * p[j];
    QSeries s = eta_inv_sq(order);
    t.expect(s.lead == Rat(-1, 12) && s.coeffs == sq, "1/eta^2 to order 50");

    const Weight mu(Rat(1, 5), Rat(2, 7));
    const auto window = lattice_window(mu, 3);
    for (const Weight& w : {wt::zero(), omega(1), omega(2), rho(), omega(1) - Rat(2) * omega(2)}) {
        CharIdentityReport r = standard_char_identity(mu, w, 20, window);
        t.expect(r.match && r.compared == static_cast<int>(window.size()),
                 "flowed relaxed character at omega = " + w.str() + ": " + r.str());
    }

    std::mt19937 rng(1010);
    std::uniform_int_distribution<int> d(-40, 40), den(1, 7);
    for (int k = 0; k < 100; ++k) {
        Weight l(Rat(d(rng), den(rng)), Rat(d(rng), den(rng)));
        Weight m(Rat(d(rng), den(rng)), Rat(d(rng), den(rng)));
        Rat closed = killing(l - m, l + m) / 3 - h;
        t.expect(series_delta(l, m) == closed && delta(l, m) == closed,
                 "conformal weight of I8" + l.str() + " (x) F" + m.str());
    }
    t.note("order 50 partition oracle, 5 flows on a " + std::to_string(window.size()) +
           "-point window to q^20, 100 random pairs");
}

} // namespace

int main(int argc, char** argv)
{
    // optional criterion numbers restrict the run
    std::set<int> only;
    for (int k = 1; k < argc; ++k)
        only.insert(std::atoi(argv[k]));
    const std::vector<std::pair<const char*, Criterion>> criteria = {
        {"irreducible dimensions and characters", irreducibles},
        {"Verma Loewy structure", vermas},
        {"self-duality and character rigidity", duality},
        {"projective characters as Verma sums", bgg},
        {"tensor product sweep", tensors},
        {"projective Loewy diagrams", projective_diagrams},
        {"Grothendieck fusion rules", grothendieck},
        {"transported diagrams", transport},
        {"octuplet data", octuplet},
        {"q-series", qseries},
    };
    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k)
        if (only.empty() || only.count(static_cast<int>(k + 1)))
            failed += !run(static_cast<int>(k + 1), criteria[k].first, criteria[k].second);
    std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria fail") << "\n";
    return failed == 0 ? 0 : 1;
}
