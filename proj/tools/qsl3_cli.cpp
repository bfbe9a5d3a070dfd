// Command-line frontend for the qsl3 library.
#include "qsl3/algebra.hpp"
#include "qsl3/errors.hpp"
#include "qsl3/kl.hpp"
#include "qsl3/octuplet.hpp"
#include "qsl3/qseries.hpp"
#include "qsl3/repmod.hpp"
#include "qsl3/rules.hpp"
#include "qsl3/structure.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <functional>
#include <iostream>
#include <sstream>

using namespace qsl3;
using nlohmann::json;

namespace {

enum class Format { text, json, dot };

struct Out {
    Format format = Format::text;
    std::string command;
    json result = json::object();
    std::string text;
    bool ok = true;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json expr_json(const DecompositionExpr& e)
{
    json a = json::array();
    for (const auto& [l, k] : e.terms)
        a.push_back({{"label", l.str()}, {"mult", k}});
    return a;
}

template <class Expr>
json terms_json(const Expr& e)
{
    json a = json::array();
    for (const auto& [l, k] : e.terms)
        a.push_back({{"label", l.str()}, {"mult", k}});
    return a;
}

template <class Label>
json layers_json(const LayeredLabels<Label>& d)
{
    json layers = json::array();
    for (const auto& layer : d.layers) {
        json nodes = json::array();
        for (const auto& [l, k] : layer)
            nodes.push_back({{"label", l.str()}, {"mult", k}});
        layers.push_back(nodes);
    }
    return {{"layers", layers}, {"arrows", json::array()}};
}

template <class Label>
std::string layers_dot(const LayeredLabels<Label>& d, const std::string& title)
{
    std::ostringstream os;
    os << "digraph \"" << title << "\" {\n  rankdir=TB;\n  node [shape=plaintext];\n";
    for (std::size_t j = 0; j < d.layers.size(); ++j) {
        os << "  { rank=same;";
        int k = 0;
        for (const auto& [l, m] : d.layers[j]) {
            os << " n" << j << "_" << k++ << " [label=\"" << l.str();
            if (m > 1)
                os << " x" << m;
            os << "\"];";
        }
        os << " }\n";
    }
    os << "}\n";
    return os.str();
}

json loewy_json(const LoewyDiagram& d)
{
    return json::parse(d.to_json());
}

json character_json(const Character& c)
{
    json a = json::array();
    for (const auto& [w, m] : c.terms())
        a.push_back({{"weight", w.str()}, {"mult", m}});
    return a;
}

json qseries_json(const QSeries& s)
{
    json c = json::array();
    for (const auto& x : s.coeffs)
        c.push_back(x.get_str());
    return {{"lead", to_string(s.lead)}, {"order", s.order()}, {"coeffs", c}};
}

std::string module_dump(const WeightModule& V)
{
    std::ostringstream os;
    os << "dim " << V.dim() << ", field Q(zeta_" << V.field()->N << ")\n";
    for (int k = 0; k < V.num_weights(); ++k)
        os << "  weight " << V.weight(k).str() << " dim " << V.wdim(k) << "\n";
    for (Gen g : {X1, X2, Xm1, Xm2}) {
        os << gen_name(g) << ":\n";
        for (int k = 0; k < V.num_weights(); ++k) {
            const auto& b = V.block(g, k);
            if (b.tgt < 0 || b.m.is_zero())
                continue;
            os << "  " << V.weight(k).str() << " -> " << V.weight(b.tgt).str() << ":";
            for (int i = 0; i < b.m.rows(); ++i) {
                os << " [";
                for (int j = 0; j < b.m.cols(); ++j)
                    os << (j ? ", " : "") << b.m(i, j).str();
                os << "]";
            }
            os << "\n";
        }
    }
    return os.str();
}

// ------------------------------------------------------------------ sampling

/// A generic point E[mu] on the default semirelaxed line, parameter t (not in Z/2).
AffineLabel sample_E(const Rat& t)
{
    return aff::E(Weight(Rat(-3, 2) + 2 * t, -t));
}

Rat sample_param(int k, int salt)
{
    return Rat(2 * k + 1 + salt, 4 * k + 7 + 3 * salt);
}

std::pair<AffineLabel, AffineLabel> rule_sample(int rule, int k)
{
    const Rat s = sample_param(k, 0), t = sample_param(k, 1), u = sample_param(k, 2);
    const AffineLabel R1 = aff::R(Weight(s, t)), R2 = aff::R(Weight(u, -s));
    switch (rule) {
    case 1:
        return {aff::L(), aff::L()};
    case 2:
        return {aff::L(), aff::Lbar()};
    case 3:
        return {aff::L(), sample_E(s)};
    case 4:
        return {aff::L(), R1};
    case 5:
        return {sample_E(s), sample_E(t)};
    case 6:
        return {sample_E(s), weyl2(sample_E(t))};
    case 7:
        return {sample_E(s), aff::E(sample_E(t).weight, WeylTwist::w1w2)};
    case 8:
        return {sample_E(s), R1};
    case 9:
        return {R1, R2};
    default:
        throw UsageError("--rule must be in 1..9");
    }
}

// ------------------------------------------------------------------ commands

void cmd_classify(Out& out, const std::string& w)
{
    Weight l = parse_weight(w);
    TypicalityClass c = classify(l);
    auto idx = indices(l);
    std::ostringstream os;
    os << c.name() << "; indices (" << to_string(idx[0]) << "," << to_string(idx[1]) << ","
       << to_string(idx[2]) << "); dim L = " << irrep_dim(l);
    out.text = os.str();
    out.result = {{"weight", l.str()},
                  {"class", c.name()},
                  {"degree", c.degree()},
                  {"indices", {to_string(idx[0]), to_string(idx[1]), to_string(idx[2])}},
                  {"dim", irrep_dim(l)}};
}

void cmd_char(Out& out, const std::string& label)
{
    ModuleLabel m = parse_label(label);
    Character ch = static_char(m);
    out.text = m.str() + ": " + ch.str();
    out.result = {{"label", m.str()}, {"dim", ch.dim()}, {"character", character_json(ch)}};
}

void cmd_module(Out& out, const std::string& w, bool irr, bool dump)
{
    Weight l = parse_weight(w);
    WeightModule V = irr ? irreducible(l) : verma(l);
    RelationReport rel = verify_relations(V);
    out.ok = rel.ok();
    out.text = std::string(irr ? "L" : "M") + l.str() + ": dim " + std::to_string(V.dim()) +
               "; relations " + (rel.ok() ? "ok" : "FAILED") + "\n" + V.character().str();
    if (dump)
        out.text += "\n" + module_dump(V);
    out.result = {{"weight", l.str()},
                  {"module", irr ? "irreducible" : "verma"},
                  {"dim", V.dim()},
                  {"field_order", V.field()->N},
                  {"relations_ok", rel.ok()},
                  {"character", character_json(V.character())}};
}

void cmd_tensor(Out& out, const std::string& left, const std::string& right, bool verify)
{
    ModuleLabel a = parse_label(left), b = parse_label(right);
    DecompositionExpr e = tensor_rule(a, b);
    out.text = a.str() + " (x) " + b.str() + " = " + e.str();
    out.result = {{"left", a.str()}, {"right", b.str()}, {"decomposition", expr_json(e)}};
    if (verify) {
        WeightModule T = tensor_action(reference_module(a), reference_module(b));
        Certificate c = check_decomposition(T, e, reference_constructor());
        out.ok = c.ok();
        out.text += "\n" + c.str();
        out.result["verified"] = c.ok();
        if (!c.ok())
            out.result["failing"] = c.failing;
    }
}

void cmd_loewy(Out& out, const std::string& label, bool computed)
{
    ModuleLabel m = parse_label(label);
    LoewyDiagram d = computed ? loewy(reference_module(m)) : static_loewy(m);
    if (computed) {
        LoewyDiagram s = static_loewy(m);
        out.ok = d.layer_exprs() == s.layer_exprs();
    }
    out.text = out.format == Format::dot ? d.to_dot(m.str()) : d.str();
    out.result = loewy_json(d);
    out.result["label"] = m.str();
    out.result["computed"] = computed;
}

void cmd_kl(Out& out, const std::string& dir, const std::string& label)
{
    if (dir == "to-quantum") {
        CosetLabel c = parse_coset_label(label);
        ModuleLabel q = to_quantum(c);
        out.text = c.str() + " -> " + q.str();
        out.result = {{"coset", c.str()}, {"quantum", q.str()}};
    } else if (dir == "from-quantum") {
        ModuleLabel q = parse_label(label);
        CosetLabel c = from_quantum(q);
        out.text = q.str() + " -> " + c.str();
        out.result = {{"quantum", q.str()}, {"coset", c.str()}};
    } else if (dir == "coset-loewy") {
        CosetLabel c = parse_coset_label(label);
        CosetDiagram d = coset_loewy(c);
        out.text = out.format == Format::dot ? layers_dot(d, c.str()) : str(d);
        out.result = layers_json(d);
        out.result["label"] = c.str();
    } else if (dir == "affine-loewy") {
        AffineLabel a = parse_affine_label(label);
        AffineDiagram d = affine_loewy(a);
        out.text = out.format == Format::dot ? layers_dot(d, a.str()) : str(d);
        out.result = layers_json(d);
        out.result["label"] = a.str();
    } else if (dir == "restrict") {
        AffineLabel a = parse_affine_label(label);
        Restriction r = restrict_label(a);
        out.text = a.str() + " = (+) over Q of " + r.coset.str() + " (x) F" + r.fock.str();
        out.result = {{"affine", a.str()}, {"coset", r.coset.str()}, {"fock", r.fock.str()}};
    } else {
        throw UsageError("unknown kl direction '" + dir + "'");
    }
}

void cmd_induce(Out& out, const std::string& coset, const std::string& fock)
{
    CosetLabel c = parse_coset_label(coset);
    Weight f = parse_weight(fock);
    AffineLabel a = induce(c, f);
    out.text = c.str() + " (x) F" + f.str() + " -> " + a.str();
    out.result = {{"coset", c.str()}, {"fock", f.str()}, {"affine", a.str()}};
}

FusionLevel parse_level(const std::string& s)
{
    if (s == "full")
        return FusionLevel::full;
    if (s == "grothendieck")
        return FusionLevel::grothendieck;
    throw UsageError("--level must be grothendieck or full");
}

void cmd_fuse(Out& out, const std::string& left, const std::string& right, const std::string& lvl)
{
    AffineLabel a = parse_affine_label(left), b = parse_affine_label(right);
    FusionResult r = affine_fuse_report(a, b, parse_level(lvl));
    out.text = a.str() + " x " + b.str() + " = " + r.sum.str();
    for (const auto& f : r.fallbacks)
        out.text += "\n  character fallback: " + f;
    out.result = {{"left", a.str()},
                  {"right", b.str()},
                  {"level", lvl},
                  {"sum", terms_json(r.sum)},
                  {"fallbacks", r.fallbacks}};
}

json report_json(const GrothendieckReport& r)
{
    return {{"rule", r.rule},
            {"rule_text", r.rule_text},
            {"twist", r.twist_text},
            {"match", r.match},
            {"lhs", terms_json(r.lhs)},
            {"rhs", terms_json(r.rhs)},
            {"only_lhs", terms_json(r.only_lhs)},
            {"only_rhs", terms_json(r.only_rhs)},
            {"fallbacks", r.fallbacks}};
}

void cmd_gfuse_check(Out& out, int rule, int samples, const std::string& left,
                     const std::string& right)
{
    std::vector<std::pair<AffineLabel, AffineLabel>> cases;
    if (!left.empty() || !right.empty()) {
        if (left.empty() || right.empty())
            throw UsageError("--left and --right go together");
        cases.emplace_back(parse_affine_label(left), parse_affine_label(right));
    } else {
        if (rule == 0)
            throw UsageError("give --rule or --left/--right");
        for (int k = 0; k < samples; ++k)
            cases.push_back(rule_sample(rule, k));
    }
    json reports = json::array();
    std::ostringstream os;
    for (const auto& [a, b] : cases) {
        GrothendieckReport r = grothendieck_check(a, b);
        out.ok = out.ok && r.match;
        os << a.str() << " x " << b.str() << ": " << r.str() << "\n";
        json j = report_json(r);
        j["left"] = a.str();
        j["right"] = b.str();
        reports.push_back(j);
    }
    out.text = os.str();
    out.result = {{"reports", reports}};
}

void cmd_octuplet(Out& out, const std::string& what, const std::string& left,
                  const std::string& right, const std::string& label, const std::string& lvl)
{
    if (what == "table") {
        std::ostringstream os;
        json rows = json::array();
        for (const auto& r : octuplet_table()) {
            os << r.label.str() << "  dim " << r.top_dim << "  h " << to_string(r.conformal_weight)
               << "  top";
            json ws = json::array();
            for (const auto& w : r.top_weights) {
                os << " " << w.str();
                ws.push_back(w.str());
            }
            os << "\n";
            rows.push_back({{"label", r.label.str()},
                            {"top_dim", r.top_dim},
                            {"top_weights", ws},
                            {"conformal_weight", to_string(r.conformal_weight)}});
        }
        out.text = os.str();
        out.result = {{"rows", rows}};
    } else if (what == "fuse") {
        OctLabel a = parse_oct_label(left), b = parse_oct_label(right);
        OctExpr e = octuplet_fuse(a, b, parse_level(lvl));
        out.text = a.str() + " x " + b.str() + " = " + e.str();
        out.result = {{"left", a.str()}, {"right", b.str()}, {"level", lvl}, {"sum", terms_json(e)}};
    } else if (what == "loewy") {
        OctLabel l = parse_oct_label(label);
        OctDiagram d = octuplet_loewy(l);
        out.text = out.format == Format::dot ? layers_dot(d, l.str()) : str(d);
        out.result = layers_json(d);
        out.result["label"] = l.str();
    } else if (what == "orbits") {
        std::ostringstream os;
        json orbits = json::array();
        for (const auto& o : octuplet_orbits()) {
            json labels = json::array();
            for (std::size_t k = 0; k < o.size(); ++k) {
                os << (k ? " -> " : "") << o[k].str();
                labels.push_back(o[k].str());
            }
            os << "\n";
            orbits.push_back(labels);
        }
        out.text = os.str();
        out.result = {{"orbits", orbits}};
    } else {
        throw UsageError("unknown octuplet command '" + what + "'");
    }
}

void cmd_qchar(Out& out, const std::string& family, const std::string& w, int order)
{
    Weight l = parse_weight(w);
    if (order < 1)
        throw UsageError("--order must be positive");
    QSeries s;
    std::string name;
    if (family == "8") {
        s = coset8_char(l, order);
        name = "ch I8" + l.str();
        out.text = name + " = " + s.str(order);
    } else if (family == "fock") {
        FockChar f = fock_char(l, order);
        s = f.q;
        name = "ch F" + l.str();
        out.text = name + " = z^" + f.z.str() + " " + s.str(order);
    } else if (family == "eta") {
        s = eta_inv_sq(order);
        name = "1/eta^2";
        out.text = name + " = " + s.str(order);
    } else {
        throw UsageError("--family must be 8, fock or eta");
    }
    out.result = qseries_json(s);
    out.result["name"] = name;
}

// ------------------------------------------------------------------ selftest

struct SuiteResult {
    int pass = 0, fail = 0;
    std::vector<std::string> failures;
    void check(bool ok, const std::string& what)
    {
        if (ok) {
            ++pass;
        } else {
            ++fail;
            failures.push_back(what);
        }
    }
};

std::vector<Weight> class_samples()
{
    const Rat h(1, 2);
    return {Weight(Rat(1, 3), Rat(2, 5)), Weight(0, Rat(1, 3)),   Weight(Rat(1, 3), 0),
            Weight(Rat(1, 3), Rat(-4, 3)), Weight(0, h),          Weight(h, 0),
            Weight(0, 0),                  Weight(1, 0),          Weight(h - 1, h - 1),
            Weight(h, h),                  Weight(2, 1)};
}

SuiteResult suite_irreps()
{
    SuiteResult r;
    for (const auto& l : class_samples()) {
        WeightModule V = irreducible(l);
        r.check(V.dim() == irrep_dim(l) && V.character() == irrep_char(l), "L" + l.str());
    }
    return r;
}

SuiteResult suite_verma_loewy()
{
    SuiteResult r;
    for (const auto& l : class_samples()) {
        LoewyDiagram d = loewy(verma(l), false);
        LoewyDiagram s = static_loewy(make_label(Family::M, l));
        r.check(d.layer_exprs() == s.layer_exprs(), "M" + l.str());
    }
    return r;
}

SuiteResult suite_tensor()
{
    SuiteResult r;
    const auto ws = class_samples();
    for (std::size_t i = 0; i < ws.size(); i += 3)
        for (std::size_t j = i; j < ws.size(); j += 4) {
            ModuleLabel a = L_label(ws[i]), b = L_label(ws[j]);
            if (a.dim * b.dim > 32)
                continue;
            try {
                DecompositionExpr e = tensor_rule(a, b);
                WeightModule T = tensor_action(irreducible(ws[i]), irreducible(ws[j]));
                r.check(check_decomposition(T, e, reference_constructor()).ok(),
                        a.str() + " x " + b.str());
            } catch (const UnsupportedCase&) {
                // outside the tabulated rules
            }
        }
    return r;
}

SuiteResult suite_kl()
{
    SuiteResult r;
    for (int rule = 1; rule <= 9; ++rule)
        for (int k = 0; k < 2; ++k) {
            auto [a, b] = rule_sample(rule, k);
            r.check(grothendieck_check(a, b).match, "rule " + std::to_string(rule));
        }
    return r;
}

SuiteResult suite_octuplet()
{
    SuiteResult r;
    for (const auto& rule : octuplet_rules_printed())
        r.check(octuplet_fuse(rule.left, rule.right) == rule.result,
                rule.left.str() + " x " + rule.right.str());
    for (const auto& l : {"Q9[3/2,3/2]", "P24[3/2,3/2]", "P24bar[3/2,3/2]", "P48[0,0]"}) {
        OctLabel o = parse_oct_label(l);
        r.check(octuplet_loewy(o) == octuplet_loewy_fixture(o), l);
    }
    return r;
}

SuiteResult suite_qseries()
{
    SuiteResult r;
    const Weight mu(Rat(1, 5), Rat(2, 7));
    for (const auto& w : {Weight(), wt::omega(1), wt::omega(2)})
        r.check(standard_char_identity(mu, w, 12, lattice_window(mu, 2)).match,
                "identity at flow " + w.str());
    return r;
}

const std::vector<std::pair<std::string, std::function<SuiteResult()>>>& suites()
{
    static const std::vector<std::pair<std::string, std::function<SuiteResult()>>> s = {
        {"irreps", suite_irreps},   {"verma-loewy", suite_verma_loewy},
        {"tensor", suite_tensor},   {"kl", suite_kl},
        {"octuplet", suite_octuplet}, {"qseries", suite_qseries},
    };
    return s;
}

void cmd_selftest(Out& out, const std::string& suite)
{
    std::ostringstream os;
    json results = json::array();
    bool found = false;
    for (const auto& [name, run] : suites()) {
        if (!suite.empty() && suite != name)
            continue;
        found = true;
        SuiteResult s = run();
        out.ok = out.ok && s.fail == 0;
        os << name << ": " << s.pass << " passed, " << s.fail << " failed\n";
        for (const auto& f : s.failures)
            os << "  FAIL " << f << "\n";
        results.push_back(
            {{"suite", name}, {"pass", s.pass}, {"fail", s.fail}, {"failures", s.failures}});
    }
    if (!found)
        throw UsageError("unknown suite '" + suite + "'");
    out.text = os.str();
    out.result = {{"suites", results}};
}

/// Error envelope in JSON mode, a message on stderr otherwise; returns the exit code.
int fail(const Out& out, const std::string& kind, const std::string& message, int code)
{
    if (out.format == Format::json) {
        json j = {{"command", out.command}, {"ok", false}, {"error", {{"kind", kind}, {"message", message}}}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cerr << (code == 2 ? "usage error: " : "") << message << "\n";
    }
    return code;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact computations for unrolled quantum sl3 at q = i and affine sl3 at level -3/2"};
    app.require_subcommand(1);
    app.fallthrough();
    Out out;
    std::string format = "text";
    app.add_option("--format", format, "Output mode")
        ->check(CLI::IsMember({"text", "json", "dot"}));

    std::string weight, label, left, right, coset, fock, level = "full", suite, family = "8";
    bool dump = false, verify = false, computed = false;
    int rule = 0, samples = 3, order = 10;

    auto* classify_cmd = app.add_subcommand("classify", "Typicality class of a weight");
    classify_cmd->add_option("--weight", weight, "Weight [c1,c2] in the omega basis")->required();

    auto* char_cmd = app.add_subcommand("char", "Character of a labelled module");
    char_cmd->add_option("--label", label, "Module label, e.g. P(24)[1,1/2]")->required();

    auto* verma_cmd = app.add_subcommand("verma", "Build the Verma module");
    verma_cmd->add_option("--weight", weight)->required();
    verma_cmd->add_flag("--dump", dump, "Print generator matrices");
    auto* irrep_cmd = app.add_subcommand("irrep", "Build the irreducible module");
    irrep_cmd->add_option("--weight", weight)->required();
    irrep_cmd->add_flag("--dump", dump, "Print generator matrices");

    auto* tensor_cmd = app.add_subcommand("tensor", "Tensor product decomposition");
    tensor_cmd->add_option("--left", left)->required();
    tensor_cmd->add_option("--right", right)->required();
    tensor_cmd->add_flag("--verify", verify, "Certify against the constructed tensor product");

    auto* loewy_cmd = app.add_subcommand("loewy", "Loewy diagram of a labelled module");
    loewy_cmd->add_option("--label", label)->required();
    loewy_cmd->add_flag("--computed", computed, "Compute from the constructed module");

    std::string kl_dir;
    auto* kl_cmd = app.add_subcommand("kl", "Coset/quantum dictionary and transported diagrams");
    kl_cmd->add_option("direction", kl_dir,
                       "to-quantum | from-quantum | coset-loewy | affine-loewy | restrict")
        ->required();
    kl_cmd->add_option("--label", label)->required();

    auto* induce_cmd = app.add_subcommand("induce", "Induce a coset (x) Fock summand");
    induce_cmd->add_option("--coset", coset)->required();
    induce_cmd->add_option("--fock", fock)->required();

    auto* fuse_cmd = app.add_subcommand("fuse", "Affine fusion via the correspondence");
    fuse_cmd->add_option("--left", left)->required();
    fuse_cmd->add_option("--right", right)->required();
    fuse_cmd->add_option("--level", level)->check(CLI::IsMember({"grothendieck", "full"}));

    auto* gcheck_cmd = app.add_subcommand("gfuse-check", "Check the Grothendieck fusion rules");
    gcheck_cmd->add_option("--rule", rule)->check(CLI::Range(1, 9));
    gcheck_cmd->add_option("--samples", samples)->check(CLI::Range(1, 50));
    gcheck_cmd->add_option("--left", left);
    gcheck_cmd->add_option("--right", right);

    std::string oct_what;
    auto* oct_cmd = app.add_subcommand("octuplet", "Octuplet table, fusion and diagrams");
    oct_cmd->add_option("what", oct_what, "table | fuse | loewy | orbits")->required();
    oct_cmd->add_option("--left", left);
    oct_cmd->add_option("--right", right);
    oct_cmd->add_option("--label", label);
    oct_cmd->add_option("--level", level)->check(CLI::IsMember({"grothendieck", "full"}));

    auto* qchar_cmd = app.add_subcommand("qchar", "Truncated q-series characters");
    qchar_cmd->add_option("--family", family, "8 | fock | eta");
    qchar_cmd->add_option("--weight", weight)->default_val("[0,0]");
    qchar_cmd->add_option("--order", order);

    auto* self_cmd = app.add_subcommand("selftest", "Run built-in consistency suites");
    self_cmd->add_option("--suite", suite,
                         "irreps | verma-loewy | tensor | kl | octuplet | qseries");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    out.format = format == "json" ? Format::json : format == "dot" ? Format::dot : Format::text;
    auto* sub = app.get_subcommands().front();
    out.command = sub->get_name();
    const bool dot_ok = sub == loewy_cmd || (sub == kl_cmd && kl_dir.find("loewy") != std::string::npos) ||
                        (sub == oct_cmd && oct_what == "loewy");
    try {
        if (out.format == Format::dot && !dot_ok)
            throw UsageError("--format dot applies to Loewy diagrams only");
        if (sub == classify_cmd)
            cmd_classify(out, weight);
        else if (sub == char_cmd)
            cmd_char(out, label);
        else if (sub == verma_cmd || sub == irrep_cmd)
            cmd_module(out, weight, sub == irrep_cmd, dump);
        else if (sub == tensor_cmd)
            cmd_tensor(out, left, right, verify);
        else if (sub == loewy_cmd)
            cmd_loewy(out, label, computed);
        else if (sub == kl_cmd)
            cmd_kl(out, kl_dir, label);
        else if (sub == induce_cmd)
            cmd_induce(out, coset, fock);
        else if (sub == fuse_cmd)
            cmd_fuse(out, left, right, level);
        else if (sub == gcheck_cmd)
            cmd_gfuse_check(out, rule, samples, left, right);
        else if (sub == oct_cmd)
            cmd_octuplet(out, oct_what, left, right, label, level);
        else if (sub == qchar_cmd)
            cmd_qchar(out, family, weight, order);
        else if (sub == self_cmd)
            cmd_selftest(out, suite);
    } catch (const UsageError& e) {
        return fail(out, "UsageError", e.what(), 2);
    } catch (const Error& e) {
        const bool usage = dynamic_cast<const ParseError*>(&e) || dynamic_cast<const InvalidCosetWeight*>(&e);
        return fail(out, e.kind(), e.what(), usage ? 2 : 1);
    }

    if (out.format == Format::json) {
        json j = {{"command", out.command}, {"ok", out.ok}, {"result", out.result}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << out.text;
        if (!out.text.empty() && out.text.back() != '\n')
            std::cout << "\n";
    }
    return out.ok ? 0 : 1;
}
