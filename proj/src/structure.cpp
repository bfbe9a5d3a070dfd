#include "qsl3/structure.hpp"

#include "qsl3/algebra.hpp"
#include "qsl3/errors.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>
#include <sstream>

namespace qsl3 {

namespace {

Vec flatten(const Mat& m)
{
    Vec v;
    v.reserve(static_cast<std::size_t>(m.rows()) * m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            v.push_back(m(i, j));
    return v;
}

Mat unflatten(const CycField* f, const Vec& v, int n)
{
    Mat m(f, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m(i, j) = v[static_cast<std::size_t>(i) * n + j];
    return m;
}

GradedSubspace graded_from_dense(const WeightModule& V, const std::vector<Vec>& vecs)
{
    GradedSubspace s = GradedSubspace::zero(V);
    for (const auto& v : vecs)
        for (int k = 0; k < V.num_weights(); ++k) {
            Vec part(v.begin() + V.offset(k), v.begin() + V.offset(k) + V.wdim(k));
            s.parts[k].add(part);
        }
    return s;
}

/// Candidate highest weights of simple constituents of V.
std::vector<Weight> candidate_weights(const WeightModule& V)
{
    Character ch = V.character();
    std::vector<Weight> out;
    for (int k = 0; k < V.num_weights(); ++k)
        if (ch.contains(irrep_char(V.weight(k))))
            out.push_back(V.weight(k));
    return out;
}

} // namespace

std::vector<Mat> acting_radical(const WeightModule& V)
{
    const CycField* f = V.field();
    const int n = V.dim();
    std::vector<Mat> gens = {V.dense(X1), V.dense(X2), V.dense(Xm1), V.dense(Xm2)};
    for (int j = 1; j <= 2; ++j) {
        Mat h(f, n, n), kk(f, n, n);
        for (int k = 0; k < V.num_weights(); ++k)
            for (int t = 0; t < V.wdim(k); ++t) {
                h(V.offset(k) + t, V.offset(k) + t) = CycNum(f, pair_alpha(V.weight(k), j));
                kk(V.offset(k) + t, V.offset(k) + t) = k_value(j, V.weight(k), f);
            }
        gens.push_back(h);
        gens.push_back(kk);
    }
    Subspace span(f, n * n);
    std::vector<Mat> basis;
    std::deque<int> queue;
    Mat id = Mat::identity(f, n);
    span.add(flatten(id));
    basis.push_back(id);
    queue.push_back(0);
    while (!queue.empty()) {
        int b = queue.front();
        queue.pop_front();
        for (const auto& g : gens) {
            Mat p = g * basis[b];
            if (span.add(flatten(p))) {
                basis.push_back(p);
                queue.push_back(static_cast<int>(basis.size()) - 1);
            }
        }
    }
    const int d = static_cast<int>(basis.size());
    Mat T(f, d, d);
    for (int a = 0; a < d; ++a)
        for (int b = a; b < d; ++b) {
            CycNum t(f);
            for (int i = 0; i < n; ++i)
                for (int k = 0; k < n; ++k)
                    t.add_mul(basis[a](i, k), basis[b](k, i));
            T(a, b) = t;
            T(b, a) = t;
        }
    Mat K = kernel(T);
    std::vector<Mat> rad;
    for (int c = 0; c < K.cols(); ++c) {
        Vec acc = zero_vec(f, n * n);
        for (int a = 0; a < d; ++a) {
            if (K(a, c).is_zero())
                continue;
            Vec fa = flatten(basis[a]);
            for (int t = 0; t < n * n; ++t)
                acc[t].add_mul(K(a, c), fa[t]);
        }
        rad.push_back(unflatten(f, acc, n));
    }
    return rad;
}

std::vector<GradedSubspace> acting_radical_series(const WeightModule& V)
{
    auto J = acting_radical(V);
    const CycField* f = V.field();
    std::vector<GradedSubspace> out{GradedSubspace::full(V)};
    std::vector<Vec> cur;
    for (int t = 0; t < V.dim(); ++t) {
        Vec e = zero_vec(f, V.dim());
        e[t] = CycNum(f, Rat(1));
        cur.push_back(e);
    }
    while (out.back().dim() > 0) {
        Subspace next(f, V.dim());
        for (const auto& x : J)
            for (const auto& v : cur)
                next.add(x.apply(v));
        cur = next.basis();
        out.push_back(graded_from_dense(V, cur));
        if (out.size() > static_cast<std::size_t>(V.dim()) + 2)
            throw InternalInconsistency("acting radical is not nilpotent");
    }
    return out;
}

GradedSubspace radical(const WeightModule& V)
{
    GradedSubspace r = GradedSubspace::full(V);
    for (const auto& w : candidate_weights(V)) {
        WeightModule L = irreducible(w, V.field()->N);
        for (const auto& h : hom_space(V, L))
            r = r.intersect(kernel_of(V, L, h));
    }
    return r;
}

GradedSubspace socle(const WeightModule& V)
{
    GradedSubspace s = GradedSubspace::zero(V);
    for (const auto& w : candidate_weights(V)) {
        WeightModule L = irreducible(w, V.field()->N);
        for (const auto& h : hom_space(L, V))
            s = s.sum(image(L, V, h));
    }
    return s;
}

std::vector<GradedSubspace> series(const WeightModule& V, SeriesKind kind)
{
    std::vector<GradedSubspace> out;
    if (kind == SeriesKind::radical) {
        out.push_back(GradedSubspace::full(V));
        while (out.back().dim() > 0) {
            const GradedSubspace& cur = out.back();
            WeightModule sub = submodule(V, cur);
            GradedSubspace r = radical(sub);
            if (r.dim() == cur.dim())
                throw InternalInconsistency("radical did not shrink");
            out.push_back(push_forward(V, cur, sub, r));
        }
    } else {
        out.push_back(GradedSubspace::zero(V));
        while (out.back().dim() < V.dim()) {
            const GradedSubspace& cur = out.back();
            Quotient q = quotient(V, cur);
            GradedSubspace s = socle(q.module);
            if (s.dim() == 0)
                throw InternalInconsistency("socle of a nonzero module vanished");
            out.push_back(preimage(V, cur, q, s));
        }
    }
    return out;
}

DecompositionExpr decompose_semisimple(Character ch)
{
    DecompositionExpr e;
    while (!ch.empty()) {
        Weight top = ch.terms().begin()->first;
        for (const auto& kv : ch.terms())
            if (weight_order(kv.first, top))
                top = kv.first;
        Character lc = irrep_char(top);
        if (!ch.contains(lc))
            throw InternalInconsistency("character does not decompose into irreducibles at " +
                                        top.str());
        ch.subtract(lc);
        e.add(L_label(top));
    }
    return e;
}

std::vector<DecompositionExpr> layers_of(const WeightModule& V,
                                         const std::vector<GradedSubspace>& filt)
{
    std::vector<DecompositionExpr> out;
    for (std::size_t j = 0; j + 1 < filt.size(); ++j) {
        const GradedSubspace& big = filt[j].dim() >= filt[j + 1].dim() ? filt[j] : filt[j + 1];
        const GradedSubspace& small = filt[j].dim() >= filt[j + 1].dim() ? filt[j + 1] : filt[j];
        Character c = big.character(V);
        c.subtract(small.character(V));
        out.push_back(decompose_semisimple(c));
    }
    return out;
}

DecompositionExpr composition_factors(const WeightModule& V)
{
    DecompositionExpr e;
    for (const auto& layer : layers_of(V, series(V, SeriesKind::radical)))
        for (const auto& [l, m] : layer.terms)
            e.add(l, m);
    return e;
}

const char* tag_name(ArrowTag t)
{
    switch (t) {
    case ArrowTag::standard:
        return "standard";
    case ArrowTag::costandard:
        return "costandard";
    case ArrowTag::other:
        return "other";
    case ArrowTag::unresolved:
        return "unresolved";
    }
    return "?";
}

bool operator<(const LoewyArrow& a, const LoewyArrow& b)
{
    if (a.layer != b.layer)
        return a.layer < b.layer;
    if (a.from != b.from)
        return a.from < b.from;
    return a.to < b.to;
}

std::vector<DecompositionExpr> LoewyDiagram::layer_exprs() const
{
    std::vector<DecompositionExpr> out;
    for (const auto& layer : layers) {
        DecompositionExpr e;
        for (const auto& n : layer)
            e.add(n.label, n.mult);
        out.push_back(e);
    }
    return out;
}

DecompositionExpr LoewyDiagram::factors() const
{
    DecompositionExpr e;
    for (const auto& layer : layers)
        for (const auto& n : layer)
            e.add(n.label, n.mult);
    return e;
}

bool LoewyDiagram::collapsed(int layer, const ModuleLabel& l) const
{
    for (const auto& n : layers[layer])
        if (n.label == l)
            return n.mult > 1;
    return false;
}

std::string LoewyDiagram::str() const
{
    std::ostringstream os;
    for (std::size_t j = 0; j < layers.size(); ++j) {
        os << "layer " << j + 1 << ":";
        for (const auto& n : layers[j]) {
            os << " " << n.label.str();
            if (n.mult > 1)
                os << "^" << n.mult;
        }
        os << "\n";
    }
    for (const auto& a : arrows)
        os << "  " << a.from.str() << " -> " << a.to.str() << " [" << tag_name(a.tag) << "]\n";
    return os.str();
}

static std::string node_id(int layer, const ModuleLabel& l)
{
    std::string s = "n" + std::to_string(layer) + "_" + l.str();
    for (auto& c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)))
            c = '_';
    return s;
}

std::string LoewyDiagram::to_dot(const std::string& title) const
{
    std::ostringstream os;
    os << "digraph \"" << title << "\" {\n  rankdir=TB;\n  node [shape=plaintext];\n";
    for (std::size_t j = 0; j < layers.size(); ++j) {
        os << "  { rank=same;";
        for (const auto& n : layers[j]) {
            os << " " << node_id(static_cast<int>(j), n.label) << " [label=\"" << n.label.str();
            if (n.mult > 1)
                os << " x" << n.mult;
            os << "\"];";
        }
        os << " }\n";
    }
    for (const auto& a : arrows) {
        os << "  " << node_id(a.layer, a.from) << " -> " << node_id(a.layer + 1, a.to);
        switch (a.tag) {
        case ArrowTag::standard:
            os << " [color=red]";
            break;
        case ArrowTag::costandard:
            os << " [color=blue]";
            break;
        case ArrowTag::other:
            os << " [color=green]";
            break;
        case ArrowTag::unresolved:
            os << " [style=dashed]";
            break;
        }
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

std::string LoewyDiagram::to_json() const
{
    std::ostringstream os;
    os << "{\"layers\":[";
    for (std::size_t j = 0; j < layers.size(); ++j) {
        os << (j ? "," : "") << "[";
        for (std::size_t k = 0; k < layers[j].size(); ++k)
            os << (k ? "," : "") << "{\"label\":\"" << layers[j][k].label.str()
               << "\",\"mult\":" << layers[j][k].mult << "}";
        os << "]";
    }
    os << "],\"arrows\":[";
    for (std::size_t k = 0; k < arrows.size(); ++k) {
        const auto& a = arrows[k];
        os << (k ? "," : "") << "{\"layer\":" << a.layer << ",\"from\":\"" << a.from.str()
           << "\",\"to\":\"" << a.to.str() << "\",\"tag\":\"" << tag_name(a.tag) << "\"}";
    }
    os << "]}";
    return os.str();
}

namespace {

/// Coordinates of T (inside S) with respect to the echelon basis of S.
GradedSubspace restrict_to(const GradedSubspace& S, const GradedSubspace& T,
                           const WeightModule& sub, const WeightModule& V)
{
    GradedSubspace out = GradedSubspace::zero(sub);
    for (int a = 0; a < sub.num_weights(); ++a) {
        int k = V.index_of(sub.weight(a));
        for (const auto& t : T.parts[k].basis())
            out.parts[a].add(S.parts[k].coords(t));
    }
    return out;
}

} // namespace

LoewyDiagram loewy(const WeightModule& V, bool with_arrows)
{
    LoewyDiagram d;
    auto R = series(V, SeriesKind::radical);
    auto layers = layers_of(V, R);
    for (const auto& e : layers) {
        std::vector<LoewyNode> nodes;
        for (const auto& [l, m] : e.terms)
            nodes.push_back({l, m});
        d.layers.push_back(nodes);
    }
    if (!with_arrows)
        return d;
    for (std::size_t j = 0; j + 1 < layers.size(); ++j) {
        // U = R_j / R_{j+2}, head = layer j, radical = layer j+1
        WeightModule sub = submodule(V, R[j]);
        GradedSubspace low = restrict_to(R[j], R[j + 2], sub, V);
        GradedSubspace mid = restrict_to(R[j], R[j + 1], sub, V);
        Quotient qU = quotient(sub, low);
        const WeightModule& U = qU.module;
        GradedSubspace radU = project(sub, low, qU, mid);
        Quotient qH = quotient(U, radU);
        const WeightModule& H = qH.module;
        for (const auto& [X, mx] : layers[j].terms) {
            WeightModule LX = irreducible(X.weight, V.field()->N);
            GradedSubspace iso = GradedSubspace::zero(H);
            for (const auto& h : hom_space(LX, H))
                iso = iso.sum(image(LX, H, h));
            // natural lifts of the isotypic component
            std::vector<std::pair<int, Vec>> seeds;
            for (int a = 0; a < H.num_weights(); ++a) {
                int k = U.index_of(H.weight(a));
                for (const auto& t : iso.parts[a].basis()) {
                    Vec v = zero_vec(V.field(), U.wdim(k));
                    for (std::size_t c = 0; c < qH.keep[k].size(); ++c)
                        v[qH.keep[k][c]] = t[c];
                    seeds.emplace_back(k, v);
                }
            }
            GradedSubspace N = generated_submodule(U, seeds);
            WeightModule Nm = submodule(U, N);
            Character rc = radical(Nm).character(Nm);
            DecompositionExpr below = decompose_semisimple(rc);
            for (const auto& [Y, my] : layers[j + 1].terms) {
                if (!below.terms.count(Y))
                    continue;
                LoewyArrow a;
                a.layer = static_cast<int>(j);
                a.from = X;
                a.to = Y;
                a.tag = (mx > 1 || my > 1) ? ArrowTag::unresolved : ArrowTag::other;
                d.arrows.push_back(a);
            }
        }
    }
    std::sort(d.arrows.begin(), d.arrows.end());
    return d;
}

bool Certificate::ok() const
{
    if (!character_ok || !span_ok)
        return false;
    for (const auto& s : summands)
        if (!s.composite_invertible || s.hom_in < s.mult || s.hom_out < s.mult)
            return false;
    return true;
}

std::string Certificate::str() const
{
    std::ostringstream os;
    os << "character: " << (character_ok ? "equal" : "DIFFERENT") << "\n";
    for (const auto& s : summands)
        os << "summand " << s.mult << "*" << s.label.str() << ": dim Hom(S,V)=" << s.hom_in
           << " dim Hom(V,S)=" << s.hom_out << " split rank=" << s.split_rank
           << " composite " << (s.composite_invertible ? "invertible" : "SINGULAR") << "\n";
    os << "direct sum spans V: " << (span_ok ? "yes" : "NO") << "\n";
    if (!failing.empty())
        os << "failing: " << failing << "\n";
    os << (ok() ? "certificate: pass" : "certificate: FAIL") << "\n";
    return os.str();
}

namespace {

struct Split {
    std::vector<HomMap> inj;  // S -> V
    std::vector<HomMap> proj; // V -> S
    int hom_in = 0, hom_out = 0, rank = 0;
    bool invertible = false;
};

Split split_summand(const WeightModule& V, const WeightModule& S, int m)
{
    Split sp;
    auto Hin = hom_space(S, V);
    auto Hout = hom_space(V, S);
    sp.hom_in = static_cast<int>(Hin.size());
    sp.hom_out = static_cast<int>(Hout.size());
    if (sp.hom_in < m || sp.hom_out < m)
        return sp;
    const CycField* f = V.field();
    const int a = sp.hom_in, b = sp.hom_out;
    Mat T(f, b, a);
    for (int k = 0; k < b; ++k)
        for (int l = 0; l < a; ++l)
            T(k, l) = trace(S, compose(S, V, Hin[l], Hout[k], S));
    Mat Tc = T;
    auto colp = rref(Tc);
    Mat Tr = T.transpose();
    auto rowp = rref(Tr);
    sp.rank = static_cast<int>(colp.size());
    if (sp.rank < m)
        return sp;
    // choose m columns making the first m pivot rows independent
    Mat sub(f, m, sp.rank);
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < sp.rank; ++c)
            sub(r, c) = T(rowp[r], colp[c]);
    auto subp = rref(sub);
    for (int r = 0; r < m; ++r) {
        sp.proj.push_back(Hout[rowp[r]]);
        sp.inj.push_back(Hin[colp[subp[r]]]);
    }
    // block matrix of the composites on S^m
    const int ds = S.dim();
    Mat big(f, m * ds, m * ds);
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c) {
            Mat comp = dense(S, S, compose(S, V, sp.inj[c], sp.proj[r], S));
            for (int i = 0; i < ds; ++i)
                for (int j = 0; j < ds; ++j)
                    big(r * ds + i, c * ds + j) = comp(i, j);
        }
    sp.invertible = rank(big) == m * ds;
    return sp;
}

} // namespace

Certificate check_decomposition(const WeightModule& V0, const DecompositionExpr& predicted,
                                const Constructor& make)
{
    Certificate cert;
    std::vector<std::pair<WeightModule, int>> refs;
    const CycField* f = V0.field();
    for (const auto& [l, m] : predicted.terms) {
        refs.emplace_back(make(l), m);
        f = common_field(f, refs.back().first.field());
    }
    WeightModule V = V0.embed(f);
    Character total;
    for (auto& [S, m] : refs) {
        S = S.embed(f);
        for (int t = 0; t < m; ++t)
            total += S.character();
    }
    cert.character_ok = total == V.character();
    if (!cert.character_ok)
        cert.failing = "character";
    GradedSubspace span = GradedSubspace::zero(V);
    int added = 0;
    auto it = predicted.terms.begin();
    for (auto& [S, m] : refs) {
        const ModuleLabel& label = (it++)->first;
        Split sp = split_summand(V, S, m);
        Certificate::Summand s;
        s.label = label;
        s.mult = m;
        s.hom_in = sp.hom_in;
        s.hom_out = sp.hom_out;
        s.split_rank = sp.rank;
        s.composite_invertible = sp.invertible;
        cert.summands.push_back(s);
        if (!sp.invertible && cert.failing.empty())
            cert.failing = label.str();
        for (const auto& h : sp.inj) {
            span = span.sum(image(S, V, h));
            added += S.dim();
        }
    }
    cert.span_ok = cert.character_ok && span.dim() == V.dim() && added == V.dim();
    if (!cert.span_ok && cert.failing.empty())
        cert.failing = "direct-sum span";
    return cert;
}

Certificate verify_decomposition(const WeightModule& V, const DecompositionExpr& predicted,
                                 const Constructor& make)
{
    Certificate c = check_decomposition(V, predicted, make);
    if (!c.ok())
        throw VerificationFailure(c.failing + "\n" + c.str());
    return c;
}

WeightModule split_off(const WeightModule& V0, const DecompositionExpr& summands,
                       const Constructor& make)
{
    const CycField* f = V0.field();
    std::vector<std::pair<WeightModule, int>> refs;
    for (const auto& [l, m] : summands.terms) {
        refs.emplace_back(make(l), m);
        f = common_field(f, refs.back().first.field());
    }
    WeightModule V = V0.embed(f);
    GradedSubspace span = GradedSubspace::zero(V);
    auto it = summands.terms.begin();
    for (auto& [S, m] : refs) {
        const ModuleLabel& label = (it++)->first;
        S = S.embed(f);
        Split sp = split_summand(V, S, m);
        if (!sp.invertible)
            throw VerificationFailure("cannot split off " + std::to_string(m) + "*" + label.str());
        for (const auto& h : sp.inj)
            span = span.sum(image(S, V, h));
    }
    WeightModule C = quotient(V, span).module;
    C.name = V.name + " / (" + summands.str() + ")";
    return C;
}

} // namespace qsl3
