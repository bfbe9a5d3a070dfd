#include "qsl3/module.hpp"

#include "qsl3/errors.hpp"
#include "qsl3/presentation.hpp"

#include <algorithm>
#include <deque>
#include <mutex>

namespace qsl3 {

Weight gen_shift(Gen g)
{
    switch (g) {
    case X1:
        return wt::alpha(1);
    case X2:
        return wt::alpha(2);
    case Xm1:
        return -wt::alpha(1);
    case Xm2:
        return -wt::alpha(2);
    }
    return wt::zero();
}

const char* gen_name(Gen g)
{
    static const char* names[] = {"X1", "X2", "X-1", "X-2"};
    return names[g];
}

bool weight_order(const Weight& a, const Weight& b)
{
    Rat ha = height(a), hb = height(b);
    if (ha != hb)
        return ha > hb;
    if (a.c1 != b.c1)
        return a.c1 > b.c1;
    return a.c2 > b.c2;
}

WeightModule::WeightModule(const CycField* f, const std::vector<std::pair<Weight, int>>& spaces)
    : f_(f)
{
    std::map<Weight, int> merged;
    for (const auto& [w, d] : spaces)
        if (d > 0)
            merged[w] += d;
    for (const auto& kv : merged)
        wts_.push_back(kv.first);
    std::sort(wts_.begin(), wts_.end(), weight_order);
    for (std::size_t k = 0; k < wts_.size(); ++k) {
        idx_[wts_[k]] = static_cast<int>(k);
        dims_.push_back(merged[wts_[k]]);
        offs_.push_back(total_);
        total_ += dims_.back();
    }
    for (Gen g : all_gens) {
        act_[g].resize(wts_.size());
        for (std::size_t k = 0; k < wts_.size(); ++k) {
            int t = index_of(wts_[k] + gen_shift(g));
            act_[g][k].tgt = t;
            act_[g][k].m = Mat(f, t < 0 ? 0 : dims_[t], dims_[k]);
        }
    }
}

int WeightModule::index_of(const Weight& w) const
{
    auto it = idx_.find(w);
    return it == idx_.end() ? -1 : it->second;
}

Vec WeightModule::apply(Gen g, int src, const Vec& v) const
{
    const Block& b = act_[g][src];
    if (b.tgt < 0)
        return {};
    return b.m.apply(v);
}

Character WeightModule::character() const
{
    Character c;
    for (int k = 0; k < num_weights(); ++k)
        c.add(wts_[k], dims_[k]);
    return c;
}

Mat WeightModule::dense(Gen g) const
{
    Mat m(f_, total_, total_);
    for (int k = 0; k < num_weights(); ++k) {
        const Block& b = act_[g][k];
        if (b.tgt < 0)
            continue;
        for (int i = 0; i < b.m.rows(); ++i)
            for (int j = 0; j < b.m.cols(); ++j)
                m(offs_[b.tgt] + i, offs_[k] + j) = b.m(i, j);
    }
    return m;
}

WeightModule WeightModule::embed(const CycField* target) const
{
    if (target == f_)
        return *this;
    WeightModule out = *this;
    out.f_ = target;
    out.pres_.reset();
    for (Gen g : all_gens)
        for (auto& b : out.act_[g])
            b.m = b.m.embed(target);
    return out;
}

const Presentation& WeightModule::presentation() const
{
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    if (!pres_)
        pres_ = std::make_shared<const Presentation>(build_presentation(*this));
    return *pres_;
}

Presentation build_presentation(const WeightModule& V)
{
    const CycField* f = V.field();
    Presentation p;
    const int nw = V.num_weights();
    p.at.resize(nw);
    std::vector<Subspace> span;
    for (int k = 0; k < nw; ++k)
        span.emplace_back(f, V.wdim(k));

    auto close = [&](int start) {
        std::deque<int> queue{start};
        while (!queue.empty()) {
            int n = queue.front();
            queue.pop_front();
            for (Gen g : all_gens) {
                const auto& blk = V.block(g, p.nodes[n].w);
                if (blk.tgt < 0)
                    continue;
                Vec img = blk.m.apply(p.nodes[n].vec);
                if (!span[blk.tgt].add(img))
                    continue;
                Presentation::Node node;
                node.w = blk.tgt;
                node.parent = n;
                node.g = g;
                node.vec = std::move(img);
                p.at[blk.tgt].push_back(static_cast<int>(p.nodes.size()));
                p.nodes.push_back(std::move(node));
                queue.push_back(static_cast<int>(p.nodes.size()) - 1);
            }
        }
    };

    for (int k = 0; k < nw; ++k) {
        for (int t = 0; t < V.wdim(k) && span[k].dim() < V.wdim(k); ++t) {
            Vec e = zero_vec(f, V.wdim(k));
            e[t] = CycNum(f, Rat(1));
            if (!span[k].add(e))
                continue;
            Presentation::Node node;
            node.w = k;
            node.gen = static_cast<int>(p.gens.size());
            node.vec = e;
            p.gens.emplace_back(k, e);
            p.at[k].push_back(static_cast<int>(p.nodes.size()));
            p.nodes.push_back(std::move(node));
            close(static_cast<int>(p.nodes.size()) - 1);
        }
    }
    p.tinv.resize(nw);
    for (int k = 0; k < nw; ++k) {
        Mat t(f, V.wdim(k), V.wdim(k));
        for (std::size_t c = 0; c < p.at[k].size(); ++c)
            t.set_col(static_cast<int>(c), p.nodes[p.at[k][c]].vec);
        p.tinv[k] = inverse(t);
    }
    return p;
}

GradedSubspace GradedSubspace::zero(const WeightModule& V)
{
    GradedSubspace s;
    for (int k = 0; k < V.num_weights(); ++k)
        s.parts.emplace_back(V.field(), V.wdim(k));
    return s;
}

GradedSubspace GradedSubspace::full(const WeightModule& V)
{
    GradedSubspace s = zero(V);
    for (int k = 0; k < V.num_weights(); ++k)
        for (int t = 0; t < V.wdim(k); ++t) {
            Vec e = zero_vec(V.field(), V.wdim(k));
            e[t] = CycNum(V.field(), Rat(1));
            s.parts[k].add(e);
        }
    return s;
}

int GradedSubspace::dim() const
{
    int d = 0;
    for (const auto& s : parts)
        d += s.dim();
    return d;
}

bool GradedSubspace::contains(const GradedSubspace& o) const
{
    for (std::size_t k = 0; k < parts.size(); ++k)
        for (const auto& b : o.parts[k].basis())
            if (!parts[k].contains(b))
                return false;
    return true;
}

GradedSubspace GradedSubspace::intersect(const GradedSubspace& o) const
{
    GradedSubspace s;
    for (std::size_t k = 0; k < parts.size(); ++k)
        s.parts.push_back(parts[k].intersect(o.parts[k]));
    return s;
}

GradedSubspace GradedSubspace::sum(const GradedSubspace& o) const
{
    GradedSubspace s;
    for (std::size_t k = 0; k < parts.size(); ++k)
        s.parts.push_back(parts[k].sum(o.parts[k]));
    return s;
}

bool GradedSubspace::operator==(const GradedSubspace& o) const
{
    return parts == o.parts;
}

Character GradedSubspace::character(const WeightModule& V) const
{
    Character c;
    for (std::size_t k = 0; k < parts.size(); ++k)
        c.add(V.weight(static_cast<int>(k)), parts[k].dim());
    return c;
}

GradedSubspace generated_submodule(const WeightModule& V,
                                   const std::vector<std::pair<int, Vec>>& seeds)
{
    GradedSubspace s = GradedSubspace::zero(V);
    std::deque<std::pair<int, Vec>> queue;
    for (const auto& [k, v] : seeds)
        if (s.parts[k].add(v))
            queue.emplace_back(k, v);
    while (!queue.empty()) {
        auto [k, v] = std::move(queue.front());
        queue.pop_front();
        for (Gen g : all_gens) {
            const auto& blk = V.block(g, k);
            if (blk.tgt < 0)
                continue;
            Vec img = blk.m.apply(v);
            if (s.parts[blk.tgt].add(img))
                queue.emplace_back(blk.tgt, std::move(img));
        }
    }
    return s;
}

GradedSubspace generated_submodule(const WeightModule& V, const GradedSubspace& S)
{
    std::vector<std::pair<int, Vec>> seeds;
    for (std::size_t k = 0; k < S.parts.size(); ++k)
        for (const auto& b : S.parts[k].basis())
            seeds.emplace_back(static_cast<int>(k), b);
    return generated_submodule(V, seeds);
}

bool is_submodule(const WeightModule& V, const GradedSubspace& S)
{
    for (int k = 0; k < V.num_weights(); ++k)
        for (const auto& b : S.parts[k].basis())
            for (Gen g : all_gens) {
                const auto& blk = V.block(g, k);
                if (blk.tgt < 0)
                    continue;
                if (!S.parts[blk.tgt].contains(blk.m.apply(b)))
                    return false;
            }
    return true;
}

WeightModule submodule(const WeightModule& V, const GradedSubspace& S)
{
    std::vector<std::pair<Weight, int>> spaces;
    for (int k = 0; k < V.num_weights(); ++k)
        spaces.emplace_back(V.weight(k), S.parts[k].dim());
    WeightModule M(V.field(), spaces);
    for (int a = 0; a < M.num_weights(); ++a) {
        int k = V.index_of(M.weight(a));
        const auto& basis = S.parts[k].basis();
        for (Gen g : all_gens) {
            auto& mb = M.block(g, a);
            if (mb.tgt < 0)
                continue;
            const auto& vb = V.block(g, k);
            int kt = vb.tgt;
            for (std::size_t c = 0; c < basis.size(); ++c) {
                Vec img = vb.m.apply(basis[c]);
                Vec co = S.parts[kt].coords(img);
                mb.m.set_col(static_cast<int>(c), co);
            }
        }
    }
    return M;
}

GradedSubspace push_forward(const WeightModule& V, const GradedSubspace& S,
                            const WeightModule& sub, const GradedSubspace& T)
{
    GradedSubspace out = GradedSubspace::zero(V);
    for (int a = 0; a < sub.num_weights(); ++a) {
        int k = V.index_of(sub.weight(a));
        const auto& basis = S.parts[k].basis();
        for (const auto& t : T.parts[a].basis()) {
            Vec v = zero_vec(V.field(), V.wdim(k));
            for (std::size_t c = 0; c < basis.size(); ++c)
                if (!t[c].is_zero())
                    for (int r = 0; r < V.wdim(k); ++r)
                        v[r].add_mul(t[c], basis[c][r]);
            out.parts[k].add(v);
        }
    }
    return out;
}

static std::vector<int> non_pivots(const Subspace& s, int n)
{
    std::vector<bool> piv(n, false);
    for (int p : s.pivots())
        piv[p] = true;
    std::vector<int> keep;
    for (int t = 0; t < n; ++t)
        if (!piv[t])
            keep.push_back(t);
    return keep;
}

Quotient quotient(const WeightModule& V, const GradedSubspace& S)
{
    Quotient q;
    std::vector<std::pair<Weight, int>> spaces;
    for (int k = 0; k < V.num_weights(); ++k) {
        q.keep.push_back(non_pivots(S.parts[k], V.wdim(k)));
        spaces.emplace_back(V.weight(k), static_cast<int>(q.keep.back().size()));
    }
    WeightModule M(V.field(), spaces);
    for (int a = 0; a < M.num_weights(); ++a) {
        int k = V.index_of(M.weight(a));
        const auto& keep = q.keep[k];
        for (Gen g : all_gens) {
            auto& mb = M.block(g, a);
            if (mb.tgt < 0)
                continue;
            const auto& vb = V.block(g, k);
            int kt = vb.tgt;
            for (std::size_t c = 0; c < keep.size(); ++c) {
                Vec e = zero_vec(V.field(), V.wdim(k));
                e[keep[c]] = CycNum(V.field(), Rat(1));
                Vec img = S.parts[kt].reduce(vb.m.apply(e));
                for (std::size_t r = 0; r < q.keep[kt].size(); ++r)
                    mb.m(static_cast<int>(r), static_cast<int>(c)) = img[q.keep[kt][r]];
            }
        }
    }
    q.module = std::move(M);
    return q;
}

GradedSubspace preimage(const WeightModule& V, const GradedSubspace& S, const Quotient& q,
                        const GradedSubspace& T)
{
    GradedSubspace out = S;
    for (int a = 0; a < q.module.num_weights(); ++a) {
        int k = V.index_of(q.module.weight(a));
        for (const auto& t : T.parts[a].basis()) {
            Vec v = zero_vec(V.field(), V.wdim(k));
            for (std::size_t c = 0; c < q.keep[k].size(); ++c)
                v[q.keep[k][c]] = t[c];
            out.parts[k].add(v);
        }
    }
    return out;
}

GradedSubspace project(const WeightModule& V, const GradedSubspace& S, const Quotient& q,
                       const GradedSubspace& T)
{
    GradedSubspace out = GradedSubspace::zero(q.module);
    for (int k = 0; k < V.num_weights(); ++k) {
        int a = q.module.index_of(V.weight(k));
        if (a < 0)
            continue;
        for (const auto& t : T.parts[k].basis()) {
            Vec r = S.parts[k].reduce(t);
            Vec v;
            for (int c : q.keep[k])
                v.push_back(r[c]);
            out.parts[a].add(v);
        }
    }
    return out;
}

const CycField* common_field(const CycField* a, const CycField* b)
{
    if (a == b)
        return a;
    return cyc_field(lcm_order(a->N, b->N));
}

WeightModule direct_sum(const WeightModule& A0, const WeightModule& B0)
{
    const CycField* f = common_field(A0.field(), B0.field());
    WeightModule A = A0.embed(f), B = B0.embed(f);
    std::vector<std::pair<Weight, int>> spaces;
    for (int k = 0; k < A.num_weights(); ++k)
        spaces.emplace_back(A.weight(k), A.wdim(k));
    for (int k = 0; k < B.num_weights(); ++k)
        spaces.emplace_back(B.weight(k), B.wdim(k));
    WeightModule M(f, spaces);
    for (int a = 0; a < M.num_weights(); ++a) {
        int ka = A.index_of(M.weight(a));
        int kb = B.index_of(M.weight(a));
        int da = ka < 0 ? 0 : A.wdim(ka);
        for (Gen g : all_gens) {
            auto& mb = M.block(g, a);
            if (mb.tgt < 0)
                continue;
            int ta = A.index_of(M.weight(mb.tgt));
            if (ka >= 0 && A.block(g, ka).tgt >= 0) {
                const Mat& m = A.block(g, ka).m;
                for (int i = 0; i < m.rows(); ++i)
                    for (int j = 0; j < m.cols(); ++j)
                        mb.m(i, j) = m(i, j);
            }
            int off_t = ta < 0 ? 0 : A.wdim(ta);
            if (kb >= 0 && B.block(g, kb).tgt >= 0) {
                const Mat& m = B.block(g, kb).m;
                for (int i = 0; i < m.rows(); ++i)
                    for (int j = 0; j < m.cols(); ++j)
                        mb.m(off_t + i, da + j) = m(i, j);
            }
        }
    }
    M.name = A.name + " (+) " + B.name;
    return M;
}

} // namespace qsl3
