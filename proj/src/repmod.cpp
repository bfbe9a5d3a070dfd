#include "qsl3/repmod.hpp"

#include "qsl3/errors.hpp"
#include "qsl3/presentation.hpp"

#include <array>
#include <mutex>
#include <random>

namespace qsl3 {

int default_field_order(const std::vector<Weight>& weights)
{
    int N = 4;
    for (const auto& w : weights)
        N = lcm_order(N, field_order_for(w));
    int forced = forced_field_order();
    if (forced) {
        if (forced % N != 0)
            throw FieldMismatch("QSL3_FIELD_ORDER=" + std::to_string(forced) +
                                " is not a multiple of the required order " + std::to_string(N));
        return forced;
    }
    return N;
}

namespace {

// Words in X_{-1} = a and X_{-2} = b spanning U(n^-): abab = baba.
enum Word { W0, Wa, Wb, Wab, Wba, Waba, Wbab, Wabab, NW };
constexpr int word_len[NW] = {0, 1, 1, 2, 2, 3, 3, 4};
// left multiplication tables (-1 means the product vanishes)
constexpr int mul_a[NW] = {Wa, -1, Wab, -1, Waba, -1, Wabab, -1};
constexpr int mul_b[NW] = {Wb, Wba, -1, Wbab, -1, Wabab, -1, -1};
// first letter (0 = a, 1 = b) and the remaining word
constexpr int head[NW] = {-1, 0, 1, 0, 1, 0, 1, 0};
constexpr int tail[NW] = {-1, W0, W0, Wb, Wa, Wba, Wab, Wbab};

using WVec = std::array<CycNum, NW>;

Weight word_weight(int w)
{
    static const int na[NW] = {0, 1, 0, 1, 1, 2, 1, 2};
    static const int nb[NW] = {0, 0, 1, 1, 1, 1, 2, 2};
    return -(Rat(na[w]) * wt::alpha(1) + Rat(nb[w]) * wt::alpha(2));
}

struct WordAlgebra {
    const CycField* f;
    Weight lam;

    WVec zero() const
    {
        WVec v;
        v.fill(CycNum(f));
        return v;
    }
    WVec unit(int w) const
    {
        WVec v = zero();
        v[w] = CycNum(f, Rat(1));
        return v;
    }
    WVec lower(int letter, const WVec& v) const
    {
        WVec out = zero();
        const int* tab = letter == 0 ? mul_a : mul_b;
        for (int w = 0; w < NW; ++w)
            if (tab[w] >= 0 && !v[w].is_zero())
                out[tab[w]] += v[w];
        return out;
    }
    // (K_j - K_j^{-1}) / (2i) on weight mu
    CycNum bracket(int j, const Weight& mu) const
    {
        CycNum k = k_value(j, mu, f);
        CycNum inv2i = CycNum::zeta_pow(f, 3 * f->N / 4) * CycNum(f, Rat(1, 2));
        return (k - k.inv()) * inv2i;
    }
    WVec raise_word(int j, int w) const
    {
        if (w == W0)
            return zero();
        int y = head[w], rest = tail[w];
        WVec out = lower(y, raise_word(j, rest));
        if (y == j - 1)
            out[rest] += bracket(j, lam + word_weight(rest));
        return out;
    }
    WVec raise(int j, const WVec& v) const
    {
        WVec out = zero();
        for (int w = 0; w < NW; ++w) {
            if (v[w].is_zero())
                continue;
            WVec r = raise_word(j, w);
            for (int t = 0; t < NW; ++t)
                out[t].add_mul(v[w], r[t]);
        }
        return out;
    }
    WVec apply(Gen g, const WVec& v) const
    {
        switch (g) {
        case X1:
            return raise(1, v);
        case X2:
            return raise(2, v);
        case Xm1:
            return lower(0, v);
        case Xm2:
            return lower(1, v);
        }
        return v;
    }
    // X_{-3} = -X_{-2}X_{-1} + i X_{-1}X_{-2}
    WVec lower3(const WVec& v) const
    {
        CycNum i = CycNum::zeta_pow(f, f->N / 4);
        WVec ba = lower(1, lower(0, v));
        WVec ab = lower(0, lower(1, v));
        WVec out = zero();
        for (int t = 0; t < NW; ++t) {
            out[t] -= ba[t];
            out[t].add_mul(i, ab[t]);
        }
        return out;
    }
    WVec pbw(const PBWMonomial& m) const
    {
        WVec v = unit(W0);
        if (m.n2)
            v = lower(1, v);
        if (m.n3)
            v = lower3(v);
        if (m.n1)
            v = lower(0, v);
        return v;
    }
};

struct VermaData {
    WeightModule module;
    std::vector<PBWMonomial> labels;       // per global basis index
    std::vector<WVec> word_coords;         // per global basis index
    WordAlgebra alg;
};

VermaData build_verma(const Weight& l, const CycField* f)
{
    WordAlgebra alg{f, l};
    auto monos = pbw_monomials(-1);
    // PBW vectors in word coordinates and the inverse change of basis
    Mat P(f, NW, NW);
    std::vector<WVec> cols;
    for (int k = 0; k < NW; ++k) {
        cols.push_back(alg.pbw(monos[k]));
        for (int t = 0; t < NW; ++t)
            P(t, k) = cols[k][t];
    }
    Mat Pinv = inverse(P);

    std::vector<std::pair<Weight, int>> spaces;
    for (const auto& m : monos)
        spaces.emplace_back(l + m.weight(), 1);
    WeightModule M(f, spaces);
    // place each PBW vector in its weight space, keeping lexicographic order
    std::vector<int> wk(NW), local(NW);
    std::vector<int> fill(M.num_weights(), 0);
    for (int k = 0; k < NW; ++k) {
        wk[k] = M.index_of(l + monos[k].weight());
        local[k] = fill[wk[k]]++;
    }
    for (int k = 0; k < NW; ++k)
        for (Gen g : all_gens) {
            auto& blk = M.block(g, wk[k]);
            if (blk.tgt < 0)
                continue;
            WVec img = alg.apply(g, cols[k]);
            Vec x(img.begin(), img.end());
            Vec c = Pinv.apply(x);
            for (int t = 0; t < NW; ++t) {
                if (c[t].is_zero())
                    continue;
                if (wk[t] != blk.tgt)
                    throw InternalInconsistency("Verma action leaves its weight space");
                blk.m(local[t], local[k]) = c[t];
            }
        }
    VermaData d{std::move(M), {}, {}, alg};
    d.labels.resize(NW);
    d.word_coords.resize(NW);
    for (int k = 0; k < NW; ++k) {
        int g = d.module.offset(wk[k]) + local[k];
        d.labels[g] = monos[k];
        d.word_coords[g] = cols[k];
    }
    d.module.name = "M" + l.str();
    return d;
}

const CycField* field_for(const Weight& l, int N)
{
    if (N == 0)
        N = default_field_order({l});
    if (N % field_order_for(l) != 0)
        throw FieldMismatch("field order " + std::to_string(N) + " incompatible with weight " +
                            l.str());
    return cyc_field(N);
}

} // namespace

WeightModule verma(const Weight& l, int N)
{
    return build_verma(l, field_for(l, N)).module;
}

std::vector<PBWMonomial> verma_basis_labels(const WeightModule& M)
{
    // the labels depend only on the weight layout, which is the same for every Verma
    const Weight& top = M.weight(0);
    return build_verma(top, M.field()).labels;
}

std::map<Weight, Mat> contravariant_gram(const Weight& l, int N)
{
    const CycField* f = field_for(l, N);
    VermaData d = build_verma(l, f);
    const WeightModule& M = d.module;
    std::map<Weight, Mat> out;
    for (int k = 0; k < M.num_weights(); ++k) {
        const int n = M.wdim(k);
        Mat G(f, n, n);
        for (int a = 0; a < n; ++a) {
            const WVec& wa = d.word_coords[M.offset(k) + a];
            for (int b = 0; b < n; ++b) {
                CycNum val(f);
                for (int w = 0; w < NW; ++w) {
                    if (wa[w].is_zero())
                        continue;
                    // <w m, v> = coefficient of m in X_{y_r} ... X_{y_1} v
                    WVec v = d.word_coords[M.offset(k) + b];
                    int cur = w;
                    while (cur != W0) {
                        v = d.alg.raise(head[cur] + 1, v);
                        cur = tail[cur];
                    }
                    val.add_mul(wa[w], v[W0]);
                }
                G(a, b) = val;
            }
        }
        out.emplace(M.weight(k), std::move(G));
    }
    return out;
}

WeightModule irreducible(const Weight& l, int N)
{
    const CycField* f = field_for(l, N);
    static std::mutex mu;
    static std::map<std::pair<int, Weight>, WeightModule> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({f->N, l});
        if (it != cache.end())
            return it->second;
    }
    WeightModule M = build_verma(l, f).module;
    auto gram = contravariant_gram(l, f->N);
    GradedSubspace rad = GradedSubspace::zero(M);
    for (int k = 0; k < M.num_weights(); ++k) {
        Mat K = kernel(gram.at(M.weight(k)));
        for (int c = 0; c < K.cols(); ++c)
            rad.parts[k].add(K.col(c));
    }
    WeightModule L = quotient(M, rad).module;
    L.name = "L" + l.str();
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(std::make_pair(f->N, l), L);
    return L;
}

Character character(const WeightModule& V)
{
    return V.character();
}

std::vector<HomMap> hom_space(const WeightModule& A0, const WeightModule& B0)
{
    const CycField* f = common_field(A0.field(), B0.field());
    const WeightModule A = A0.embed(f);
    const WeightModule B = B0.embed(f);
    const Presentation& p = A.field() == A0.field() ? A0.presentation() : A.presentation();
    // B index of each A weight
    std::vector<int> bk(A.num_weights());
    for (int k = 0; k < A.num_weights(); ++k)
        bk[k] = B.index_of(A.weight(k));
    auto bdim = [&](int k) { return bk[k] < 0 ? 0 : B.wdim(bk[k]); };

    std::vector<int> gen_off;
    int nunk = 0;
    for (const auto& [k, v] : p.gens) {
        gen_off.push_back(nunk);
        nunk += bdim(k);
    }
    if (nunk == 0)
        return {};

    std::vector<Mat> F(p.nodes.size());
    for (std::size_t n = 0; n < p.nodes.size(); ++n) {
        const auto& node = p.nodes[n];
        int d = bdim(node.w);
        if (node.gen >= 0) {
            Mat m(f, d, nunk);
            for (int t = 0; t < d; ++t)
                m(t, gen_off[node.gen] + t) = CycNum(f, Rat(1));
            F[n] = std::move(m);
            continue;
        }
        int pw = p.nodes[node.parent].w;
        if (d == 0 || bk[pw] < 0) {
            F[n] = Mat(f, d, nunk);
            continue;
        }
        F[n] = B.block(node.g, bk[pw]).m * F[node.parent];
    }

    RowReducer rr(f, nunk);
    for (std::size_t n = 0; n < p.nodes.size(); ++n) {
        const auto& node = p.nodes[n];
        for (Gen g : all_gens) {
            const auto& ab = A.block(g, node.w);
            if (ab.tgt < 0) {
                // X_g v = 0 in A forces X_g f(v) = 0 in B
                if (bk[node.w] >= 0) {
                    const auto& bb = B.block(g, bk[node.w]);
                    if (bb.tgt >= 0 && B.wdim(bb.tgt) > 0) {
                        Mat lhs = bb.m * F[n];
                        for (int r = 0; r < lhs.rows(); ++r)
                            rr.add_row(lhs.row(r));
                    }
                }
                continue;
            }
            int kt = ab.tgt;
            int d = bdim(kt);
            if (d == 0)
                continue;
            Mat lhs(f, d, nunk);
            if (bk[node.w] >= 0)
                lhs = B.block(g, bk[node.w]).m * F[n];
            Vec img = ab.m.apply(node.vec);
            Vec c = p.tinv[kt].apply(img);
            for (std::size_t t = 0; t < p.at[kt].size(); ++t) {
                if (c[t].is_zero())
                    continue;
                const Mat& Ft = F[p.at[kt][t]];
                for (int r = 0; r < d; ++r)
                    for (int s = 0; s < nunk; ++s)
                        lhs(r, s).sub_mul(c[t], Ft(r, s));
            }
            for (int r = 0; r < d; ++r)
                rr.add_row(lhs.row(r));
        }
    }
    Mat K = rr.kernel();
    std::vector<HomMap> out;
    for (int c = 0; c < K.cols(); ++c) {
        Vec u = K.col(c);
        HomMap h;
        for (int k = 0; k < A.num_weights(); ++k) {
            int d = bdim(k);
            Mat img(f, d, A.wdim(k));
            for (std::size_t t = 0; t < p.at[k].size(); ++t)
                img.set_col(static_cast<int>(t), F[p.at[k][t]].apply(u));
            h.blocks.push_back(img * p.tinv[k]);
        }
        out.push_back(std::move(h));
    }
    return out;
}

bool is_homomorphism(const WeightModule& A, const WeightModule& B, const HomMap& h)
{
    for (int k = 0; k < A.num_weights(); ++k)
        for (Gen g : all_gens) {
            const auto& ab = A.block(g, k);
            int bk = B.index_of(A.weight(k));
            Mat lhs;  // f X
            Weight tw = A.weight(k) + gen_shift(g);
            int btw = B.index_of(tw);
            int dt = btw < 0 ? 0 : B.wdim(btw);
            if (ab.tgt >= 0)
                lhs = h.blocks[ab.tgt] * ab.m;
            else
                lhs = Mat(A.field(), dt, A.wdim(k));
            Mat rhs(A.field(), dt, A.wdim(k));
            if (bk >= 0 && btw >= 0)
                rhs = B.block(g, bk).m * h.blocks[k];
            if (!(lhs == rhs))
                return false;
        }
    return true;
}

GradedSubspace image(const WeightModule& A, const WeightModule& B, const HomMap& h)
{
    GradedSubspace s = GradedSubspace::zero(B);
    for (int k = 0; k < A.num_weights(); ++k) {
        int b = B.index_of(A.weight(k));
        if (b < 0)
            continue;
        for (int c = 0; c < A.wdim(k); ++c)
            s.parts[b].add(h.blocks[k].col(c));
    }
    return s;
}

GradedSubspace kernel_of(const WeightModule& A, const WeightModule&, const HomMap& h)
{
    GradedSubspace s = GradedSubspace::zero(A);
    for (int k = 0; k < A.num_weights(); ++k) {
        Mat K = h.blocks[k].rows() == 0 ? Mat::identity(A.field(), A.wdim(k)) : kernel(h.blocks[k]);
        for (int c = 0; c < K.cols(); ++c)
            s.parts[k].add(K.col(c));
    }
    return s;
}

HomMap compose(const WeightModule& A, const WeightModule& B, const HomMap& f, const HomMap& g,
               const WeightModule& C)
{
    HomMap out;
    for (int k = 0; k < A.num_weights(); ++k) {
        int b = B.index_of(A.weight(k));
        int c = C.index_of(A.weight(k));
        int dc = c < 0 ? 0 : C.wdim(c);
        if (b < 0 || dc == 0)
            out.blocks.push_back(Mat(A.field(), dc, A.wdim(k)));
        else
            out.blocks.push_back(g.blocks[b] * f.blocks[k]);
    }
    return out;
}

CycNum trace(const WeightModule& A, const HomMap& f)
{
    CycNum t(A.field());
    for (int k = 0; k < A.num_weights(); ++k)
        if (f.blocks[k].rows() == f.blocks[k].cols())
            for (int i = 0; i < A.wdim(k); ++i)
                t += f.blocks[k](i, i);
    return t;
}

Mat dense(const WeightModule& A, const WeightModule& B, const HomMap& f)
{
    Mat m(A.field(), B.dim(), A.dim());
    for (int k = 0; k < A.num_weights(); ++k) {
        int b = B.index_of(A.weight(k));
        if (b < 0)
            continue;
        const Mat& blk = f.blocks[k];
        for (int i = 0; i < blk.rows(); ++i)
            for (int j = 0; j < blk.cols(); ++j)
                m(B.offset(b) + i, A.offset(k) + j) = blk(i, j);
    }
    return m;
}

static bool invertible(const WeightModule& A, const WeightModule& B, const HomMap& h)
{
    if (A.character() != B.character())
        return false;
    for (int k = 0; k < A.num_weights(); ++k)
        if (rank(h.blocks[k]) != A.wdim(k))
            return false;
    return true;
}

bool find_isomorphism(const WeightModule& A, const WeightModule& B, HomMap* out)
{
    if (A.character() != B.character())
        return false;
    auto H = hom_space(A, B);
    if (H.empty())
        return false;
    for (const auto& h : H)
        if (invertible(A, B, h)) {
            if (out)
                *out = h;
            return true;
        }
    // deterministic pseudo-random combinations for decomposable modules
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> coef(-3, 3);
    const CycField* f = A.field();
    for (int attempt = 0; attempt < 8; ++attempt) {
        HomMap h = H[0];
        for (auto& b : h.blocks)
            b = b * CycNum(f, Rat(0));
        for (const auto& g : H) {
            CycNum c(f, Rat(coef(rng)));
            for (std::size_t k = 0; k < h.blocks.size(); ++k)
                h.blocks[k] = h.blocks[k] + g.blocks[k] * c;
        }
        if (invertible(A, B, h)) {
            if (out)
                *out = h;
            return true;
        }
    }
    return false;
}

} // namespace qsl3
