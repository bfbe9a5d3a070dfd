#include "qsl3/algebra.hpp"

#include "qsl3/errors.hpp"

#include <functional>
#include <map>
#include <sstream>

namespace qsl3 {

std::string PBWMonomial::str() const
{
    const char* s = sign > 0 ? "" : "-";
    std::ostringstream os;
    bool any = false;
    auto put = [&](int n, int j) {
        if (!n)
            return;
        if (any)
            os << " ";
        os << "X" << s << j;
        any = true;
    };
    put(n1, 1);
    put(n3, 3);
    put(n2, 2);
    if (!any)
        os << "1";
    return os.str();
}

Weight PBWMonomial::weight() const
{
    Weight w = Rat(n1) * wt::alpha(1) + Rat(n3) * wt::alpha(3) + Rat(n2) * wt::alpha(2);
    return sign > 0 ? w : -w;
}

std::vector<PBWMonomial> pbw_monomials(int sign)
{
    std::vector<PBWMonomial> out;
    for (int n1 = 0; n1 < 2; ++n1)
        for (int n3 = 0; n3 < 2; ++n3)
            for (int n2 = 0; n2 < 2; ++n2)
                out.push_back({sign, n1, n3, n2});
    return out;
}

CycNum k_value(int j, const Weight& w, const CycField* f)
{
    return i_power(pair_alpha(w, j), f);
}

RootVectors root_vectors(const WeightModule& V)
{
    const CycField* f = V.field();
    Mat x1 = V.dense(X1), x2 = V.dense(X2), xm1 = V.dense(Xm1), xm2 = V.dense(Xm2);
    CycNum i = CycNum::zeta_pow(f, f->N / 4);
    CycNum minus_one(f, Rat(-1));
    RootVectors r;
    r.x3 = (x1 * x2) * minus_one - (x2 * x1) * i;
    r.xm3 = (xm2 * xm1) * minus_one + (xm1 * xm2) * i;
    return r;
}

Mat pbw_matrix(const WeightModule& V, const PBWMonomial& m)
{
    const CycField* f = V.field();
    Mat out = Mat::identity(f, V.dim());
    RootVectors r = root_vectors(V);
    Mat a = m.sign > 0 ? V.dense(X1) : V.dense(Xm1);
    Mat b = m.sign > 0 ? V.dense(X2) : V.dense(Xm2);
    Mat c = m.sign > 0 ? r.x3 : r.xm3;
    if (m.n1)
        out = out * a;
    if (m.n3)
        out = out * c;
    if (m.n2)
        out = out * b;
    return out;
}

bool RelationReport::ok() const
{
    for (const auto& it : items)
        if (!it.ok)
            return false;
    return true;
}

std::string RelationReport::str() const
{
    std::ostringstream os;
    for (const auto& it : items) {
        os << (it.ok ? "pass " : "FAIL ") << it.relation;
        if (!it.ok)
            os << " at " << it.first_failure;
        os << "\n";
    }
    return os.str();
}

namespace {

/// Weight of the first basis row where a dense matrix is nonzero.
std::string first_bad(const WeightModule& V, const Mat& m)
{
    for (int k = 0; k < V.num_weights(); ++k)
        for (int r = 0; r < V.wdim(k); ++r)
            for (int c = 0; c < m.cols(); ++c)
                if (!m(V.offset(k) + r, c).is_zero()) {
                    for (int s = 0; s < V.num_weights(); ++s)
                        if (c >= V.offset(s) && c < V.offset(s) + V.wdim(s))
                            return "block " + V.weight(s).str() + " -> " + V.weight(k).str();
                }
    return "";
}

Mat diag_scalar(const WeightModule& V, const std::function<CycNum(const Weight&)>& fn)
{
    Mat d(V.field(), V.dim(), V.dim());
    for (int k = 0; k < V.num_weights(); ++k) {
        CycNum s = fn(V.weight(k));
        for (int t = 0; t < V.wdim(k); ++t)
            d(V.offset(k) + t, V.offset(k) + t) = s;
    }
    return d;
}

} // namespace

RelationReport verify_relations(const WeightModule& V)
{
    const CycField* f = V.field();
    RelationReport rep;
    auto check = [&](const std::string& name, const Mat& diff) {
        RelationReport::Item it;
        it.relation = name;
        it.ok = diff.is_zero();
        if (!it.ok)
            it.first_failure = first_bad(V, diff);
        rep.items.push_back(it);
    };
    Mat X[4] = {V.dense(X1), V.dense(X2), V.dense(Xm1), V.dense(Xm2)};
    // 1 / (2i) = -i/2
    CycNum inv2i = CycNum::zeta_pow(f, 3 * f->N / 4) * CycNum(f, Rat(1, 2));
    for (int j = 1; j <= 2; ++j)
        for (int jp = 1; jp <= 2; ++jp) {
            const Mat& xj = X[j - 1];
            const Mat& xmjp = X[jp + 1];
            Mat comm = xj * xmjp - xmjp * xj;
            Mat rhs(f, V.dim(), V.dim());
            if (j == jp)
                rhs = diag_scalar(V, [&](const Weight& w) {
                    return (k_value(j, w, f) - k_value(j, w, f).inv()) * inv2i;
                });
            check("[X" + std::to_string(j) + ",X-" + std::to_string(jp) + "]", comm - rhs);
        }
    for (Gen g : all_gens)
        check(std::string(gen_name(g)) + "^2 = 0", X[g] * X[g]);
    for (int s = 0; s < 2; ++s) {
        const Mat& a = X[2 * s];
        const Mat& b = X[2 * s + 1];
        Mat ab = a * b, ba = b * a;
        check(std::string(s == 0 ? "(X1X2)^2 = (X2X1)^2" : "(X-1X-2)^2 = (X-2X-1)^2"),
              ab * ab - ba * ba);
    }
    static const int A[2][2] = {{2, -1}, {-1, 2}};
    for (int j = 1; j <= 2; ++j) {
        Mat h = diag_scalar(V, [&](const Weight& w) { return CycNum(f, pair_alpha(w, j)); });
        for (Gen g : all_gens) {
            int jp = (g == X1 || g == Xm1) ? 1 : 2;
            int sgn = (g == X1 || g == X2) ? 1 : -1;
            Mat lhs = h * X[g] - X[g] * h;
            Mat rhs = X[g] * CycNum(f, Rat(sgn * A[j - 1][jp - 1]));
            check("[H" + std::to_string(j) + "," + gen_name(g) + "]", lhs - rhs);
        }
    }
    return rep;
}

WeightModule tensor_action(const WeightModule& A0, const WeightModule& B0)
{
    const CycField* f = common_field(A0.field(), B0.field());
    WeightModule A = A0.embed(f), B = B0.embed(f);
    // group pairs of weight spaces by their sum
    std::map<Weight, std::vector<std::pair<int, int>>> groups;
    for (int a = 0; a < A.num_weights(); ++a)
        for (int b = 0; b < B.num_weights(); ++b)
            groups[A.weight(a) + B.weight(b)].emplace_back(a, b);
    std::vector<std::pair<Weight, int>> spaces;
    for (const auto& [w, pairs] : groups) {
        int d = 0;
        for (auto [a, b] : pairs)
            d += A.wdim(a) * B.wdim(b);
        spaces.emplace_back(w, d);
    }
    WeightModule M(f, spaces);
    // offset of the (a,b) component inside its weight space
    std::map<std::pair<int, int>, int> off;
    for (int s = 0; s < M.num_weights(); ++s) {
        int o = 0;
        for (auto [a, b] : groups[M.weight(s)]) {
            off[{a, b}] = o;
            o += A.wdim(a) * B.wdim(b);
        }
    }
    for (int s = 0; s < M.num_weights(); ++s) {
        for (auto [a, b] : groups[M.weight(s)]) {
            const int da = A.wdim(a), db = B.wdim(b);
            const int src0 = off[{a, b}];
            for (Gen g : all_gens) {
                auto& mb = M.block(g, s);
                if (mb.tgt < 0)
                    continue;
                bool raising = (g == X1 || g == X2);
                int j = (g == X1 || g == Xm1) ? 1 : 2;
                // first term acts on A, second on B
                const auto& ab = A.block(g, a);
                if (ab.tgt >= 0) {
                    CycNum s1 = raising ? k_value(j, B.weight(b), f) : CycNum(f, Rat(1));
                    int tgt0 = off[{ab.tgt, b}];
                    for (int ia = 0; ia < da; ++ia)
                        for (int ra = 0; ra < A.wdim(ab.tgt); ++ra) {
                            const CycNum& x = ab.m(ra, ia);
                            if (x.is_zero())
                                continue;
                            CycNum v = x * s1;
                            for (int ib = 0; ib < db; ++ib)
                                mb.m(tgt0 + ra * db + ib, src0 + ia * db + ib) += v;
                        }
                }
                const auto& bb = B.block(g, b);
                if (bb.tgt >= 0) {
                    CycNum s2 = raising ? CycNum(f, Rat(1)) : k_value(j, A.weight(a), f).inv();
                    int tgt0 = off[{a, bb.tgt}];
                    int dbt = B.wdim(bb.tgt);
                    for (int ib = 0; ib < db; ++ib)
                        for (int rb = 0; rb < dbt; ++rb) {
                            const CycNum& x = bb.m(rb, ib);
                            if (x.is_zero())
                                continue;
                            CycNum v = x * s2;
                            for (int ia = 0; ia < da; ++ia)
                                mb.m(tgt0 + ia * dbt + rb, src0 + ia * db + ib) += v;
                        }
                }
            }
        }
    }
    M.name = "(" + A.name + ") x (" + B.name + ")";
    return M;
}

WeightModule dual_rep(const WeightModule& V)
{
    const CycField* f = V.field();
    std::vector<std::pair<Weight, int>> spaces;
    for (int k = 0; k < V.num_weights(); ++k)
        spaces.emplace_back(V.weight(k), V.wdim(k));
    WeightModule D(f, spaces);
    CycNum minus_one(f, Rat(-1));
    for (int k = 0; k < D.num_weights(); ++k) {
        const Weight& nu = D.weight(k);
        for (Gen g : all_gens) {
            auto& db = D.block(g, k);
            if (db.tgt < 0)
                continue;
            int j = (g == X1 || g == Xm1) ? 1 : 2;
            if (g == X1 || g == X2) {
                // -(K_j X_{-j})^T
                Gen opp = g == X1 ? Xm1 : Xm2;
                const Mat& m = V.block(opp, db.tgt).m;
                db.m = m.transpose() * (minus_one * k_value(j, nu, f));
            } else {
                // -(X_j K_j^{-1})^T
                Gen opp = g == Xm1 ? X1 : X2;
                const Mat& m = V.block(opp, db.tgt).m;
                db.m = m.transpose() * (minus_one * k_value(j, D.weight(db.tgt), f).inv());
            }
        }
    }
    D.name = "dual(" + V.name + ")";
    return D;
}

WeightModule chevalley_transpose(const WeightModule& V)
{
    std::vector<std::pair<Weight, int>> spaces;
    for (int k = 0; k < V.num_weights(); ++k)
        spaces.emplace_back(V.weight(k), V.wdim(k));
    WeightModule D(V.field(), spaces);
    static const Gen opp[4] = {Xm1, Xm2, X1, X2};
    for (int k = 0; k < D.num_weights(); ++k)
        for (Gen g : all_gens) {
            auto& db = D.block(g, k);
            if (db.tgt >= 0)
                db.m = V.block(opp[g], db.tgt).m.transpose();
        }
    D.name = "chev(" + V.name + ")";
    return D;
}

} // namespace qsl3
