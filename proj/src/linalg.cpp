#include "qsl3/linalg.hpp"

#include "qsl3/errors.hpp"

#include <algorithm>

namespace qsl3 {

Vec zero_vec(const CycField* f, int n)
{
    return Vec(static_cast<std::size_t>(n), CycNum(f));
}

bool is_zero(const Vec& v)
{
    for (const auto& x : v)
        if (!x.is_zero())
            return false;
    return true;
}

Mat::Mat(const CycField* f, int rows, int cols)
    : f_(f), r_(rows), c_(cols), a_(static_cast<std::size_t>(rows) * cols, CycNum(f))
{
}

Mat Mat::identity(const CycField* f, int n)
{
    Mat m(f, n, n);
    for (int i = 0; i < n; ++i)
        m(i, i) = CycNum(f, Rat(1));
    return m;
}

Vec Mat::col(int j) const
{
    Vec v;
    v.reserve(r_);
    for (int i = 0; i < r_; ++i)
        v.push_back((*this)(i, j));
    return v;
}

Vec Mat::row(int i) const
{
    return Vec(a_.begin() + static_cast<std::ptrdiff_t>(i) * c_,
               a_.begin() + static_cast<std::ptrdiff_t>(i + 1) * c_);
}

void Mat::set_col(int j, const Vec& v)
{
    for (int i = 0; i < r_; ++i)
        (*this)(i, j) = v[i];
}

Vec Mat::apply(const Vec& v) const
{
    Vec out = zero_vec(f_, r_);
    for (int j = 0; j < c_; ++j) {
        if (v[j].is_zero())
            continue;
        for (int i = 0; i < r_; ++i)
            out[i].add_mul((*this)(i, j), v[j]);
    }
    return out;
}

Mat Mat::transpose() const
{
    Mat t(f_, c_, r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

bool Mat::is_zero() const
{
    for (const auto& x : a_)
        if (!x.is_zero())
            return false;
    return true;
}

Mat Mat::embed(const CycField* target) const
{
    Mat m(target, r_, c_);
    for (std::size_t k = 0; k < a_.size(); ++k)
        m.a_[k] = a_[k].embed(target);
    return m;
}

Mat operator*(const Mat& a, const Mat& b)
{
    if (a.c_ != b.r_)
        throw InternalInconsistency("matrix product shape mismatch");
    Mat m(a.f_ ? a.f_ : b.f_, a.r_, b.c_);
    for (int i = 0; i < a.r_; ++i)
        for (int k = 0; k < a.c_; ++k) {
            const CycNum& x = a(i, k);
            if (x.is_zero())
                continue;
            for (int j = 0; j < b.c_; ++j)
                m(i, j).add_mul(x, b(k, j));
        }
    return m;
}

Mat operator+(const Mat& a, const Mat& b)
{
    Mat m = a;
    for (std::size_t k = 0; k < m.a_.size(); ++k)
        m.a_[k] += b.a_[k];
    return m;
}

Mat operator-(const Mat& a, const Mat& b)
{
    Mat m = a;
    for (std::size_t k = 0; k < m.a_.size(); ++k)
        m.a_[k] -= b.a_[k];
    return m;
}

Mat operator*(const Mat& a, const CycNum& s)
{
    Mat m = a;
    for (auto& x : m.a_)
        if (!x.is_zero())
            x = x * s;
    return m;
}

bool operator==(const Mat& a, const Mat& b)
{
    return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
}

std::vector<int> rref(Mat& m)
{
    std::vector<int> piv;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int p = row;
        while (p < m.rows() && m(p, col).is_zero())
            ++p;
        if (p == m.rows())
            continue;
        if (p != row)
            for (int j = 0; j < m.cols(); ++j)
                std::swap(m(p, j), m(row, j));
        CycNum inv = m(row, col).inv();
        for (int j = col; j < m.cols(); ++j)
            if (!m(row, j).is_zero())
                m(row, j) = m(row, j) * inv;
        for (int r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col).is_zero())
                continue;
            CycNum fct = m(r, col);
            for (int j = col; j < m.cols(); ++j)
                m(r, j).sub_mul(fct, m(row, j));
        }
        piv.push_back(col);
        ++row;
    }
    return piv;
}

int rank(Mat m)
{
    return static_cast<int>(rref(m).size());
}

Mat kernel(Mat m)
{
    auto piv = rref(m);
    std::vector<bool> is_piv(m.cols(), false);
    for (int p : piv)
        is_piv[p] = true;
    std::vector<int> free;
    for (int j = 0; j < m.cols(); ++j)
        if (!is_piv[j])
            free.push_back(j);
    Mat k(m.field(), m.cols(), static_cast<int>(free.size()));
    for (std::size_t t = 0; t < free.size(); ++t) {
        int fcol = free[t];
        k(fcol, static_cast<int>(t)) = CycNum(m.field(), Rat(1));
        for (std::size_t r = 0; r < piv.size(); ++r)
            k(piv[r], static_cast<int>(t)) = -m(static_cast<int>(r), fcol);
    }
    return k;
}

Mat inverse(const Mat& m)
{
    const int n = m.rows();
    if (m.cols() != n)
        throw InternalInconsistency("inverse of a non-square matrix");
    Mat aug(m.field(), n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            aug(i, j) = m(i, j);
        aug(i, n + i) = CycNum(m.field(), Rat(1));
    }
    auto piv = rref(aug);
    if (static_cast<int>(piv.size()) < n || piv[n - 1] != n - 1)
        throw DivisionByZero("singular matrix");
    Mat out(m.field(), n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out(i, j) = aug(i, n + j);
    return out;
}

Mat hcat(const std::vector<Mat>& blocks, const CycField* f, int rows)
{
    int cols = 0;
    for (const auto& b : blocks)
        cols += b.cols();
    Mat m(f, rows, cols);
    int off = 0;
    for (const auto& b : blocks) {
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < b.cols(); ++j)
                m(i, off + j) = b(i, j);
        off += b.cols();
    }
    return m;
}

Mat columns(const Mat& m, int first, int count)
{
    Mat out(m.field(), m.rows(), count);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < count; ++j)
            out(i, j) = m(i, first + j);
    return out;
}

Subspace::Subspace(const CycField* f, int ambient) : f_(f), n_(ambient) {}

Vec Subspace::reduce(Vec v) const
{
    for (std::size_t k = 0; k < basis_.size(); ++k) {
        CycNum c = v[piv_[k]];
        if (c.is_zero())
            continue;
        const Vec& b = basis_[k];
        for (int t = 0; t < n_; ++t)
            v[t].sub_mul(c, b[t]);
    }
    return v;
}

bool Subspace::contains(const Vec& v) const
{
    return qsl3::is_zero(reduce(v));
}

bool Subspace::add(const Vec& v)
{
    Vec r = reduce(v);
    int p = 0;
    while (p < n_ && r[p].is_zero())
        ++p;
    if (p == n_)
        return false;
    CycNum inv = r[p].inv();
    for (auto& x : r)
        if (!x.is_zero())
            x = x * inv;
    for (auto& b : basis_) {
        CycNum c = b[p];
        if (c.is_zero())
            continue;
        for (int t = 0; t < n_; ++t)
            b[t].sub_mul(c, r[t]);
    }
    auto pos = std::lower_bound(piv_.begin(), piv_.end(), p) - piv_.begin();
    piv_.insert(piv_.begin() + pos, p);
    basis_.insert(basis_.begin() + pos, std::move(r));
    return true;
}

Vec Subspace::coords(const Vec& v) const
{
    Vec c;
    c.reserve(basis_.size());
    for (int p : piv_)
        c.push_back(v[p]);
    return c;
}

Mat Subspace::matrix() const
{
    Mat m(f_, n_, dim());
    for (int j = 0; j < dim(); ++j)
        m.set_col(j, basis_[j]);
    return m;
}

Subspace Subspace::sum(const Subspace& o) const
{
    Subspace s = *this;
    for (const auto& b : o.basis_)
        s.add(b);
    return s;
}

Subspace Subspace::intersect(const Subspace& o) const
{
    Subspace out(f_, n_);
    if (dim() == 0 || o.dim() == 0)
        return out;
    Mat m(f_, n_, dim() + o.dim());
    for (int j = 0; j < dim(); ++j)
        m.set_col(j, basis_[j]);
    for (int j = 0; j < o.dim(); ++j) {
        Vec neg = o.basis_[j];
        for (auto& x : neg)
            x = -x;
        m.set_col(dim() + j, neg);
    }
    Mat k = kernel(m);
    for (int c = 0; c < k.cols(); ++c) {
        Vec v = zero_vec(f_, n_);
        for (int j = 0; j < dim(); ++j) {
            const CycNum& a = k(j, c);
            if (a.is_zero())
                continue;
            for (int t = 0; t < n_; ++t)
                v[t].add_mul(a, basis_[j][t]);
        }
        out.add(v);
    }
    return out;
}

bool Subspace::operator==(const Subspace& o) const
{
    if (n_ != o.n_ || dim() != o.dim() || piv_ != o.piv_)
        return false;
    for (std::size_t k = 0; k < basis_.size(); ++k)
        if (basis_[k] != o.basis_[k])
            return false;
    return true;
}

RowReducer::RowReducer(const CycField* f, int cols) : f_(f), n_(cols) {}

void RowReducer::add_row(Vec r)
{
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        CycNum c = r[piv_[k]];
        if (c.is_zero())
            continue;
        for (int t = 0; t < n_; ++t)
            r[t].sub_mul(c, rows_[k][t]);
    }
    int p = 0;
    while (p < n_ && r[p].is_zero())
        ++p;
    if (p == n_)
        return;
    CycNum inv = r[p].inv();
    for (auto& x : r)
        if (!x.is_zero())
            x = x * inv;
    for (auto& b : rows_) {
        CycNum c = b[p];
        if (c.is_zero())
            continue;
        for (int t = 0; t < n_; ++t)
            b[t].sub_mul(c, r[t]);
    }
    rows_.push_back(std::move(r));
    piv_.push_back(p);
}

Mat RowReducer::kernel() const
{
    std::vector<bool> is_piv(n_, false);
    for (int p : piv_)
        is_piv[p] = true;
    std::vector<int> free;
    for (int j = 0; j < n_; ++j)
        if (!is_piv[j])
            free.push_back(j);
    Mat k(f_, n_, static_cast<int>(free.size()));
    for (std::size_t t = 0; t < free.size(); ++t) {
        int fcol = free[t];
        k(fcol, static_cast<int>(t)) = CycNum(f_, Rat(1));
        for (std::size_t r = 0; r < piv_.size(); ++r)
            k(piv_[r], static_cast<int>(t)) = -rows_[r][fcol];
    }
    return k;
}

} // namespace qsl3
