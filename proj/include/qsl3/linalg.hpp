#pragma once

#include "qsl3/cyclotomic.hpp"

#include <vector>

namespace qsl3 {

using Vec = std::vector<CycNum>;

Vec zero_vec(const CycField* f, int n);
bool is_zero(const Vec& v);

/// Dense matrix over a cyclotomic field, row-major.
class Mat {
public:
    Mat() = default;
    Mat(const CycField* f, int rows, int cols);
    static Mat identity(const CycField* f, int n);

    const CycField* field() const { return f_; }
    int rows() const { return r_; }
    int cols() const { return c_; }

    CycNum& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * c_ + j]; }
    const CycNum& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * c_ + j]; }

    Vec col(int j) const;
    Vec row(int i) const;
    void set_col(int j, const Vec& v);

    Vec apply(const Vec& v) const;
    Mat transpose() const;
    bool is_zero() const;
    Mat embed(const CycField* target) const;

    friend Mat operator*(const Mat& a, const Mat& b);
    friend Mat operator+(const Mat& a, const Mat& b);
    friend Mat operator-(const Mat& a, const Mat& b);
    friend Mat operator*(const Mat& a, const CycNum& s);
    friend bool operator==(const Mat& a, const Mat& b);

private:
    const CycField* f_ = nullptr;
    int r_ = 0, c_ = 0;
    std::vector<CycNum> a_;
};

/// Reduced row echelon form in place (first-nonzero pivoting); returns pivot columns.
std::vector<int> rref(Mat& m);
int rank(Mat m);
/// Basis of the right null space, as columns of the returned matrix.
Mat kernel(Mat m);
Mat inverse(const Mat& m);
/// Horizontal concatenation of column blocks with equal row count.
Mat hcat(const std::vector<Mat>& blocks, const CycField* f, int rows);
/// Block of consecutive columns.
Mat columns(const Mat& m, int first, int count);

/**
 * @brief Incrementally built subspace of F^n kept in fully reduced echelon form.
 *
 * Basis vectors have a 1 at their pivot coordinate and every other basis vector
 * vanishes there, so coordinates of a member are read off at the pivots.
 */
class Subspace {
public:
    Subspace() = default;
    Subspace(const CycField* f, int ambient);

    int ambient() const { return n_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const CycField* field() const { return f_; }

    /// Reduces v against the basis; returns the remainder.
    Vec reduce(Vec v) const;
    bool contains(const Vec& v) const;
    /// Adds v; returns false if v was already in the span.
    bool add(const Vec& v);
    /// Coordinates of a member v w.r.t. basis().
    Vec coords(const Vec& v) const;

    const std::vector<Vec>& basis() const { return basis_; }
    const std::vector<int>& pivots() const { return piv_; }
    /// Basis vectors as columns.
    Mat matrix() const;

    Subspace intersect(const Subspace& o) const;
    Subspace sum(const Subspace& o) const;
    bool operator==(const Subspace& o) const;

private:
    const CycField* f_ = nullptr;
    int n_ = 0;
    std::vector<Vec> basis_;
    std::vector<int> piv_;
};

/**
 * @brief Row space accumulated one row at a time; used for tall linear systems.
 */
class RowReducer {
public:
    RowReducer(const CycField* f, int cols);
    void add_row(Vec row);
    int rank() const { return static_cast<int>(rows_.size()); }
    /// Basis of {x : row . x = 0 for all added rows}, as columns.
    Mat kernel() const;

private:
    const CycField* f_;
    int n_;
    std::vector<Vec> rows_;
    std::vector<int> piv_;
};

} // namespace qsl3
