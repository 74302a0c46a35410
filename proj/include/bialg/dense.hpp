#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "bialg/scalar.hpp"

namespace bialg {

inline constexpr int kMaxDim = 8; // soft cap on structure dimension; exact dense arithmetic only

/// Applies to structure dimensions (basis size), not to derived matrix shapes.
inline void check_dim(int n) {
    if (n < 1 || n > kMaxDim)
        throw DimMismatch("dimension " + std::to_string(n) + " outside supported range 1.." + std::to_string(kMaxDim));
}

inline void check_positive(int n, const char* what) {
    if (n < 1) throw DimMismatch(std::string(what) + " must be positive");
}

/// Coefficient vector over an exact field.
template <class S>
class Vec {
public:
    using Field = typename S::Field;

    Vec(const Field& f, int n) : f_(f), a_(static_cast<size_t>(n), S::zero(f)) { check_positive(n, "vector length"); }

    int dim() const { return static_cast<int>(a_.size()); }
    const Field& field() const { return f_; }

    S& operator[](int i) { return a_[static_cast<size_t>(i)]; }
    const S& operator[](int i) const { return a_[static_cast<size_t>(i)]; }

    static Vec basis(const Field& f, int n, int i) {
        Vec v(f, n);
        v[i] = S::one(f);
        return v;
    }

    bool is_zero() const {
        for (const S& x : a_) if (!x.is_zero()) return false;
        return true;
    }

    bool operator==(const Vec& o) const { return a_ == o.a_; }
    bool operator!=(const Vec& o) const { return !(*this == o); }

    Vec operator+(const Vec& o) const {
        require_same(o);
        Vec r(f_, dim());
        for (int i = 0; i < dim(); ++i) r[i] = a_[i] + o[i];
        return r;
    }
    Vec operator-(const Vec& o) const {
        require_same(o);
        Vec r(f_, dim());
        for (int i = 0; i < dim(); ++i) r[i] = a_[i] - o[i];
        return r;
    }
    Vec operator*(const S& c) const {
        Vec r(f_, dim());
        for (int i = 0; i < dim(); ++i) r[i] = a_[i] * c;
        return r;
    }

    void require_same(const Vec& o) const {
        if (dim() != o.dim()) throw DimMismatch("vector dimension mismatch");
        if (!(f_ == o.f_)) throw FieldMismatch("vector field mismatch");
    }

private:
    Field f_;
    std::vector<S> a_;
};

/// Dense matrix; column j holds the image of e_j, so composition is the
/// ordinary matrix product.
template <class S>
class Mat {
public:
    using Field = typename S::Field;

    Mat(const Field& f, int rows, int cols)
        : f_(f), rows_(rows), cols_(cols), a_(static_cast<size_t>(rows * cols), S::zero(f)) {
        check_positive(rows, "matrix rows");
        check_positive(cols, "matrix cols");
    }

    static Mat identity(const Field& f, int n) {
        Mat m(f, n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = S::one(f);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Field& field() const { return f_; }

    S& at(int r, int c) { return a_[static_cast<size_t>(r * cols_ + c)]; }
    const S& at(int r, int c) const { return a_[static_cast<size_t>(r * cols_ + c)]; }

    bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat operator+(const Mat& o) const {
        require_shape(o);
        Mat r(f_, rows_, cols_);
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
        return r;
    }
    Mat operator-(const Mat& o) const {
        require_shape(o);
        Mat r(f_, rows_, cols_);
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
        return r;
    }
    Mat operator*(const S& c) const {
        Mat r(f_, rows_, cols_);
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
        return r;
    }

    /// Composition: (*this) after o.
    Mat operator*(const Mat& o) const {
        if (cols_ != o.rows_) throw DimMismatch("matrix product shape mismatch");
        Mat r(f_, rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                if (at(i, k).is_zero()) continue;
                for (int j = 0; j < o.cols_; ++j)
                    r.at(i, j) += at(i, k) * o.at(k, j);
            }
        return r;
    }

    Vec<S> apply(const Vec<S>& v) const {
        if (cols_ != v.dim()) throw DimMismatch("matrix apply shape mismatch");
        Vec<S> r(f_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                r[i] += at(i, j) * v[j];
        return r;
    }

    bool is_zero() const {
        for (const S& x : a_) if (!x.is_zero()) return false;
        return true;
    }

    void require_shape(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw DimMismatch("matrix shape mismatch");
        if (!(f_ == o.f_)) throw FieldMismatch("matrix field mismatch");
    }

private:
    Field f_;
    int rows_, cols_;
    std::vector<S> a_;
};

/// Element of V (x) V as an n x n coefficient grid.
template <class S>
class Tensor2 {
public:
    using Field = typename S::Field;

    Tensor2(const Field& f, int n) : f_(f), n_(n), a_(static_cast<size_t>(n * n), S::zero(f)) { check_positive(n, "tensor dim"); }

    int dim() const { return n_; }
    const Field& field() const { return f_; }

    S& at(int j, int k) { return a_[static_cast<size_t>(j * n_ + k)]; }
    const S& at(int j, int k) const { return a_[static_cast<size_t>(j * n_ + k)]; }

    static Tensor2 pure(const Vec<S>& x, const Vec<S>& y) {
        x.require_same(y);
        Tensor2 t(x.field(), x.dim());
        for (int j = 0; j < x.dim(); ++j)
            for (int k = 0; k < x.dim(); ++k)
                t.at(j, k) = x[j] * y[k];
        return t;
    }

    bool is_zero() const {
        for (const S& x : a_) if (!x.is_zero()) return false;
        return true;
    }

    bool operator==(const Tensor2& o) const { return n_ == o.n_ && a_ == o.a_; }
    bool operator!=(const Tensor2& o) const { return !(*this == o); }

    Tensor2 operator+(const Tensor2& o) const {
        require_same(o);
        Tensor2 r(f_, n_);
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
        return r;
    }
    Tensor2 operator-(const Tensor2& o) const {
        require_same(o);
        Tensor2 r(f_, n_);
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
        return r;
    }
    Tensor2 operator*(const S& c) const {
        Tensor2 r(f_, n_);
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
        return r;
    }

    /// The flip tau(x (x) y) = y (x) x.
    Tensor2 flipped() const {
        Tensor2 r(f_, n_);
        for (int j = 0; j < n_; ++j)
            for (int k = 0; k < n_; ++k)
                r.at(k, j) = at(j, k);
        return r;
    }

    void require_same(const Tensor2& o) const {
        if (n_ != o.n_) throw DimMismatch("tensor-square dimension mismatch");
        if (!(f_ == o.f_)) throw FieldMismatch("tensor-square field mismatch");
    }

private:
    Field f_;
    int n_;
    std::vector<S> a_;
};

/// Rank-3 structure-constant array, n x n x n, 0-based internally.
template <class S>
class Tensor3 {
public:
    using Field = typename S::Field;

    Tensor3(const Field& f, int n) : f_(f), n_(n), a_(static_cast<size_t>(n * n * n), S::zero(f)) { check_dim(n); }

    int dim() const { return n_; }
    const Field& field() const { return f_; }

    S& at(int i, int j, int k) { return a_[idx(i, j, k)]; }
    const S& at(int i, int j, int k) const { return a_[idx(i, j, k)]; }

    bool operator==(const Tensor3& o) const { return n_ == o.n_ && a_ == o.a_; }
    bool operator!=(const Tensor3& o) const { return !(*this == o); }

    void require_same(const Tensor3& o) const {
        if (n_ != o.n_) throw DimMismatch("tensor dimension mismatch");
        if (!(f_ == o.f_)) throw FieldMismatch("tensor field mismatch");
    }

private:
    size_t idx(int i, int j, int k) const { return static_cast<size_t>((i * n_ + j) * n_ + k); }

    Field f_;
    int n_;
    std::vector<S> a_;
};

// ---- exact Gaussian elimination -------------------------------------------

/// Row echelon reduction in place; returns rank. Pivoting needs only
/// nonzero-ness, which is exact over these fields.
template <class S>
int row_reduce(Mat<S>& m) {
    const int rows = m.rows(), cols = m.cols();
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (!m.at(r, col).is_zero()) { pivot = r; break; }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int c = 0; c < cols; ++c) std::swap(m.at(pivot, c), m.at(rank, c));
        S inv = S::one(m.field()) / m.at(rank, col);
        for (int c = 0; c < cols; ++c) m.at(rank, c) = m.at(rank, c) * inv;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || m.at(r, col).is_zero()) continue;
            S factor = m.at(r, col);
            for (int c = 0; c < cols; ++c) m.at(r, c) = m.at(r, c) - factor * m.at(rank, c);
        }
        ++rank;
    }
    return rank;
}

template <class S>
int rank(Mat<S> m) {
    return row_reduce(m);
}

template <class S>
S determinant(Mat<S> m) {
    if (m.rows() != m.cols()) throw DimMismatch("determinant of non-square matrix");
    const int n = m.rows();
    S det = S::one(m.field());
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (!m.at(r, col).is_zero()) { pivot = r; break; }
        if (pivot < 0) return S::zero(m.field());
        if (pivot != col) {
            for (int c = 0; c < n; ++c) std::swap(m.at(pivot, c), m.at(col, c));
            det = -det;
        }
        det = det * m.at(col, col);
        S inv = S::one(m.field()) / m.at(col, col);
        for (int r = col + 1; r < n; ++r) {
            if (m.at(r, col).is_zero()) continue;
            S factor = m.at(r, col) * inv;
            for (int c = col; c < n; ++c) m.at(r, c) = m.at(r, c) - factor * m.at(col, c);
        }
    }
    return det;
}

template <class S>
std::optional<Mat<S>> inverse(const Mat<S>& m) {
    if (m.rows() != m.cols()) throw DimMismatch("inverse of non-square matrix");
    const int n = m.rows();
    if (rank(m) != n) return std::nullopt;
    // full rank: reduction of [m | I] pivots every left column in order and
    // leaves the inverse in the right block
    Mat<S> aug(m.field(), n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = S::one(m.field());
    }
    row_reduce(aug);
    Mat<S> inv(m.field(), n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

/// Basis of the null space {x : m x = 0}, deterministic order.
template <class S>
std::vector<Vec<S>> kernel(Mat<S> m) {
    const int cols = m.cols();
    const int rk = row_reduce(m);
    std::vector<int> pivot_col;
    std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
    {
        int r = 0;
        for (int c = 0; c < cols && r < rk; ++c) {
            if (!m.at(r, c).is_zero()) {
                pivot_col.push_back(c);
                is_pivot[static_cast<size_t>(c)] = true;
                ++r;
            }
        }
    }
    std::vector<Vec<S>> basis;
    for (int free_c = 0; free_c < cols; ++free_c) {
        if (is_pivot[static_cast<size_t>(free_c)]) continue;
        Vec<S> v(m.field(), cols);
        v[free_c] = S::one(m.field());
        for (int r = 0; r < rk; ++r)
            v[pivot_col[static_cast<size_t>(r)]] = -m.at(r, free_c);
        basis.push_back(v);
    }
    return basis;
}

/// Rank of the span of a list of vectors.
template <class S>
int span_rank(const std::vector<Vec<S>>& vs) {
    if (vs.empty()) return 0;
    Mat<S> m(vs.front().field(), static_cast<int>(vs.size()), vs.front().dim());
    for (int r = 0; r < static_cast<int>(vs.size()); ++r)
        for (int c = 0; c < vs.front().dim(); ++c)
            m.at(r, c) = vs[static_cast<size_t>(r)][c];
    return row_reduce(m);
}

} // namespace bialg
