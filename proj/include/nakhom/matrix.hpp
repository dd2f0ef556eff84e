#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "nakhom/errors.hpp"

namespace nakhom {

/* Dense matrix over an exact scalar (Rational or Fp). Vectors are rows and
 * maps act on the right: v |-> v*A, so composition reads left to right.
 * Sizes in this project stay small (dims <= ~100); plain Gaussian elimination
 * with first-nonzero pivoting is exact and deterministic. */
template <class T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, T(0)) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = T(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const T& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) fail_internal("matrix product shape mismatch");
        Matrix r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const T& x = at(i, k);
                if (x.is_zero()) continue;
                for (int j = 0; j < o.cols_; ++j) {
                    const T& y = o.at(k, j);
                    if (!y.is_zero()) r.at(i, j) += x * y;
                }
            }
        return r;
    }

    Matrix operator+(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) fail_internal("matrix sum shape mismatch");
        Matrix r = *this;
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
        return r;
    }

    Matrix operator-(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) fail_internal("matrix difference shape mismatch");
        Matrix r = *this;
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
        return r;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    std::vector<T> row(int r) const {
        return std::vector<T>(a_.begin() + static_cast<size_t>(r) * cols_,
                              a_.begin() + static_cast<size_t>(r + 1) * cols_);
    }
    void set_row(int r, const std::vector<T>& v) {
        for (int j = 0; j < cols_; ++j) at(r, j) = v[j];
    }
    void append_row(const std::vector<T>& v) {
        if (cols_ == 0 && rows_ == 0) cols_ = static_cast<int>(v.size());
        if (static_cast<int>(v.size()) != cols_) fail_internal("append_row width mismatch");
        a_.insert(a_.end(), v.begin(), v.end());
        ++rows_;
    }

    /* In-place reduced row echelon form; returns pivot column per pivot row. */
    std::vector<int> rref() {
        std::vector<int> pivots;
        int r = 0;
        for (int c = 0; c < cols_ && r < rows_; ++c) {
            int p = -1;
            for (int i = r; i < rows_; ++i)
                if (!at(i, c).is_zero()) { p = i; break; }
            if (p < 0) continue;
            if (p != r)
                for (int j = 0; j < cols_; ++j) std::swap(at(p, j), at(r, j));
            const T inv = T(1) / at(r, c);
            for (int j = c; j < cols_; ++j) at(r, j) *= inv;
            for (int i = 0; i < rows_; ++i) {
                if (i == r || at(i, c).is_zero()) continue;
                const T f = at(i, c);
                for (int j = c; j < cols_; ++j) at(i, j) -= f * at(r, j);
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    int rank() const {
        Matrix m = *this;
        return static_cast<int>(m.rref().size());
    }

    /* Basis of {x : A x = 0} (column vectors), returned as rows. */
    Matrix nullspace() const {
        Matrix m = *this;
        const std::vector<int> pivots = m.rref();
        std::vector<bool> is_pivot(cols_, false);
        for (int c : pivots) is_pivot[c] = true;
        Matrix basis(0, cols_);
        for (int c = 0; c < cols_; ++c) {
            if (is_pivot[c]) continue;
            std::vector<T> v(cols_, T(0));
            v[c] = T(1);
            for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(static_cast<int>(r), c);
            basis.append_row(v);
        }
        return basis;
    }

    /* Basis of {v : v A = 0} (row vectors), as rows. */
    Matrix left_nullspace() const { return transpose().nullspace(); }

    /* Echelonized basis of the row space. */
    Matrix row_basis() const {
        Matrix m = *this;
        const std::vector<int> pivots = m.rref();
        Matrix b(0, cols_);
        for (size_t r = 0; r < pivots.size(); ++r) b.append_row(m.row(static_cast<int>(r)));
        return b;
    }

    /* One solution x of A x = rhs (column form), free variables set to zero. */
    std::optional<std::vector<T>> solve(const std::vector<T>& rhs) const {
        if (static_cast<int>(rhs.size()) != rows_) fail_internal("solve rhs size mismatch");
        Matrix aug(rows_, cols_ + 1);
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
            aug.at(i, cols_) = rhs[i];
        }
        const std::vector<int> pivots = aug.rref();
        if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;  // inconsistent
        std::vector<T> x(cols_, T(0));
        for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(static_cast<int>(r), cols_);
        return x;
    }

private:
    int rows_, cols_;
    std::vector<T> a_;
};

/* Reduced-echelon row basis grown incrementally. Supports membership
 * reduction and exact coordinates relative to the stored basis. */
template <class T>
class RowBasis {
public:
    explicit RowBasis(int width) : width_(width) {}

    int width() const { return width_; }
    int dim() const { return static_cast<int>(rows_.size()); }
    const std::vector<T>& row(int i) const { return rows_[i]; }
    const std::vector<int>& pivots() const { return pivots_; }

    /* Reduce v against the basis in place; returns false if v reduced to 0. */
    bool reduce(std::vector<T>& v) const {
        for (size_t i = 0; i < rows_.size(); ++i) {
            const T& c = v[pivots_[i]];
            if (c.is_zero()) continue;
            const T f = c;
            for (int j = 0; j < width_; ++j) v[j] -= f * rows_[i][j];
        }
        for (const auto& x : v)
            if (!x.is_zero()) return true;
        return false;
    }

    /* Insert v (destructively); returns true if the basis grew. */
    bool insert(std::vector<T> v) {
        if (!reduce(v)) return false;
        int p = 0;
        while (v[p].is_zero()) ++p;
        const T inv = T(1) / v[p];
        for (auto& x : v) x *= inv;
        // back-reduce existing rows against the new pivot
        for (size_t i = 0; i < rows_.size(); ++i) {
            const T f = rows_[i][p];
            if (f.is_zero()) continue;
            for (int j = 0; j < width_; ++j) rows_[i][j] -= f * v[j];
        }
        size_t pos = 0;
        while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
        rows_.insert(rows_.begin() + pos, std::move(v));
        pivots_.insert(pivots_.begin() + pos, p);
        return true;
    }

    bool contains(std::vector<T> v) const { return !reduce(v); }

    /* Coordinates of v in this basis; fails if v is outside the span. */
    std::vector<T> coordinates(std::vector<T> v) const {
        std::vector<T> coords(rows_.size(), T(0));
        for (size_t i = 0; i < rows_.size(); ++i) coords[i] = v[pivots_[i]];
        for (size_t i = 0; i < rows_.size(); ++i) {
            if (coords[i].is_zero()) continue;
            for (int j = 0; j < width_; ++j) v[j] -= coords[i] * rows_[i][j];
        }
        for (const auto& x : v)
            if (!x.is_zero()) fail_internal("coordinates: vector outside span");
        return coords;
    }

    Matrix<T> as_matrix() const {
        Matrix<T> m(0, width_);
        for (const auto& r : rows_) m.append_row(r);
        return m;
    }

private:
    int width_;
    std::vector<std::vector<T>> rows_;  // reduced echelon, normalized pivots
    std::vector<int> pivots_;           // strictly increasing
};

}  // namespace nakhom
