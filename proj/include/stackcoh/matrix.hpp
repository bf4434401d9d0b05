#pragma once

#include <cstddef>
#include <vector>

#include "stackcoh/common.hpp"

namespace zlin {

// Dense integer matrix, row-major. Empty shapes are legal and stand for the
// zero map to/from the trivial group.
class Mat {
  public:
    Mat() : rows_(0), cols_(0) {}
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const Mat& o) const = default;

    bool is_zero() const {
        for (const Int& x : a_)
            if (x != 0) return false;
        return true;
    }

    Mat transpose() const {
        Mat t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Mat operator*(const Mat& o) const {
        if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape mismatch");
        Mat p(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Int& v = (*this)(i, k);
                if (v == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) {
                    const Int& w = o(k, j);
                    if (w != 0) p(i, j) += v * w;
                }
            }
        return p;
    }

    Mat operator-(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix difference shape mismatch");
        Mat d(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) d.a_[i] = a_[i] - o.a_[i];
        return d;
    }

    Mat negated() const {
        Mat n(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) n.a_[i] = -a_[i];
        return n;
    }

    Mat scaled(const Int& c) const {
        Mat n(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) n.a_[i] = c * a_[i];
        return n;
    }

    // Columns of `this` followed by columns of `o`.
    Mat hcat(const Mat& o) const {
        if (rows_ != o.rows_ && cols_ != 0 && o.cols_ != 0)
            throw DimensionMismatch("hcat row mismatch");
        std::size_t r = cols_ == 0 ? o.rows_ : rows_;
        Mat h(r, cols_ + o.cols_);
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) h(i, j) = (*this)(i, j);
            for (std::size_t j = 0; j < o.cols_; ++j) h(i, cols_ + j) = o(i, j);
        }
        return h;
    }

    Mat column(std::size_t j) const {
        Mat c(rows_, 1);
        for (std::size_t i = 0; i < rows_; ++i) c(i, 0) = (*this)(i, j);
        return c;
    }

    Mat columns(const std::vector<std::size_t>& idx) const {
        Mat c(rows_, idx.size());
        for (std::size_t j = 0; j < idx.size(); ++j)
            for (std::size_t i = 0; i < rows_; ++i) c(i, j) = (*this)(i, idx[j]);
        return c;
    }

    Mat rows_subset(const std::vector<std::size_t>& idx) const {
        Mat c(idx.size(), cols_);
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t j = 0; j < cols_; ++j) c(i, j) = (*this)(idx[i], j);
        return c;
    }

    // Block diagonal of `this` and `o`.
    Mat dsum(const Mat& o) const {
        Mat s(rows_ + o.rows_, cols_ + o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) s(i, j) = (*this)(i, j);
        for (std::size_t i = 0; i < o.rows_; ++i)
            for (std::size_t j = 0; j < o.cols_; ++j) s(rows_ + i, cols_ + j) = o(i, j);
        return s;
    }

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < rows_; ++k) std::swap((*this)(k, i), (*this)(k, j));
    }
    // row_i += c * row_j
    void row_axpy(std::size_t i, std::size_t j, const Int& c) {
        if (c == 0) return;
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& v = (*this)(j, k);
            if (v != 0) (*this)(i, k) += c * v;
        }
    }
    // col_i += c * col_j
    void col_axpy(std::size_t i, std::size_t j, const Int& c) {
        if (c == 0) return;
        for (std::size_t k = 0; k < rows_; ++k) {
            const Int& v = (*this)(k, j);
            if (v != 0) (*this)(k, i) += c * v;
        }
    }
    void negate_row(std::size_t i) {
        for (std::size_t k = 0; k < cols_; ++k) (*this)(i, k) = -(*this)(i, k);
    }
    void negate_col(std::size_t j) {
        for (std::size_t k = 0; k < rows_; ++k) (*this)(k, j) = -(*this)(k, j);
    }

  private:
    std::size_t rows_, cols_;
    std::vector<Int> a_;
};

}  // namespace zlin
