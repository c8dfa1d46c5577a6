#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "atgrs/field.hpp"

namespace atgrs {

/// Dense row-major matrix of field elements.
class Mat {
  public:
    Mat(const FieldCtx& f, std::size_t rows, std::size_t cols)
        : f_(&f), rows_(rows), cols_(cols), e_(rows * cols, f.zero()) {}

    static Mat identity(const FieldCtx& f, std::size_t n) {
        Mat m(f, n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
        return m;
    }

    const FieldCtx& field() const { return *f_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Elt& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
    const Elt& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    Mat operator-() const;
    bool operator==(const Mat& o) const;
    bool operator!=(const Mat& o) const { return !(*this == o); }

    bool is_identity() const;
    Mat transpose() const;

    /// Columns selected by 0-based indices, in the given order.
    Mat select_columns(std::span<const int> idx) const;

  private:
    const FieldCtx* f_;
    std::size_t rows_, cols_;
    std::vector<Elt> e_;
};

/// Exact determinant by Gaussian elimination; zero iff singular.
Elt det(const Mat& m);

/// Exact inverse by Gauss-Jordan elimination.
/// Throws: not_square, singular.
Mat gaussian_inverse(const Mat& m);

std::size_t mat_rank(const Mat& m);

}  // namespace atgrs
