#include "atgrs/mat.hpp"

namespace atgrs {

Mat Mat::operator*(const Mat& o) const {
    if (f_ != o.f_) fail(errc::field_mismatch, "matrix product over different fields");
    if (cols_ != o.rows_) fail(errc::length_mismatch, "matrix product dimension mismatch");
    Mat r(*f_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            Elt a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

Mat Mat::operator+(const Mat& o) const {
    if (f_ != o.f_) fail(errc::field_mismatch, "matrix sum over different fields");
    if (rows_ != o.rows_ || cols_ != o.cols_) fail(errc::length_mismatch, "matrix sum shape mismatch");
    Mat r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
}

Mat Mat::operator-() const {
    Mat r = *this;
    for (auto& x : r.e_) x = -x;
    return r;
}

bool Mat::operator==(const Mat& o) const {
    if (f_ != o.f_) fail(errc::field_mismatch, "comparing matrices over different fields");
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i].value() != o.e_[i].value()) return false;
    return true;
}

bool Mat::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j).value() != (i == j ? 1u : 0u)) return false;
    return true;
}

Mat Mat::transpose() const {
    Mat r(*f_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Mat Mat::select_columns(std::span<const int> idx) const {
    Mat r(*f_, rows_, idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j) {
        auto c = static_cast<std::size_t>(idx[j]);
        if (c >= cols_) fail(errc::index_out_of_range, "column index out of range");
        for (std::size_t i = 0; i < rows_; ++i) r.at(i, j) = at(i, c);
    }
    return r;
}

Elt det(const Mat& m) {
    if (m.rows() != m.cols()) fail(errc::not_square, "determinant of a non-square matrix");
    const FieldCtx& f = m.field();
    Mat a = m;
    const std::size_t n = a.rows();
    Elt d = f.one();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a.at(piv, col).is_zero()) ++piv;
        if (piv == n) return f.zero();
        if (piv != col) {
            for (std::size_t j = col; j < n; ++j) std::swap(a.at(piv, j), a.at(col, j));
            d = -d;
        }
        d *= a.at(col, col);
        Elt pinv = inv(a.at(col, col));
        for (std::size_t i = col + 1; i < n; ++i) {
            Elt factor = a.at(i, col) * pinv;
            if (factor.is_zero()) continue;
            for (std::size_t j = col; j < n; ++j) a.at(i, j) -= factor * a.at(col, j);
        }
    }
    return d;
}

Mat gaussian_inverse(const Mat& m) {
    if (m.rows() != m.cols()) fail(errc::not_square, "inverse of a non-square matrix");
    const FieldCtx& f = m.field();
    const std::size_t n = m.rows();
    Mat a = m;
    Mat r = Mat::identity(f, n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a.at(piv, col).is_zero()) ++piv;
        if (piv == n) fail(errc::singular, "matrix is singular");
        if (piv != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a.at(piv, j), a.at(col, j));
                std::swap(r.at(piv, j), r.at(col, j));
            }
        Elt pinv = inv(a.at(col, col));
        for (std::size_t j = 0; j < n; ++j) {
            a.at(col, j) *= pinv;
            r.at(col, j) *= pinv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col) continue;
            Elt factor = a.at(i, col);
            if (factor.is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                a.at(i, j) -= factor * a.at(col, j);
                r.at(i, j) -= factor * r.at(col, j);
            }
        }
    }
    return r;
}

std::size_t mat_rank(const Mat& m) {
    Mat a = m;
    const std::size_t rows = a.rows(), cols = a.cols();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && a.at(piv, col).is_zero()) ++piv;
        if (piv == rows) continue;
        if (piv != rank)
            for (std::size_t j = col; j < cols; ++j) std::swap(a.at(piv, j), a.at(rank, j));
        Elt pinv = inv(a.at(rank, col));
        for (std::size_t i = rank + 1; i < rows; ++i) {
            Elt factor = a.at(i, col) * pinv;
            if (factor.is_zero()) continue;
            for (std::size_t j = col; j < cols; ++j) a.at(i, j) -= factor * a.at(rank, j);
        }
        ++rank;
    }
    return rank;
}

}  // namespace atgrs
