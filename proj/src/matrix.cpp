#include "dbsc/matrix.hpp"

namespace dbsc {

MatQ operator*(const MatQ& a, const MatQ& b) {
    require(a.cols_ == b.rows_, "matrix shape mismatch");
    MatQ out(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const Rational& aik = a.at(i, k);
            if (aik.isZero()) continue;
            for (int j = 0; j < b.cols_; ++j) out.at(i, j) += aik * b.at(k, j);
        }
    return out;
}

MatQ MatQ::transpose() const {
    MatQ out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

bool MatQ::isIntegral() const {
    for (const auto& v : e_)
        if (!v.isInteger()) return false;
    return true;
}

bool MatQ::isIdentity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != Rational(i == j ? 1 : 0)) return false;
    return true;
}

Rational MatQ::det() const {
    require(rows_ == cols_, "determinant of a non-square matrix");
    MatQ m = *this;
    Rational d(1);
    for (int col = 0; col < cols_; ++col) {
        int pivot = -1;
        for (int r = col; r < rows_; ++r)
            if (!m.at(r, col).isZero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) return Rational(0);
        if (pivot != col) {
            for (int j = 0; j < cols_; ++j) std::swap(m.at(pivot, j), m.at(col, j));
            d = -d;
        }
        d *= m.at(col, col);
        Rational inv = Rational(1) / m.at(col, col);
        for (int r = col + 1; r < rows_; ++r) {
            Rational f = m.at(r, col) * inv;
            if (f.isZero()) continue;
            for (int j = col; j < cols_; ++j) m.at(r, j) -= f * m.at(col, j);
        }
    }
    return d;
}

MatQ MatQ::inverse() const {
    require(rows_ == cols_, "inverse of a non-square matrix");
    int n = rows_;
    MatQ m = *this;
    MatQ inv = MatQ::identity(n);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (!m.at(r, col).isZero()) {
                pivot = r;
                break;
            }
        require(pivot >= 0, "singular matrix");
        if (pivot != col)
            for (int j = 0; j < n; ++j) {
                std::swap(m.at(pivot, j), m.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        Rational f = Rational(1) / m.at(col, col);
        for (int j = 0; j < n; ++j) {
            m.at(col, j) *= f;
            inv.at(col, j) *= f;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || m.at(r, col).isZero()) continue;
            Rational g = m.at(r, col);
            for (int j = 0; j < n; ++j) {
                m.at(r, j) -= g * m.at(col, j);
                inv.at(r, j) -= g * inv.at(col, j);
            }
        }
    }
    return inv;
}

}  // namespace dbsc
