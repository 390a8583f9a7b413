#pragma once

#include <vector>

#include "dbsc/rational.hpp"

namespace dbsc {

// Small dense matrix over Rational, row-major. Exact throughout.
class MatQ {
public:
    MatQ() : rows_(0), cols_(0) {}
    MatQ(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {}

    static MatQ identity(int n) {
        MatQ m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int r, int c) { return e_[static_cast<size_t>(r) * cols_ + c]; }
    const Rational& at(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }

    friend MatQ operator*(const MatQ& a, const MatQ& b);
    friend MatQ operator-(const MatQ& a) {
        MatQ m(a.rows_, a.cols_);
        for (size_t i = 0; i < a.e_.size(); ++i) m.e_[i] = -a.e_[i];
        return m;
    }
    friend bool operator==(const MatQ& a, const MatQ& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const MatQ& a, const MatQ& b) { return !(a == b); }

    MatQ transpose() const;
    bool isIntegral() const;
    bool isIdentity() const;

    Rational det() const;
    MatQ inverse() const;  // errors on singular input

private:
    int rows_, cols_;
    std::vector<Rational> e_;
};

}  // namespace dbsc
