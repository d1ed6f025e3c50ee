#pragma once

#include <vector>

#include "hstar/numeric.hpp"

namespace hstar {

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

// Dense row-major matrix over Int. Vectors are rows throughout the
// library; a linear map is applied as x * M.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static IntMatrix identity(int n);
    static IntMatrix from_rows(const std::vector<IntVec>& rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Int& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    IntVec row(int i) const;

    void swap_rows(int i, int j);
    void negate_row(int i);
    void add_row_multiple(int dst, int src, const Int& c); // row dst += c * row src
    void swap_cols(int i, int j);
    void add_col_multiple(int dst, int src, const Int& c);

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

private:
    int rows_, cols_;
    std::vector<Int> a_;
};

IntMatrix mul(const IntMatrix& a, const IntMatrix& b);
IntVec mul_vec(const IntVec& x, const IntMatrix& m);

// Exact determinant of a square matrix (Bareiss fraction-free elimination).
Int det(IntMatrix m);

// Inverse of a matrix with |det| = 1; the result is integral.
IntMatrix inverse_unimodular(const IntMatrix& m);

RatVec to_rat(const IntVec& v);

} // namespace hstar
