#ifndef LCKV_MATRIX_HPP
#define LCKV_MATRIX_HPP

#include "lckv/scalar.hpp"

#include <string>
#include <vector>

namespace lckv {

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}
    static Matrix identity(std::size_t n);

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

    Matrix transpose() const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator-() const;
    Matrix scaled(const Scalar& s) const;
    std::vector<Scalar> apply(const std::vector<Scalar>& x) const;
    bool is_zero() const;
    bool operator==(const Matrix& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
    Matrix substitute(const Assignment& a) const;
    std::vector<std::vector<mpq_class>> eval(const Assignment& a) const;
    std::string str() const;

private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<Scalar> a_;
};

// Result of exact Gauss-Jordan elimination over the Scalar field.
struct Echelon {
    Matrix reduced;                         // reduced row echelon form
    std::vector<std::size_t> pivot_cols;
    std::vector<Scalar> pivots;             // pivot values before scaling
    std::vector<std::string> side_conditions;  // "p != 0" for every non-constant pivot
};

// Pivot rule: columns left to right; within a column the first row holding a
// nonzero constant, otherwise the first nonzero row.
Echelon row_reduce(const Matrix& m);
std::size_t rank(const Matrix& m);
// Column basis of {x : m x = 0}; each vector has a 1 at its free column.
std::vector<std::vector<Scalar>> nullspace(const Matrix& m, std::vector<std::string>* side = nullptr);
// Unique solution of m x = b; Inconsistent / Underdetermined otherwise.
std::vector<Scalar> solve(const Matrix& m, const std::vector<Scalar>& b);
Scalar determinant(const Matrix& m);

}  // namespace lckv

#endif
