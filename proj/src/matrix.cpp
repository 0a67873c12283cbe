#include "lckv/matrix.hpp"

#include "lckv/error.hpp"

#include <algorithm>
#include <sstream>

namespace lckv {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (c_ != o.r_) fail("DimensionMismatch", "matrix product");
    Matrix p(r_, o.c_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t k = 0; k < c_; ++k) {
            const Scalar& x = (*this)(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < o.c_; ++j)
                if (!o(k, j).is_zero()) p(i, j) += x * o(k, j);
        }
    return p;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) fail("DimensionMismatch", "matrix sum");
    Matrix s = *this;
    for (std::size_t k = 0; k < a_.size(); ++k) s.a_[k] += o.a_[k];
    return s;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + (-o); }

Matrix Matrix::operator-() const { return scaled(Scalar(-1)); }

Matrix Matrix::scaled(const Scalar& s) const {
    Matrix m = *this;
    for (auto& x : m.a_) x *= s;
    return m;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& x) const {
    if (x.size() != c_) fail("DimensionMismatch", "matrix-vector product");
    std::vector<Scalar> y(r_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j)
            if (!(*this)(i, j).is_zero() && !x[j].is_zero()) y[i] += (*this)(i, j) * x[j];
    return y;
}

bool Matrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix Matrix::substitute(const Assignment& a) const {
    Matrix m = *this;
    for (auto& x : m.a_) x = x.substitute(a);
    return m;
}

std::vector<std::vector<mpq_class>> Matrix::eval(const Assignment& a) const {
    std::vector<std::vector<mpq_class>> v(r_, std::vector<mpq_class>(c_));
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j) v[i][j] = (*this)(i, j).eval(a);
    return v;
}

std::string Matrix::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < r_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < c_; ++j) os << (j ? ", " : "") << (*this)(i, j).str();
        os << "]";
    }
    os << "]";
    return os.str();
}

Echelon row_reduce(const Matrix& m) {
    Echelon e{m, {}, {}, {}};
    Matrix& a = e.reduced;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t piv = a.rows();
        for (std::size_t i = row; i < a.rows(); ++i) {
            if (a(i, col).is_zero()) continue;
            if (a(i, col).is_constant()) {
                piv = i;
                break;
            }
            if (piv == a.rows()) piv = i;
        }
        if (piv == a.rows()) continue;
        if (piv != row)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(row, j));
        Scalar p = a(row, col);
        e.pivots.push_back(p);
        e.pivot_cols.push_back(col);
        if (!p.is_constant()) {
            std::string c = gcd(p.num(), Polynomial()).str() + " != 0";  // monic numerator
            if (std::find(e.side_conditions.begin(), e.side_conditions.end(), c) == e.side_conditions.end())
                e.side_conditions.push_back(c);
        }
        Scalar inv = p.inverse();
        for (std::size_t j = col; j < a.cols(); ++j)
            if (!a(row, j).is_zero()) a(row, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == row || a(i, col).is_zero()) continue;
            Scalar f = a(i, col);
            for (std::size_t j = col; j < a.cols(); ++j)
                if (!a(row, j).is_zero()) a(i, j) -= f * a(row, j);
        }
        ++row;
    }
    return e;
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivot_cols.size(); }

std::vector<std::vector<Scalar>> nullspace(const Matrix& m, std::vector<std::string>* side) {
    Echelon e = row_reduce(m);
    if (side) *side = e.side_conditions;
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : e.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<Scalar> v(m.cols());
        v[f] = Scalar(1);
        for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) v[e.pivot_cols[r]] = -e.reduced(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Scalar> solve(const Matrix& m, const std::vector<Scalar>& b) {
    if (b.size() != m.rows()) fail("DimensionMismatch", "solve");
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    Echelon e = row_reduce(aug);
    if (!e.pivot_cols.empty() && e.pivot_cols.back() == m.cols()) fail("Inconsistent", "no solution");
    if (e.pivot_cols.size() < m.cols()) fail("Underdetermined", "solution not unique");
    std::vector<Scalar> x(m.cols());
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) x[e.pivot_cols[r]] = e.reduced(r, m.cols());
    return x;
}

Scalar determinant(const Matrix& m) {
    if (m.rows() != m.cols()) fail("DimensionMismatch", "determinant of non-square matrix");
    Matrix a = m;
    Scalar det(1);
    std::size_t n = a.rows();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = n;
        for (std::size_t i = col; i < n; ++i)
            if (!a(i, col).is_zero()) {
                piv = i;
                break;
            }
        if (piv == n) return Scalar();
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
            det = -det;
        }
        det *= a(col, col);
        Scalar inv = a(col, col).inverse();
        for (std::size_t i = col + 1; i < n; ++i) {
            if (a(i, col).is_zero()) continue;
            Scalar f = a(i, col) * inv;
            for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
        }
    }
    return det;
}

}  // namespace lckv
