#include "lckv/hermitian.hpp"

#include "lckv/error.hpp"

namespace lckv {

Matrix dual_to_primal(const ComplexStructure& J) {
    const Matrix& M = J.dual;
    if (M.rows() != M.cols() || M.rows() % 2) fail("NotAlmostComplex", J.name + ": not an even square matrix");
    if (!(M * M + Matrix::identity(M.rows())).is_zero()) fail("NotAlmostComplex", J.name + ": M^2 != -Id");
    return -M.transpose();
}

Vec nijenhuis(const LieAlgebra& g, const Matrix& P, const Vec& x, const Vec& y) {
    Vec px = P.apply(x), py = P.apply(y);
    Vec a = bracket(g, x, y), b = bracket(g, px, py);
    Vec c = P.apply(bracket(g, px, y)), d = P.apply(bracket(g, x, py));
    Vec r(x.size());
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = b[k] - a[k] - c[k] - d[k];
    return r;
}

bool is_complex_structure(const LieAlgebra& g, const ComplexStructure& J) {
    int n = g.dim();
    if (static_cast<int>(J.dual.rows()) != n || n % 2) return false;
    if (!(J.dual * J.dual + Matrix::identity(n)).is_zero()) return false;
    Matrix P = -J.dual.transpose();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (const auto& s : nijenhuis(g, P, unit(n, i), unit(n, j)))
                if (!s.is_zero()) return false;
    return true;
}

KForm pullback_form(const Matrix& A, const KForm& a) {
    int n = static_cast<int>(A.rows());
    if (A.cols() != A.rows() || (a.dim() != n && !a.is_zero())) fail("DimensionMismatch", "pullback");
    if (determinant(A).is_zero()) fail("SingularMatrix", "pullback along a singular map");
    std::vector<KForm> img;
    for (int j = 0; j < n; ++j) {
        Vec col(n);
        for (int i = 0; i < n; ++i) col[i] = A(i, j);
        img.push_back(KForm::covector(n, col));
    }
    KForm r(n, a.degree());
    for (const auto& [m, s] : a.terms()) {
        KForm t = KForm::constant(n, s);
        for (int j : mask_indices(m)) t = wedge(t, img[j - 1]);
        r += t;
    }
    return r;
}

bool is_automorphism(const LieAlgebra& g, const Matrix& A) {
    int n = g.dim();
    if (determinant(A).is_zero()) fail("SingularMatrix", "automorphism candidate is singular");
    for (int k = 0; k < n; ++k) {
        Vec col(n);
        for (int i = 0; i < n; ++i) col[i] = A(i, k);
        if (pullback_form(A, g.d_coframe()[k]) != ce_d(g, KForm::covector(n, col))) return false;
    }
    return true;
}

bool preserves_complex_structure(const Matrix& A, const Matrix& M) { return (A * M - M * A).is_zero(); }

bool is_j_invariant(const KForm& omega, const ComplexStructure& J) {
    Matrix P = dual_to_primal(J);
    int n = static_cast<int>(P.rows());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Vec pi = P.apply(unit(n, i)), pj = P.apply(unit(n, j));
            if (omega.on(pi, pj) != omega.on(unit(n, i), unit(n, j))) return false;
        }
    return true;
}

Matrix gram_metric(const KForm& omega, const ComplexStructure& J) {
    Matrix P = dual_to_primal(J);
    int n = static_cast<int>(P.rows());
    Matrix G(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) G(i, j) = omega.on(unit(n, i), P.apply(unit(n, j)));
    if (!(G - G.transpose()).is_zero()) fail("NotInvariant", "Gram matrix is not symmetric");
    return G;
}

std::vector<mpq_class> leading_minors(const std::vector<std::vector<mpq_class>>& g) {
    // each minor by exact elimination on its k x k leading block
    std::size_t n = g.size();
    std::vector<mpq_class> minors;
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<std::vector<mpq_class>> a(k, std::vector<mpq_class>(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) a[i][j] = g[i][j];
        mpq_class det = 1;
        for (std::size_t c = 0; c < k && det != 0; ++c) {
            std::size_t p = c;
            while (p < k && a[p][c] == 0) ++p;
            if (p == k) {
                det = 0;
                break;
            }
            if (p != c) {
                std::swap(a[p], a[c]);
                det = -det;
            }
            det *= a[c][c];
            for (std::size_t i = c + 1; i < k; ++i) {
                if (a[i][c] == 0) continue;
                mpq_class f = a[i][c] / a[c][c];
                for (std::size_t j = c; j < k; ++j) a[i][j] -= f * a[c][j];
            }
        }
        minors.push_back(det);
    }
    return minors;
}

bool is_positive_at(const KForm& omega, const ComplexStructure& J, const Assignment& a) {
    ComplexStructure Ja{J.name, J.dual.substitute(a)};
    auto G = gram_metric(omega.substitute(a), Ja).eval(a);
    for (const auto& m : leading_minors(G))
        if (m <= 0) return false;
    return true;
}

}  // namespace lckv
