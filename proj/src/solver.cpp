#include "lckv/solver.hpp"

#include "lckv/error.hpp"

#include <map>

namespace lckv {

namespace {

std::string label(std::uint32_t m) {
    auto idx = mask_indices(m);
    if (idx[1] < 10) return "omega" + std::to_string(idx[0]) + std::to_string(idx[1]);
    return "omega" + std::to_string(idx[0]) + "_" + std::to_string(idx[1]);
}

SolutionSpace space_from(int n, const Matrix& conditions) {
    SolutionSpace s;
    s.dim = n;
    auto cols = masks_of_degree(n, 2);
    for (auto m : cols) s.labels.push_back(label(m));
    for (const auto& v : nullspace(conditions, &s.side_conditions)) {
        KForm f(n, 2);
        for (std::size_t c = 0; c < cols.size(); ++c) f.add_term(cols[c], v[c]);
        s.basis.push_back(f);
    }
    return s;
}

Matrix stack(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, j) = b(i, j);
    return m;
}

void require_closed(const LieAlgebra& g, const KForm& theta) {
    KForm d = ce_d(g, theta);
    if (!d.is_zero()) fail("ThetaNotClosed", "d theta = " + d.str());
}

}  // namespace

KForm SolutionSpace::generic(const std::string& prefix) const {
    KForm f(dim, 2);
    for (std::size_t i = 0; i < basis.size(); ++i)
        f += basis[i].scaled(Scalar::variable(prefix + std::to_string(i + 1)));
    return f;
}

std::vector<std::string> SolutionSpace::str() const {
    std::vector<std::string> out;
    for (const auto& b : basis) out.push_back(b.str());
    return out;
}

Matrix twisted_condition_matrix(const LieAlgebra& g, const KForm& theta) {
    int n = g.dim();
    auto cols = masks_of_degree(n, 2), rows = masks_of_degree(n, 3);
    std::map<std::uint32_t, std::size_t> row_of;
    for (std::size_t i = 0; i < rows.size(); ++i) row_of[rows[i]] = i;
    Matrix m(rows.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        KForm e = KForm::basis(n, mask_indices(cols[c]));
        KForm img = ce_d(g, e) - wedge(theta, e);
        for (const auto& [mask, v] : img.terms()) m(row_of[mask], c) = v;
    }
    return m;
}

Matrix invariance_condition_matrix(const ComplexStructure& J) {
    Matrix P = dual_to_primal(J);
    int n = static_cast<int>(P.rows());
    auto cols = masks_of_degree(n, 2);
    Matrix m(cols.size(), cols.size());
    for (std::size_t r = 0; r < cols.size(); ++r) {
        auto ij = mask_indices(cols[r]);
        Vec x = unit(n, ij[0] - 1), y = unit(n, ij[1] - 1);
        Vec px = P.apply(x), py = P.apply(y);
        for (std::size_t c = 0; c < cols.size(); ++c) {
            KForm e = KForm::basis(n, mask_indices(cols[c]));
            m(r, c) = e.on(px, py) - e.on(x, y);
        }
    }
    return m;
}

SolutionSpace twisted_closed_space(const LieAlgebra& g, const KForm& theta) {
    require_closed(g, theta);
    return space_from(g.dim(), twisted_condition_matrix(g, theta));
}

SolutionSpace lck_space(const LieAlgebra& g, const ComplexStructure& J, const KForm& theta) {
    require_closed(g, theta);
    return space_from(g.dim(), stack(twisted_condition_matrix(g, theta), invariance_condition_matrix(J)));
}

bool space_is_sound(const LieAlgebra& g, const KForm& theta, const SolutionSpace& s, const ComplexStructure* J) {
    for (const auto& b : s.basis) {
        if (!(ce_d(g, b) - wedge(theta, b)).is_zero()) return false;
        if (J && !is_j_invariant(b, *J)) return false;
    }
    return true;
}

bool degeneracy_certificate(const SolutionSpace& s, const ComplexStructure& J, int v) {
    if (v < 1 || v > s.dim) fail("IndexOutOfRange", "basis vector " + std::to_string(v));
    Matrix P = dual_to_primal(J);
    Vec e = unit(s.dim, v - 1), pe = P.apply(e);
    for (const auto& b : s.basis)
        if (!b.on(e, pe).is_zero()) return false;
    return true;
}

bool weighted_degeneracy_certificate(const SolutionSpace& s, const ComplexStructure& J,
                                     const std::vector<std::pair<mpq_class, int>>& terms) {
    if (terms.empty()) fail("InvalidCertificate", "empty combination");
    Matrix P = dual_to_primal(J);
    for (const auto& [w, v] : terms) {
        if (w <= 0) fail("InvalidCertificate", "weights must be positive");
        if (v < 1 || v > s.dim) fail("IndexOutOfRange", "basis vector " + std::to_string(v));
    }
    for (const auto& b : s.basis) {
        Scalar t;
        for (const auto& [w, v] : terms) {
            Vec e = unit(s.dim, v - 1);
            t += b.on(e, P.apply(e)) * Scalar(w);
        }
        if (!t.is_zero()) return false;
    }
    return true;
}

bool degenerate_space(const SolutionSpace& s) {
    KForm w = s.generic();
    KForm top = KForm::constant(s.dim, Scalar(1));
    for (int k = 0; k < s.dim / 2; ++k) top = wedge(top, w);
    return top.is_zero();
}

}  // namespace lckv
