#ifndef LCKV_HERMITIAN_HPP
#define LCKV_HERMITIAN_HPP

#include "lckv/lie_algebra.hpp"

#include <string>
#include <vector>

namespace lckv {

// Complex structure given by its action M on coframe coordinates, as printed.
struct ComplexStructure {
    std::string name;
    Matrix dual;
};

// Linear map given by its coframe action: phi^*(e^j) = sum_i A(i,j) e^i.
struct Automorphism {
    std::string name;
    Matrix dual;
    std::vector<std::string> constraints;
};

// Primal operator P = -M^T acting on vectors (NotAlmostComplex unless M^2 = -Id).
Matrix dual_to_primal(const ComplexStructure& J);
// -[x,y] + [Px,Py] - P[Px,y] - P[x,Py]
Vec nijenhuis(const LieAlgebra& g, const Matrix& P, const Vec& x, const Vec& y);
bool is_complex_structure(const LieAlgebra& g, const ComplexStructure& J);

KForm pullback_form(const Matrix& A, const KForm& a);  // SingularMatrix if det A = 0
bool is_automorphism(const LieAlgebra& g, const Matrix& A);
// A commutes with the coframe action of J (dual form of A^{-1} J A = J).
bool preserves_complex_structure(const Matrix& A, const Matrix& M);

bool is_j_invariant(const KForm& omega, const ComplexStructure& J);
// G(i,j) = Omega(e_i, P e_j); NotInvariant if not symmetric.
Matrix gram_metric(const KForm& omega, const ComplexStructure& J);
// Leading principal minors of a rational matrix.
std::vector<mpq_class> leading_minors(const std::vector<std::vector<mpq_class>>& g);
bool is_positive_at(const KForm& omega, const ComplexStructure& J, const Assignment& a);

}  // namespace lckv

#endif
