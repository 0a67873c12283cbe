#ifndef LCKV_SOLVER_HPP
#define LCKV_SOLVER_HPP

#include "lckv/hermitian.hpp"
#include "lckv/lie_algebra.hpp"

#include <string>
#include <utility>
#include <vector>

namespace lckv {

// Linear subspace of Lambda^2 described by a basis over the Scalar field.
struct SolutionSpace {
    int dim = 0;                       // dimension of the underlying Lie algebra
    std::vector<std::string> labels;   // omega12, omega13, ...
    std::vector<KForm> basis;
    std::vector<std::string> side_conditions;  // pivots assumed nonzero

    std::size_t size() const { return basis.size(); }
    // sum_i k<i> * basis[i] with fresh symbols named prefix1, prefix2, ...
    KForm generic(const std::string& prefix = "k_") const;
    std::vector<std::string> str() const;
};

// Condition matrices over the coefficients of Lambda^2 (columns in tuple order).
Matrix twisted_condition_matrix(const LieAlgebra& g, const KForm& theta);
Matrix invariance_condition_matrix(const ComplexStructure& J);

// {Omega : dOmega = theta ^ Omega}; ThetaNotClosed unless dtheta = 0.
SolutionSpace twisted_closed_space(const LieAlgebra& g, const KForm& theta);
// Intersection with the J-invariant 2-forms.
SolutionSpace lck_space(const LieAlgebra& g, const ComplexStructure& J, const KForm& theta);

// Re-check every basis form against the defining identities.
bool space_is_sound(const LieAlgebra& g, const KForm& theta, const SolutionSpace& s,
                    const ComplexStructure* J = nullptr);

// Omega(e_v, P e_v) vanishes identically on the space (v is 1-based).
bool degeneracy_certificate(const SolutionSpace& s, const ComplexStructure& J, int v);
// sum_v w_v Omega(e_v, P e_v) vanishes identically, all weights positive.
bool weighted_degeneracy_certificate(const SolutionSpace& s, const ComplexStructure& J,
                                     const std::vector<std::pair<mpq_class, int>>& terms);
// Omega^{n/2} = 0 for the generic element of the space.
bool degenerate_space(const SolutionSpace& s);

}  // namespace lckv

#endif
