#ifndef LCKV_LCK_HPP
#define LCKV_LCK_HPP

#include "lckv/expr.hpp"
#include "lckv/hermitian.hpp"
#include "lckv/lie_algebra.hpp"

#include <string>
#include <vector>

namespace lckv {

struct LcKStructure {
    KForm theta;  // degree 1
    KForm omega;  // degree 2
    ComplexStructure J;
    std::vector<Constraint> constraints;
    std::vector<Assignment> witnesses;
};

// One line of a verification report.
struct Check {
    std::string id;
    bool pass = false;
    std::string residual;  // offending term when the check fails
    std::string witness;
    std::string note;
};

struct LcKReport {
    bool theta_closed = false;
    bool twisted_closed = false;
    bool j_invariant = false;
    bool positive = false;  // at every witness
    std::vector<Check> checks;
    bool pass() const;
};

std::string witness_str(const Assignment& a);

// dtheta = 0, dOmega = theta ^ Omega, J-invariance (all identically in the
// parameters), then per witness: constraints, theta != 0, Sylvester positivity.
LcKReport verify_lck(const LieAlgebra& g, const LcKStructure& s);

struct LeeResult {
    KForm theta;
    bool closed = false;
};
// Unique theta with dOmega = theta ^ Omega (Degenerate / Inconsistent).
LeeResult lee_form(const LieAlgebra& g, const KForm& omega);

struct VaismanResult {
    bool vaisman = false;
    std::vector<mpq_class> A;  // theta(A) = 1, A orthogonal to ker theta
};
VaismanResult vaisman_test(const LieAlgebra& g, const LcKStructure& s, const Assignment& a);

// Matrix of d_theta = d - theta ^ _ from degree k to k+1 in the masks_of_degree bases.
Matrix twisted_differential(const LieAlgebra& g, const KForm& theta, int k);
// dim H^k of (Lambda^*, d_theta), k = 0..n; NotClosed when dtheta != 0.
std::vector<int> morse_novikov_betti(const LieAlgebra& g, const KForm& theta, const Assignment& a = {});

}  // namespace lckv

#endif
