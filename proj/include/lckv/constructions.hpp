#ifndef LCKV_CONSTRUCTIONS_HPP
#define LCKV_CONSTRUCTIONS_HPP

#include "lckv/catalog.hpp"
#include "lckv/lck.hpp"

#include <string>
#include <vector>

namespace lckv {

// h x|_D R with the new generator T appended last and [T, X] = D X
// (D acts on vectors, D(i,j) = e^i(D e_j)). NotADerivation.
LieAlgebra semidirect_extension(const LieAlgebra& h, const Matrix& D);
// h x|_pi R^m, the module basis appended after the basis of h and
// [X, v] = pi(X) v. pi holds one m x m matrix per basis vector of h. NotARepresentation.
LieAlgebra semidirect_extension(const LieAlgebra& h, const std::vector<Matrix>& pi);

// Fiber R^{2n} with basis u1, v1, .., un, vn, J0 u_i = v_i and omega0 = sum u^i ^ v^i.
struct LcKExtensionSpec {
    LieAlgebra base;
    LcKStructure structure;
    int n = 1;
    std::vector<Matrix> rho;  // one skew 2n x 2n matrix per basis vector of the base
};

struct BuiltStructure {
    LieAlgebra algebra;
    LcKStructure structure;
};

struct LcKExtension : BuiltStructure {
    bool rho_kills_derived = false;  // rho vanishes on [h, h]
};

Matrix fiber_complex_structure(int n);  // J0 acting on vectors
// pi(X) = -1/2 theta(X) Id + rho(X); RhoNotSkew, RhoNotCommuting, NotARepresentation.
std::vector<Matrix> extension_representation(const LcKExtensionSpec& spec);
// Theta extended by zero, Omega + sum u^i ^ v^i, J block-diagonal. The result is
// run through verify_lck and ConstructionFailed is raised if any check fails.
LcKExtension lck_extension(const LcKExtensionSpec& spec);
// tr ad_X = n theta(X) for every X of the base, compared against the trace
// form of the extended algebra (CrossCheckFailed if the two disagree).
bool unimodularity_check(const LcKExtensionSpec& spec);

// Oeljeklaus-Toma algebra in the basis x1..xn, y1..yn, z1, z2.
BuiltStructure ot_algebra(int n, const std::vector<mpq_class>& c);
// aff(R)^n (basis e1, f1, .., en, fn) with its lcK structure and the
// rotations c_i on the plane R^2.
LcKExtensionSpec aff_extension_spec(int n, const std::vector<mpq_class>& c);
// Vector map phi: e_i -> x_i, f_i -> y_i, u_i -> z_i.
Matrix ot_identification(int n);
// Lie isomorphism between two algebras given by a vector map (columns are images).
bool is_isomorphism(const LieAlgebra& from, const LieAlgebra& to, const Matrix& L);
// phi is an isomorphism that intertwines J and carries theta and Omega across.
bool ot_phi_check(int n, const std::vector<mpq_class>& c);

// d'_{4,delta} with theta = mu e4, Omega = sigma (e12 - (delta+mu) e34), and
// rho(e4) the block rotations a_i. Any of delta, mu, sigma, a1.. may be fixed;
// the rest stay symbolic and get two witness points.
LcKExtensionSpec dprime4_extension_spec(int n, const Assignment& fixed = {});

struct CoKaehlerData {
    LieAlgebra h;  // dimension 2n-1
    Vec eta;       // 1-form coefficients
    Vec xi;
    Matrix Phi;     // on vectors
    Matrix metric;  // Gram matrix of g
    Matrix D;       // derivation, on vectors
    Scalar alpha;
    std::vector<Assignment> witnesses{Assignment{}};
};

struct CoKaehlerCheck {
    std::string id;  // cK1..cK5, metric, derivation, D-omega, D-eta, D-xi, D-Phi, alpha
    bool pass = false;
};
// Every hypothesis of the mapping-torus construction, in order.
std::vector<CoKaehlerCheck> cokahler_conditions(const CoKaehlerData& d);

// g = h x|_D R with theta = -alpha t, J(X, a) = (Phi X - a xi, eta(X)) and
// Omega = -(omega + eta ^ theta), omega = g(_, Phi _). The overall sign makes
// Omega(x, Jx) > 0 for alpha > 0.
// NotCoKaehler (cK1..cK5), NotADerivation, DNotCompatible, AlphaZero, NotPositive.
BuiltStructure cokahler_mapping_torus(const CoKaehlerData& d);

// R^2 x|_B R xi with B a rotation, the standard coKaehler structure and
// D = dilation * Id + rotation on R^2, D xi = 0. With dilation = alpha/2 the
// data satisfies D omega = alpha omega.
CoKaehlerData cokahler_example(const mpq_class& alpha, const mpq_class& dilation);
CoKaehlerData cokahler_example(const mpq_class& alpha);

// Check a stored identification of a constructed structure with a catalog
// entry: L is an isomorphism, it carries J to the recorded complex structure,
// and the transported structure passes verify_lck on the entry's algebra.
struct IdentificationReport {
    bool isomorphism = false;
    bool complex_structure = false;
    bool lck = false;
    KForm theta, omega;  // transported
    bool pass() const { return isomorphism && complex_structure && lck; }
};
IdentificationReport check_identification(const CatalogEntry& e, const IdentificationRecord& r,
                                          const BuiltStructure& built, const Assignment& params);

}  // namespace lckv

#endif
