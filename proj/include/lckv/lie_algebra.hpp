#ifndef LCKV_LIE_ALGEBRA_HPP
#define LCKV_LIE_ALGEBRA_HPP

#include "lckv/expr.hpp"
#include "lckv/kform.hpp"
#include "lckv/matrix.hpp"

#include <string>
#include <vector>

namespace lckv {

using Vec = std::vector<Scalar>;

struct Parameter {
    std::string name;
    std::vector<std::string> constraints;  // e.g. "gamma > 0"
};

// Lie algebra presented by its structure equations de^1..de^n.
class LieAlgebra {
public:
    LieAlgebra() = default;
    LieAlgebra(std::string name, std::vector<KForm> d, std::vector<Parameter> params = {});

    int dim() const { return n_; }
    const std::string& name() const { return name_; }
    const std::vector<KForm>& d_coframe() const { return d_; }
    const std::vector<Parameter>& parameters() const { return params_; }
    // c^k_{ij} with e^k([e_i,e_j]) = -de^k(e_i,e_j); 0-based indices.
    const Scalar& c(int k, int i, int j) const { return c_[(k * n_ + i) * n_ + j]; }
    LieAlgebra substitute(const Assignment& a) const;

private:
    std::string name_;
    int n_ = 0;
    std::vector<KForm> d_;
    std::vector<Parameter> params_;
    std::vector<Scalar> c_;
};

// "0,0,-12,0" style; the last factor of each term is a two-digit index
// literal ("14", "(1-l)*24") or an explicit atom (e(1,10)).
LieAlgebra parse_salamon(const std::string& spec, const std::vector<Parameter>& params = {},
                         const std::string& name = "");
// Build from brackets: br[i][j] = coordinates of [e_i, e_j] (0-based, i<j used).
LieAlgebra from_brackets(const std::string& name, const std::vector<std::vector<Vec>>& br,
                         std::vector<Parameter> params = {});

KForm ce_d(const LieAlgebra& g, const KForm& a);
bool jacobi_holds(const LieAlgebra& g);
Vec bracket(const LieAlgebra& g, const Vec& x, const Vec& y);
Matrix ad_matrix(const LieAlgebra& g, const Vec& x);
// Basis of the center at a full instantiation (ParametersNotInstantiated otherwise).
std::vector<Vec> center(const LieAlgebra& g, const Assignment& a = {});
Scalar unimodular_character(const LieAlgebra& g, const Vec& x);

Vec unit(int n, int i);  // e_{i+1}

}  // namespace lckv

#endif
