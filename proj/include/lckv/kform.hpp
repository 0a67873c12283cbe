#ifndef LCKV_KFORM_HPP
#define LCKV_KFORM_HPP

#include "lckv/expr.hpp"
#include "lckv/scalar.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace lckv {

// Index set {i1<..<ik} (1-based) stored as bit (i-1); ordered as tuples.
struct TupleLess {
    bool operator()(std::uint32_t a, std::uint32_t b) const {
        if (a == b) return false;
        int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
        if (pa != pb) return pa < pb;
        std::uint32_t x = a ^ b;
        return (a & x & (~x + 1)) != 0;
    }
};

std::vector<int> mask_indices(std::uint32_t mask);
// All k-subsets of {1..n} in tuple order.
std::vector<std::uint32_t> masks_of_degree(int n, int k);

class KForm {
public:
    KForm() = default;
    KForm(int dim, int degree);
    static KForm constant(int dim, const Scalar& s);
    // e^{i1} ^ ... ^ e^{ik} for arbitrary (unsorted) indices; zero on repeats.
    static KForm basis(int dim, const std::vector<int>& idx);
    static KForm covector(int dim, const std::vector<Scalar>& coords);

    int dim() const { return dim_; }
    int degree() const { return deg_; }
    bool is_zero() const { return c_.empty(); }
    const std::map<std::uint32_t, Scalar, TupleLess>& terms() const { return c_; }
    Scalar coeff(const std::vector<int>& sorted_idx) const;
    Scalar coeff(std::uint32_t mask) const;
    void add_term(std::uint32_t mask, const Scalar& s);
    std::vector<Scalar> coords() const;  // 1-forms: (a_1..a_n)

    KForm operator-() const;
    KForm& operator+=(const KForm& o);
    KForm& operator-=(const KForm& o);
    friend KForm operator+(KForm a, const KForm& b) { return a += b; }
    friend KForm operator-(KForm a, const KForm& b) { return a -= b; }
    KForm scaled(const Scalar& s) const;
    bool operator==(const KForm& o) const;
    bool operator!=(const KForm& o) const { return !(*this == o); }

    // Value of a 2-form on a pair of vectors.
    Scalar on(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const;
    KForm substitute(const Assignment& a) const;
    std::string str() const;

private:
    int dim_ = 0, deg_ = 0;
    std::map<std::uint32_t, Scalar, TupleLess> c_;
};

KForm wedge(const KForm& a, const KForm& b);
KForm interior_product(const std::vector<Scalar>& x, const KForm& a);

// Evaluate a form expression ("s*e12 + e34", "theta1*e1 + e(2)") in dimension n.
KForm eval_form(const Expr& e, int dim, const Assignment& subs = {});
KForm parse_form(const std::string& src, int dim, const Assignment& subs = {});

}  // namespace lckv

#endif
