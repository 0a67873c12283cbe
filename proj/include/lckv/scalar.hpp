#ifndef LCKV_SCALAR_HPP
#define LCKV_SCALAR_HPP

#include "lckv/polynomial.hpp"

#include <string>

namespace lckv {

// Element of Q(p1..pm): reduced fraction with monic denominator.
class Scalar {
public:
    Scalar() : den_(1) {}
    Scalar(long c) : num_(c), den_(1) {}
    Scalar(const mpq_class& c) : num_(c), den_(1) {}
    Scalar(Polynomial p) : num_(std::move(p)), den_(1) {}
    Scalar(Polynomial num, Polynomial den);
    static Scalar variable(std::string_view name) { return Scalar(Polynomial::variable(name)); }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    mpq_class constant_value() const;  // requires is_constant()
    std::vector<Var> variables() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    Scalar inverse() const;
    Scalar pow(int e) const;

    bool operator==(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Exact value at a point; DenominatorVanishes / MissingParameter on bad input.
    mpq_class eval(const Assignment& a) const;
    // Substitute the assigned parameters, keeping the others symbolic.
    Scalar substitute(const Assignment& a) const;
    std::string str() const;

private:
    Polynomial num_, den_;
    void normalize();
};

mpq_class scalar_eval(const Scalar& s, const Assignment& a);
bool scalar_is_zero(const Scalar& s);

}  // namespace lckv

#endif
