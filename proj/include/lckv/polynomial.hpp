#ifndef LCKV_POLYNOMIAL_HPP
#define LCKV_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lckv {

// Parameter names are interned; a Var is a stable pointer to the name.
using Var = const std::string*;
Var intern(std::string_view name);

using Assignment = std::map<std::string, mpq_class>;

// Monomial: variables sorted by name, positive exponents only.
struct Monomial {
    std::vector<std::pair<Var, int>> f;

    int degree() const;
    int exponent(Var v) const;
    bool is_one() const { return f.empty(); }
    bool operator==(const Monomial& o) const { return f == o.f; }
};

// Graded lexicographic order, variables ranked by name ("a" before "b").
int grlex_compare(const Monomial& a, const Monomial& b);
struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex_compare(a, b) > 0; }
};

Monomial operator*(const Monomial& a, const Monomial& b);
bool divides(const Monomial& a, const Monomial& b);
Monomial quotient(const Monomial& b, const Monomial& a);  // b / a, requires divides(a, b)

class Polynomial {
public:
    using Term = std::pair<Monomial, mpq_class>;

    Polynomial() = default;
    Polynomial(const mpq_class& c);
    Polynomial(long c) : Polynomial(mpq_class(c)) {}
    static Polynomial variable(std::string_view name);
    static Polynomial monomial(Monomial m, const mpq_class& c);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }
    mpq_class constant_value() const;  // requires is_constant()
    const std::vector<Term>& terms() const { return terms_; }
    const Term& leading() const { return terms_.front(); }
    int total_degree() const;
    int degree_in(Var v) const;
    std::vector<Var> variables() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial scaled(const mpq_class& c) const;
    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // Coefficients as a univariate polynomial in v; index = power of v.
    std::vector<Polynomial> coefficients_in(Var v) const;
    static Polynomial from_coefficients(Var v, const std::vector<Polynomial>& c);

    mpq_class eval(const Assignment& a) const;  // MissingParameter if a variable is unassigned
    std::string str() const;

private:
    std::vector<Term> terms_;  // strictly decreasing in grlex, no zero coefficients
    void canonicalize(std::map<Monomial, mpq_class, GrlexGreater>& acc);
    friend Polynomial exact_divide(const Polynomial&, const Polynomial&);
};

// Exact quotient a / b; throws NotDivisible when b does not divide a.
Polynomial exact_divide(const Polynomial& a, const Polynomial& b);
// Greatest common divisor, normalized to leading coefficient 1 (gcd(0,0) = 0).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

}  // namespace lckv

#endif
