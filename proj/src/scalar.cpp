#include "lckv/scalar.hpp"

#include "lckv/error.hpp"

#include <algorithm>

namespace lckv {

Scalar::Scalar(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) fail("DivisionByZero", "zero denominator");
    normalize();
}

void Scalar::normalize() {
    if (num_.is_zero()) {
        den_ = Polynomial(1);
        return;
    }
    if (!den_.is_constant()) {
        Polynomial g = gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = exact_divide(num_, g);
            den_ = exact_divide(den_, g);
        }
    }
    mpq_class lc = den_.leading().second;
    if (lc != 1) {
        num_ = num_.scaled(1 / lc);
        den_ = den_.scaled(1 / lc);
    }
}

mpq_class Scalar::constant_value() const {
    if (!is_constant()) fail("NotConstant", str());
    return num_.constant_value() / den_.constant_value();
}

std::vector<Var> Scalar::variables() const {
    auto v = num_.variables();
    for (Var x : den_.variables())
        if (std::find(v.begin(), v.end(), x) == v.end()) v.push_back(x);
    std::sort(v.begin(), v.end(), [](Var a, Var b) { return *a < *b; });
    return v;
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.num_ = -r.num_;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
        if (!den_.is_constant()) normalize();
        else if (num_.is_zero()) den_ = Polynomial(1);
        return *this;
    }
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
    if (is_zero() || o.is_zero()) return *this = Scalar();
    num_ = num_ * o.num_;
    bool plain = den_.is_constant() && o.den_.is_constant();
    den_ = den_ * o.den_;
    if (!plain) normalize();
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) fail("DivisionByZero", "inverse of 0");
    return Scalar(den_, num_);
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::pow(int e) const {
    Scalar base = e < 0 ? inverse() : *this, r(1);
    for (int k = 0; k < std::abs(e); ++k) r *= base;
    return r;
}

mpq_class Scalar::eval(const Assignment& a) const {
    mpq_class d = den_.eval(a);
    if (d == 0) fail("DenominatorVanishes", den_.str());
    return num_.eval(a) / d;
}

namespace {

Scalar substitute_poly(const Polynomial& p, const Assignment& a) {
    Scalar s;
    for (const auto& [m, c] : p.terms()) {
        Scalar t(c);
        for (const auto& [v, e] : m.f) {
            auto it = a.find(*v);
            Scalar x = it == a.end() ? Scalar::variable(*v) : Scalar(it->second);
            t *= x.pow(e);
        }
        s += t;
    }
    return s;
}

}  // namespace

Scalar Scalar::substitute(const Assignment& a) const {
    Scalar d = substitute_poly(den_, a);
    if (d.is_zero()) fail("DenominatorVanishes", den_.str());
    return substitute_poly(num_, a) / d;
}

std::string Scalar::str() const {
    if (den_ == Polynomial(1)) return num_.str();
    auto wrap = [](const Polynomial& p) {
        return p.terms().size() > 1 ? "(" + p.str() + ")" : p.str();
    };
    // a product in the denominator needs parentheses too: 1/(x*y), not 1/x*y
    std::string d = den_.str();
    if (den_.terms().size() > 1 || d.find('*') != std::string::npos) d = "(" + d + ")";
    return wrap(num_) + "/" + d;
}

mpq_class scalar_eval(const Scalar& s, const Assignment& a) { return s.eval(a); }
bool scalar_is_zero(const Scalar& s) { return s.is_zero(); }

}  // namespace lckv
