#include "lckv/kform.hpp"

#include "lckv/error.hpp"

#include <algorithm>
#include <sstream>

namespace lckv {

std::vector<int> mask_indices(std::uint32_t mask) {
    std::vector<int> v;
    for (int i = 0; i < 32; ++i)
        if (mask >> i & 1u) v.push_back(i + 1);
    return v;
}

std::vector<std::uint32_t> masks_of_degree(int n, int k) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t m = 0; m < (1u << n); ++m)
        if (__builtin_popcount(m) == k) out.push_back(m);
    std::sort(out.begin(), out.end(), TupleLess{});
    return out;
}

KForm::KForm(int dim, int degree) : dim_(dim), deg_(degree) {
    if (dim < 0 || dim > 31) fail("DimensionMismatch", "dimension out of range");
    if (degree < 0) fail("DimensionMismatch", "negative degree");
}

KForm KForm::constant(int dim, const Scalar& s) {
    KForm f(dim, 0);
    f.add_term(0, s);
    return f;
}

KForm KForm::basis(int dim, const std::vector<int>& idx) {
    KForm f(dim, static_cast<int>(idx.size()));
    std::vector<int> v = idx;
    int sign = 1;
    for (int i : v)
        if (i < 1 || i > dim) fail("IndexOutOfRange", "index " + std::to_string(i));
    for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = 0; j + 1 < v.size() - i; ++j)
            if (v[j] > v[j + 1]) {
                std::swap(v[j], v[j + 1]);
                sign = -sign;
            }
    }
    std::uint32_t mask = 0;
    for (int i : v) {
        if (mask >> (i - 1) & 1u) return f;
        mask |= 1u << (i - 1);
    }
    f.add_term(mask, Scalar(sign));
    return f;
}

KForm KForm::covector(int dim, const std::vector<Scalar>& coords) {
    if (static_cast<int>(coords.size()) != dim) fail("DimensionMismatch", "covector length");
    KForm f(dim, 1);
    for (int i = 0; i < dim; ++i) f.add_term(1u << i, coords[i]);
    return f;
}

Scalar KForm::coeff(std::uint32_t mask) const {
    auto it = c_.find(mask);
    return it == c_.end() ? Scalar() : it->second;
}

Scalar KForm::coeff(const std::vector<int>& idx) const {
    std::uint32_t mask = 0;
    for (int i : idx) mask |= 1u << (i - 1);
    return coeff(mask);
}

void KForm::add_term(std::uint32_t mask, const Scalar& s) {
    if (s.is_zero()) return;
    auto [it, fresh] = c_.try_emplace(mask, s);
    if (!fresh) {
        it->second += s;
        if (it->second.is_zero()) c_.erase(it);
    }
}

std::vector<Scalar> KForm::coords() const {
    if (deg_ != 1 && !is_zero()) fail("DimensionMismatch", "coords of a non 1-form");
    std::vector<Scalar> v(dim_);
    for (const auto& [m, s] : c_) v[__builtin_ctz(m)] = s;
    return v;
}

KForm KForm::operator-() const { return scaled(Scalar(-1)); }

KForm& KForm::operator+=(const KForm& o) {
    if (o.c_.empty()) return *this;
    if (c_.empty()) return *this = o;
    if (dim_ != o.dim_ || deg_ != o.deg_) fail("DimensionMismatch", "adding forms of different type");
    for (const auto& [m, s] : o.c_) add_term(m, s);
    return *this;
}

KForm& KForm::operator-=(const KForm& o) { return *this += -o; }

KForm KForm::scaled(const Scalar& s) const {
    KForm r(dim_, deg_);
    if (s.is_zero()) return r;
    for (const auto& [m, x] : c_) r.c_.emplace(m, x * s);
    return r;
}

bool KForm::operator==(const KForm& o) const {
    if (c_.empty() && o.c_.empty()) return true;
    return dim_ == o.dim_ && deg_ == o.deg_ && c_ == o.c_;
}

namespace {

// Sign of merging disjoint ordered index sets a then b into sorted order.
int shuffle_sign(std::uint32_t a, std::uint32_t b) {
    int inv = 0;
    for (std::uint32_t m = b; m; m &= m - 1) {
        std::uint32_t bit = m & (~m + 1);
        inv += __builtin_popcount(a & ~(bit | (bit - 1)));  // elements of a above this bit
    }
    return inv % 2 ? -1 : 1;
}

}  // namespace

KForm wedge(const KForm& a, const KForm& b) {
    if (a.dim() != b.dim() && !a.is_zero() && !b.is_zero()) fail("DimensionMismatch", "wedge");
    int dim = std::max(a.dim(), b.dim());
    KForm r(dim, std::min(a.degree() + b.degree(), 31));
    if (a.degree() + b.degree() > dim) return r;
    for (const auto& [ma, sa] : a.terms())
        for (const auto& [mb, sb] : b.terms()) {
            if (ma & mb) continue;
            Scalar s = sa * sb;
            r.add_term(ma | mb, shuffle_sign(ma, mb) < 0 ? -s : s);
        }
    return r;
}

KForm interior_product(const std::vector<Scalar>& x, const KForm& a) {
    if (static_cast<int>(x.size()) != a.dim()) fail("DimensionMismatch", "interior product");
    if (a.degree() == 0) fail("DegreeZero", "contracting a 0-form");
    KForm r(a.dim(), a.degree() - 1);
    for (const auto& [m, s] : a.terms()) {
        int pos = 0;
        for (int i : mask_indices(m)) {
            if (!x[i - 1].is_zero()) {
                Scalar t = s * x[i - 1];
                r.add_term(m & ~(1u << (i - 1)), pos % 2 ? -t : t);
            }
            ++pos;
        }
    }
    return r;
}

Scalar KForm::on(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const {
    if (deg_ != 2 && !is_zero()) fail("DimensionMismatch", "evaluating a non 2-form on two vectors");
    Scalar s;
    for (const auto& [m, c] : c_) {
        auto idx = mask_indices(m);
        int i = idx[0] - 1, j = idx[1] - 1;
        Scalar v = x[i] * y[j] - x[j] * y[i];
        if (!v.is_zero()) s += c * v;
    }
    return s;
}

KForm KForm::substitute(const Assignment& a) const {
    KForm r(dim_, deg_);
    for (const auto& [m, s] : c_) r.add_term(m, s.substitute(a));
    return r;
}

namespace {

std::string atom_str(std::uint32_t mask) {
    auto idx = mask_indices(mask);
    bool small = true;
    for (int i : idx) small = small && i < 10;
    std::string s = "e";
    if (small) {
        for (int i : idx) s += std::to_string(i);
        return s;
    }
    s += "(";
    for (std::size_t k = 0; k < idx.size(); ++k) s += (k ? "," : "") + std::to_string(idx[k]);
    return s + ")";
}

}  // namespace

std::string KForm::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, s] : c_) {
        bool neg = s.num().terms().size() == 1 && s.num().leading().second < 0;
        Scalar a = neg ? -s : s;
        os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
        first = false;
        std::string cs = a.str();
        bool compound = a.den() == Polynomial(1) && a.num().terms().size() > 1;
        if (compound) cs = "(" + cs + ")";
        if (m == 0) os << cs;
        else if (a == Scalar(1)) os << atom_str(m);
        else os << cs << "*" << atom_str(m);
    }
    return os.str();
}

KForm eval_form(const Expr& e, int dim, const Assignment& subs) {
    using K = Expr::Kind;
    auto scalar_of = [&](const KForm& f) {
        if (f.is_zero()) return Scalar();
        if (f.degree() != 0) fail("ParseError", "expected a scalar, got a form");
        return f.coeff(0u);
    };
    switch (e.kind) {
    case K::Atom: return KForm::basis(dim, e.indices);
    case K::Add: return eval_form(*e.args[0], dim, subs) + eval_form(*e.args[1], dim, subs);
    case K::Sub: return eval_form(*e.args[0], dim, subs) - eval_form(*e.args[1], dim, subs);
    case K::Neg: return -eval_form(*e.args[0], dim, subs);
    case K::Mul: return wedge(eval_form(*e.args[0], dim, subs), eval_form(*e.args[1], dim, subs));
    case K::Div: {
        Scalar d = scalar_of(eval_form(*e.args[1], dim, subs));
        return eval_form(*e.args[0], dim, subs).scaled(d.inverse());
    }
    default: return KForm::constant(dim, eval_scalar(e, subs));
    }
}

KForm parse_form(const std::string& src, int dim, const Assignment& subs) {
    return eval_form(*parse_expr(src), dim, subs);
}

}  // namespace lckv
