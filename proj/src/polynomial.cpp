#include "lckv/polynomial.hpp"

#include "lckv/error.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <sstream>

namespace lckv {

Var intern(std::string_view name) {
    // std::set nodes never move, so the returned pointer stays valid.
    static std::mutex mu;
    static std::set<std::string, std::less<>> names;
    std::lock_guard<std::mutex> lock(mu);
    auto it = names.find(name);
    if (it == names.end()) it = names.emplace(name).first;
    return &*it;
}

int Monomial::degree() const {
    int d = 0;
    for (const auto& [v, e] : f) d += e;
    return d;
}

int Monomial::exponent(Var v) const {
    for (const auto& [w, e] : f)
        if (w == v) return e;
    return 0;
}

int grlex_compare(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    std::size_t i = 0;
    for (; i < a.f.size() && i < b.f.size(); ++i) {
        const auto& [va, ea] = a.f[i];
        const auto& [vb, eb] = b.f[i];
        if (va != vb) return *va < *vb ? 1 : -1;  // earlier name present => larger
        if (ea != eb) return ea > eb ? 1 : -1;
    }
    if (i < a.f.size()) return 1;
    if (i < b.f.size()) return -1;
    return 0;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    std::size_t i = 0, j = 0;
    while (i < a.f.size() || j < b.f.size()) {
        if (j == b.f.size() || (i < a.f.size() && *a.f[i].first < *b.f[j].first)) {
            r.f.push_back(a.f[i++]);
        } else if (i == a.f.size() || *b.f[j].first < *a.f[i].first) {
            r.f.push_back(b.f[j++]);
        } else {
            r.f.emplace_back(a.f[i].first, a.f[i].second + b.f[j].second);
            ++i;
            ++j;
        }
    }
    return r;
}

bool divides(const Monomial& a, const Monomial& b) {
    for (const auto& [v, e] : a.f)
        if (b.exponent(v) < e) return false;
    return true;
}

Monomial quotient(const Monomial& b, const Monomial& a) {
    Monomial r;
    for (const auto& [v, e] : b.f) {
        int k = e - a.exponent(v);
        if (k > 0) r.f.emplace_back(v, k);
    }
    return r;
}

Polynomial::Polynomial(const mpq_class& c) {
    if (c != 0) terms_.emplace_back(Monomial{}, c);
}

Polynomial Polynomial::variable(std::string_view name) {
    Monomial m;
    m.f.emplace_back(intern(name), 1);
    return monomial(std::move(m), 1);
}

Polynomial Polynomial::monomial(Monomial m, const mpq_class& c) {
    Polynomial p;
    if (c != 0) p.terms_.emplace_back(std::move(m), c);
    return p;
}

mpq_class Polynomial::constant_value() const {
    if (terms_.empty()) return 0;
    if (!terms_[0].first.is_one()) fail("NotConstant", str());
    return terms_[0].second;
}

int Polynomial::total_degree() const { return terms_.empty() ? -1 : terms_.front().first.degree(); }

int Polynomial::degree_in(Var v) const {
    int d = terms_.empty() ? -1 : 0;
    for (const auto& t : terms_) d = std::max(d, t.first.exponent(v));
    return d;
}

std::vector<Var> Polynomial::variables() const {
    std::vector<Var> vs;
    for (const auto& t : terms_)
        for (const auto& [v, e] : t.first.f)
            if (std::find(vs.begin(), vs.end(), v) == vs.end()) vs.push_back(v);
    std::sort(vs.begin(), vs.end(), [](Var a, Var b) { return *a < *b; });
    return vs;
}

void Polynomial::canonicalize(std::map<Monomial, mpq_class, GrlexGreater>& acc) {
    terms_.clear();
    terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0) terms_.emplace_back(m, c);
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.terms_.empty()) return *this;
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        int c = i == terms_.size() ? -1 : j == o.terms_.size() ? 1 : grlex_compare(terms_[i].first, o.terms_[j].first);
        if (c > 0) {
            out.push_back(std::move(terms_[i++]));
        } else if (c < 0) {
            out.push_back(o.terms_[j++]);
        } else {
            mpq_class s = terms_[i].second + o.terms_[j].second;
            if (s != 0) out.emplace_back(std::move(terms_[i].first), s);
            ++i;
            ++j;
        }
    }
    terms_ = std::move(out);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (b.is_constant()) return a.scaled(b.terms_[0].second);
    if (a.is_constant()) return b.scaled(a.terms_[0].second);
    std::map<Monomial, mpq_class, GrlexGreater> acc;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) acc[ma * mb] += ca * cb;
    Polynomial r;
    r.canonicalize(acc);
    return r;
}

Polynomial Polynomial::scaled(const mpq_class& c) const {
    if (c == 0) return {};
    Polynomial r = *this;
    for (auto& t : r.terms_) t.second *= c;
    return r;
}

std::vector<Polynomial> Polynomial::coefficients_in(Var v) const {
    std::vector<Polynomial> c(std::max(degree_in(v), 0) + 1);
    for (const auto& [m, k] : terms_) {
        Monomial rest;
        int e = 0;
        for (const auto& [w, x] : m.f) {
            if (w == v) e = x;
            else rest.f.emplace_back(w, x);
        }
        c[e] += Polynomial::monomial(std::move(rest), k);
    }
    return c;
}

Polynomial Polynomial::from_coefficients(Var v, const std::vector<Polynomial>& c) {
    Polynomial r;
    for (std::size_t e = 0; e < c.size(); ++e) {
        if (c[e].is_zero()) continue;
        Monomial m;
        if (e > 0) m.f.emplace_back(v, static_cast<int>(e));
        r += c[e] * Polynomial::monomial(m, 1);
    }
    return r;
}

mpq_class Polynomial::eval(const Assignment& a) const {
    mpq_class s = 0;
    for (const auto& [m, c] : terms_) {
        mpq_class t = c;
        for (const auto& [v, e] : m.f) {
            auto it = a.find(*v);
            if (it == a.end()) fail("MissingParameter", *v);
            for (int k = 0; k < e; ++k) t *= it->second;
        }
        s += t;
    }
    return s;
}

namespace {

std::string monomial_str(const Monomial& m) {
    std::string s;
    for (const auto& [v, e] : m.f) {
        if (!s.empty()) s += "*";
        s += *v;
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

}  // namespace

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        mpq_class a = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (m.is_one()) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << monomial_str(m);
        }
    }
    return os.str();
}

Polynomial exact_divide(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) fail("DivisionByZero", "exact_divide");
    if (b.is_constant()) return a.scaled(1 / b.terms_[0].second);
    Polynomial r = a, q;
    const auto& [lm, lc] = b.leading();
    while (!r.is_zero()) {
        const auto& [rm, rc] = r.leading();
        if (!divides(lm, rm)) fail("NotDivisible", a.str() + " by " + b.str());
        Polynomial t = Polynomial::monomial(quotient(rm, lm), rc / lc);
        q += t;
        r -= t * b;
    }
    return q;
}

namespace {

Polynomial monic(const Polynomial& p) {
    if (p.is_zero()) return p;
    return p.scaled(1 / p.leading().second);
}

Polynomial content_in(const Polynomial& p, Var v) {
    Polynomial g;
    for (const auto& c : p.coefficients_in(v)) {
        if (c.is_zero()) continue;
        g = gcd(g, c);
        if (g.is_constant()) return Polynomial(1);
    }
    return g;
}

// Pseudo-remainder of a by b as univariate polynomials in v.
Polynomial prem(const Polynomial& a, const Polynomial& b, Var v) {
    auto bc = b.coefficients_in(v);
    int db = static_cast<int>(bc.size()) - 1;
    const Polynomial& lb = bc.back();
    auto r = a.coefficients_in(v);
    int da = static_cast<int>(r.size()) - 1;
    int steps = 0;
    while (static_cast<int>(r.size()) - 1 >= db && !(r.size() == 1 && r[0].is_zero())) {
        int dr = static_cast<int>(r.size()) - 1;
        Polynomial lr = r.back();
        int s = dr - db;
        for (auto& c : r) c = c * lb;
        for (int k = 0; k <= db; ++k) r[k + s] -= lr * bc[k];
        while (r.size() > 1 && r.back().is_zero()) r.pop_back();
        ++steps;
        if (dr == 0) break;
    }
    Polynomial res = Polynomial::from_coefficients(v, r);
    for (int k = steps; k < da - db + 1; ++k) res = res * lb;
    return res;
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return monic(b);
    if (b.is_zero()) return monic(a);
    if (a.is_constant() || b.is_constant()) return Polynomial(1);
    if (a == b) return monic(a);

    auto va = a.variables(), vb = b.variables();
    Var v = nullptr;
    for (Var x : va)
        if (std::find(vb.begin(), vb.end(), x) != vb.end()) {
            v = x;
            break;
        }
    if (!v) return Polynomial(1);  // a common factor could only use shared variables
    Polynomial ca = content_in(a, v), cb = content_in(b, v);
    Polynomial c = gcd(ca, cb);
    Polynomial p = monic(exact_divide(a, ca)), q = monic(exact_divide(b, cb));
    if (p.degree_in(v) < q.degree_in(v)) std::swap(p, q);
    while (true) {
        if (q.degree_in(v) == 0) {
            q = Polynomial(1);
            break;
        }
        Polynomial r = prem(p, q, v);
        if (r.is_zero()) break;
        if (r.degree_in(v) == 0) {
            q = Polynomial(1);
            break;
        }
        p = q;
        // primitive and monic: keeps both the polynomial and the rational content from growing
        q = monic(exact_divide(r, content_in(r, v)));
    }
    if (!q.is_constant()) q = exact_divide(q, content_in(q, v));
    return monic(c * q);
}

}  // namespace lckv
