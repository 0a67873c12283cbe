#include "lckv/lie_algebra.hpp"

#include "lckv/error.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace lckv {

Vec unit(int n, int i) {
    Vec v(n);
    v[i] = Scalar(1);
    return v;
}

LieAlgebra::LieAlgebra(std::string name, std::vector<KForm> d, std::vector<Parameter> params)
    : name_(std::move(name)), n_(static_cast<int>(d.size())), d_(std::move(d)), params_(std::move(params)) {
    c_.assign(static_cast<std::size_t>(n_) * n_ * n_, Scalar());
    for (int k = 0; k < n_; ++k) {
        if (d_[k].is_zero()) d_[k] = KForm(n_, 2);
        if (d_[k].dim() != n_ || d_[k].degree() != 2) fail("DimensionMismatch", "de^" + std::to_string(k + 1));
        for (const auto& [m, s] : d_[k].terms()) {
            auto idx = mask_indices(m);
            int i = idx[0] - 1, j = idx[1] - 1;
            c_[(k * n_ + i) * n_ + j] = -s;
            c_[(k * n_ + j) * n_ + i] = s;
        }
    }
}

LieAlgebra LieAlgebra::substitute(const Assignment& a) const {
    std::vector<KForm> d;
    for (const auto& f : d_) d.push_back(f.substitute(a));
    return LieAlgebra(name_, std::move(d), params_);
}

namespace {

bool is_index_literal(const Expr& e) {
    return e.kind == Expr::Kind::Number && e.text.size() == 2 &&
           std::all_of(e.text.begin(), e.text.end(), [](char c) { return c >= '1' && c <= '9'; });
}

void collect_terms(const Expr& e, int sign, int n, const Assignment& none, KForm& out) {
    using K = Expr::Kind;
    auto atom = [&](const Expr& a) -> KForm {
        if (is_index_literal(a)) return KForm::basis(n, {a.text[0] - '0', a.text[1] - '0'});
        if (a.kind == K::Atom) return KForm::basis(n, a.indices);
        fail("ParseError", "term does not end in an index pair");
    };
    auto check = [&](const KForm& f, const Expr& a) {
        if (f.degree() != 2) fail("ParseError", "atom of degree " + std::to_string(f.degree()));
        std::vector<int> idx = is_index_literal(a) ? std::vector<int>{a.text[0] - '0', a.text[1] - '0'} : a.indices;
        if (idx[0] >= idx[1]) fail("IndexOutOfRange", "atom indices must increase");
    };
    switch (e.kind) {
    case K::Add:
        collect_terms(*e.args[0], sign, n, none, out);
        collect_terms(*e.args[1], sign, n, none, out);
        return;
    case K::Sub:
        collect_terms(*e.args[0], sign, n, none, out);
        collect_terms(*e.args[1], -sign, n, none, out);
        return;
    case K::Neg: collect_terms(*e.args[0], -sign, n, none, out); return;
    case K::Number:
        if (e.value == 0) return;
        [[fallthrough]];
    case K::Atom: {
        KForm f = atom(e);
        check(f, e);
        out += f.scaled(Scalar(sign));
        return;
    }
    case K::Mul: {
        const Expr& last = *e.args[1];
        KForm f = atom(last);
        check(f, last);
        out += f.scaled(eval_scalar(*e.args[0], none) * Scalar(sign));
        return;
    }
    default: fail("ParseError", "unsupported term in structure equation");
    }
}

std::vector<std::string> split_top(const std::string& s) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char ch : s) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (ch == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

void symbols_of(const Expr& e, std::set<std::string>& out) {
    if (e.kind == Expr::Kind::Symbol) out.insert(e.text);
    for (const auto& a : e.args) symbols_of(*a, out);
}

}  // namespace

LieAlgebra parse_salamon(const std::string& spec, const std::vector<Parameter>& params, const std::string& name) {
    std::set<std::string> declared;
    for (const auto& p : params)
        if (!declared.insert(p.name).second) fail("DuplicateParameter", p.name);
    auto entries = split_top(spec);
    int n = static_cast<int>(entries.size());
    std::vector<KForm> d;
    for (const auto& entry : entries) {
        auto e = parse_expr(entry);
        if (!params.empty()) {
            std::set<std::string> used;
            symbols_of(*e, used);
            for (const auto& s : used)
                if (!declared.count(s)) fail("ParseError", "undeclared parameter '" + s + "'");
        }
        KForm f(n, 2);
        collect_terms(*e, 1, n, {}, f);
        d.push_back(f);
    }
    return LieAlgebra(name.empty() ? spec : name, std::move(d), params);
}

LieAlgebra from_brackets(const std::string& name, const std::vector<std::vector<Vec>>& br, std::vector<Parameter> params) {
    int n = static_cast<int>(br.size());
    std::vector<KForm> d(n, KForm(n, 2));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const Vec& v = br[i][j];
            if (v.empty()) continue;
            for (int k = 0; k < n; ++k)
                if (!v[k].is_zero()) d[k] += KForm::basis(n, {i + 1, j + 1}).scaled(-v[k]);
        }
    return LieAlgebra(name, std::move(d), std::move(params));
}

KForm ce_d(const LieAlgebra& g, const KForm& a) {
    int n = g.dim();
    if (a.dim() != n && !a.is_zero()) fail("DimensionMismatch", "ce_d");
    KForm r(n, a.degree() + 1);
    for (const auto& [m, s] : a.terms()) {
        auto idx = mask_indices(m);
        for (std::size_t p = 0; p < idx.size(); ++p) {
            const KForm& dp = g.d_coframe()[idx[p] - 1];
            if (dp.is_zero()) continue;
            std::vector<int> pre(idx.begin(), idx.begin() + p), post(idx.begin() + p + 1, idx.end());
            KForm t = wedge(wedge(KForm::basis(n, pre), dp), KForm::basis(n, post));
            r += t.scaled(p % 2 ? -s : s);
        }
    }
    return r;
}

bool jacobi_holds(const LieAlgebra& g) {
    for (const auto& dk : g.d_coframe())
        if (!ce_d(g, dk).is_zero()) return false;
    return true;
}

Vec bracket(const LieAlgebra& g, const Vec& x, const Vec& y) {
    int n = g.dim();
    Vec r(n);
    for (int i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < n; ++j) {
            if (y[j].is_zero() || i == j) continue;
            Scalar xy = x[i] * y[j];
            for (int k = 0; k < n; ++k)
                if (!g.c(k, i, j).is_zero()) r[k] += g.c(k, i, j) * xy;
        }
    }
    return r;
}

Matrix ad_matrix(const LieAlgebra& g, const Vec& x) {
    int n = g.dim();
    Matrix m(n, n);
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i)
                if (!x[i].is_zero() && !g.c(k, i, j).is_zero()) m(k, j) += x[i] * g.c(k, i, j);
    return m;
}

std::vector<Vec> center(const LieAlgebra& g, const Assignment& a) {
    int n = g.dim();
    Matrix m(static_cast<std::size_t>(n) * n, n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i) {
                Scalar v = g.c(k, i, j).substitute(a);
                if (!v.is_constant()) fail("ParametersNotInstantiated", v.str());
                m(j * n + k, i) = v;
            }
    return nullspace(m);
}

Scalar unimodular_character(const LieAlgebra& g, const Vec& x) {
    Matrix ad = ad_matrix(g, x);
    Scalar t;
    for (int i = 0; i < g.dim(); ++i) t += ad(i, i);
    return t;
}

}  // namespace lckv
