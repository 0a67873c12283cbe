#include "lckv/constructions.hpp"

#include "lckv/error.hpp"

namespace lckv {

namespace {

using Brackets = std::vector<std::vector<Vec>>;

Brackets empty_brackets(int n) { return Brackets(n, std::vector<Vec>(n)); }

Vec padded(const Vec& v, int n) {
    Vec r(n);
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i];
    return r;
}

Vec column(const Matrix& m, std::size_t j) {
    Vec c(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) c[i] = m(i, j);
    return c;
}

Matrix from_columns(const std::vector<Vec>& cols) {
    Matrix m(cols.empty() ? 0 : cols[0].size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < cols[j].size(); ++i) m(i, j) = cols[j][i];
    return m;
}

Matrix inverse(const Matrix& m) {
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < m.rows(); ++j) cols.push_back(solve(m, unit(static_cast<int>(m.rows()), static_cast<int>(j))));
    return from_columns(cols);
}

bool same(const Vec& a, const Vec& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

// Copy a form into a larger space; the first basis vectors are shared.
KForm embed(const KForm& f, int n) {
    KForm r(n, f.degree());
    for (const auto& [m, c] : f.terms()) r.add_term(m, c);
    return r;
}

KForm two_form(const Matrix& w) {
    int n = static_cast<int>(w.rows());
    KForm f(n, 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) f += KForm::basis(n, {i + 1, j + 1}).scaled(w(i, j));
    return f;
}

ComplexStructure from_primal(std::string name, const Matrix& P) { return {std::move(name), -P.transpose()}; }

void assert_lck(const LieAlgebra& g, const LcKStructure& s, const std::string& what) {
    if (!is_complex_structure(g, s.J)) fail("ConstructionFailed", what + ": J is not integrable");
    LcKReport r = verify_lck(g, s);
    for (const auto& c : r.checks)
        if (!c.pass) fail("ConstructionFailed", what + ": " + c.id + " " + c.residual + (c.witness.empty() ? "" : " at " + c.witness));
}

}  // namespace

LieAlgebra semidirect_extension(const LieAlgebra& h, const Matrix& D) {
    int n = h.dim();
    if (static_cast<int>(D.rows()) != n || static_cast<int>(D.cols()) != n) fail("DimensionMismatch", "derivation size");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Vec x = unit(n, i), y = unit(n, j);
            Vec lhs = D.apply(bracket(h, x, y));
            Vec a = bracket(h, D.apply(x), y), b = bracket(h, x, D.apply(y));
            for (int k = 0; k < n; ++k) a[k] += b[k];
            if (!same(lhs, a))
                fail("NotADerivation", "D[e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) + "] != [De,e] + [e,De]");
        }
    Brackets br = empty_brackets(n + 1);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) br[i][j] = padded(bracket(h, unit(n, i), unit(n, j)), n + 1);
        Vec dx = D.apply(unit(n, i));
        Vec v(n + 1);
        for (int k = 0; k < n; ++k) v[k] = -dx[k];  // [e_i, T] = -D e_i
        br[i][n] = v;
    }
    return from_brackets(h.name() + " x| R", br, h.parameters());
}

LieAlgebra semidirect_extension(const LieAlgebra& h, const std::vector<Matrix>& pi) {
    int n = h.dim();
    if (static_cast<int>(pi.size()) != n) fail("DimensionMismatch", "one matrix per basis vector expected");
    int m = static_cast<int>(pi[0].rows());
    for (const auto& p : pi)
        if (static_cast<int>(p.rows()) != m || static_cast<int>(p.cols()) != m) fail("DimensionMismatch", "module matrices");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Vec b = bracket(h, unit(n, i), unit(n, j));
            Matrix lhs(m, m);
            for (int k = 0; k < n; ++k)
                if (!b[k].is_zero()) lhs = lhs + pi[k].scaled(b[k]);
            if (!(lhs - (pi[i] * pi[j] - pi[j] * pi[i])).is_zero())
                fail("NotARepresentation",
                     "pi[e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) + "] != [pi(e" + std::to_string(i + 1) +
                         "), pi(e" + std::to_string(j + 1) + ")]");
        }
    int N = n + m;
    Brackets br = empty_brackets(N);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) br[i][j] = padded(bracket(h, unit(n, i), unit(n, j)), N);
        for (int a = 0; a < m; ++a) {
            Vec v(N);
            for (int k = 0; k < m; ++k) v[n + k] = pi[i](k, a);
            br[i][n + a] = v;
        }
    }
    return from_brackets(h.name() + " x| R^" + std::to_string(m), br, h.parameters());
}

Matrix fiber_complex_structure(int n) {
    Matrix P(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
        P(2 * i + 1, 2 * i) = Scalar(1);
        P(2 * i, 2 * i + 1) = Scalar(-1);
    }
    return P;
}

std::vector<Matrix> extension_representation(const LcKExtensionSpec& spec) {
    int n = spec.base.dim(), m = 2 * spec.n;
    if (spec.n < 1) fail("DimensionMismatch", "fiber dimension must be positive");
    if (static_cast<int>(spec.rho.size()) != n) fail("DimensionMismatch", "rho needs one matrix per base vector");
    Matrix J0 = fiber_complex_structure(spec.n);
    Vec th = padded(spec.structure.theta.coords(), n);
    std::vector<Matrix> pi;
    for (int i = 0; i < n; ++i) {
        const Matrix& r = spec.rho[i];
        if (static_cast<int>(r.rows()) != m || static_cast<int>(r.cols()) != m) fail("DimensionMismatch", "rho size");
        std::string at = "rho(e" + std::to_string(i + 1) + ")";
        if (!(r.transpose() + r).is_zero()) fail("RhoNotSkew", at);
        if (!(r * J0 - J0 * r).is_zero()) fail("RhoNotCommuting", at + " does not commute with J0");
        pi.push_back(Matrix::identity(m).scaled(th[i] * Scalar(mpq_class(-1, 2))) + r);
    }
    return pi;
}

LcKExtension lck_extension(const LcKExtensionSpec& spec) {
    auto pi = extension_representation(spec);
    int n = spec.base.dim(), m = 2 * spec.n, N = n + m;
    LcKExtension out;
    out.algebra = semidirect_extension(spec.base, pi);

    out.rho_kills_derived = true;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Vec b = bracket(spec.base, unit(n, i), unit(n, j));
            Matrix r(m, m);
            for (int k = 0; k < n; ++k)
                if (!b[k].is_zero()) r = r + spec.rho[k].scaled(b[k]);
            out.rho_kills_derived = out.rho_kills_derived && r.is_zero();
        }

    LcKStructure& s = out.structure;
    s.theta = embed(spec.structure.theta, N);
    s.omega = embed(spec.structure.omega, N);
    for (int i = 0; i < spec.n; ++i) s.omega += KForm::basis(N, {n + 2 * i + 1, n + 2 * i + 2});
    Matrix P(N, N), Pb = dual_to_primal(spec.structure.J), P0 = fiber_complex_structure(spec.n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) P(i, j) = Pb(i, j);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) P(n + i, n + j) = P0(i, j);
    s.J = from_primal(spec.structure.J.name + "+J0", P);
    s.constraints = spec.structure.constraints;
    s.witnesses = spec.structure.witnesses;
    assert_lck(out.algebra, s, "lcK extension");
    return out;
}

bool unimodularity_check(const LcKExtensionSpec& spec) {
    int n = spec.base.dim();
    Vec th = padded(spec.structure.theta.coords(), n);
    bool crit = true;
    for (int i = 0; i < n; ++i)
        crit = crit && (unimodular_character(spec.base, unit(n, i)) - th[i] * Scalar(spec.n)).is_zero();
    LieAlgebra g = semidirect_extension(spec.base, extension_representation(spec));
    bool uni = true;
    for (int i = 0; i < g.dim(); ++i) uni = uni && unimodular_character(g, unit(g.dim(), i)).is_zero();
    if (crit != uni) fail("CrossCheckFailed", "trace criterion and trace form of the extension disagree");
    return crit;
}

BuiltStructure ot_algebra(int n, const std::vector<mpq_class>& c) {
    if (n < 1 || static_cast<int>(c.size()) != n) fail("DimensionMismatch", "ot_algebra needs n >= 1 and n constants");
    int N = 2 * n + 2, z1 = 2 * n, z2 = 2 * n + 1;
    Brackets br = empty_brackets(N);
    Scalar half(mpq_class(1, 2));
    for (int i = 0; i < n; ++i) {
        br[i][n + i] = unit(N, n + i);
        Vec a(N), b(N);
        a[z1] = -half, a[z2] = Scalar(c[i]);
        b[z1] = Scalar(-c[i]), b[z2] = -half;
        br[i][z1] = a;
        br[i][z2] = b;
    }
    BuiltStructure out;
    out.algebra = from_brackets("g_OT(" + std::to_string(n) + ")", br);
    LcKStructure& s = out.structure;
    s.theta = KForm(N, 1);
    s.omega = KForm(N, 2);
    for (int i = 0; i < n; ++i) {
        s.theta += KForm::basis(N, {i + 1});
        for (int j = 0; j < n; ++j) s.omega += KForm::basis(N, {i + 1, n + j + 1}).scaled(Scalar(i == j ? 2 : 1));
    }
    s.omega += KForm::basis(N, {z1 + 1, z2 + 1});
    Matrix P(N, N);
    for (int i = 0; i < n; ++i) P(n + i, i) = Scalar(1), P(i, n + i) = Scalar(-1);
    P(z2, z1) = Scalar(1), P(z1, z2) = Scalar(-1);
    s.J = from_primal("J_OT", P);
    s.witnesses = {Assignment{}};
    assert_lck(out.algebra, s, "OT algebra");
    return out;
}

LcKExtensionSpec aff_extension_spec(int n, const std::vector<mpq_class>& c) {
    if (n < 1 || static_cast<int>(c.size()) != n) fail("DimensionMismatch", "aff_extension_spec needs n >= 1 and n constants");
    int N = 2 * n;
    Brackets br = empty_brackets(N);
    for (int i = 0; i < n; ++i) br[2 * i][2 * i + 1] = unit(N, 2 * i + 1);
    LcKExtensionSpec spec;
    spec.base = from_brackets("aff(R)^" + std::to_string(n), br);
    LcKStructure& s = spec.structure;
    s.theta = KForm(N, 1);
    s.omega = KForm(N, 2);
    Matrix P(N, N);
    for (int i = 0; i < n; ++i) {
        s.theta += KForm::basis(N, {2 * i + 1});
        for (int j = 0; j < n; ++j) {
            KForm t = wedge(KForm::basis(N, {2 * i + 1}), KForm::basis(N, {2 * j + 2}));
            s.omega += t.scaled(Scalar(i == j ? 2 : 1));
        }
        P(2 * i + 1, 2 * i) = Scalar(1), P(2 * i, 2 * i + 1) = Scalar(-1);
    }
    s.J = from_primal("J", P);
    s.witnesses = {Assignment{}};
    spec.n = 1;
    for (int i = 0; i < N; ++i) {
        Matrix r(2, 2);
        if (i % 2 == 0) r(0, 1) = Scalar(-c[i / 2]), r(1, 0) = Scalar(c[i / 2]);
        spec.rho.push_back(r);
    }
    return spec;
}

Matrix ot_identification(int n) {
    int N = 2 * n + 2;
    Matrix L(N, N);
    for (int i = 0; i < n; ++i) {
        L(i, 2 * i) = Scalar(1);
        L(n + i, 2 * i + 1) = Scalar(1);
    }
    L(2 * n, 2 * n) = Scalar(1);
    L(2 * n + 1, 2 * n + 1) = Scalar(1);
    return L;
}

bool is_isomorphism(const LieAlgebra& from, const LieAlgebra& to, const Matrix& L) {
    int n = from.dim();
    if (to.dim() != n || static_cast<int>(L.rows()) != n || static_cast<int>(L.cols()) != n) return false;
    if (determinant(L).is_zero()) return false;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!same(L.apply(bracket(from, unit(n, i), unit(n, j))), bracket(to, column(L, i), column(L, j)))) return false;
    return true;
}

bool ot_phi_check(int n, const std::vector<mpq_class>& c) {
    LcKExtension ext = lck_extension(aff_extension_spec(n, c));
    BuiltStructure ot = ot_algebra(n, c);
    Matrix L = ot_identification(n);
    if (!is_isomorphism(ext.algebra, ot.algebra, L)) return false;
    if (!(L * dual_to_primal(ext.structure.J) - dual_to_primal(ot.structure.J) * L).is_zero()) return false;
    Matrix Lt = L.transpose();
    return pullback_form(Lt, ot.structure.theta) == ext.structure.theta &&
           pullback_form(Lt, ot.structure.omega) == ext.structure.omega;
}

LcKExtensionSpec dprime4_extension_spec(int n, const Assignment& fixed) {
    if (n < 1) fail("DimensionMismatch", "fiber dimension must be positive");
    LcKExtensionSpec spec;
    spec.n = n;
    spec.base = parse_salamon("delta/2*14+24,-14+delta/2*24,-12+delta*34,0", {{"delta", {}}}, "d'_4,delta").substitute(fixed);
    LcKStructure& s = spec.structure;
    s.theta = parse_form("mu*e4", 4, fixed);
    s.omega = parse_form("sigma*(e12 - (delta+mu)*e34)", 4, fixed);
    s.J = {"J1", parse_matrix({"0", "1", "0", "0", "-1", "0", "0", "0", "0", "0", "0", "1", "0", "0", "-1", "0"}, 4)};
    for (const char* c : {"sigma < 0", "delta + mu < 0", "mu != 0"}) {
        Constraint k = parse_constraint(c, fixed);
        if (k.diff.is_constant() && !k.holds({})) fail("ConstraintViolated", std::string(c) + " fails for the fixed values");
        if (!k.diff.is_constant()) s.constraints.push_back(k);
    }

    auto value = [&](const std::string& k, const mpq_class& dflt) {
        auto it = fixed.find(k);
        return it == fixed.end() ? dflt : it->second;
    };
    for (int w = 0; w < 2; ++w) {
        mpq_class mu0 = value("mu", 0);
        mpq_class delta = value("delta", fixed.count("mu") ? mpq_class(-abs(mu0) - 1 - w) : mpq_class(-1 - w));
        mpq_class mu = value("mu", delta < 0 ? mpq_class(2 * delta / n) : mpq_class(-delta - 1));
        Assignment a;
        if (!fixed.count("delta")) a["delta"] = delta;
        if (!fixed.count("mu")) a["mu"] = mu;
        if (!fixed.count("sigma")) a["sigma"] = mpq_class(-1 - 2 * w);
        for (int i = 1; i <= n; ++i)
            if (!fixed.count("a" + std::to_string(i))) a["a" + std::to_string(i)] = w ? mpq_class(0) : mpq_class(i);
        s.witnesses.push_back(a);
    }

    Matrix r4(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
        Scalar a = parse_scalar("a" + std::to_string(i + 1), fixed);
        r4(2 * i, 2 * i + 1) = a;
        r4(2 * i + 1, 2 * i) = -a;
    }
    spec.rho = {Matrix(2 * n, 2 * n), Matrix(2 * n, 2 * n), Matrix(2 * n, 2 * n), r4};
    return spec;
}

std::vector<CoKaehlerCheck> cokahler_conditions(const CoKaehlerData& d) {
    const LieAlgebra& h = d.h;
    int m = h.dim();
    if (m % 2 == 0) fail("DimensionMismatch", "coKaehler algebra must be odd-dimensional");
    auto sized = [&](const Matrix& x) { return static_cast<int>(x.rows()) == m && static_cast<int>(x.cols()) == m; };
    if (static_cast<int>(d.eta.size()) != m || static_cast<int>(d.xi.size()) != m || !sized(d.Phi) || !sized(d.metric) ||
        !sized(d.D))
        fail("DimensionMismatch", "coKaehler data sizes");

    Matrix eta(m, 1), xi(m, 1);
    for (int i = 0; i < m; ++i) eta(i, 0) = d.eta[i], xi(i, 0) = d.xi[i];
    Matrix I = Matrix::identity(m);
    const Matrix &Phi = d.Phi, &G = d.metric, &D = d.D;
    Matrix W = G * Phi;  // omega(x, y) = g(x, Phi y)
    KForm etaf = KForm::covector(m, d.eta);

    std::vector<CoKaehlerCheck> out;
    out.push_back({"cK1", (eta.transpose() * xi)(0, 0) == Scalar(1)});
    out.push_back({"cK2", (Phi * Phi + I - xi * eta.transpose()).is_zero()});
    bool metric = (G - G.transpose()).is_zero();
    for (const auto& w : d.witnesses) {
        if (!metric) break;
        for (const auto& x : leading_minors(G.eval(w))) metric = metric && x > 0;
    }
    out.push_back({"cK3", metric && (Phi.transpose() * G * Phi - G + eta * eta.transpose()).is_zero()});
    bool closed = (W + W.transpose()).is_zero() && ce_d(h, etaf).is_zero() && ce_d(h, two_form(W)).is_zero();
    out.push_back({"cK4", closed});
    KForm deta = ce_d(h, etaf);
    bool normal = true;
    for (int i = 0; i < m && normal; ++i)
        for (int j = i + 1; j < m && normal; ++j) {
            Vec x = unit(m, i), y = unit(m, j), px = Phi.apply(x), py = Phi.apply(y);
            Vec t = Phi.apply(Phi.apply(bracket(h, x, y)));
            Vec a = bracket(h, px, py), b = Phi.apply(bracket(h, px, y)), c = Phi.apply(bracket(h, x, py));
            Scalar dxy = deta.on(x, y);
            for (int k = 0; k < m; ++k) normal = normal && (t[k] + a[k] - b[k] - c[k] + dxy * Scalar(2) * d.xi[k]).is_zero();
        }
    out.push_back({"cK5", normal});
    bool der = true;
    try {
        semidirect_extension(h, D);
    } catch (const Error& e) {
        if (e.kind() != "NotADerivation") throw;
        der = false;
    }
    out.push_back({"derivation", der});
    out.push_back({"alpha", !d.alpha.is_zero()});
    out.push_back({"D-omega", (D.transpose() * W + W * D - W.scaled(d.alpha)).is_zero()});
    out.push_back({"D-eta", (eta.transpose() * D).is_zero()});
    out.push_back({"D-xi", (D * xi).is_zero()});
    out.push_back({"D-Phi", (D * Phi - Phi * D).is_zero()});
    return out;
}

BuiltStructure cokahler_mapping_torus(const CoKaehlerData& d) {
    for (const auto& c : cokahler_conditions(d)) {
        if (c.pass) continue;
        if (c.id.rfind("cK", 0) == 0) fail("NotCoKaehler", c.id);
        if (c.id == "derivation") fail("NotADerivation", "D is not a derivation of h");
        if (c.id == "alpha") fail("AlphaZero", "alpha must be nonzero");
        fail("DNotCompatible", c.id);
    }
    for (const auto& w : d.witnesses)
        if (d.alpha.eval(w) <= 0)
            fail("NotPositive", "alpha = " + d.alpha.eval(w).get_str() + ": Omega(x, Jx) changes sign between h and xi");

    int m = d.h.dim(), N = m + 1;
    BuiltStructure out;
    out.algebra = semidirect_extension(d.h, d.D);
    LcKStructure& s = out.structure;
    s.theta = KForm::basis(N, {N}).scaled(-d.alpha);
    KForm eta = embed(KForm::covector(m, d.eta), N), omega = embed(two_form(d.metric * d.Phi), N);
    s.omega = -(omega + wedge(eta, s.theta));
    Matrix P(N, N);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) P(i, j) = d.Phi(i, j);
        P(i, m) = -d.xi[i];
        P(m, i) = d.eta[i];
    }
    s.J = from_primal("J", P);
    s.witnesses = d.witnesses;
    assert_lck(out.algebra, s, "coKaehler mapping torus");
    return out;
}

CoKaehlerData cokahler_example(const mpq_class& alpha, const mpq_class& dilation) {
    Matrix B(2, 2);
    B(1, 0) = Scalar(1), B(0, 1) = Scalar(-1);
    CoKaehlerData d;
    d.h = semidirect_extension(LieAlgebra("R^2", {KForm(2, 2), KForm(2, 2)}), B);
    d.eta = {Scalar(0), Scalar(0), Scalar(1)};
    d.xi = d.eta;
    d.Phi = Matrix(3, 3);
    d.Phi(1, 0) = Scalar(1), d.Phi(0, 1) = Scalar(-1);
    d.metric = Matrix::identity(3);
    d.D = Matrix(3, 3);
    d.D(0, 0) = d.D(1, 1) = Scalar(dilation);
    d.D(1, 0) = Scalar(1), d.D(0, 1) = Scalar(-1);
    d.alpha = Scalar(alpha);
    return d;
}

CoKaehlerData cokahler_example(const mpq_class& alpha) { return cokahler_example(alpha, alpha / 2); }

IdentificationReport check_identification(const CatalogEntry& e, const IdentificationRecord& r, const BuiltStructure& built,
                                          const Assignment& params) {
    IdentificationReport rep;
    int n = e.dim;
    Assignment jp;
    for (const auto& [k, v] : r.J_params) {
        Scalar x = parse_scalar(v, params);
        if (!x.is_constant()) fail("ParametersNotInstantiated", r.name + ": " + k + " = " + x.str());
        jp[k] = x.constant_value();
    }
    LieAlgebra target = build_algebra(e).substitute(jp), source = built.algebra.substitute(params);
    if (source.dim() != n) fail("DimensionMismatch", r.name);
    Matrix L = parse_matrix(r.matrix, n, params);
    rep.isomorphism = is_isomorphism(source, target, L);
    if (!rep.isomorphism) return rep;

    ComplexStructure Jt = build_J(e, r.J, jp);
    ComplexStructure Js{built.structure.J.name, built.structure.J.dual.substitute(params)};
    rep.complex_structure = (L * dual_to_primal(Js) - dual_to_primal(Jt) * L).is_zero();

    Matrix back = inverse(L).transpose();
    rep.theta = pullback_form(back, built.structure.theta.substitute(params));
    rep.omega = pullback_form(back, built.structure.omega.substitute(params));
    LcKStructure s{rep.theta, rep.omega, Jt, {}, {Assignment{}}};
    rep.lck = verify_lck(target, s).pass();
    return rep;
}

}  // namespace lckv
