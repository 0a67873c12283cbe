#include "lckv/lck.hpp"

#include "lckv/error.hpp"

#include <map>

namespace lckv {

bool LcKReport::pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return !checks.empty();
}

std::string witness_str(const Assignment& a) {
    std::string s;
    for (const auto& [k, v] : a) {
        if (!s.empty()) s += ", ";
        s += k + "=" + v.get_str();
    }
    return s;
}

LcKReport verify_lck(const LieAlgebra& g, const LcKStructure& s) {
    if (s.witnesses.empty()) fail("NoWitness", "lcK structure without witness points");
    LcKReport r;

    KForm dth = ce_d(g, s.theta);
    r.theta_closed = dth.is_zero();
    r.checks.push_back({"theta_closed", r.theta_closed, r.theta_closed ? "" : dth.str(), "", ""});

    KForm res = ce_d(g, s.omega) - wedge(s.theta, s.omega);
    r.twisted_closed = res.is_zero();
    r.checks.push_back({"twisted_closed", r.twisted_closed, r.twisted_closed ? "" : res.str(), "", ""});

    Matrix P = dual_to_primal(s.J);
    int n = g.dim();
    std::string inv;
    for (int i = 0; i < n && inv.empty(); ++i)
        for (int j = i + 1; j < n && inv.empty(); ++j) {
            Scalar d = s.omega.on(P.apply(unit(n, i)), P.apply(unit(n, j))) - s.omega.on(unit(n, i), unit(n, j));
            if (!d.is_zero()) inv = "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "): " + d.str();
        }
    r.j_invariant = inv.empty();
    r.checks.push_back({"j_invariant", r.j_invariant, inv, "", ""});

    r.positive = true;
    for (const auto& w : s.witnesses) {
        std::string ws = witness_str(w);
        for (const auto& c : s.constraints) {
            bool ok = false;
            std::string why;
            try {
                ok = c.holds(w);
            } catch (const Error& e) {
                why = e.what();
            }
            r.checks.push_back({"constraint", ok, ok ? "" : (why.empty() ? c.text : why), ws, ""});
        }
        bool nz = !s.theta.substitute(w).is_zero();
        r.checks.push_back({"theta_nonzero", nz, nz ? "" : "theta vanishes", ws, ""});
        bool pos = false;
        std::string why;
        try {
            pos = r.j_invariant && is_positive_at(s.omega, s.J, w);
            if (!pos && r.j_invariant) {
                ComplexStructure Jw{s.J.name, s.J.dual.substitute(w)};
                auto m = leading_minors(gram_metric(s.omega.substitute(w), Jw).eval(w));
                for (const auto& x : m) why += (why.empty() ? "minors " : ", ") + x.get_str();
            }
        } catch (const Error& e) {
            why = e.what();
        }
        if (!r.j_invariant) why = "not J-invariant";
        r.positive = r.positive && pos;
        r.checks.push_back({"positive", pos, why, ws, ""});
    }
    return r;
}

LeeResult lee_form(const LieAlgebra& g, const KForm& omega) {
    int n = g.dim();
    if (omega.degree() != 2 || (omega.dim() != n && !omega.is_zero())) fail("DimensionMismatch", "lee_form");
    KForm top = KForm::constant(n, Scalar(1));
    for (int k = 0; k < n / 2; ++k) top = wedge(top, omega);
    if (top.is_zero()) fail("Degenerate", "Omega^" + std::to_string(n / 2) + " = 0");

    auto rows = masks_of_degree(n, 3);
    std::map<std::uint32_t, std::size_t> row_of;
    for (std::size_t i = 0; i < rows.size(); ++i) row_of[rows[i]] = i;
    Matrix m(rows.size(), n);
    for (int i = 0; i < n; ++i) {
        KForm t = wedge(KForm::basis(n, {i + 1}), omega);
        for (const auto& [mask, c] : t.terms()) m(row_of[mask], i) = c;
    }
    KForm domega = ce_d(g, omega);
    Vec rhs(rows.size());
    for (const auto& [mask, c] : domega.terms()) rhs[row_of[mask]] = c;

    LeeResult r;
    r.theta = KForm::covector(n, solve(m, rhs));
    r.closed = ce_d(g, r.theta).is_zero();
    return r;
}

VaismanResult vaisman_test(const LieAlgebra& g0, const LcKStructure& s, const Assignment& a) {
    LieAlgebra g = g0.substitute(a);
    int n = g.dim();
    Vec th = s.theta.substitute(a).coords();
    th.resize(n);
    bool zero = true;
    for (const auto& t : th) zero = zero && t.is_zero();
    if (zero) fail("ThetaZero", "theta vanishes at " + witness_str(a));

    ComplexStructure Ja{s.J.name, s.J.dual.substitute(a)};
    Matrix G = gram_metric(s.omega.substitute(a), Ja);
    Matrix row(1, n);
    for (int i = 0; i < n; ++i) row(0, i) = th[i];
    auto ker = nullspace(row);

    // rows: theta, then (G k)^T for each kernel vector k
    Matrix sys(n, n);
    Vec rhs(n);
    for (int i = 0; i < n; ++i) sys(0, i) = th[i];
    rhs[0] = Scalar(1);
    for (std::size_t r = 0; r < ker.size(); ++r) {
        Vec gk = G.apply(ker[r]);
        for (int i = 0; i < n; ++i) sys(r + 1, i) = gk[i];
    }
    Vec A = solve(sys, rhs);
    Matrix ad = ad_matrix(g, A);
    VaismanResult out;
    out.vaisman = (G * ad + ad.transpose() * G).is_zero();
    for (const auto& x : A) out.A.push_back(x.constant_value());
    return out;
}

Matrix twisted_differential(const LieAlgebra& g, const KForm& theta, int k) {
    int n = g.dim();
    auto src = masks_of_degree(n, k), dst = masks_of_degree(n, k + 1);
    std::map<std::uint32_t, std::size_t> row_of;
    for (std::size_t i = 0; i < dst.size(); ++i) row_of[dst[i]] = i;
    Matrix m(dst.size(), src.size());
    for (std::size_t c = 0; c < src.size(); ++c) {
        KForm e = KForm::basis(n, mask_indices(src[c]));
        KForm img = ce_d(g, e) - wedge(theta, e);
        for (const auto& [mask, v] : img.terms()) m(row_of[mask], c) = v;
    }
    return m;
}

std::vector<int> morse_novikov_betti(const LieAlgebra& g0, const KForm& theta0, const Assignment& a) {
    LieAlgebra g = g0.substitute(a);
    KForm theta = theta0.substitute(a);
    for (const auto& dk : g.d_coframe())
        for (const auto& [m, c] : dk.terms())
            if (!c.is_constant()) fail("ParametersNotInstantiated", c.str());
    for (const auto& [m, c] : theta.terms())
        if (!c.is_constant()) fail("ParametersNotInstantiated", c.str());
    if (!ce_d(g, theta).is_zero()) fail("NotClosed", "d theta = " + ce_d(g, theta).str());

    int n = g.dim();
    std::vector<Matrix> d;
    for (int k = 0; k < n; ++k) d.push_back(twisted_differential(g, theta, k));
    for (int k = 0; k + 1 < n; ++k)
        if (!(d[k + 1] * d[k]).is_zero()) fail("NotComplex", "d_theta^2 != 0 in degree " + std::to_string(k));
    std::vector<std::size_t> rk;
    for (const auto& m : d) rk.push_back(rank(m));
    std::vector<int> b;
    for (int k = 0; k <= n; ++k) {
        long dimk = static_cast<long>(masks_of_degree(n, k).size());
        long out = k < n ? static_cast<long>(rk[k]) : 0;
        long in = k > 0 ? static_cast<long>(rk[k - 1]) : 0;
        b.push_back(static_cast<int>(dimk - out - in));
    }
    return b;
}

}  // namespace lckv
