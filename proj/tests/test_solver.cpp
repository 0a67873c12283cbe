#include "lckv/catalog.hpp"
#include "lckv/error.hpp"
#include "lckv/solver.hpp"
#include "koszul.hpp"
#include "rng.hpp"

#include <doctest.h>

using namespace lckv;
using lckv::test::Rng;

namespace {

std::vector<mpq_class> coords(const KForm& theta, int n) {
    std::vector<mpq_class> v(n);
    auto c = theta.coords();
    for (std::size_t i = 0; i < c.size(); ++i) v[i] = c[i].constant_value();
    return v;
}

}  // namespace

TEST_CASE("nullspace and solve") {
    Matrix m = parse_matrix({"1", "2", "2", "4"}, 2);
    auto ns = nullspace(m);
    REQUIRE(ns.size() == 1);
    CHECK(m.apply(ns[0]) == Vec{Scalar(0), Scalar(0)});
    CHECK_THROWS_WITH_AS(solve(m, {Scalar(1), Scalar(0)}), doctest::Contains("Inconsistent"), Error);
    CHECK_THROWS_WITH_AS(solve(m, {Scalar(1), Scalar(2)}), doctest::Contains("Underdetermined"), Error);

    // symbolic pivot: a*x = 0 has only the zero solution when a != 0
    Matrix s(1, 2);
    s(0, 0) = Scalar::variable("a");
    std::vector<std::string> side;
    auto sn = nullspace(s, &side);
    CHECK(sn.size() == 1);
    CHECK(side.size() == 1);
}

TEST_CASE("property: nullspace dimension and membership on random rational matrices") {
    Rng r(404);
    for (int it = 0; it < 60; ++it) {
        std::size_t rows = static_cast<std::size_t>(r.range(1, 5)), cols = static_cast<std::size_t>(r.range(1, 6));
        Matrix m(rows, cols);
        lckv::test::QRows q(rows, std::vector<mpq_class>(cols));
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                if (r.range(0, 2)) q[i][j] = r.rational(3), m(i, j) = Scalar(q[i][j]);
        auto ns = nullspace(m);
        CHECK(rank(m) == lckv::test::rational_rank(q));
        CHECK(ns.size() == cols - lckv::test::rational_rank(q));
        for (const auto& v : ns) {
            bool z = true;
            for (const auto& x : m.apply(v)) z = z && x.is_zero();
            CHECK(z);
        }
    }
}

TEST_CASE("twisted-closed spaces against the reference differential") {
    for (const auto& e : builtin_catalog().entries)
        for (const auto& f : e.lck)
            for (const auto& w : f.witnesses) {
                CAPTURE(f.id + " @ " + witness_str(w));
                LieAlgebra g = build_algebra(e, f.fixed).substitute(w);
                int n = g.dim();
                KForm theta = parse_form(f.theta, n, f.fixed).substitute(w);
                SolutionSpace t = twisted_closed_space(g, theta);
                std::size_t rk = lckv::test::rational_rank(lckv::test::koszul_matrix(g, coords(theta, n), 2));
                CHECK(t.size() == lckv::test::tuples(n, 2).size() - rk);
                CHECK(space_is_sound(g, theta, t));
                ComplexStructure J = build_J(e, f.J, f.fixed);
                J.dual = J.dual.substitute(w);
                SolutionSpace l = lck_space(g, J, theta);
                CHECK(l.size() <= t.size());
                CHECK(space_is_sound(g, theta, l, &J));
                // the stored Omega lies in the lcK space
                KForm omega = parse_form(f.omega, n, f.fixed).substitute(w);
                CHECK(l.size() > 0);
                CHECK(is_j_invariant(omega, J));
                CHECK(ce_d(g, omega) == wedge(theta, omega));
            }
}

TEST_CASE("obstructions") {
    LieAlgebra ab = parse_salamon("0,0,0,0");
    KForm theta = parse_form("e4", 4);
    SolutionSpace t = twisted_closed_space(ab, theta);
    CHECK(t.size() == 3);  // e4 ^ beta
    CHECK(degenerate_space(t));
    CHECK_THROWS_WITH_AS(twisted_closed_space(parse_salamon("0,0,-12,0"), parse_form("e3", 4)), doctest::Contains("ThetaNotClosed"),
                         Error);

    ComplexStructure J{"J", parse_matrix({"0", "-1", "0", "0", "1", "0", "0", "0", "0", "0", "0", "-1", "0", "0", "1", "0"}, 4)};
    SolutionSpace l = lck_space(ab, J, theta);
    REQUIRE(l.size() == 1);  // e34 only
    CHECK(degeneracy_certificate(l, J, 1));
    CHECK(degeneracy_certificate(l, J, 2));
    CHECK_FALSE(degeneracy_certificate(l, J, 4));
    CHECK_THROWS_WITH_AS(degeneracy_certificate(l, J, 5), doctest::Contains("IndexOutOfRange"), Error);
    CHECK_THROWS_WITH_AS(weighted_degeneracy_certificate(l, J, {}), doctest::Contains("InvalidCertificate"), Error);
    CHECK_THROWS_WITH_AS(weighted_degeneracy_certificate(l, J, {{-1, 1}}), doctest::Contains("InvalidCertificate"), Error);
    CHECK(weighted_degeneracy_certificate(l, J, {{1, 1}, {2, 2}}));
    CHECK_FALSE(weighted_degeneracy_certificate(l, J, {{1, 1}, {2, 3}}));

    // rh3 with its Vaisman Lee form is not degenerate
    LieAlgebra rh3 = parse_salamon("0,0,-12,0");
    SolutionSpace good = lck_space(rh3, J, parse_form("-e4", 4));
    CHECK(good.size() == 1);
    CHECK_FALSE(degenerate_space(good));
    CHECK_FALSE(degeneracy_certificate(good, J, 1));
}

TEST_CASE("generic element carries fresh symbols") {
    LieAlgebra rh3 = parse_salamon("0,0,-12,0");
    SolutionSpace t = twisted_closed_space(rh3, parse_form("-e4", 4));
    KForm g = t.generic("k");
    CHECK(ce_d(rh3, g) == wedge(parse_form("-e4", 4), g));
    CHECK(t.str().size() == t.size());
}
