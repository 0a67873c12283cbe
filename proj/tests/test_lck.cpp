#include "lckv/catalog.hpp"
#include "lckv/error.hpp"
#include "lckv/lck.hpp"
#include "koszul.hpp"
#include "rng.hpp"

#include <doctest.h>

using namespace lckv;
using lckv::test::Rng;

namespace {

LcKStructure rh3_structure() {
    LcKStructure s;
    s.theta = parse_form("-e4", 4);
    s.omega = parse_form("sigma*(e12 + e34)", 4);
    s.J = {"J", parse_matrix({"0", "-1", "0", "0", "1", "0", "0", "0", "0", "0", "0", "-1", "0", "0", "1", "0"}, 4)};
    s.constraints = {parse_constraint("sigma > 0")};
    s.witnesses = {{{"sigma", 1}}, {{"sigma", mpq_class(1, 3)}}};
    return s;
}

}  // namespace

TEST_CASE("verify_lck on rh3") {
    LieAlgebra g = parse_salamon("0,0,-12,0");
    LcKStructure s = rh3_structure();
    LcKReport r = verify_lck(g, s);
    CHECK(r.pass());
    CHECK(r.theta_closed);
    CHECK(r.twisted_closed);
    CHECK(r.j_invariant);
    CHECK(r.positive);

    LcKStructure flipped = s;
    flipped.theta = parse_form("e4", 4);
    LcKReport f = verify_lck(g, flipped);
    CHECK_FALSE(f.twisted_closed);
    CHECK_FALSE(f.pass());

    LcKStructure negative = s;
    negative.witnesses = {{{"sigma", -1}}};
    CHECK_FALSE(verify_lck(g, negative).pass());

    LcKStructure none = s;
    none.witnesses.clear();
    CHECK_THROWS_WITH_AS(verify_lck(g, none), doctest::Contains("NoWitness"), Error);
}

TEST_CASE("Lee form recovery") {
    LieAlgebra g = parse_salamon("0,0,-12,0");
    LeeResult l = lee_form(g, parse_form("e12 + e34", 4));
    CHECK(l.theta == parse_form("-e4", 4));
    CHECK(l.closed);
    CHECK_THROWS_WITH_AS(lee_form(g, parse_form("e12", 4)), doctest::Contains("Degenerate"), Error);

    // every stored family: the recovered Lee form is the stored one
    for (const auto& e : builtin_catalog().entries)
        for (const auto& f : e.lck) {
            CAPTURE(f.id);
            LcKStructure s = build_lck(e, f);
            LieAlgebra a = build_algebra(e, f.fixed);
            const Assignment& w = s.witnesses.front();
            LeeResult r = lee_form(a.substitute(w), s.omega.substitute(w));
            CHECK(r.theta == s.theta.substitute(w));
            CHECK(r.closed);
        }
}

TEST_CASE("Vaisman criterion") {
    LieAlgebra g = parse_salamon("0,0,-12,0");
    LcKStructure s = rh3_structure();
    VaismanResult v = vaisman_test(g, s, s.witnesses[0]);
    CHECK(v.vaisman);
    CHECK(v.A == std::vector<mpq_class>{0, 0, 0, -1});

    LcKStructure z = s;
    z.theta = KForm(4, 1);
    CHECK_THROWS_WITH_AS(vaisman_test(g, z, s.witnesses[0]), doctest::Contains("ThetaZero"), Error);
}

TEST_CASE("Morse-Novikov on rh3") {
    LieAlgebra g = parse_salamon("0,0,-12,0");
    CHECK(morse_novikov_betti(g, parse_form("-e4", 4)) == std::vector<int>{0, 0, 0, 0, 0});
    CHECK(morse_novikov_betti(g, KForm(4, 1)) == std::vector<int>{1, 3, 4, 3, 1});
    CHECK(lckv::test::koszul_betti(g, {0, 0, 0, 0}) == std::vector<int>{1, 3, 4, 3, 1});
    CHECK_THROWS_WITH_AS(morse_novikov_betti(g, parse_form("e3", 4)), doctest::Contains("NotClosed"), Error);
    CHECK_THROWS_WITH_AS(morse_novikov_betti(parse_salamon("d*14,0,0,0", {{"d", {}}}), parse_form("e4", 4)),
                         doctest::Contains("ParametersNotInstantiated"), Error);
    CHECK(morse_novikov_betti(parse_salamon("d*14,0,0,0", {{"d", {}}}), parse_form("e4", 4), {{"d", 1}}).size() == 5);
}

TEST_CASE("property: Morse-Novikov numbers agree with the reference complex") {
    Rng r(9001);
    int runs = 0;
    for (const auto& e : builtin_catalog().entries)
        for (const auto& f : e.lck) {
            CAPTURE(f.id);
            LcKStructure s = build_lck(e, f);
            LieAlgebra a = build_algebra(e, f.fixed);
            for (const auto& w : s.witnesses) {
                LieAlgebra g = a.substitute(w);
                int n = g.dim();
                std::vector<KForm> thetas{s.theta.substitute(w), KForm(n, 1)};
                // a random multiple of the Lee form stays closed
                thetas.push_back(s.theta.substitute(w).scaled(Scalar(r.nonzero(3))));
                for (const auto& th : thetas) {
                    std::vector<mpq_class> c(n);
                    auto co = th.coords();
                    for (std::size_t i = 0; i < co.size(); ++i) c[i] = co[i].constant_value();
                    auto b = morse_novikov_betti(g, th);
                    CHECK(b == lckv::test::koszul_betti(g, c));
                    int euler = 0;
                    for (std::size_t k = 0; k < b.size(); ++k) euler += (k % 2 ? -1 : 1) * b[k];
                    CHECK(euler == 0);
                    ++runs;
                }
            }
        }
    CHECK(runs > 100);
}
