#include "lckv/constructions.hpp"
#include "lckv/error.hpp"
#include "rng.hpp"

#include <doctest.h>

using namespace lckv;
using lckv::test::Rng;

namespace {

std::vector<mpq_class> constants(int n) {
    std::vector<mpq_class> c;
    for (int i = 1; i <= n; ++i) c.push_back(mpq_class(i, 2));
    return c;
}

bool unimodular(const LieAlgebra& g) {
    for (int i = 0; i < g.dim(); ++i)
        if (!unimodular_character(g, unit(g.dim(), i)).is_zero()) return false;
    return true;
}

}  // namespace

TEST_CASE("semidirect products check their input") {
    LieAlgebra r2 = parse_salamon("0,0");
    Matrix rot = parse_matrix({"0", "-1", "1", "0"}, 2);
    LieAlgebra g = semidirect_extension(r2, rot);
    CHECK(g.dim() == 3);
    CHECK(jacobi_holds(g));
    CHECK(bracket(g, unit(3, 2), unit(3, 0)) == unit(3, 1));  // [T, e1] = D e1

    LieAlgebra h3 = parse_salamon("0,0,-12");
    // e1 -> e1 is not a derivation of the Heisenberg algebra
    Matrix bad = parse_matrix({"1", "0", "0", "0", "0", "0", "0", "0", "0"}, 3);
    CHECK_THROWS_WITH_AS(semidirect_extension(h3, bad), doctest::Contains("NotADerivation"), Error);

    // two noncommuting matrices on an abelian base are not a representation
    std::vector<Matrix> pi{parse_matrix({"1", "0", "0", "0"}, 2), parse_matrix({"0", "1", "0", "0"}, 2)};
    CHECK_THROWS_WITH_AS(semidirect_extension(r2, pi), doctest::Contains("NotARepresentation"), Error);
}

TEST_CASE("Oeljeklaus-Toma algebras") {
    for (int n = 1; n <= 3; ++n) {
        CAPTURE(n);
        BuiltStructure ot = ot_algebra(n, constants(n));
        CHECK(ot.algebra.dim() == 2 * n + 2);
        CHECK(jacobi_holds(ot.algebra));
        CHECK(verify_lck(ot.algebra, ot.structure).pass());
        CHECK(unimodular(ot.algebra));
        CHECK_FALSE(vaisman_test(ot.algebra, ot.structure, {}).vaisman);
        CHECK(ot_phi_check(n, constants(n)));
        CHECK(unimodularity_check(aff_extension_spec(n, constants(n))));
    }
    CHECK_THROWS_WITH_AS(aff_extension_spec(2, {1}), doctest::Contains("DimensionMismatch"), Error);
}

TEST_CASE("property: OT algebras for random constants") {
    Rng r(271828);
    for (int it = 0; it < 8; ++it) {
        int n = static_cast<int>(r.range(1, 3));
        std::vector<mpq_class> c;
        for (int i = 0; i < n; ++i) c.push_back(r.rational(4));
        BuiltStructure ot = ot_algebra(n, c);
        CHECK(verify_lck(ot.algebra, ot.structure).pass());
        CHECK(ot_phi_check(n, c));
        LcKExtension ext = lck_extension(aff_extension_spec(n, c));
        CHECK(ext.rho_kills_derived);
    }
}

TEST_CASE("extension representation") {
    LcKExtensionSpec spec = aff_extension_spec(1, {2});
    auto pi = extension_representation(spec);
    CHECK(pi.size() == 2);
    LcKExtensionSpec skew = spec;
    skew.rho[0] = parse_matrix({"1", "0", "0", "0"}, 2);
    CHECK_THROWS_WITH_AS(extension_representation(skew), doctest::Contains("RhoNotSkew"), Error);
    LcKExtensionSpec big = aff_extension_spec(1, {2});
    big.n = 2;
    big.rho = {parse_matrix({"0", "1", "0", "0", "-1", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"}, 4),
               parse_matrix({"0", "0", "1", "0", "0", "0", "0", "0", "-1", "0", "0", "0", "0", "0", "0", "0"}, 4)};
    CHECK_THROWS_WITH_AS(extension_representation(big), doctest::Contains("RhoNotCommuting"), Error);
    CHECK((fiber_complex_structure(2) * fiber_complex_structure(2) + Matrix::identity(4)).is_zero());
}

TEST_CASE("d'_{4,delta} extensions") {
    for (int n = 1; n <= 3; ++n) {
        CAPTURE(n);
        LcKExtensionSpec spec = dprime4_extension_spec(n);
        LcKExtension e = lck_extension(spec);
        CHECK(e.algebra.dim() == 4 + 2 * n);
        CHECK(e.rho_kills_derived);
        CHECK(verify_lck(e.algebra, e.structure).pass());
        for (const auto& w : e.structure.witnesses) CHECK_FALSE(vaisman_test(e.algebra, e.structure, w).vaisman);
        CHECK_FALSE(unimodularity_check(spec));
        // unimodular exactly on 2 delta = n mu
        for (auto [d, m] : std::vector<std::pair<long, long>>{{-2, -4}, {-2, -3}, {-3, -6}, {-1, -2}, {-3, -5}}) {
            mpq_class delta(d), mu(m, n);
            mu.canonicalize();
            LcKExtensionSpec s2 = dprime4_extension_spec(n, {{"delta", delta}, {"mu", mu}});
            lck_extension(s2);
            CHECK(unimodularity_check(s2) == (2 * delta == n * mu));
        }
    }
    CHECK_THROWS_WITH_AS(dprime4_extension_spec(1, {{"sigma", 1}}), doctest::Contains("ConstraintViolated"), Error);
    CHECK_THROWS_WITH_AS(dprime4_extension_spec(0), doctest::Contains("DimensionMismatch"), Error);
}

TEST_CASE("coKaehler mapping torus") {
    CoKaehlerData d = cokahler_example(1);
    for (const auto& c : cokahler_conditions(d)) CHECK_MESSAGE(c.pass, c.id);
    BuiltStructure b = cokahler_mapping_torus(d);
    CHECK(b.algebra.dim() == 4);
    CHECK(verify_lck(b.algebra, b.structure).pass());
    CHECK_FALSE(vaisman_test(b.algebra, b.structure, {}).vaisman);
    CHECK(b.structure.theta == parse_form("-e4", 4));

    const CatalogEntry* rp2 = builtin_catalog().find("rp2");
    REQUIRE(rp2);
    REQUIRE(rp2->identifications.size() == 1);
    for (long a : {1L, 2L, 3L}) {
        CAPTURE(a);
        BuiltStructure ba = cokahler_mapping_torus(cokahler_example(a));
        IdentificationReport r = check_identification(*rp2, rp2->identifications[0], ba, {{"alpha", a}});
        CHECK(r.isomorphism);
        CHECK(r.complex_structure);
        CHECK(r.lck);
    }
    IdentificationReport r1 = check_identification(*rp2, rp2->identifications[0], b, {{"alpha", 1}});
    CHECK(r1.theta == parse_form("-2*e1", 4));
    CHECK(r1.omega == parse_form("-2*e12 + e34", 4));

    // the rotation alone does not scale omega
    CHECK_THROWS_WITH_AS(cokahler_mapping_torus(cokahler_example(1, 0)), doctest::Contains("DNotCompatible"), Error);
    CHECK_THROWS_WITH_AS(cokahler_mapping_torus(cokahler_example(0)), doctest::Contains("AlphaZero"), Error);
    CHECK_THROWS_WITH_AS(cokahler_mapping_torus(cokahler_example(-1)), doctest::Contains("NotPositive"), Error);

    CoKaehlerData broken = cokahler_example(1);
    broken.eta = {Scalar(0), Scalar(0), Scalar(2)};
    CHECK_THROWS_WITH_AS(cokahler_mapping_torus(broken), doctest::Contains("NotCoKaehler"), Error);
}
