#include "lckv/catalog.hpp"
#include "lckv/error.hpp"
#include "lckv/kform.hpp"
#include "lckv/lie_algebra.hpp"
#include "rng.hpp"

#include <doctest.h>

using namespace lckv;
using lckv::test::Rng;

namespace {

KForm random_form(Rng& r, int n, int k) {
    KForm f(n, k);
    for (auto m : masks_of_degree(n, k))
        if (r.range(0, 2)) f.add_term(m, Scalar(r.rational(3)));
    return f;
}

// every catalog algebra with its parameters at the first witness of its first row
std::vector<LieAlgebra> sample_algebras() {
    std::vector<LieAlgebra> out;
    for (const auto& e : builtin_catalog().entries) {
        Assignment a;
        if (!e.lck.empty() && !e.lck[0].witnesses.empty()) a = e.lck[0].witnesses[0];
        for (const auto& p : e.params)
            if (!a.count(p.name)) a[p.name] = 1;
        out.push_back(build_algebra(e).substitute(a));
    }
    return out;
}

}  // namespace

TEST_CASE("wedge by hand") {
    KForm e1 = KForm::basis(4, {1}), e2 = KForm::basis(4, {2}), e3 = KForm::basis(4, {3});
    CHECK(wedge(e2, e1) == -KForm::basis(4, {1, 2}));
    CHECK(wedge(e1, e1).is_zero());
    CHECK(wedge(wedge(e3, e1), e2) == KForm::basis(4, {1, 2, 3}));
    KForm w = parse_form("e12 + e34", 4);
    CHECK(wedge(w, w) == parse_form("2*e1234", 4));
    CHECK(w.on(unit(4, 0), unit(4, 1)) == Scalar(1));
    CHECK(w.on(unit(4, 1), unit(4, 0)) == Scalar(-1));
    CHECK(interior_product(unit(4, 2), w) == parse_form("e4", 4));
    CHECK_THROWS_WITH_AS(interior_product(unit(4, 0), KForm::constant(4, Scalar(1))), doctest::Contains("DegreeZero"), Error);
    CHECK_THROWS_WITH_AS(KForm::basis(4, {5}), doctest::Contains("IndexOutOfRange"), Error);
    CHECK(parse_form("e(1,10)", 10) == KForm::basis(10, {1, 10}));
}

TEST_CASE("property: graded commutativity and associativity") {
    Rng r(101);
    for (int it = 0; it < 40; ++it) {
        int n = static_cast<int>(r.range(3, 6));
        int p = static_cast<int>(r.range(0, 2)), q = static_cast<int>(r.range(0, 2)), s = static_cast<int>(r.range(0, 2));
        KForm a = random_form(r, n, p), b = random_form(r, n, q), c = random_form(r, n, s);
        KForm ab = wedge(a, b), ba = wedge(b, a);
        CHECK(ab == ((p * q) % 2 ? -ba : ba));
        CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
        KForm c2 = random_form(r, n, q);
        CHECK(wedge(a, b + c2) == wedge(a, b) + wedge(a, c2));
    }
}

TEST_CASE("property: print/parse round-trip for forms") {
    Rng r(7);
    for (int it = 0; it < 40; ++it) {
        int n = static_cast<int>(r.range(2, 6));
        KForm a = random_form(r, n, static_cast<int>(r.range(1, 3)));
        if (a.is_zero()) continue;
        CHECK(parse_form(a.str(), n) == a);
    }
}

TEST_CASE("property: d squares to zero and satisfies Leibniz on catalog algebras") {
    Rng r(2024);
    for (const auto& g : sample_algebras()) {
        CAPTURE(g.name());
        int n = g.dim();
        for (int it = 0; it < 6; ++it) {
            int p = static_cast<int>(r.range(0, 2)), q = static_cast<int>(r.range(0, 2));
            KForm a = random_form(r, n, p), b = random_form(r, n, q);
            CHECK(ce_d(g, ce_d(g, a)).is_zero());
            KForm lhs = ce_d(g, wedge(a, b));
            KForm rhs = wedge(ce_d(g, a), b) + (p % 2 ? -wedge(a, ce_d(g, b)) : wedge(a, ce_d(g, b)));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("property: interior product is an antiderivation") {
    Rng r(55);
    for (int it = 0; it < 40; ++it) {
        int n = 4;
        int p = static_cast<int>(r.range(1, 2));
        KForm a = random_form(r, n, p), b = random_form(r, n, static_cast<int>(r.range(1, 2)));
        Vec x;
        for (int i = 0; i < n; ++i) x.push_back(Scalar(r.rational(3)));
        KForm lhs = interior_product(x, wedge(a, b));
        KForm rhs = wedge(interior_product(x, a), b) + (p % 2 ? -wedge(a, interior_product(x, b)) : wedge(a, interior_product(x, b)));
        CHECK(lhs == rhs);
    }
}
