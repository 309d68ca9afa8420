#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dft/equations.hpp"
#include "dft/ring.hpp"

using namespace dft;

static Model<RationalRing> model_12() {
    return Model<RationalRing>{ValencyType({1, 2}), {Rational(2), Rational(-1)},
                               ModelKind::STANDARD, 0};
}

TEST_CASE("expand") {
    RationalRing Q;
    auto m = model_12();
    Poly<RationalRing> b = expand(Q, m);
    CHECK(b == Poly<RationalRing>{Rational(1), Rational(0), Rational(-3), Rational(-2)});
    Model<RationalRing> single{ValencyType({1}), {Rational(1)}, ModelKind::STANDARD, 0};
    CHECK(expand(Q, single) == Poly<RationalRing>{Rational(1), Rational(-1)});
}

TEST_CASE("example model over F_11") {
    GFPtr F = GF::make(11, 1);
    GFRing gf{F};
    // (1-3X)(1-X)^2 (1-5X)^3 (1-2X)^4 (1-6X)^10
    Model<GFRing> m{ValencyType({1, 2, 3, 4, 10}),
                    {F->from_int(3), F->from_int(1), F->from_int(5), F->from_int(2),
                     F->from_int(6)},
                    ModelKind::NORMALIZED, 1};
    Poly<GFRing> b = expand(gf, m);
    auto v = poly_valuation_at_zero(gf, poly_sub(gf, b, Poly<GFRing>{F->one()}));
    CHECK(*v == 5);
    auto rec = check_conditions(gf, m);
    CHECK(rec.i);
    CHECK(rec.ii);
    CHECK(rec.iii);
    CHECK(rec.iv);
    CHECK(derivative_identity_check(gf, m));
    CHECK(m.type.N() % 11 == 9);
}

TEST_CASE("psi and phi on small models") {
    RationalRing Q;
    auto m = model_12();
    CHECK(psi(Q, 1, m) == 0);
    CHECK(phi(Q, 1, m) == 0);
    CHECK(phi(Q, 2, m) == 6);
    Model<RationalRing> m11{ValencyType({1, 1}), {Rational(1), Rational(-1)},
                            ModelKind::STANDARD, 0};
    CHECK(psi(Q, 1, m11) == 0);
    // psi_1 = phi_1 always
    std::mt19937_64 rng(4);
    for (int i = 0; i < 50; ++i) {
        std::vector<Rational> roots;
        for (int j = 0; j < 3; ++j) roots.push_back(Rational((long)(rng() % 97) + 1 + 97 * j));
        Model<RationalRing> r{ValencyType({2, 3, 5}), roots, ModelKind::STANDARD, 0};
        CHECK(psi(Q, 1, r) == phi(Q, 1, r));
    }
}

TEST_CASE("conditions on the rational (1,2) model") {
    RationalRing Q;
    auto rec = check_conditions(Q, model_12());
    CHECK(rec.i);
    CHECK(rec.ii);
    CHECK(rec.iii);
    CHECK(rec.iv);
    Model<RationalRing> bad{ValencyType({1, 2}), {Rational(1), Rational(1)},
                            ModelKind::STANDARD, 0};
    CHECK_THROWS_AS(check_conditions(Q, bad), DomainError);
}

TEST_CASE("derivative identity") {
    RationalRing Q;
    auto m = model_12();
    CHECK(derivative_identity_check(Q, m));
    Model<RationalRing> single{ValencyType({1}), {Rational(1)}, ModelKind::STANDARD, 0};
    CHECK(derivative_identity_check(Q, single));
}

TEST_CASE("kummer invariant") {
    RationalRing Q;
    auto m = model_12();
    CHECK(kummer_invariant(Q, m) == 6);
    // (a,b) closed form: t = ab(a+b)
    for (long a = 1; a <= 5; ++a)
        for (long b = a + 1; b <= 6; ++b) {
            Model<RationalRing> f{ValencyType({Integer(a), Integer(b)}),
                                  {Rational(b), Rational(-a)}, ModelKind::STANDARD, 0};
            CHECK(kummer_invariant(Q, f) == Rational(a * b * (a + b)));
        }
    // tuple violating iii is rejected
    Model<RationalRing> off{ValencyType({1, 2}), {Rational(2), Rational(3)},
                            ModelKind::STANDARD, 0};
    CHECK_THROWS_AS(kummer_invariant(Q, off), DomainError);
}

TEST_CASE("partial fraction identity") {
    RationalRing Q;
    CHECK(partial_fraction_identity_check(Q, {Rational(1), Rational(-1)}));
    CHECK(partial_fraction_identity_check(Q, {Rational(7)}));
    GFPtr F7 = GF::make(7, 1);
    GFRing gf{F7};
    CHECK(partial_fraction_identity_check(gf,
                                          {F7->from_int(1), F7->from_int(2), F7->from_int(3)}));
}

TEST_CASE("psi equals signed expansion coefficient on random tuples") {
    GFPtr F = GF::make(13, 1);
    GFRing gf{F};
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<GFElem> roots;
        while (roots.size() < 3) {
            GFElem x = F->from_index(1 + rng() % 12);
            bool dup = false;
            for (auto& r : roots) dup |= r == x;
            if (!dup) roots.push_back(x);
        }
        Model<GFRing> m{ValencyType({1, 2, 4}), roots, ModelKind::STANDARD, 0};
        Poly<GFRing> b = expand(gf, m);
        for (size_t k = 1; k <= 7; ++k) {
            GFElem c = k < b.size() ? b[k] : F->zero();
            if (k % 2 == 1) c = F->neg(c);
            CHECK(psi(gf, k, m) == c);
        }
    }
}

TEST_CASE("jacobian closed forms agree with direct determinants") {
    GFPtr F = GF::make(31, 1);
    GFRing gf{F};
    std::mt19937_64 rng(77);
    std::vector<std::vector<Integer>> types = {{1, 2}, {1, 2, 3}, {2, 3, 5, 7}, {1, 2, 3, 4, 5}};
    for (auto& tv : types) {
        ValencyType t(tv);
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<GFElem> roots;
            while (roots.size() < t.n()) {
                GFElem x = F->from_index(1 + rng() % 30);
                bool dup = false;
                for (auto& r : roots) dup |= r == x;
                if (!dup) roots.push_back(x);
            }
            Model<GFRing> m{t, roots, ModelKind::STANDARD, 0};
            CHECK(det_by_minors(gf, psi_jacobian(gf, m)) == psi_jacobian_closed_form(gf, m));
            CHECK(det_by_minors(gf, phi_jacobian(gf, m)) == phi_jacobian_closed_form(gf, m));
        }
    }
}
