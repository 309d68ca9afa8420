#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "dft/fqsolver.hpp"
#include "dft/reduction.hpp"

using namespace dft;

static ValencyType vt(std::vector<Integer> v) { return ValencyType(std::move(v)); }

TEST_CASE("solve (2,3,4) over F_11") {
    auto res = solve_over_fq(vt({2, 3, 4}), 11, 1);
    CHECK(!res.models.empty());
    GFRing gf{res.field};
    for (auto& m : res.models) {
        auto rec = check_conditions(gf, m);
        CHECK(rec.i);
        CHECK(rec.iv);
        bool has_one = false;
        for (auto& r : m.roots) has_one |= r == res.field->one();
        CHECK(has_one);
    }
}

TEST_CASE("solve (1,1,1) over F_25: unique tree, mu_3 roots") {
    auto res = solve_over_fq(vt({1, 1, 1}), 5, 2);
    REQUIRE(res.models.size() == 1);
    for (auto& r : res.models[0].roots)
        CHECK(res.field->pow(r, 3) == res.field->one());
}

TEST_CASE("solve (1,2) over F_5: two normalizations of one tree") {
    auto res = solve_over_fq(vt({1, 2}), 5, 1);
    REQUIRE(res.models.size() == 2);
    auto rep = orbit_report(vt({1, 2}), 5);
    CHECK(rep.complete);
    CHECK(rep.trees.size() == 1);
    CHECK(rep.trees[0].splitting_degree == 1);
    CHECK(rep.trees[0].moduli_degree == 1);
    CHECK(rep.frobenius_orbits.size() == 1);
}

TEST_CASE("wild primes and bounds are rejected") {
    CHECK_THROWS_AS(solve_over_fq(vt({1, 2}), 3, 1), DomainError);   // 3 | N
    CHECK_THROWS_AS(solve_over_fq(vt({1, 2}), 2, 1), DomainError);   // 2 | a_2
    CHECK_THROWS_AS(solve_over_fq(vt({1, 2}), 5, 17), DomainError);  // p^k > 2^16
}

TEST_CASE("emptiness when p | d: (2,3,7) at p = 5") {
    // d = (a+b,b+c)(b+c,c+a)(c+a,a+b) = gcd(5,10) gcd(10,9) gcd(9,5) = 5
    auto rep = orbit_report(vt({2, 3, 7}), 5, 6);
    CHECK(!rep.complete);
    CHECK(rep.models.empty());
}

TEST_CASE("orbit report saturation invariants") {
    for (auto& [tv, p] : std::vector<std::pair<std::vector<Integer>, Integer>>{
             {{1, 2}, 5}, {{1, 1, 1}, 5}, {{2, 3, 4}, 11}, {{1, 1, 2}, 7}}) {
        auto rep = orbit_report(vt(tv), p);
        REQUIRE(rep.complete);
        Integer expect = total_normalized_models(rep.type);
        CHECK(Integer((unsigned long)rep.models.size()) == expect);
        // trees partition the model set
        size_t covered = 0;
        for (auto& tr : rep.trees) covered += tr.model_indices.size();
        CHECK(covered == rep.models.size());
        // frobenius orbits partition the trees
        size_t tcount = 0;
        for (auto& orb : rep.frobenius_orbits) tcount += orb.size();
        CHECK(tcount == rep.trees.size());
        for (auto& tr : rep.trees) CHECK(rep.frobenius_orbits[tr.frobenius_orbit].size() ==
                                         tr.moduli_degree);
        // every model passes condition i
        GFRing gf{rep.field};
        for (auto& m : rep.models) CHECK(check_conditions(gf, m).i);
        // Frobenius closure of the model set
        std::set<std::string> keys;
        // canonical key: roots sorted within equal-exponent runs
        auto key_of = [&](const Model<GFRing>& m) {
            std::vector<std::uint64_t> idx;
            for (auto& r : m.roots) idx.push_back(rep.field->index_of(r));
            size_t i = 0;
            while (i < idx.size()) {
                size_t j = i;
                while (j < idx.size() && m.type.a[j] == m.type.a[i]) ++j;
                std::sort(idx.begin() + i, idx.begin() + j);
                i = j;
            }
            std::string k;
            for (auto v : idx) k += std::to_string(v) + ",";
            return k;
        };
        for (auto& m : rep.models) keys.insert(key_of(m));
        for (auto& m : rep.models) {
            Model<GFRing> fm = m;
            for (auto& r : fm.roots) r = rep.field->frobenius(r);
            CHECK(keys.count(key_of(fm)) == 1);
        }
    }
}

TEST_CASE("cyclotomic types: orbit counts match the closed form") {
    // generic, p-congruent to (1,...,1)
    struct Case {
        std::vector<Integer> t;
        Integer p;
    };
    for (auto& c : std::vector<Case>{{{1, 14, 27}, 13}, {{1, 10, 19, 28}, 3}}) {
        ValencyType t = vt(c.t);
        auto rep = orbit_report(t, c.p);
        REQUIRE(rep.complete);
        CHECK(Integer((unsigned long)rep.frobenius_orbits.size()) ==
              cyclotomic_orbit_count(t, c.p));
    }
}

TEST_CASE("(1,1,1,9,17) at p = 2: four trees, one orbit of size 4") {
    auto rep = orbit_report(vt({1, 1, 1, 9, 17}), 2);
    REQUIRE(rep.complete);
    CHECK(rep.trees.size() == 4);
    REQUIRE(rep.frobenius_orbits.size() == 1);
    CHECK(rep.frobenius_orbits[0].size() == 4);
    for (auto& tr : rep.trees) CHECK(tr.moduli_degree == 4);
}

TEST_CASE("char-2 census") {
    auto c159 = char2_abc_census(1, 5, 9);
    CHECK(c159.criterion);
    CHECK(c159.nonempty);
    REQUIRE(!c159.models.empty());
    // the roots are {1, x, 1+x} with x^2+x+1 = 0 in F_4
    GFPtr F4 = c159.field;
    for (auto& m : c159.models) {
        std::set<std::uint64_t> idx;
        for (auto& r : m.roots) idx.insert(F4->index_of(r));
        CHECK(idx == std::set<std::uint64_t>{1, 2, 3});
    }
    auto c135 = char2_abc_census(1, 3, 5);
    CHECK(!c135.criterion);
    CHECK(!c135.nonempty);
    auto c333 = char2_abc_census(3, 3, 3);
    CHECK(c333.criterion);
    CHECK(c333.nonempty);
    CHECK_THROWS_AS(char2_abc_census(2, 3, 5), DomainError);
}

TEST_CASE("construct_fp_split_model reproduces the worked F_11 example") {
    auto r = construct_fp_split_model(11, {1, 2, 3, 5, 6}, 9);
    CHECK(r.type == vt({1, 2, 3, 4, 10}));
    CHECK(r.conditions.iv);
    CHECK(r.type.N() % 11 == 9);
    // exponent/root pairing: (1-3X)(1-X)^2(1-5X)^3(1-2X)^4(1-6X)^10
    std::vector<std::uint64_t> roots;
    for (auto& x : r.model.roots) roots.push_back(r.field->index_of(x));
    CHECK(roots == std::vector<std::uint64_t>{3, 1, 5, 2, 6});

    auto r7 = construct_fp_split_model(7, {1, 2, 3}, 1);
    GFRing gf{r7.field};
    auto rec = check_conditions(gf, r7.model);
    CHECK(rec.iv);
    CHECK(r7.type.N() % 7 == 1);
}
