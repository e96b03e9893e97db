#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>
#include <string>

#include "linrel/oracle.hpp"
#include "linrel/subspace.hpp"

using namespace linrel;

namespace {

std::string key(const Vector& v) {
    std::string s;
    for (const Scalar& x : v) s += x.to_string() + ",";
    return s;
}

std::set<std::string> element_set(const Subspace& s) {
    std::set<std::string> out;
    for (const Vector& v : enumerate_elements(s)) out.insert(key(v));
    return out;
}

Subspace gf2_span(std::size_t n, const std::vector<std::vector<long long>>& gens) {
    FieldSpec f2 = FieldSpec::prime(2);
    std::vector<Vector> rows;
    for (const auto& g : gens) rows.push_back(make_vector(f2, g));
    return Subspace::span(f2, n, std::move(rows));
}

Subspace random_subspace(const FieldSpec& f, std::size_t n, std::mt19937_64& rng) {
    std::size_t d = rng() % (n + 1);
    std::vector<Vector> gens;
    for (std::size_t i = 0; i < d; ++i) {
        std::vector<long long> entries;
        for (std::size_t j = 0; j < n; ++j)
            entries.push_back(static_cast<long long>(rng() % 5) - 2);
        gens.push_back(make_vector(f, entries));
    }
    return Subspace::span(f, n, std::move(gens));
}

} // namespace

TEST_CASE("canonicalize drops duplicate generators") {
    Subspace s = gf2_span(2, {{1, 1}, {1, 1}});
    CHECK(s.dim() == 1);
    CHECK(s.basis()[0] == make_vector(FieldSpec::prime(2), {1, 1}));
}

TEST_CASE("canonicalize detects a dependent generator") {
    // Oracle: enumerate the 4 elements of span{g1, g2} and find g3 among them.
    Subspace first_two = gf2_span(3, {{1, 0, 1}, {0, 1, 1}});
    auto elems = element_set(first_two);
    CHECK(elems.size() == 4);
    Vector g3 = make_vector(FieldSpec::prime(2), {1, 1, 0});
    CHECK(elems.count(key(g3)) == 1);

    Subspace all_three = gf2_span(3, {{1, 0, 1}, {0, 1, 1}, {1, 1, 0}});
    CHECK(all_three.dim() == 2);
    CHECK(all_three == first_two);
}

TEST_CASE("empty span is the zero subspace") {
    Subspace z = Subspace::span(FieldSpec::rationals(), 2, {});
    CHECK(z.dim() == 0);
    CHECK(z.is_zero());
    CHECK(z == Subspace(FieldSpec::rationals(), 2));
}

TEST_CASE("span rejects bad generators") {
    FieldSpec f2 = FieldSpec::prime(2);
    CHECK_THROWS_AS(Subspace::span(f2, 2, {make_vector(f2, {1, 0, 1})}), DimensionMismatch);
    CHECK_THROWS_AS(Subspace::span(f2, 1, {make_vector(FieldSpec::prime(3), {1})}), FieldMismatch);
}

TEST_CASE("sum has zero as neutral element and is idempotent") {
    std::mt19937_64 rng(11);
    for (const FieldSpec& f : {FieldSpec::prime(2), FieldSpec::rationals()}) {
        for (int i = 0; i < 20; ++i) {
            Subspace u = random_subspace(f, 3, rng);
            CHECK(sum(u, Subspace(f, 3)) == u);
            CHECK(sum(u, u) == u);
        }
    }
}

TEST_CASE("sum against brute-force pairwise sums") {
    Subspace u = gf2_span(3, {{1, 0, 1}, {0, 1, 1}});
    Subspace w = gf2_span(3, {{1, 1, 0}, {0, 0, 1}});
    Subspace s = sum(u, w);
    CHECK(s == Subspace::full(FieldSpec::prime(2), 3));

    // Oracle: U + W is exactly the set of pairwise sums of elements.
    std::set<std::string> expected;
    for (const Vector& a : enumerate_elements(u))
        for (const Vector& b : enumerate_elements(w)) expected.insert(key(vector_add(a, b)));
    CHECK(element_set(s) == expected);
}

TEST_CASE("intersect against set intersection") {
    Subspace u = gf2_span(3, {{1, 0, 1}, {0, 1, 1}});
    Subspace w = gf2_span(3, {{1, 1, 0}, {0, 0, 1}});
    Subspace meet = intersect(u, w);
    CHECK(meet == gf2_span(3, {{1, 1, 0}}));

    auto eu = element_set(u), ew = element_set(w);
    std::set<std::string> expected;
    for (const std::string& k : eu)
        if (ew.count(k)) expected.insert(k);
    CHECK(element_set(meet) == expected);

    CHECK(intersect(u, u) == u);
    CHECK(intersect(u, Subspace(u.field(), 3)).is_zero());
}

TEST_CASE("containment") {
    FieldSpec f2 = FieldSpec::prime(2);
    Subspace full2 = Subspace::full(f2, 2);
    CHECK(full2.contains(Subspace(f2, 2)));                  // {0} in U
    CHECK(full2.contains(gf2_span(2, {{1, 1}})));
    Subspace u = gf2_span(3, {{1, 0, 1}, {0, 1, 1}});
    CHECK_FALSE(u.contains(gf2_span(3, {{0, 0, 1}})));
    // Derived check: [0,0,1] is not among the four span elements.
    CHECK(element_set(u).count(key(make_vector(f2, {0, 0, 1}))) == 0);
    CHECK_THROWS_AS(u.contains(full2), DimensionMismatch);
}

TEST_CASE("complement choices are deterministic") {
    FieldSpec f2 = FieldSpec::prime(2);
    Subspace full2 = Subspace::full(f2, 2);
    Subspace u = gf2_span(2, {{1, 1}});

    Subspace x0 = complement(u, full2);
    CHECK(x0 == gf2_span(2, {{1, 0}}));  // first standard vector outside U
    CHECK_FALSE(u.contains(make_vector(f2, {1, 0})));
    CHECK(sum(u, x0).dim() == 2);

    CHECK(complement(u, u).is_zero());
    CHECK(complement(Subspace(f2, 2), full2) == full2);
    CHECK_THROWS_AS(complement(full2, u), NotContained);
}

TEST_CASE("complement is a direct summand on random pairs") {
    std::mt19937_64 rng(99);
    for (const FieldSpec& f : {FieldSpec::prime(2), FieldSpec::prime(5), FieldSpec::rationals()}) {
        for (int i = 0; i < 50; ++i) {
            Subspace w = random_subspace(f, 4, rng);
            Subspace u = intersect(w, random_subspace(f, 4, rng));
            Subspace x0 = complement(u, w);
            CHECK(intersect(u, x0).is_zero());
            CHECK(sum(u, x0) == w);
            CHECK(codim(u, w) == x0.dim());
        }
    }
}

TEST_CASE("canonical representation ignores generator order and scaling") {
    std::mt19937_64 rng(4242);
    for (const FieldSpec& f : {FieldSpec::prime(3), FieldSpec::rationals()}) {
        for (int i = 0; i < 100; ++i) {
            std::size_t n = 1 + rng() % 4;
            Subspace u = random_subspace(f, n, rng);
            std::vector<Vector> gens = u.basis();
            // Duplicate, shuffle, and rescale the generators.
            gens.insert(gens.end(), u.basis().begin(), u.basis().end());
            std::shuffle(gens.begin(), gens.end(), rng);
            for (Vector& g : gens) {
                long long c = 1 + static_cast<long long>(rng() % 2);
                g = vector_scale(Scalar::from_int(f, c), g);
            }
            CHECK(Subspace::span(f, n, std::move(gens)) == u);
        }
    }
}

TEST_CASE("modular law on random pairs") {
    std::mt19937_64 rng(31337);
    for (const FieldSpec& f : {FieldSpec::prime(2), FieldSpec::prime(3), FieldSpec::prime(5),
                               FieldSpec::rationals()}) {
        for (int i = 0; i < 1000; ++i) {
            std::size_t n = rng() % 5;
            Subspace u = random_subspace(f, n, rng);
            Subspace w = random_subspace(f, n, rng);
            CHECK(sum(u, w).dim() + intersect(u, w).dim() == u.dim() + w.dim());
        }
    }
}

TEST_CASE("gf2 operations agree with exhaustive set computations") {
    FieldSpec f2 = FieldSpec::prime(2);
    for (std::size_t n = 0; n <= 3; ++n) {
        std::vector<Subspace> all = enumerate_subspaces(f2, n);
        for (const Subspace& u : all) {
            for (const Subspace& w : all) {
                auto eu = element_set(u), ew = element_set(w);

                std::set<std::string> sum_expected;
                for (const Vector& a : enumerate_elements(u))
                    for (const Vector& b : enumerate_elements(w))
                        sum_expected.insert(key(vector_add(a, b)));
                CHECK(element_set(sum(u, w)) == sum_expected);

                std::set<std::string> meet_expected;
                for (const std::string& k : eu)
                    if (ew.count(k)) meet_expected.insert(k);
                CHECK(element_set(intersect(u, w)) == meet_expected);

                bool contains_expected = std::includes(eu.begin(), eu.end(), ew.begin(), ew.end());
                CHECK(u.contains(w) == contains_expected);
            }
        }
    }
}

TEST_CASE("ambient dimension zero is legal") {
    FieldSpec q = FieldSpec::rationals();
    Subspace z(q, 0);
    CHECK(z.is_full());
    CHECK(z.is_zero());
    CHECK(sum(z, z) == z);
    CHECK(intersect(z, z) == z);
    CHECK(complement(z, z) == z);
    CHECK(z.contains(z));
}
