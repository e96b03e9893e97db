#include "doctest.h"

#include <set>
#include <string>

#include "linrel/oracle.hpp"
#include "linrel/relation.hpp"

using namespace linrel;

namespace {

const FieldSpec f2 = FieldSpec::prime(2);

LinearRelation gf2_rel(std::size_t n, std::size_t m,
                       const std::vector<std::vector<long long>>& gens) {
    std::vector<Vector> rows;
    for (const auto& g : gens) rows.push_back(make_vector(f2, g));
    return LinearRelation::from_generators(f2, n, m, std::move(rows));
}

Subspace gf2_span(std::size_t n, const std::vector<std::vector<long long>>& gens) {
    std::vector<Vector> rows;
    for (const auto& g : gens) rows.push_back(make_vector(f2, g));
    return Subspace::span(f2, n, std::move(rows));
}

// The swap operator on K^2: e1 -> e2, e2 -> e1.
LinearRelation swap_operator() { return gf2_rel(2, 2, {{1, 0, 0, 1}, {0, 1, 1, 0}}); }

// Projection of K^2 onto the first coordinate axis, as a total map into K^2.
LinearRelation projection_e1() { return gf2_rel(2, 2, {{1, 0, 1, 0}, {0, 1, 0, 0}}); }

// The same projection with multivalued part span{e2} added.
LinearRelation projection_with_mul() {
    return gf2_rel(2, 2, {{1, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}});
}

// The compose example: B with dom = span{e1}, e1 -> e1, plus mul span{e2}.
LinearRelation partial_with_mul() { return gf2_rel(2, 2, {{1, 0, 1, 0}, {0, 0, 0, 1}}); }

} // namespace

TEST_CASE("inverse swaps blocks and is an involution") {
    LinearRelation id2 = LinearRelation::identity(f2, 2);
    CHECK(inverse(id2) == id2);

    LinearRelation swap = swap_operator();
    CHECK(inverse(swap) == swap);  // the swap map is an involution

    LinearRelation r = gf2_rel(2, 2, {{1, 0, 1, 1}});
    CHECK(inverse(r) == gf2_rel(2, 2, {{1, 1, 1, 0}}));
    CHECK(inverse(inverse(r)) == r);
}

TEST_CASE("parts of inverse swap dom/ran and ker/mul") {
    for (const LinearRelation& r :
         {projection_with_mul(), partial_with_mul(), gf2_rel(1, 2, {{1, 1, 0}, {0, 0, 1}})}) {
        LinearRelation ri = inverse(r);
        CHECK(ri.dom() == r.ran());
        CHECK(ri.ran() == r.dom());
        CHECK(ri.ker() == r.mul());
        CHECK(ri.mul() == r.ker());
    }
}

TEST_CASE("parts on named instances") {
    LinearRelation r = projection_with_mul();
    CHECK(r.dom() == Subspace::full(f2, 2));
    CHECK(r.ran() == Subspace::full(f2, 2));
    CHECK(r.ker() == gf2_span(2, {{0, 1}}));
    CHECK(r.mul() == gf2_span(2, {{0, 1}}));

    // Oracle: project the eight graph elements directly.
    std::set<std::string> dom_elems, ran_elems;
    for (const Vector& e : enumerate_elements(r.graph())) {
        std::string x, y;
        for (std::size_t i = 0; i < 2; ++i) x += e[i].to_string() + ",";
        for (std::size_t i = 2; i < 4; ++i) y += e[i].to_string() + ",";
        dom_elems.insert(x);
        ran_elems.insert(y);
    }
    CHECK(dom_elems.size() == 4);  // all of K^2
    CHECK(ran_elems.size() == 4);

    LinearRelation id3 = LinearRelation::identity(f2, 3);
    CHECK(id3.dom() == Subspace::full(f2, 3));
    CHECK(id3.ran() == Subspace::full(f2, 3));
    CHECK(id3.ker().is_zero());
    CHECK(id3.mul().is_zero());
    CHECK(id3.is_operator());
}

TEST_CASE("example pair with equal parts but incomparable graphs") {
    LinearRelation a = LinearRelation::identity(f2, 2);
    LinearRelation b = swap_operator();
    CHECK(a.dom() == b.dom());
    CHECK(a.ran() == b.ran());
    CHECK(a.ker() == b.ker());
    CHECK(a.mul() == b.mul());
    CHECK(a.ker().is_zero());
    CHECK(a.mul().is_zero());
    CHECK_FALSE(contains(b, a));
    CHECK_FALSE(contains(a, b));
}

TEST_CASE("compose with identity is neutral") {
    LinearRelation s = partial_with_mul();
    CHECK(compose(s, LinearRelation::identity(f2, 2)) == s);
    CHECK(compose(LinearRelation::identity(f2, 2), s) == s);
}

TEST_CASE("compose on the BB^-1 A example") {
    LinearRelation a = projection_e1();
    LinearRelation b = partial_with_mul();
    LinearRelation bbia = compose(b, compose(inverse(b), a));
    CHECK(bbia.ran() == Subspace::full(f2, 2));
    CHECK(bbia.ker() == gf2_span(2, {{0, 1}}));

    // Membership oracle: (x, z) is in BB^-1A iff (x, u) in A and
    // (y, u), (y, z) in B for some y, u. Scan all sixteen pairs.
    auto in_graph = [](const LinearRelation& r, const Vector& x, const Vector& y) {
        Vector xy = x;
        xy.insert(xy.end(), y.begin(), y.end());
        return r.graph().contains(xy);
    };
    std::vector<Vector> points = enumerate_elements(Subspace::full(f2, 2));
    std::vector<Vector> expected_pairs;
    for (const Vector& x : points)
        for (const Vector& z : points) {
            bool found = false;
            for (const Vector& y : points)
                for (const Vector& u : points)
                    if (in_graph(a, x, u) && in_graph(b, y, u) && in_graph(b, y, z)) found = true;
            if (found) {
                Vector xz = x;
                xz.insert(xz.end(), z.begin(), z.end());
                expected_pairs.push_back(xz);
            }
        }
    CHECK(LinearRelation::from_generators(f2, 2, 2, expected_pairs) == bbia);
}

TEST_CASE("compose with the zero relation keeps only the kernel") {
    for (const LinearRelation& r : {projection_with_mul(), partial_with_mul()}) {
        LinearRelation zr = compose(LinearRelation::zero(f2, 2, 2), r);
        // Graph of 0*R is ker R x {0}.
        std::vector<Vector> rows;
        for (const Vector& k : r.ker().basis()) {
            Vector row = k;
            Vector z = zero_vector(f2, 2);
            row.insert(row.end(), z.begin(), z.end());
            rows.push_back(row);
        }
        CHECK(zr == LinearRelation::from_generators(f2, 2, 2, rows));
    }
}

TEST_CASE("compose agrees with exhaustive pair chaining on gf2") {
    for (std::size_t n = 0; n <= 2; ++n)
        for (std::size_t m = 0; m <= 2; ++m)
            for (std::size_t p = 0; p <= 2; ++p) {
                if (n + m > 3 || m + p > 3) continue;  // keep the grids small
                for (const Subspace& gr : enumerate_subspaces(f2, n + m)) {
                    LinearRelation r = LinearRelation::from_graph(n, m, gr);
                    for (const Subspace& gs : enumerate_subspaces(f2, m + p)) {
                        LinearRelation s = LinearRelation::from_graph(m, p, gs);
                        CHECK(compose(s, r) == oracle_compose(s, r));
                    }
                }
            }
}

TEST_CASE("image and preimage") {
    LinearRelation r = partial_with_mul();
    CHECK(image(r, Subspace(f2, 2)) == r.mul());           // R(0) = mul R
    CHECK(image(r, r.dom()) == r.ran());                   // R(dom R) = ran R
    CHECK(image(r, Subspace::full(f2, 2)) == r.ran());

    // A^{-1}(mul B) on the running example equals ker(BB^-1 A).
    LinearRelation a = projection_e1();
    LinearRelation b = partial_with_mul();
    Subspace pre = preimage(a, b.mul());
    CHECK(pre == gf2_span(2, {{0, 1}}));
    CHECK(pre == compose(b, compose(inverse(b), a)).ker());

    // Per-element oracle for the preimage.
    std::set<std::string> expected;
    for (const Vector& x : enumerate_elements(Subspace::full(f2, 2)))
        for (const Vector& y : enumerate_elements(b.mul())) {
            Vector xy = x;
            xy.insert(xy.end(), y.begin(), y.end());
            if (a.graph().contains(xy)) {
                std::string k;
                for (const Scalar& s : x) k += s.to_string() + ",";
                expected.insert(k);
            }
        }
    std::set<std::string> got;
    for (const Vector& x : enumerate_elements(pre)) {
        std::string k;
        for (const Scalar& s : x) k += s.to_string() + ",";
        got.insert(k);
    }
    CHECK(got == expected);
}

TEST_CASE("restriction") {
    LinearRelation r = partial_with_mul();
    CHECK(restrict(r, r.dom()) == r);
    CHECK(restrict(r, Subspace(f2, 2)) ==
          gf2_rel(2, 2, {{0, 0, 0, 1}}));  // {0} x mul R survives

    // B restricted to ker A with A injective: only the multivalued fiber.
    LinearRelation a = LinearRelation::identity(f2, 2);
    LinearRelation b = partial_with_mul();
    LinearRelation restricted = restrict(b, a.ker());
    CHECK(restricted.dom().is_zero());
    CHECK(restricted.mul() == b.mul());
    CHECK(restricted == gf2_rel(2, 2, {{0, 0, 0, 1}}));
}

TEST_CASE("relation addition and subtraction") {
    LinearRelation a = LinearRelation::identity(f2, 2);
    LinearRelation b = swap_operator();
    LinearRelation s = add(a, b);
    // (identity + swap)(x1,x2) = (x1+x2, x1+x2).
    CHECK(s == gf2_rel(2, 2, {{1, 0, 1, 1}, {0, 1, 1, 1}}));
    CHECK(subtract(a, a) == gf2_rel(2, 2, {{1, 0, 0, 0}, {0, 1, 0, 0}}));

    // Addition only sees the common domain.
    LinearRelation partial = partial_with_mul();
    CHECK(add(a, partial).dom() == partial.dom());
}

TEST_CASE("diagonal relations") {
    CHECK(diagonal(Subspace(f2, 1)) == LinearRelation::zero(f2, 1, 1));
    CHECK(diagonal(Subspace::full(f2, 2)) == LinearRelation::identity(f2, 2));
    LinearRelation d = diagonal(gf2_span(2, {{1, 1}}));
    CHECK(d == gf2_rel(2, 2, {{1, 1, 1, 1}}));
    CHECK(d.is_operator());
    CHECK(d.dom() == gf2_span(2, {{1, 1}}));
    CHECK(d.ran() == gf2_span(2, {{1, 1}}));
    CHECK(d.ker().is_zero());
}

TEST_CASE("arens criterion") {
    LinearRelation r = projection_with_mul();
    DecisionReport self = arens_equal(r, r);
    CHECK(self.verdict);
    for (const Evidence& e : self.evidence) CHECK(e.holds);

    // Equal parts but incomparable: verdict false because R is not in S.
    DecisionReport e13 = arens_equal(LinearRelation::identity(f2, 2), swap_operator());
    CHECK_FALSE(e13.verdict);
    CHECK(e13.first_failure() == "R contained in S");

    // Contained with enlarged multivalued part: ranges differ.
    LinearRelation s = gf2_rel(2, 2, {{1, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}});
    LinearRelation small = projection_e1();
    CHECK(contains(s, small));
    DecisionReport rep = arens_equal(small, s);
    CHECK_FALSE(rep.verdict);
    CHECK(rep.evidence[0].holds);
    CHECK(rep.first_failure() == "ker R = ker S");
}

TEST_CASE("containment criterion c12") {
    LinearRelation a = LinearRelation::identity(f2, 2);
    CHECK(contained_c12(a, a).verdict);

    LinearRelation b = swap_operator();
    DecisionReport rep = contained_c12(a, b);
    CHECK_FALSE(rep.verdict);
    // ran(A cap B) = span{(1,1)} is a proper subspace of ran A.
    CHECK(intersect(a, b).ran() == gf2_span(2, {{1, 1}}));
    CHECK(rep.first_failure() == "ran(A cap B) = ran A");

    CHECK(contained_c12(LinearRelation::zero(f2, 2, 2), a).verdict);
}

TEST_CASE("relation shape errors") {
    LinearRelation a = LinearRelation::identity(f2, 2);
    LinearRelation b = LinearRelation::identity(f2, 3);
    CHECK_THROWS_AS(arens_equal(a, b), ShapeMismatch);
    CHECK_THROWS_AS(contained_c12(a, b), ShapeMismatch);
    CHECK_THROWS_AS(compose(a, b), DimensionMismatch);
    CHECK_THROWS_AS(add(a, b), ShapeMismatch);
}

TEST_CASE("degenerate zero-dimensional spaces flow through") {
    LinearRelation r = LinearRelation::zero(f2, 0, 2);
    CHECK(r.dom().ambient_dim() == 0);
    CHECK(r.is_operator());
    LinearRelation s = LinearRelation::zero(f2, 2, 0);
    CHECK(compose(r, s) == LinearRelation::zero(f2, 2, 2));  // chained through K^0
    CHECK(compose(inverse(r), inverse(s)) == LinearRelation::zero(f2, 0, 0));
    CHECK(LinearRelation::identity(f2, 0) == LinearRelation::zero(f2, 0, 0));
}
