#include "doctest.h"

#include <random>

#include "linrel/field.hpp"

using namespace linrel;

namespace {

Scalar random_scalar(const FieldSpec& f, std::mt19937_64& rng) {
    if (f.is_prime_field())
        return Scalar::from_int(f, static_cast<long long>(rng() % f.characteristic()));
    long long num = static_cast<long long>(rng() % 9) - 4;
    long long den = 1 + static_cast<long long>(rng() % 4);
    return Scalar::from_fraction(f, num, den);
}

} // namespace

TEST_CASE("field spec construction") {
    CHECK(FieldSpec::prime(2).characteristic() == 2);
    CHECK(FieldSpec::prime(65521).is_prime_field());  // largest prime below 2^16
    CHECK(FieldSpec::rationals().characteristic() == 0);
    CHECK_THROWS_AS(FieldSpec::prime(1), NotAPrime);
    CHECK_THROWS_AS(FieldSpec::prime(4), NotAPrime);
    CHECK_THROWS_AS(FieldSpec::prime(91), NotAPrime);  // 7 * 13
    CHECK_THROWS_AS(FieldSpec::prime(65536), NotAPrime);
    CHECK(FieldSpec::prime(2).name() == "gf 2");
    CHECK(FieldSpec::rationals().name() == "q");
}

TEST_CASE("characteristic two addition") {
    FieldSpec f2 = FieldSpec::prime(2);
    Scalar one = Scalar::one(f2);
    CHECK((one + one).is_zero());
}

TEST_CASE("exact fraction reduction") {
    FieldSpec q = FieldSpec::rationals();
    Scalar a = Scalar::from_fraction(q, 1, 3);
    Scalar b = Scalar::from_fraction(q, 1, 6);
    CHECK(a + b == Scalar::from_fraction(q, 1, 2));
    CHECK((a + b).to_string() == "1/2");
    // Canonical representation: negative sign on the numerator, reduced.
    CHECK(Scalar::from_fraction(q, 2, -4).to_string() == "-1/2");
    CHECK(Scalar::from_fraction(q, -6, -4).to_string() == "3/2");
}

TEST_CASE("gf5 division against residue scan") {
    FieldSpec f5 = FieldSpec::prime(5);
    Scalar two = Scalar::from_int(f5, 2);
    Scalar three = Scalar::from_int(f5, 3);
    // Oracle: the unique residue r with 3*r = 2 mod 5.
    std::uint32_t expected = 99;
    for (std::uint32_t r = 0; r < 5; ++r)
        if ((3 * r) % 5 == 2) expected = r;
    CHECK(expected == 4);
    CHECK((two / three).residue() == expected);
}

TEST_CASE("field axioms on random triples") {
    std::vector<FieldSpec> fields = {FieldSpec::prime(2), FieldSpec::prime(3), FieldSpec::prime(5),
                                     FieldSpec::rationals()};
    for (const FieldSpec& f : fields) {
        std::mt19937_64 rng(20240517);
        for (int trial = 0; trial < 1000; ++trial) {
            Scalar a = random_scalar(f, rng), b = random_scalar(f, rng), c = random_scalar(f, rng);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK(a * (b + c) == a * b + a * c);
        }
    }
}

TEST_CASE("multiplicative inverses exhaustively over small primes") {
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        FieldSpec f = FieldSpec::prime(p);
        for (std::uint32_t v = 1; v < p; ++v) {
            Scalar a = Scalar::from_int(f, v);
            CHECK((a * a.inverse()).is_one());
            CHECK(a / a == Scalar::one(f));
        }
    }
}

TEST_CASE("error paths") {
    FieldSpec f3 = FieldSpec::prime(3);
    FieldSpec q = FieldSpec::rationals();
    CHECK_THROWS_AS(Scalar::one(f3) / Scalar::zero(f3), DivisionByZero);
    CHECK_THROWS_AS(Scalar::zero(q).inverse(), DivisionByZero);
    CHECK_THROWS_AS(Scalar::one(f3) + Scalar::one(q), FieldMismatch);
    CHECK_THROWS_AS(scalar_arith(Scalar::one(f3), Scalar::one(FieldSpec::prime(5)), ArithOp::Mul),
                    FieldMismatch);
}

TEST_CASE("scalar_arith dispatch") {
    FieldSpec f7 = FieldSpec::prime(7);
    Scalar a = Scalar::from_int(f7, 5), b = Scalar::from_int(f7, 4);
    CHECK(scalar_arith(a, b, ArithOp::Add).residue() == 2);
    CHECK(scalar_arith(a, b, ArithOp::Sub).residue() == 1);
    CHECK(scalar_arith(a, b, ArithOp::Mul).residue() == 6);
    CHECK(scalar_arith(a, b, ArithOp::Div).residue() == 3);  // 3*4 = 12 = 5 mod 7
}

TEST_CASE("scalar parsing") {
    FieldSpec f5 = FieldSpec::prime(5);
    FieldSpec q = FieldSpec::rationals();
    CHECK(parse_scalar(f5, "7").residue() == 2);
    CHECK(parse_scalar(f5, "-1").residue() == 4);
    CHECK(parse_scalar(q, "3/9") == Scalar::from_fraction(q, 1, 3));
    CHECK(parse_scalar(q, "-4") == Scalar::from_int(q, -4));
    CHECK_THROWS_AS(parse_scalar(q, "1/0"), BadScalar);
    CHECK_THROWS_AS(parse_scalar(q, "a"), BadScalar);
    CHECK_THROWS_AS(parse_scalar(q, ""), BadScalar);
    CHECK_THROWS_AS(parse_scalar(f5, "1/2"), BadScalar);

    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        Scalar s = random_scalar(q, rng);
        CHECK(parse_scalar(q, s.to_string()) == s);
    }
}
