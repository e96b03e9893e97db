#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <boost/multiprecision/cpp_int.hpp>

#include "linrel/errors.hpp"

namespace linrel {

using Rational = boost::multiprecision::cpp_rational;

// Which exact field scalars live in: a prime field GF(p) with p < 2^16,
// or the rationals with arbitrary-precision integers. No floating point
// anywhere; all rank decisions downstream rely on exact arithmetic.
class FieldSpec {
public:
    static FieldSpec prime(std::uint32_t p);  // throws NotAPrime unless p is prime and < 2^16
    static FieldSpec rationals();

    bool is_prime_field() const { return p_ != 0; }
    std::uint32_t characteristic() const { return p_; }  // 0 for the rationals

    std::string name() const;  // "gf <p>" or "q", matching the file format tag

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

private:
    explicit FieldSpec(std::uint32_t p) : p_(p) {}
    std::uint32_t p_ = 0;
};

// An immutable field element in canonical form: the residue 0..p-1 over
// GF(p), a fully reduced fraction with positive denominator over Q.
// Equal scalars have identical representations, so operator== is exact.
class Scalar {
public:
    Scalar() : field_(FieldSpec::rationals()), value_(Rational(0)) {}

    static Scalar zero(const FieldSpec& f);
    static Scalar one(const FieldSpec& f);
    static Scalar from_int(const FieldSpec& f, long long v);
    static Scalar from_fraction(const FieldSpec& f, long long num, long long den);

    const FieldSpec& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar inverse() const;  // throws DivisionByZero on zero

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    friend bool operator==(const Scalar& a, const Scalar& b);

    std::uint32_t residue() const;     // prime-field value
    const Rational& rational() const;  // rational value

    std::string to_string() const;  // "5", "-3", "1/2"; round-trips through parse_scalar

private:
    Scalar(FieldSpec f, std::uint32_t residue) : field_(f), value_(residue) {}
    Scalar(FieldSpec f, Rational r) : field_(f), value_(std::move(r)) {}

    FieldSpec field_;
    std::variant<std::uint32_t, Rational> value_;
};

enum class ArithOp { Add, Sub, Mul, Div };

// Dispatcher over the four basic operations; throws FieldMismatch when the
// operands disagree and DivisionByZero on division by zero.
Scalar scalar_arith(const Scalar& a, const Scalar& b, ArithOp op);

// Parses "12", "-3" or "a/b" in the given field; throws BadScalar.
Scalar parse_scalar(const FieldSpec& f, const std::string& token);

} // namespace linrel
