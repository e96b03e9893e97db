#include "linrel/field.hpp"

#include <cctype>

namespace linrel {

namespace {

bool is_prime_u32(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::uint32_t mod_pos(long long v, std::uint32_t p) {
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r);
}

// Extended Euclid; valid for 0 < a < p with p prime.
std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
}

void require_same_field(const Scalar& a, const Scalar& b) {
    if (!(a.field() == b.field()))
        throw FieldMismatch("scalar operands come from different fields");
}

} // namespace

FieldSpec FieldSpec::prime(std::uint32_t p) {
    if (p >= (1u << 16))
        throw NotAPrime("prime field characteristic must be < 2^16, got " + std::to_string(p));
    if (!is_prime_u32(p))
        throw NotAPrime(std::to_string(p) + " is not prime");
    return FieldSpec(p);
}

FieldSpec FieldSpec::rationals() { return FieldSpec(0); }

std::string FieldSpec::name() const {
    return is_prime_field() ? "gf " + std::to_string(p_) : "q";
}

Scalar Scalar::zero(const FieldSpec& f) {
    return f.is_prime_field() ? Scalar(f, std::uint32_t{0}) : Scalar(f, Rational(0));
}

Scalar Scalar::one(const FieldSpec& f) {
    return f.is_prime_field() ? Scalar(f, std::uint32_t{1}) : Scalar(f, Rational(1));
}

Scalar Scalar::from_int(const FieldSpec& f, long long v) {
    if (f.is_prime_field()) return Scalar(f, mod_pos(v, f.characteristic()));
    return Scalar(f, Rational(v));
}

Scalar Scalar::from_fraction(const FieldSpec& f, long long num, long long den) {
    if (den == 0) throw DivisionByZero("fraction with zero denominator");
    if (f.is_prime_field()) return from_int(f, num) / from_int(f, den);
    // cpp_rational normalizes sign and gcd through division.
    return Scalar(f, Rational(num) / Rational(den));
}

bool Scalar::is_zero() const {
    return field_.is_prime_field() ? std::get<std::uint32_t>(value_) == 0
                                   : std::get<Rational>(value_).is_zero();
}

bool Scalar::is_one() const {
    return field_.is_prime_field() ? std::get<std::uint32_t>(value_) == 1
                                   : std::get<Rational>(value_) == 1;
}

std::uint32_t Scalar::residue() const { return std::get<std::uint32_t>(value_); }

const Rational& Scalar::rational() const { return std::get<Rational>(value_); }

Scalar Scalar::operator-() const {
    if (field_.is_prime_field()) {
        std::uint32_t p = field_.characteristic();
        std::uint32_t r = residue();
        return Scalar(field_, r == 0 ? 0 : p - r);
    }
    return Scalar(field_, Rational(-rational()));
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    if (field_.is_prime_field())
        return Scalar(field_, mod_inverse(residue(), field_.characteristic()));
    return Scalar(field_, Rational(1) / rational());
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    require_same_field(a, b);
    if (a.field().is_prime_field()) {
        std::uint64_t s = std::uint64_t{a.residue()} + b.residue();
        return Scalar(a.field(), static_cast<std::uint32_t>(s % a.field().characteristic()));
    }
    return Scalar(a.field(), a.rational() + b.rational());
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
    require_same_field(a, b);
    if (a.field().is_prime_field()) {
        std::uint64_t s = std::uint64_t{a.residue()} * b.residue();
        return Scalar(a.field(), static_cast<std::uint32_t>(s % a.field().characteristic()));
    }
    return Scalar(a.field(), a.rational() * b.rational());
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    require_same_field(a, b);
    if (b.is_zero()) throw DivisionByZero("division by zero");
    return a * b.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (!(a.field() == b.field())) return false;
    if (a.field().is_prime_field()) return a.residue() == b.residue();
    return a.rational() == b.rational();
}

std::string Scalar::to_string() const {
    if (field_.is_prime_field()) return std::to_string(residue());
    const Rational& r = rational();
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

Scalar scalar_arith(const Scalar& a, const Scalar& b, ArithOp op) {
    switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
    }
    throw std::logic_error("unreachable arith op");
}

Scalar parse_scalar(const FieldSpec& f, const std::string& token) {
    if (token.empty()) throw BadScalar("empty scalar token");

    auto parse_int = [](const std::string& s) -> long long {
        if (s.empty()) throw BadScalar("empty integer in scalar");
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) throw BadScalar("sign without digits in scalar '" + s + "'");
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                throw BadScalar("bad character in scalar '" + s + "'");
        try {
            return std::stoll(s);
        } catch (const std::out_of_range&) {
            throw BadScalar("scalar '" + s + "' out of range");
        }
    };

    auto slash = token.find('/');
    if (slash == std::string::npos) return Scalar::from_int(f, parse_int(token));

    if (f.is_prime_field())
        throw BadScalar("fraction '" + token + "' is not a valid " + f.name() + " literal");
    long long num = parse_int(token.substr(0, slash));
    long long den = parse_int(token.substr(slash + 1));
    if (den == 0) throw BadScalar("zero denominator in '" + token + "'");
    return Scalar::from_fraction(f, num, den);
}

} // namespace linrel
