#pragma once

#include <cstdint>
#include <string>

#include "grl/numeric.hpp"

namespace grl {

// Coefficient field: the rationals or a prime field F_p. The default
// throughout is F_2.
struct Field {
    enum class Kind : std::uint8_t { rationals, prime };

    Kind kind = Kind::prime;
    unsigned p = 2;

    static Field rationals() { return Field{Kind::rationals, 0}; }
    static Field fp(unsigned p = 2);

    bool is_prime_field() const { return kind == Kind::prime; }

    bool operator==(const Field& other) const {
        return kind == other.kind && (kind == Kind::rationals || p == other.p);
    }
    bool operator!=(const Field& other) const { return !(*this == other); }

    std::string name() const;          // "q", "f2", "f5", ...
    static Field from_name(const std::string& name);
};

// Normalizes a rational into canonical form for the field: lowest terms for
// Q, an integer in [0, p) for F_p (denominators are inverted mod p).
Rat field_normalize(const Field& f, const Rat& value);

Rat field_add(const Field& f, const Rat& a, const Rat& b);
Rat field_sub(const Field& f, const Rat& a, const Rat& b);
Rat field_mul(const Field& f, const Rat& a, const Rat& b);
Rat field_div(const Field& f, const Rat& a, const Rat& b);
Rat field_neg(const Field& f, const Rat& a);
Rat field_inv(const Field& f, const Rat& a);

// A single field element. Matrices carry the field once and store raw
// rationals; this type is the element-level view used at API boundaries.
class ExactScalar {
public:
    ExactScalar(Field field, Rat value)
        : field_(field), value_(field_normalize(field, std::move(value))) {}

    const Field& field() const { return field_; }
    const Rat& value() const { return value_; }
    bool is_zero() const { return value_ == 0; }

    friend ExactScalar operator+(const ExactScalar& a, const ExactScalar& b);
    friend ExactScalar operator-(const ExactScalar& a, const ExactScalar& b);
    friend ExactScalar operator*(const ExactScalar& a, const ExactScalar& b);
    friend ExactScalar operator/(const ExactScalar& a, const ExactScalar& b);
    friend bool operator==(const ExactScalar& a, const ExactScalar& b);

private:
    Field field_;
    Rat value_;
};

} // namespace grl
