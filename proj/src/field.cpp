#include "grl/field.hpp"

namespace grl {

namespace {

bool is_small_prime(unsigned p) {
    if (p < 2) return false;
    for (unsigned d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

Int mod_p(const Int& x, unsigned p) {
    Int r = x % p;
    if (r < 0) r += p;
    return r;
}

// Extended Euclid on small moduli; p is prime so every nonzero class inverts.
Int inv_mod(const Int& a, unsigned p) {
    Int t = 0, new_t = 1;
    Int r = p, new_r = mod_p(a, p);
    while (new_r != 0) {
        Int q = r / new_r;
        Int tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw BadInput("element not invertible mod " + std::to_string(p));
    return mod_p(t, p);
}

} // namespace

Field Field::fp(unsigned p) {
    if (!is_small_prime(p)) throw BadInput("field modulus must be a small prime, got " + std::to_string(p));
    return Field{Kind::prime, p};
}

std::string Field::name() const {
    if (kind == Kind::rationals) return "q";
    return "f" + std::to_string(p);
}

Field Field::from_name(const std::string& name) {
    if (name == "q") return rationals();
    if (name.size() >= 2 && name[0] == 'f') {
        try {
            return fp(static_cast<unsigned>(std::stoul(name.substr(1))));
        } catch (const std::logic_error&) {
            throw BadInput("unknown field name '" + name + "'");
        }
    }
    throw BadInput("unknown field name '" + name + "'");
}

Rat field_normalize(const Field& f, const Rat& value) {
    if (f.kind == Field::Kind::rationals) return value;
    Int num = mod_p(rat_num(value), f.p);
    Int den = mod_p(rat_den(value), f.p);
    if (den == 0) throw BadInput("denominator not invertible in " + f.name());
    if (den == 1) return Rat(num);
    return Rat(mod_p(num * inv_mod(den, f.p), f.p));
}

Rat field_add(const Field& f, const Rat& a, const Rat& b) { return field_normalize(f, a + b); }
Rat field_sub(const Field& f, const Rat& a, const Rat& b) { return field_normalize(f, a - b); }
Rat field_mul(const Field& f, const Rat& a, const Rat& b) { return field_normalize(f, a * b); }

Rat field_neg(const Field& f, const Rat& a) { return field_normalize(f, -a); }

Rat field_inv(const Field& f, const Rat& a) {
    if (a == 0) throw BadInput("division by zero in " + f.name());
    if (f.kind == Field::Kind::rationals) return Rat(1) / a;
    return Rat(inv_mod(rat_num(a), f.p));
}

Rat field_div(const Field& f, const Rat& a, const Rat& b) {
    return field_mul(f, a, field_inv(f, b));
}

namespace {
void require_same_field(const ExactScalar& a, const ExactScalar& b) {
    if (a.field() != b.field())
        throw FieldMismatch("scalar fields differ: " + a.field().name() + " vs " + b.field().name());
}
} // namespace

ExactScalar operator+(const ExactScalar& a, const ExactScalar& b) {
    require_same_field(a, b);
    return ExactScalar(a.field(), field_add(a.field(), a.value(), b.value()));
}

ExactScalar operator-(const ExactScalar& a, const ExactScalar& b) {
    require_same_field(a, b);
    return ExactScalar(a.field(), field_sub(a.field(), a.value(), b.value()));
}

ExactScalar operator*(const ExactScalar& a, const ExactScalar& b) {
    require_same_field(a, b);
    return ExactScalar(a.field(), field_mul(a.field(), a.value(), b.value()));
}

ExactScalar operator/(const ExactScalar& a, const ExactScalar& b) {
    require_same_field(a, b);
    return ExactScalar(a.field(), field_div(a.field(), a.value(), b.value()));
}

bool operator==(const ExactScalar& a, const ExactScalar& b) {
    return a.field() == b.field() && a.value() == b.value();
}

} // namespace grl
