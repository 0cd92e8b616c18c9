#pragma once

#include <optional>
#include <string>

#include "grl/numeric.hpp"

namespace grl {

// Extended-real growth rate: {-inf} union [0, inf]. Finite values are
// nonnegative rationals.
class GrowthRate {
public:
    static GrowthRate minus_infinity() { return GrowthRate(Kind::minus_inf, Rat(0)); }
    static GrowthRate infinity() { return GrowthRate(Kind::plus_inf, Rat(0)); }
    static GrowthRate finite(Rat value);

    bool is_minus_infinity() const { return kind_ == Kind::minus_inf; }
    bool is_infinity() const { return kind_ == Kind::plus_inf; }
    bool is_finite() const { return kind_ == Kind::finite; }
    const Rat& finite_value() const;

    // Extended-real addition with -inf absorbing; matches tensoring, where
    // a zero factor kills the product.
    friend GrowthRate operator+(const GrowthRate& a, const GrowthRate& b);
    friend bool operator==(const GrowthRate& a, const GrowthRate& b);
    friend bool operator!=(const GrowthRate& a, const GrowthRate& b) { return !(a == b); }
    friend bool operator<(const GrowthRate& a, const GrowthRate& b);
    friend bool operator<=(const GrowthRate& a, const GrowthRate& b) { return a < b || a == b; }
    friend bool operator>=(const GrowthRate& a, const GrowthRate& b) { return b <= a; }

    static GrowthRate max(const GrowthRate& a, const GrowthRate& b) { return a < b ? b : a; }

    std::string str() const;  // "-inf", "inf", or a rational literal
    static GrowthRate parse(const std::string& text);

private:
    enum class Kind { minus_inf, finite, plus_inf };
    GrowthRate(Kind kind, Rat value) : kind_(kind), value_(std::move(value)) {}
    Kind kind_;
    Rat value_;
};

// Symbolic asymptotic class of the rank function a(x). These four classes
// are closed under product (tensor) and max (direct sum), and the growth
// rate is exact on each.
class RankProfile {
public:
    enum class Kind { zero, bounded, polynomial, exponential };

    static RankProfile zero() { return RankProfile(Kind::zero, Rat(0)); }
    static RankProfile bounded(Int ceiling);
    static RankProfile polynomial(unsigned degree);
    static RankProfile exponential(Rat base);

    Kind kind() const { return kind_; }
    const Rat& parameter() const { return param_; }

    std::string str() const;
    static RankProfile parse(const std::string& text);  // "zero", "bounded:c", "poly:n", "exp:b"

    bool operator==(const RankProfile& other) const {
        return kind_ == other.kind_ && param_ == other.param_;
    }

private:
    RankProfile(Kind kind, Rat param) : kind_(kind), param_(std::move(param)) {}
    Kind kind_;
    Rat param_;
};

// Zero -> -inf, Bounded -> 0, Polynomial(n) -> n, Exponential -> inf.
GrowthRate growth_rate(const RankProfile& p);

// Symbolic tensor product: zero absorbs, bounded ceilings multiply,
// polynomial degrees add, exponential absorbs everything nonzero.
RankProfile tensor(const RankProfile& p, const RankProfile& q);

// Symbolic direct sum; the growth rate of the sum is the max of the parts.
RankProfile direct_sum(const RankProfile& p, const RankProfile& q);

} // namespace grl
