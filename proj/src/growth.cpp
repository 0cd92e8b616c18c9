#include "grl/growth.hpp"

#include "grl/errors.hpp"

namespace grl {

GrowthRate GrowthRate::finite(Rat value) {
    if (value < 0) throw BadInput("finite growth rates are nonnegative");
    return GrowthRate(Kind::finite, std::move(value));
}

const Rat& GrowthRate::finite_value() const {
    if (kind_ != Kind::finite) throw BadInput("growth rate is not finite");
    return value_;
}

GrowthRate operator+(const GrowthRate& a, const GrowthRate& b) {
    if (a.is_minus_infinity() || b.is_minus_infinity()) return GrowthRate::minus_infinity();
    if (a.is_infinity() || b.is_infinity()) return GrowthRate::infinity();
    return GrowthRate::finite(a.value_ + b.value_);
}

bool operator==(const GrowthRate& a, const GrowthRate& b) {
    if (a.kind_ != b.kind_) return false;
    return !a.is_finite() || a.value_ == b.value_;
}

bool operator<(const GrowthRate& a, const GrowthRate& b) {
    if (a.is_minus_infinity()) return !b.is_minus_infinity();
    if (a.is_finite()) return b.is_infinity() || (b.is_finite() && a.value_ < b.value_);
    return false;
}

std::string GrowthRate::str() const {
    switch (kind_) {
        case Kind::minus_inf: return "-inf";
        case Kind::plus_inf: return "inf";
        default: return format_rational(value_);
    }
}

GrowthRate GrowthRate::parse(const std::string& text) {
    if (text == "-inf") return minus_infinity();
    if (text == "inf") return infinity();
    return finite(parse_rational(text));
}

RankProfile RankProfile::bounded(Int ceiling) {
    if (ceiling <= 0) throw BadInput("bounded profile needs a positive ceiling");
    return RankProfile(Kind::bounded, Rat(std::move(ceiling)));
}

RankProfile RankProfile::polynomial(unsigned degree) {
    if (degree == 0) throw BadInput("polynomial profile degree must be >= 1 (use bounded)");
    return RankProfile(Kind::polynomial, Rat(degree));
}

RankProfile RankProfile::exponential(Rat base) {
    if (base <= 1) throw BadInput("exponential profile base must exceed 1");
    return RankProfile(Kind::exponential, std::move(base));
}

std::string RankProfile::str() const {
    switch (kind_) {
        case Kind::zero: return "zero";
        case Kind::bounded: return "bounded:" + format_rational(param_);
        case Kind::polynomial: return "poly:" + format_rational(param_);
        default: return "exp:" + format_rational(param_);
    }
}

RankProfile RankProfile::parse(const std::string& text) {
    auto colon = text.find(':');
    std::string head = text.substr(0, colon);
    std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
    if (head == "zero") return zero();
    if (head == "bounded") return bounded(arg.empty() ? Int(1) : Int(arg));
    if (head == "poly" || head == "polynomial") {
        if (arg.empty()) throw BadInput("poly:<degree> needs a degree");
        return polynomial(static_cast<unsigned>(std::stoul(arg)));
    }
    if (head == "exp" || head == "exponential")
        return exponential(arg.empty() ? Rat(2) : parse_rational(arg));
    throw BadInput("unknown rank profile '" + text + "'");
}

GrowthRate growth_rate(const RankProfile& p) {
    switch (p.kind()) {
        case RankProfile::Kind::zero: return GrowthRate::minus_infinity();
        case RankProfile::Kind::bounded: return GrowthRate::finite(Rat(0));
        case RankProfile::Kind::polynomial: return GrowthRate::finite(p.parameter());
        default: return GrowthRate::infinity();
    }
}

RankProfile tensor(const RankProfile& p, const RankProfile& q) {
    using K = RankProfile::Kind;
    if (p.kind() == K::zero || q.kind() == K::zero) return RankProfile::zero();
    if (p.kind() == K::exponential || q.kind() == K::exponential) {
        if (p.kind() == K::exponential && q.kind() == K::exponential)
            return RankProfile::exponential(p.parameter() * q.parameter());
        return RankProfile::exponential(p.kind() == K::exponential ? p.parameter()
                                                                   : q.parameter());
    }
    if (p.kind() == K::polynomial || q.kind() == K::polynomial) {
        Rat degree(0);
        if (p.kind() == K::polynomial) degree += p.parameter();
        if (q.kind() == K::polynomial) degree += q.parameter();
        return RankProfile::polynomial(static_cast<unsigned>(rat_num(degree)));
    }
    return RankProfile::bounded(rat_num(p.parameter() * q.parameter()));
}

RankProfile direct_sum(const RankProfile& p, const RankProfile& q) {
    using K = RankProfile::Kind;
    if (p.kind() == K::zero) return q;
    if (q.kind() == K::zero) return p;
    if (p.kind() == K::exponential || q.kind() == K::exponential) {
        Rat base(1);
        if (p.kind() == K::exponential && p.parameter() > base) base = p.parameter();
        if (q.kind() == K::exponential && q.parameter() > base) base = q.parameter();
        return RankProfile::exponential(base);
    }
    if (p.kind() == K::polynomial || q.kind() == K::polynomial) {
        Rat degree(0);
        if (p.kind() == K::polynomial && p.parameter() > degree) degree = p.parameter();
        if (q.kind() == K::polynomial && q.parameter() > degree) degree = q.parameter();
        return RankProfile::polynomial(static_cast<unsigned>(rat_num(degree)));
    }
    return RankProfile::bounded(rat_num(p.parameter() + q.parameter()));
}

} // namespace grl
