#include "grl/numeric.hpp"

#include <cctype>

namespace grl {

Rat parse_rational(const std::string& text) {
    if (text.empty()) throw BadInput("empty rational literal");
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(text));
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        if (den == 0) throw BadInput("zero denominator in '" + text + "'");
        return Rat(num, den);
    } catch (const std::runtime_error&) {
        throw BadInput("malformed rational literal '" + text + "'");
    }
}

std::string format_rational(const Rat& value) {
    if (is_integer(value)) return rat_num(value).str();
    return rat_num(value).str() + "/" + rat_den(value).str();
}

} // namespace grl
