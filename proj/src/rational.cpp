#include "fgc/rational.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

namespace fgc {

std::optional<Rational> parse_rational(const std::string& text) {
    if (text.empty()) return std::nullopt;
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            BigInt p(text);
            return Rational(p);
        }
        const std::string num = text.substr(0, slash);
        const std::string den = text.substr(slash + 1);
        if (num.empty() || den.empty()) return std::nullopt;
        BigInt p(num), q(den);
        if (q == 0) return std::nullopt;
        return Rational(p, q);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

std::string format_rational(const Rational& value) {
    std::ostringstream out;
    if (denominator(value) == 1) {
        out << numerator(value);
    } else {
        out << numerator(value) << '/' << denominator(value);
    }
    return out.str();
}

std::string format_decimal(double value, int significant_digits) {
    std::ostringstream out;
    out.precision(significant_digits);
    out << value;
    return out.str();
}

}  // namespace fgc
