#include "orbsec/rational.hpp"

#include <stdexcept>

namespace orbsec {

std::string to_string(const Rational& q) {
    return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

Rational parse_rational(std::string_view text) {
    auto parse_int = [](std::string_view s) {
        if (s.empty())
            throw std::invalid_argument("empty integer");
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size())
            throw std::invalid_argument("bad integer");
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                throw std::invalid_argument("bad integer '" + std::string(s) + "'");
        return BigInt(std::string(s[0] == '+' ? s.substr(1) : s));
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_int(text));
    BigInt num = parse_int(text.substr(0, slash));
    BigInt den = parse_int(text.substr(slash + 1));
    if (den == 0)
        throw std::invalid_argument("zero denominator");
    return Rational(num, den);
}

Rational WeightedSum::value() const {
    Rational total = 0;
    for (const auto& [den, count] : buckets_)
        if (count != 0)
            total += Rational(BigInt(count), BigInt(den));
    return total;
}

}  // namespace orbsec
