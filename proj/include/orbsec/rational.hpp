#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace orbsec {

/// Exact arbitrary-precision fraction, always kept in lowest terms with a
/// positive denominator.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// "numerator/denominator", denominator always written (e.g. "2/1").
std::string to_string(const Rational& q);

/// Accepts "n/d" or a bare integer "n". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/**
 * Accumulates sum(sign / m) without touching big rationals per term.
 * Terms are bucketed by denominator and only combined in value().
 */
class WeightedSum {
public:
    WeightedSum() = default;
    WeightedSum(const WeightedSum& other) : buckets_(other.buckets_) {}
    WeightedSum& operator=(const WeightedSum& other) {
        buckets_ = other.buckets_;
        last_ = nullptr;
        return *this;
    }

    void add(std::uint64_t denominator, std::int64_t sign) {
        if (!last_ || last_->first != denominator)
            last_ = &*buckets_.try_emplace(denominator, 0).first;
        last_->second += sign;
    }
    Rational value() const;

private:
    std::map<std::uint64_t, std::int64_t> buckets_;
    std::pair<const std::uint64_t, std::int64_t>* last_ = nullptr;
};

}  // namespace orbsec
