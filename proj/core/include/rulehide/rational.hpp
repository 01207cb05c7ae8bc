#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace rulehide {

/// Exact rational number in lowest terms with a positive denominator.
/// Every support/confidence statistic and every threshold comparison in the
/// library goes through this type; no strength decision involves floating
/// point. Comparison cross-multiplies in 128-bit, so counts far beyond any
/// realistic database size stay exact.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t num, std::int64_t den);

    /// Accepts "33%", "66.5%", "0.33", "1/3", "1". A trailing '%' divides
    /// by 100. Throws NumberSyntaxError on anything else (including
    /// negative values).
    static Rational parse(std::string_view text);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool operator==(const Rational&) const = default;
    std::strong_ordering operator<=>(const Rational& other) const;

    /// Lowest-terms form, e.g. "2/3".
    std::string to_string() const;

    /// The value as a percentage with three decimals, rounded half to even:
    /// 2/3 renders as "66.667".
    std::string percent() const;

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace rulehide
