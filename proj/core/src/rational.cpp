#include "rulehide/rational.hpp"

#include <cctype>
#include <numeric>

#include "rulehide/errors.hpp"

namespace rulehide {

Rational::Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw NumberSyntaxError("zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (std::int64_t g = std::gcd(num_, den_); g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

std::strong_ordering Rational::operator<=>(const Rational& other) const {
    __int128 lhs = static_cast<__int128>(num_) * other.den_;
    __int128 rhs = static_cast<__int128>(other.num_) * den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

namespace {

std::int64_t parse_digits(std::string_view digits, std::string_view whole) {
    if (digits.empty() || digits.size() > 15)
        throw NumberSyntaxError("bad number '" + std::string(whole) + "'");
    std::int64_t value = 0;
    for (char c : digits) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw NumberSyntaxError("bad number '" + std::string(whole) + "'");
        value = value * 10 + (c - '0');
    }
    return value;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    std::string_view rest = text;
    while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.front()))) rest.remove_prefix(1);
    while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.back()))) rest.remove_suffix(1);
    if (rest.empty()) throw NumberSyntaxError("empty number");

    bool percent = false;
    if (rest.back() == '%') {
        percent = true;
        rest.remove_suffix(1);
    }

    Rational value;
    if (auto slash = rest.find('/'); slash != std::string_view::npos) {
        std::int64_t num = parse_digits(rest.substr(0, slash), text);
        std::int64_t den = parse_digits(rest.substr(slash + 1), text);
        value = Rational(num, den);
    } else if (auto dot = rest.find('.'); dot != std::string_view::npos) {
        std::string_view whole = rest.substr(0, dot);
        std::string_view frac = rest.substr(dot + 1);
        if (whole.empty() && frac.empty())
            throw NumberSyntaxError("bad number '" + std::string(text) + "'");
        std::int64_t num = whole.empty() ? 0 : parse_digits(whole, text);
        std::int64_t den = 1;
        for (char c : frac) {
            if (!std::isdigit(static_cast<unsigned char>(c)) ||
                num > 100'000'000'000'000 || den > 100'000'000'000'000)
                throw NumberSyntaxError("bad number '" + std::string(text) + "'");
            num = num * 10 + (c - '0');
            den *= 10;
        }
        value = Rational(num, den);
    } else {
        value = Rational(parse_digits(rest, text), 1);
    }

    if (percent) value = Rational(value.num(), value.den() * 100);
    return value;
}

std::string Rational::to_string() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rational::percent() const {
    // num/den as a percentage scaled to thousandths, then half-even rounding.
    __int128 scaled = static_cast<__int128>(num_) * 100'000;
    std::int64_t q = static_cast<std::int64_t>(scaled / den_);
    std::int64_t rem = static_cast<std::int64_t>(scaled % den_);
    if (2 * rem > den_ || (2 * rem == den_ && (q % 2) != 0)) ++q;
    std::string frac = std::to_string(q % 1000);
    frac.insert(0, 3 - frac.size(), '0');
    return std::to_string(q / 1000) + "." + frac;
}

}  // namespace rulehide
