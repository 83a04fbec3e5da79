#include "quadric/rational.hpp"

#include <charconv>
#include <cstdlib>
#include <stdexcept>

namespace quadric {

std::string to_string(const Rational& x) {
    if (x.denominator() == 1) return std::to_string(x.numerator());
    return std::to_string(x.numerator()) + "/" + std::to_string(x.denominator());
}

std::string to_decimal(const Rational& x) {
    constexpr __int128 scale = 1'000'000;
    const __int128 num = x.numerator();
    const __int128 den = x.denominator();
    const bool negative = num < 0;
    const __int128 mag = negative ? -num : num;
    const __int128 scaled = (mag * scale * 2 + den) / (den * 2);
    const auto whole = static_cast<long long>(scaled / scale);
    const auto frac = static_cast<long long>(scaled % scale);
    std::string digits = std::to_string(frac);
    digits.insert(0, 6 - digits.size(), '0');
    std::string out = (negative && scaled != 0) ? "-" : "";
    return out + std::to_string(whole) + "." + digits;
}

namespace {
std::int64_t parse_int(std::string_view s, const std::string& whole) {
    std::int64_t v = 0;
    const char* first = s.data();
    if (!s.empty() && s.front() == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || first == s.data() + s.size())
        throw std::invalid_argument("not a rational: '" + whole + "'");
    return v;
}
}  // namespace

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(parse_int(text, text));
    const auto num = parse_int(std::string_view(text).substr(0, slash), text);
    const auto den = parse_int(std::string_view(text).substr(slash + 1), text);
    if (den == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    return Rational(num, den);
}

}  // namespace quadric
