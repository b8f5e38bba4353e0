#include "boole/rational.hpp"

#include <cctype>

namespace boole {

std::string to_string(const Rational& r) {
    const BigInt num = numerator(r);
    const BigInt den = denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

namespace {

bool parse_integer(std::string_view text, BigInt& out) {
    if (text.empty()) return false;
    std::size_t pos = 0;
    if (text[0] == '+' || text[0] == '-') pos = 1;
    if (pos == text.size()) return false;
    for (std::size_t i = pos; i < text.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
    out = BigInt(std::string(text));
    return true;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
    // strip surrounding whitespace
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);
    if (text.empty()) return std::nullopt;

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        BigInt num, den;
        if (!parse_integer(text.substr(0, slash), num)) return std::nullopt;
        if (!parse_integer(text.substr(slash + 1), den)) return std::nullopt;
        if (den <= 0) return std::nullopt;
        return Rational(num) / Rational(den);
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view whole = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        if (frac.empty()) return std::nullopt;
        for (char c : frac)
            if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
        bool negative = false;
        if (!whole.empty() && (whole[0] == '+' || whole[0] == '-')) {
            negative = whole[0] == '-';
            whole.remove_prefix(1);
        }
        BigInt whole_part = 0;
        if (!whole.empty() && !parse_integer(whole, whole_part)) return std::nullopt;
        BigInt frac_part{std::string(frac)};
        BigInt scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        Rational value = Rational(whole_part) + Rational(frac_part) / Rational(scale);
        return negative ? -value : value;
    }
    BigInt num;
    if (!parse_integer(text, num)) return std::nullopt;
    return Rational(num);
}

}  // namespace boole
