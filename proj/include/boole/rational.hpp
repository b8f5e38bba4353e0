#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace boole {

/// Exact rational number: arbitrary-precision numerator/denominator, always
/// canonical (lowest terms, positive denominator). Every probability value,
/// inequality coefficient and LP entry in the library is one of these; no
/// operation ever rounds.
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

/// "a/b", or just "a" when the denominator is 1.
std::string to_string(const Rational& r);

/// Parses "a", "a/b", or a decimal literal. Decimals convert exactly over a
/// power-of-ten denominator ("0.125" -> 1/8). Returns nullopt on malformed
/// input or a zero/negative denominator.
std::optional<Rational> parse_rational(std::string_view text);

inline bool in_unit_interval(const Rational& r) {
    return r >= 0 && r <= 1;
}

}  // namespace boole
