#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace p5hom {

using Rational = mpq_class;

/// Parses "p", "p/q" or a decimal such as "0.75" into a canonical rational.
/// Throws std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Always "p/q", e.g. "4/1".
std::string format_fraction(const Rational & r);
/// "p" for integers, otherwise "p/q".
std::string format_compact(const Rational & r);

}
