#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace dsh {

using Rational = mpq_class;

// Accepts "p" or "p/q" with an optional sign; throws DomainError otherwise.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

} // namespace dsh
