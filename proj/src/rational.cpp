#include "dsh/rational.hpp"

#include "dsh/errors.hpp"

#include <cctype>

namespace dsh {

namespace {

bool is_integer_literal(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+'))
        s.remove_prefix(1);
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+')
        throw DomainError("malformed rational '" + std::string(text) + "'");
    if (num.front() == '+')
        num.remove_prefix(1);
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0)
        throw DomainError("zero denominator in '" + std::string(text) + "'");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r)
{
    return r.get_str(10);
}

} // namespace dsh
