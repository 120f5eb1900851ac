#include "mixwidth/exponent.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace mixwidth {

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole)
{
    std::int64_t out = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    if (text.empty() || ec != std::errc{} || ptr != last)
        throw std::invalid_argument("not an exponent: '" + std::string(whole) + "'");
    return out;
}

}  // namespace

std::string to_string(const Rational& r)
{
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

double to_double(const Rational& r)
{
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

Exponent Exponent::from_int(std::int64_t p)
{
    if (p < 1)
        throw std::invalid_argument("exponent must be >= 1, got " + std::to_string(p));
    return Exponent(Rational(1, p));
}

Exponent Exponent::from_ratio(std::int64_t num, std::int64_t den)
{
    if (den == 0)
        throw std::invalid_argument("exponent with zero denominator");
    Rational p(num, den);
    if (p < 1)
        throw std::invalid_argument("exponent must be >= 1, got " + to_string(p));
    return Exponent(Rational(p.denominator(), p.numerator()));
}

Exponent Exponent::from_reciprocal(const Rational& recip)
{
    if (recip < 0 || recip > 1)
        throw std::invalid_argument("reciprocal exponent outside [0,1]: " + to_string(recip));
    return Exponent(recip);
}

Exponent Exponent::parse(std::string_view text)
{
    if (text == "inf" || text == "Inf" || text == "INF" || text == "infinity")
        return infinity();
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return from_int(parse_int(text, text));
    auto num = parse_int(text.substr(0, slash), text);
    auto den = parse_int(text.substr(slash + 1), text);
    if (den <= 0)
        throw std::invalid_argument("not an exponent: '" + std::string(text) + "'");
    return from_ratio(num, den);
}

double Exponent::value() const
{
    if (is_infinite())
        return std::numeric_limits<double>::infinity();
    return static_cast<double>(recip_.denominator()) / static_cast<double>(recip_.numerator());
}

std::string Exponent::str() const
{
    if (is_infinite())
        return "inf";
    if (recip_.numerator() == 1)
        return std::to_string(recip_.denominator());
    return std::to_string(recip_.denominator()) + "/" + std::to_string(recip_.numerator());
}

double rational_pow(double base, const Rational& e)
{
    if (e == 0)
        return 1.0;
    if (e.denominator() == 1)
        return std::pow(base, static_cast<double>(e.numerator()));
    if (e.denominator() == 2 && e.numerator() == 1)
        return std::sqrt(base);
    return std::pow(base, to_double(e));
}

}  // namespace mixwidth
