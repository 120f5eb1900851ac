#pragma once

// Exponents p in [1, inf] carried through their exact reciprocal 1/p.
//
// Every comparison between exponents and every exponent difference such as
// (1/q - 1/p)_+ is done on rationals; floating point only enters when a
// power is finally evaluated.

#include <cstdint>
#include <string>
#include <string_view>

#include "mixwidth/rational.hpp"

namespace mixwidth {

/// Positive part h_+ of an exact rational.
inline Rational positive_part(const Rational& h) { return h < 0 ? Rational(0) : h; }

std::string to_string(const Rational& r);  // always "num/den"
double to_double(const Rational& r);

class Exponent {
public:
    /// p = 1.
    Exponent() = default;

    static Exponent infinity() { return Exponent(Rational(0)); }
    static Exponent from_int(std::int64_t p);
    /// p = num/den, must satisfy p >= 1.
    static Exponent from_ratio(std::int64_t num, std::int64_t den);
    /// Builds from the reciprocal 1/p directly; must lie in [0, 1].
    static Exponent from_reciprocal(const Rational& recip);

    /// Accepts "inf", an integer "3", or a rational "3/2". Throws
    /// std::invalid_argument on anything else or on p < 1.
    static Exponent parse(std::string_view text);

    const Rational& recip() const { return recip_; }
    double recip_value() const { return to_double(recip_); }
    bool is_infinite() const { return recip_ == 0; }
    /// p as a double; +inf for p = inf.
    double value() const;

    /// "inf", "3" or "3/2".
    std::string str() const;

    // Ordering is the ordering of p, i.e. reversed on the reciprocals.
    friend bool operator==(const Exponent& a, const Exponent& b) { return a.recip_ == b.recip_; }
    friend bool operator<(const Exponent& a, const Exponent& b) { return a.recip_ > b.recip_; }
    friend bool operator>(const Exponent& a, const Exponent& b) { return b < a; }
    friend bool operator<=(const Exponent& a, const Exponent& b) { return !(b < a); }
    friend bool operator>=(const Exponent& a, const Exponent& b) { return !(a < b); }

private:
    explicit Exponent(Rational recip) : recip_(recip) {}

    Rational recip_{1};
};

inline Exponent max(const Exponent& a, const Exponent& b) { return a < b ? b : a; }
inline Exponent min(const Exponent& a, const Exponent& b) { return a < b ? a : b; }

/// (1/q - 1/p)_+, the exponent of the embedding constant of l_p into l_q.
inline Rational embedding_exponent(const Exponent& p, const Exponent& q)
{
    return positive_part(q.recip() - p.recip());
}

/// base^e for an exact rational e, with 0^0 = 1.
double rational_pow(double base, const Rational& e);

}  // namespace mixwidth
