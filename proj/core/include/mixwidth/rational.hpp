#pragma once

// Exact rationals over 64-bit integers, always in lowest terms with a
// positive denominator. Arithmetic throws std::overflow_error rather than
// wrapping; exponents in this library have tiny numerators and denominators.

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace mixwidth {

class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t n) : num_(n) {}  // NOLINT(google-explicit-constructor)
    constexpr Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

    constexpr std::int64_t numerator() const { return num_; }
    constexpr std::int64_t denominator() const { return den_; }

    friend constexpr Rational operator+(const Rational& a, const Rational& b)
    {
        return {add(mul(a.num_, b.den_), mul(b.num_, a.den_)), mul(a.den_, b.den_)};
    }
    friend constexpr Rational operator-(const Rational& a, const Rational& b)
    {
        return {add(mul(a.num_, b.den_), -mul(b.num_, a.den_)), mul(a.den_, b.den_)};
    }
    friend constexpr Rational operator*(const Rational& a, const Rational& b)
    {
        return {mul(a.num_, b.num_), mul(a.den_, b.den_)};
    }
    friend constexpr Rational operator/(const Rational& a, const Rational& b)
    {
        if (b.num_ == 0)
            throw std::domain_error("rational division by zero");
        return {mul(a.num_, b.den_), mul(a.den_, b.num_)};
    }
    constexpr Rational operator-() const { return {-num_, den_}; }

    friend constexpr bool operator==(const Rational&, const Rational&) = default;
    friend constexpr std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        return mul(a.num_, b.den_) <=> mul(b.num_, a.den_);
    }

private:
    static constexpr std::int64_t mul(std::int64_t a, std::int64_t b)
    {
        std::int64_t out = 0;
        if (__builtin_mul_overflow(a, b, &out))
            throw std::overflow_error("rational overflow");
        return out;
    }
    static constexpr std::int64_t add(std::int64_t a, std::int64_t b)
    {
        std::int64_t out = 0;
        if (__builtin_add_overflow(a, b, &out))
            throw std::overflow_error("rational overflow");
        return out;
    }

    constexpr void normalize()
    {
        if (den_ == 0)
            throw std::domain_error("rational with zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        const std::int64_t g = std::gcd(num_, den_);
        num_ /= g;
        den_ /= g;
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace mixwidth
