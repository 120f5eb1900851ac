#include "mixwidth/field.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

namespace mixwidth {

namespace {

constexpr std::uint32_t kBinaryPolys[kMaxBinaryDegree + 1] = {
    0,
    0b11,        // x + 1
    0b111,       // x^2 + x + 1
    0b1011,      // x^3 + x + 1
    0b10011,     // x^4 + x + 1
    0b100101,    // x^5 + x^2 + 1
    0b1000011,   // x^6 + x + 1
};

// Largest prime order accepted; keeps a*b within 32 bits.
constexpr std::uint32_t kMaxPrimeOrder = 65521;

}  // namespace

std::uint32_t binary_field_polynomial(unsigned u)
{
    if (u == 0 || u > kMaxBinaryDegree)
        throw std::invalid_argument("no built-in polynomial for GF(2^" + std::to_string(u) + ")");
    return kBinaryPolys[u];
}

bool is_prime(std::uint32_t n)
{
    if (n < 2)
        return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

FiniteField::FiniteField(std::uint32_t order) : order_(order)
{
    if (order >= 4 && std::has_single_bit(order)) {
        degree_ = static_cast<unsigned>(std::countr_zero(order));
        if (degree_ > kMaxBinaryDegree)
            throw std::invalid_argument("GF(2^" + std::to_string(degree_) +
                                        ") is larger than the supported GF(2^6)");
        binary_ = true;
        poly_ = kBinaryPolys[degree_];
    } else if (!is_prime(order)) {
        throw std::invalid_argument("field order " + std::to_string(order) +
                                    " is neither prime nor a power of two");
    } else if (order > kMaxPrimeOrder) {
        throw std::invalid_argument("prime field order " + std::to_string(order) + " too large");
    }

    // a^{r-2} = a^{-1} in the multiplicative group of order r - 1.
    inverse_.assign(order_, 0);
    for (Element a = 1; a < order_; ++a) {
        Element result = 1;
        Element base = a;
        for (std::uint32_t e = order_ - 2; e != 0; e >>= 1) {
            if (e & 1u)
                result = mul(result, base);
            base = mul(base, base);
        }
        inverse_[a] = result;
    }
}

FiniteField::Element FiniteField::add(Element a, Element b) const
{
    if (binary_)
        return a ^ b;
    Element s = a + b;
    return s >= order_ ? s - order_ : s;
}

FiniteField::Element FiniteField::neg(Element a) const
{
    if (binary_ || a == 0)
        return a;
    return order_ - a;
}

FiniteField::Element FiniteField::sub(Element a, Element b) const { return add(a, neg(b)); }

FiniteField::Element FiniteField::mul(Element a, Element b) const
{
    if (!binary_)
        return static_cast<Element>((std::uint64_t{a} * b) % order_);
    // Shift-and-add with reduction whenever the degree reaches u.
    Element result = 0;
    while (b != 0) {
        if (b & 1u)
            result ^= a;
        b >>= 1;
        a <<= 1;
        if (a & order_)
            a ^= poly_;
    }
    return result;
}

FiniteField::Element FiniteField::inv(Element a) const
{
    if (a == 0 || a >= order_)
        throw std::domain_error("element " + std::to_string(a) + " has no inverse");
    return inverse_[a];
}

std::vector<FiniteField::Element> FiniteField::elements() const
{
    std::vector<Element> out(order_);
    std::iota(out.begin(), out.end(), Element{0});
    return out;
}

}  // namespace mixwidth
