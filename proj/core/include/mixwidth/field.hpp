#pragma once

// Small finite fields: prime fields F_p and binary extension fields GF(2^u).
//
// Elements are the integers 0..r-1. In GF(2^u) an element is the bit vector
// of polynomial coefficients and multiplication reduces modulo a fixed
// irreducible polynomial, the lexicographically least one of each degree, so
// every construction built on top is reproducible bit for bit.

#include <cstdint>
#include <vector>

namespace mixwidth {

/// Largest supported u for GF(2^u).
inline constexpr unsigned kMaxBinaryDegree = 6;

/// The hard-coded irreducible polynomial for GF(2^u), bit-encoded
/// (0b111 = x^2 + x + 1).
std::uint32_t binary_field_polynomial(unsigned u);

bool is_prime(std::uint32_t n);

class FiniteField {
public:
    using Element = std::uint32_t;

    /// Throws std::invalid_argument unless r is prime or r = 2^u, 1 <= u <= 6.
    explicit FiniteField(std::uint32_t order);

    std::uint32_t order() const { return order_; }
    std::uint32_t characteristic() const { return binary_ ? 2 : order_; }
    bool is_binary() const { return binary_; }
    /// Reduction polynomial (binary fields only, 0 otherwise).
    std::uint32_t polynomial() const { return poly_; }

    Element add(Element a, Element b) const;
    Element sub(Element a, Element b) const;
    Element neg(Element a) const;
    Element mul(Element a, Element b) const;
    /// Throws std::domain_error for a = 0.
    Element inv(Element a) const;

    std::vector<Element> elements() const;

private:
    std::uint32_t order_;
    bool binary_ = false;
    unsigned degree_ = 1;
    std::uint32_t poly_ = 0;
    std::vector<Element> inverse_;
};

}  // namespace mixwidth
