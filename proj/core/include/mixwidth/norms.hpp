#pragma once

// Block matrices and mixed l_{q1,q2} norms.
//
// A vector of R^N, N = s*b, is viewed as an s x b matrix whose columns are
// the b blocks of size s. Entries are stored column-block-major, so entry
// (i, j) lives at j*s + i and every block is a contiguous span.

#include <cstddef>
#include <span>
#include <vector>

#include "mixwidth/exponent.hpp"

namespace mixwidth {

struct BlockShape {
    std::size_t s = 1;  // block size (rows)
    std::size_t b = 1;  // number of blocks (columns)

    BlockShape() = default;
    BlockShape(std::size_t rows, std::size_t blocks);

    std::size_t size() const { return s * b; }
    friend bool operator==(const BlockShape&, const BlockShape&) = default;
};

class BlockMatrix {
public:
    BlockMatrix() = default;
    explicit BlockMatrix(BlockShape shape);
    BlockMatrix(BlockShape shape, std::vector<double> entries);

    const BlockShape& shape() const { return shape_; }
    std::size_t rows() const { return shape_.s; }
    std::size_t cols() const { return shape_.b; }

    double& operator()(std::size_t i, std::size_t j) { return entries_[j * shape_.s + i]; }
    double operator()(std::size_t i, std::size_t j) const { return entries_[j * shape_.s + i]; }

    std::span<double> column(std::size_t j) { return {entries_.data() + j * shape_.s, shape_.s}; }
    std::span<const double> column(std::size_t j) const
    {
        return {entries_.data() + j * shape_.s, shape_.s};
    }

    std::span<double> entries() { return entries_; }
    std::span<const double> entries() const { return entries_; }

    /// Matrix with column j of *this and zeros elsewhere (x^j).
    BlockMatrix column_part(std::size_t j) const;
    BlockMatrix transposed() const;

    BlockMatrix& operator+=(const BlockMatrix& other);
    BlockMatrix& operator-=(const BlockMatrix& other);
    BlockMatrix& operator*=(double c);

    friend BlockMatrix operator+(BlockMatrix a, const BlockMatrix& b) { return a += b; }
    friend BlockMatrix operator-(BlockMatrix a, const BlockMatrix& b) { return a -= b; }
    friend BlockMatrix operator*(double c, BlockMatrix a) { return a *= c; }
    friend bool operator==(const BlockMatrix&, const BlockMatrix&) = default;

private:
    BlockShape shape_;
    std::vector<double> entries_;
};

struct MixedNormParams {
    Exponent q1;  // inner, within a block
    Exponent q2;  // outer, across blocks
};

/// (sum |v_k|^q)^(1/q), max |v_k| for q = inf. Rejects non-finite input.
double lq_norm(std::span<const double> v, const Exponent& q);

/// y_j = ||x[j]||_{q1}.
std::vector<double> block_norm_vector(const BlockMatrix& x, const Exponent& q1);

/// ||x||_{q1,q2} = || (||x[1]||_{q1}, ..., ||x[b]||_{q1}) ||_{q2}.
double mixed_norm(const BlockMatrix& x, const MixedNormParams& params);

/// Radius of the smallest l_{q1,q2} ball containing B_{p1,p2}:
/// s^{(1/q1-1/p1)_+} b^{(1/q2-1/p2)_+}.
double d0_mixed(const BlockShape& shape, const Exponent& p1, const Exponent& p2,
                const Exponent& q1, const Exponent& q2);

/// The two exponents of d0_mixed, exactly.
struct D0Exponents {
    Rational inner;
    Rational outer;
};
D0Exponents d0_exponents(const Exponent& p1, const Exponent& p2, const Exponent& q1,
                         const Exponent& q2);

}  // namespace mixwidth
