#include "mixwidth/norms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace mixwidth {

BlockShape::BlockShape(std::size_t rows, std::size_t blocks) : s(rows), b(blocks)
{
    if (s == 0 || b == 0)
        throw std::invalid_argument("block shape needs s >= 1 and b >= 1");
}

BlockMatrix::BlockMatrix(BlockShape shape) : shape_(shape), entries_(shape.size(), 0.0) {}

BlockMatrix::BlockMatrix(BlockShape shape, std::vector<double> entries)
    : shape_(shape), entries_(std::move(entries))
{
    if (entries_.size() != shape_.size())
        throw std::invalid_argument("block matrix expects " + std::to_string(shape_.size()) +
                                    " entries, got " + std::to_string(entries_.size()));
}

BlockMatrix BlockMatrix::column_part(std::size_t j) const
{
    BlockMatrix out(shape_);
    auto src = column(j);
    std::copy(src.begin(), src.end(), out.column(j).begin());
    return out;
}

BlockMatrix BlockMatrix::transposed() const
{
    BlockMatrix out(BlockShape(shape_.b, shape_.s));
    for (std::size_t j = 0; j < shape_.b; ++j)
        for (std::size_t i = 0; i < shape_.s; ++i)
            out(j, i) = (*this)(i, j);
    return out;
}

BlockMatrix& BlockMatrix::operator+=(const BlockMatrix& other)
{
    if (!(shape_ == other.shape_))
        throw std::invalid_argument("block matrix shape mismatch");
    for (std::size_t k = 0; k < entries_.size(); ++k)
        entries_[k] += other.entries_[k];
    return *this;
}

BlockMatrix& BlockMatrix::operator-=(const BlockMatrix& other)
{
    if (!(shape_ == other.shape_))
        throw std::invalid_argument("block matrix shape mismatch");
    for (std::size_t k = 0; k < entries_.size(); ++k)
        entries_[k] -= other.entries_[k];
    return *this;
}

BlockMatrix& BlockMatrix::operator*=(double c)
{
    for (auto& e : entries_)
        e *= c;
    return *this;
}

double lq_norm(std::span<const double> v, const Exponent& q)
{
    double peak = 0.0;
    for (double e : v) {
        if (!std::isfinite(e))
            throw std::invalid_argument("lq_norm: non-finite entry");
        peak = std::max(peak, std::abs(e));
    }
    if (peak == 0.0 || q.is_infinite())
        return peak;

    if (q.recip() == 1) {
        double sum = 0.0;
        for (double e : v)
            sum += std::abs(e);
        return sum;
    }
    if (q.recip() == Rational(1, 2)) {
        double sum = 0.0;
        for (double e : v) {
            double t = e / peak;
            sum += t * t;
        }
        return peak * std::sqrt(sum);
    }
    // Scaling by the peak keeps |v_k/peak|^q in [0, 1].
    const double qv = q.value();
    double sum = 0.0;
    for (double e : v)
        sum += std::pow(std::abs(e) / peak, qv);
    return peak * std::pow(sum, q.recip_value());
}

std::vector<double> block_norm_vector(const BlockMatrix& x, const Exponent& q1)
{
    std::vector<double> y(x.cols());
    for (std::size_t j = 0; j < x.cols(); ++j)
        y[j] = lq_norm(x.column(j), q1);
    return y;
}

double mixed_norm(const BlockMatrix& x, const MixedNormParams& params)
{
    return lq_norm(block_norm_vector(x, params.q1), params.q2);
}

D0Exponents d0_exponents(const Exponent& p1, const Exponent& p2, const Exponent& q1,
                         const Exponent& q2)
{
    return {embedding_exponent(p1, q1), embedding_exponent(p2, q2)};
}

double d0_mixed(const BlockShape& shape, const Exponent& p1, const Exponent& p2,
                const Exponent& q1, const Exponent& q2)
{
    auto e = d0_exponents(p1, p2, q1, q2);
    return rational_pow(static_cast<double>(shape.s), e.inner) *
           rational_pow(static_cast<double>(shape.b), e.outer);
}

}  // namespace mixwidth
