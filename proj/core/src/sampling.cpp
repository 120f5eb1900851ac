#include "mixwidth/sampling.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace mixwidth {

namespace {

std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t stream)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream)};
    return std::mt19937_64(seq);
}

// Magnitude with density proportional to exp(-t^p) on t >= 0.
double exp_power_magnitude(std::mt19937_64& rng, const Exponent& p)
{
    if (p.is_infinite())
        return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    std::gamma_distribution<double> gamma(p.recip_value(), 1.0);
    return std::pow(gamma(rng), p.recip_value());
}

// Nonzero vector on the unit sphere of l_p; signed or nonnegative.
void fill_sphere(std::mt19937_64& rng, const Exponent& p, std::span<double> out, bool signed_entries)
{
    std::bernoulli_distribution coin(0.5);
    for (;;) {
        for (auto& e : out) {
            e = exp_power_magnitude(rng, p);
            if (signed_entries && coin(rng))
                e = -e;
        }
        double norm = lq_norm(out, p);
        if (norm > 0.0) {
            for (auto& e : out)
                e /= norm;
            return;
        }
    }
}

}  // namespace

BlockMatrix normalize(const BlockMatrix& x, const MixedNormParams& params)
{
    double norm = mixed_norm(x, params);
    if (norm == 0.0)
        throw std::invalid_argument("cannot normalize the zero matrix");
    BlockMatrix out = x;
    out *= 1.0 / norm;
    return out;
}

std::vector<BlockMatrix> sample_ball(const BlockShape& shape, const Exponent& p1,
                                     const Exponent& p2, std::uint64_t seed, std::size_t count)
{
    if (count == 0)
        throw std::invalid_argument("sample_ball: count must be >= 1");
    auto rng = make_engine(seed, 0x6261'6c6c);  // "ball"
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const MixedNormParams ball{p1, p2};

    std::vector<BlockMatrix> out;
    out.reserve(count);
    std::vector<double> profile(shape.b);
    for (std::size_t n = 0; n < count; ++n) {
        BlockMatrix x(shape);
        fill_sphere(rng, p2, profile, false);
        for (std::size_t j = 0; j < shape.b; ++j) {
            auto col = x.column(j);
            fill_sphere(rng, p1, col, true);
            for (auto& e : col)
                e *= profile[j];
        }
        double radius = 1.0;
        if (n % 2 == 1)
            radius = std::pow(unit(rng), 1.0 / static_cast<double>(shape.size()));
        double norm = mixed_norm(x, ball);
        // Rescale by the measured norm so roundoff never leaves the ball.
        x *= radius / norm;
        if (mixed_norm(x, ball) > 1.0)
            x *= 1.0 / mixed_norm(x, ball);
        out.push_back(std::move(x));
    }
    return out;
}

std::vector<BlockMatrix> extreme_points_inf1(const BlockShape& shape, std::uint64_t seed,
                                             std::size_t count)
{
    if (count == 0)
        throw std::invalid_argument("extreme_points_inf1: count must be >= 1");
    auto rng = make_engine(seed, 0x6578'7472);  // "extr"
    std::uniform_int_distribution<std::size_t> pick(0, shape.b - 1);
    std::bernoulli_distribution coin(0.5);

    std::vector<BlockMatrix> out;
    out.reserve(count);
    for (std::size_t n = 0; n < count; ++n) {
        BlockMatrix x(shape);
        for (auto& e : x.column(pick(rng)))
            e = coin(rng) ? 1.0 : -1.0;
        out.push_back(std::move(x));
    }
    return out;
}

}  // namespace mixwidth
