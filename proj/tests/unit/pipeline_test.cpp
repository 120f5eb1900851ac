#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "mixwidth/errors.hpp"
#include "mixwidth/pipeline.hpp"
#include "mixwidth/sampling.hpp"

using namespace mixwidth;

namespace {

ExponentTuple tuple(const char* p1, const char* p2, const char* q1, const char* q2)
{
    return {Exponent::parse(p1), Exponent::parse(p2), Exponent::parse(q1), Exponent::parse(q2)};
}

const ExponentTuple kExample = tuple("inf", "1", "1", "2");

}  // namespace

TEST(PipelineParams, ExampleTuple)
{
    EXPECT_EQ(pipeline_alpha(kExample), Rational(1, 2));
    const auto params = choose_params(kExample, 256, 256);
    EXPECT_EQ(params.alpha, Rational(1, 2));
    EXPECT_EQ(params.d, 4u);
    EXPECT_EQ(params.k, 2u);
    EXPECT_EQ(kExample.str(), "(inf,1,1,2)");
}

TEST(PipelineParams, BlockBudgetIsExactCeiling)
{
    // alpha/4 = 1/8: k = ceil(b^{1/8})
    EXPECT_EQ(choose_block_budget(Rational(1, 2), 1), 1u);
    EXPECT_EQ(choose_block_budget(Rational(1, 2), 2), 2u);
    EXPECT_EQ(choose_block_budget(Rational(1, 2), 256), 2u);
    EXPECT_EQ(choose_block_budget(Rational(1, 2), 257), 3u);
    EXPECT_EQ(choose_block_budget(Rational(1, 2), 6561), 3u);
    EXPECT_EQ(choose_block_budget(Rational(1, 2), 6562), 4u);
    // alpha = 4: k = b
    EXPECT_EQ(choose_block_budget(Rational(4), 1000), 1000u);
    EXPECT_EQ(choose_block_budget(Rational(0), 1000), 1u);
}

TEST(PipelineParams, DesignDimension)
{
    EXPECT_EQ(choose_design_dimension(Rational(1, 2), Exponent::from_int(1)), 4u);
    EXPECT_EQ(choose_design_dimension(Rational(1, 3), Exponent::from_int(1)), 6u);
    EXPECT_EQ(choose_design_dimension(Rational(1), Exponent::from_int(2)), 2u);
    EXPECT_THROW(choose_design_dimension(Rational(0), Exponent::from_int(1)), std::invalid_argument);
}

TEST(PipelineParams, RejectsNonExceptional)
{
    EXPECT_THROW(choose_params(tuple("2", "2", "2", "2"), 4, 4), PreconditionError);
    try {
        choose_params(tuple("2", "2", "2", "2"), 4, 4);
    } catch (const PreconditionError& e) {
        EXPECT_NE(std::string(e.what()).find("q1 < p1"), std::string::npos) << e.what();
    }
    try {
        choose_params(tuple("1", "1", "3", "1"), 4, 4);
    } catch (const PreconditionError& e) {
        EXPECT_NE(std::string(e.what()).find("condition (i)"), std::string::npos) << e.what();
    }
}

TEST(Approximate, ZeroInput)
{
    const auto params = choose_params(kExample, 16, 16);
    const auto res = approximate(BlockMatrix(BlockShape(16, 16)), params, good_partition(16, 16, 4));
    EXPECT_EQ(res.measured_error, 0.0);
    EXPECT_EQ(res.certified_bound, 0.0);
    EXPECT_EQ(res.delta, 0.0);
}

TEST(Approximate, TranspositionExtremePoint)
{
    const std::size_t s = 16;
    const auto params = choose_params(kExample, s, s);
    ASSERT_EQ(params.k, 2u);
    BlockMatrix x(BlockShape(s, s));
    for (std::size_t i = 0; i < s; ++i)
        x(i, 5) = (i % 2) ? 1.0 : -1.0;
    const auto res = approximate(x, params, transposition_partition(s));
    EXPECT_EQ(res.lambda, (std::vector<std::size_t>{5}));
    EXPECT_EQ(res.delta, 0.0);
    EXPECT_EQ(res.dimension, s * (s + 1) / 2);
    EXPECT_DOUBLE_EQ(res.measured_error, std::sqrt(static_cast<double>(s - 1)));
    EXPECT_DOUBLE_EQ(res.certified_bound, std::sqrt(static_cast<double>(s)));
}

TEST(Approximate, OneColumnMatchesSpreadResidual)
{
    const auto params = choose_params(kExample, 16, 16);
    const SpreadOperator op(good_partition(16, 16, 4));
    BlockMatrix x(BlockShape(16, 16));
    for (std::size_t i = 0; i < 16; ++i)
        x(i, 9) = std::cos(static_cast<double>(i));
    const auto res = approximate(x, params, op);
    EXPECT_EQ(res.delta, 0.0);
    EXPECT_DOUBLE_EQ(res.measured_error, mixed_norm(x - op.apply(x), {params.tuple.q1, params.tuple.q2}));
}

TEST(Approximate, SoundOnSampledBall)
{
    for (const auto& t : {kExample, tuple("4", "1", "1", "2"), tuple("inf", "1", "3/2", "2"),
                          tuple("inf", "4/3", "1", "2")}) {
        const auto params = choose_params(t, 20, 20);
        const SpreadOperator op(good_partition(20, 20, params.d));
        for (const auto& x : sample_ball(BlockShape(20, 20), t.p1, t.p2, 4, 40)) {
            const auto res = approximate(x, params, op);
            ASSERT_LE(res.measured_error, res.certified_bound + 1e-9) << t.str();
            ASSERT_LE(res.lambda.size(), params.k - 1);
        }
    }
}

TEST(Approximate, RejectsOutsideBallAndShape)
{
    const auto params = choose_params(kExample, 4, 4);
    BlockMatrix x(BlockShape(4, 4));
    x(0, 0) = 2.0;
    EXPECT_THROW(approximate(x, params, transposition_partition(4)), PreconditionError);
    EXPECT_THROW(approximate(BlockMatrix(BlockShape(4, 3)), params, transposition_partition(4)),
                 std::invalid_argument);
}

TEST(Grouped, LocalityOnOneGroup)
{
    const std::size_t s = 8, b = 16;
    const auto params = choose_params(kExample, s, b);
    const GroupedSubspace subspace(s, b, params.d);
    ASSERT_EQ(subspace.group_count(), 2u);
    BlockMatrix x(BlockShape(s, b));
    BlockMatrix local(BlockShape(s, s));
    for (std::size_t i = 0; i < s; ++i) {
        x(i, 8 + 3) = (i % 3 == 0) ? -1.0 : 1.0;
        local(i, 3) = x(i, 11);
    }
    const auto grouped = grouped_subspace_approximate(x, params, subspace);
    const auto single = approximate(local, params, subspace.op(1));
    EXPECT_EQ(grouped.measured_error, single.measured_error);
    EXPECT_NE(std::find(grouped.lambda.begin(), grouped.lambda.end(), 11u), grouped.lambda.end());
    for (std::size_t j = 0; j < b; ++j)
        for (std::size_t i = 0; i < s; ++i)
            ASSERT_EQ(grouped.approximant(i, j), j < 8 ? 0.0 : single.approximant(i, j - 8));
}

TEST(Grouped, DimensionAndSoundness)
{
    const auto params = choose_params(kExample, 8, 32);
    const GroupedSubspace subspace(8, 32, params.d);
    EXPECT_EQ(subspace.group_count(), 4u);
    EXPECT_EQ(subspace.dimension(), 4 * good_partition(8, 8, params.d).m());
    EXPECT_EQ(grouped_subspace_approximate(BlockMatrix(BlockShape(8, 32)), params).measured_error, 0.0);
    for (const auto& x : sample_ball(BlockShape(8, 32), kExample.p1, kExample.p2, 2, 30)) {
        const auto res = grouped_subspace_approximate(x, params, subspace);
        ASSERT_LE(res.measured_error, res.certified_bound + 1e-9);
    }
}

TEST(Grouped, UnevenLastGroup)
{
    const GroupedSubspace subspace(6, 15, 2);
    ASSERT_EQ(subspace.group_count(), 3u);
    EXPECT_EQ(subspace.offset(2), 12u);
    EXPECT_EQ(subspace.op(2).shape(), BlockShape(6, 3));
    EXPECT_THROW(GroupedSubspace(8, 8, 2), std::invalid_argument);
}

TEST(EvaluateSize, TranspositionRatio)
{
    EvaluationOptions options;
    options.kind = PartitionKind::Transposition;
    options.samples = 8;
    const auto eval = evaluate_size(kExample, 8, 8, options);
    EXPECT_EQ(eval.d0, 8.0);
    EXPECT_EQ(eval.dimension, 36u);
    EXPECT_EQ(eval.samples, 16u);
    EXPECT_DOUBLE_EQ(eval.sup_sampled_error, std::sqrt(7.0));
    EXPECT_DOUBLE_EQ(eval.ratio, eval.sup_sampled_error / eval.d0);
    EXPECT_LE(eval.sup_sampled_error, eval.certified_bound + 1e-9);
}

TEST(EvaluateSize, DeterministicAndOverrides)
{
    EvaluationOptions options;
    options.samples = 6;
    options.seed = 77;
    options.d = 2;
    options.k = 3;
    const auto a = evaluate_size(kExample, 12, 12, options);
    const auto b = evaluate_size(kExample, 12, 12, options);
    EXPECT_EQ(a.sup_sampled_error, b.sup_sampled_error);
    EXPECT_EQ(a.d, 2u);
    EXPECT_EQ(a.k, 3u);
    EXPECT_THROW(parse_partition_kind("rows"), std::invalid_argument);
    EXPECT_EQ(parse_partition_kind("good"), PartitionKind::Good);
    EXPECT_EQ(to_string(PartitionKind::Transposition), "transposition");
}
