#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <random>

#include "mixwidth/spread.hpp"
#include "oracles.hpp"

using namespace mixwidth;

namespace {

const Exponent kOne = Exponent::from_int(1);
const Exponent kTwo = Exponent::from_int(2);
const Exponent kInf = Exponent::infinity();

BlockMatrix random_matrix(std::mt19937_64& rng, const BlockShape& shape)
{
    std::normal_distribution<double> g;
    BlockMatrix x(shape);
    for (auto& e : x.entries())
        e = g(rng);
    return x;
}

std::vector<Partition> sample_partitions()
{
    return {good_partition(16, 16, 2), good_partition(12, 7, 2),  good_partition(9, 9, 3),
            transposition_partition(5), singleton_partition(BlockShape(4, 3)), row_partition(3, 6)};
}

}  // namespace

TEST(SpreadOperator, MatchesDenseMatrix)
{
    std::mt19937_64 rng(3);
    for (const auto& p : sample_partitions()) {
        const SpreadOperator op(p);
        const auto dense = oracle::dense_spread(p);
        for (int trial = 0; trial < 5; ++trial) {
            auto x = random_matrix(rng, p.shape);
            const auto expect = oracle::dense_apply(dense, oracle::to_rows(x));
            const auto got = oracle::to_rows(op.apply(x));
            for (std::size_t i = 0; i < p.shape.s; ++i)
                for (std::size_t j = 0; j < p.shape.b; ++j)
                    ASSERT_NEAR(got[i][j], expect[i][j], 1e-12);
        }
    }
}

TEST(SpreadOperator, LinearAndGroupConstant)
{
    std::mt19937_64 rng(5);
    for (const auto& p : sample_partitions()) {
        const SpreadOperator op(p);
        EXPECT_EQ(op.dimension(), p.m());
        for (int trial = 0; trial < 20; ++trial) {
            auto x = random_matrix(rng, p.shape);
            auto y = random_matrix(rng, p.shape);
            const double a = 1.5, c = -0.25;
            const auto lhs = op.apply(a * x + c * y);
            const auto rhs = a * op.apply(x) + c * op.apply(y);
            for (std::size_t k = 0; k < lhs.entries().size(); ++k)
                ASSERT_NEAR(lhs.entries()[k], rhs.entries()[k], 1e-12);

            const auto dx = op.apply(x);
            for (const auto& g : p.groups) {
                double sum = 0.0;
                for (const auto& cell : g)
                    sum += x(cell.row, cell.col);
                for (const auto& cell : g)
                    ASSERT_NEAR(dx(cell.row, cell.col), sum, 1e-15 * (1 + std::abs(sum)) * g.size());
                for (const auto& cell : g)
                    ASSERT_EQ(dx(cell.row, cell.col), dx(g[0].row, g[0].col));
            }
        }
    }
}

TEST(SpreadOperator, SingletonIsIdentity)
{
    std::mt19937_64 rng(1);
    const SpreadOperator op(singleton_partition(BlockShape(3, 4)));
    auto x = random_matrix(rng, BlockShape(3, 4));
    EXPECT_EQ(op.apply(x), x);
}

TEST(SpreadOperator, RowPartitionUnitVector)
{
    const SpreadOperator op(row_partition(3, 4));
    BlockMatrix x(BlockShape(3, 4));
    x(0, 0) = 1.0;
    const auto dx = apply_spread(op, x);
    for (std::size_t j = 0; j < 4; ++j) {
        EXPECT_EQ(dx(0, j), 1.0);
        EXPECT_EQ(dx(1, j), 0.0);
        EXPECT_EQ(dx(2, j), 0.0);
    }
}

TEST(SpreadOperator, RejectsBadInput)
{
    auto p = row_partition(2, 2);
    p.groups[0].push_back({1, 0});
    EXPECT_THROW(SpreadOperator{p}, std::invalid_argument);
    p = row_partition(2, 2);
    p.groups.pop_back();
    EXPECT_THROW(SpreadOperator{p}, std::invalid_argument);
    const SpreadOperator op(row_partition(2, 2));
    EXPECT_THROW(op.apply(BlockMatrix(BlockShape(2, 3))), std::invalid_argument);
}

TEST(TranspositionPartition, Structure)
{
    const auto p2 = transposition_partition(2);
    ASSERT_EQ(p2.m(), 3u);
    EXPECT_EQ(p2.groups[0], (std::vector<Cell>{{0, 1}, {1, 0}}));
    EXPECT_EQ(p2.groups[1], (std::vector<Cell>{{0, 0}}));
    EXPECT_EQ(p2.groups[2], (std::vector<Cell>{{1, 1}}));
    for (std::size_t s : {1u, 4u, 9u}) {
        const auto p = transposition_partition(s);
        EXPECT_EQ(p.m(), s * (s + 1) / 2);
        EXPECT_EQ(p.r, 2u);
        EXPECT_EQ(p.l, 1u);
        EXPECT_TRUE(verify_partition(p).ok);
    }
}

TEST(TranspositionPartition, ResidualIsOffDiagonalTranspose)
{
    const std::size_t s = 6;
    const SpreadOperator op(transposition_partition(s));
    BlockMatrix x(BlockShape(s, s));
    const int signs[6] = {1, -1, 1, 1, -1, -1};
    for (std::size_t i = 0; i < s; ++i)
        x(i, 2) = signs[i];
    const auto residual = x - op.apply(x);
    auto expect = x.transposed();
    expect(2, 2) = 0.0;
    expect *= -1.0;
    EXPECT_EQ(residual, expect);
    const double err = mixed_norm(residual, {kOne, kTwo});
    EXPECT_DOUBLE_EQ(err, std::sqrt(static_cast<double>(s - 1)));
    EXPECT_DOUBLE_EQ(err, oracle::mixed(oracle::to_rows(expect), 1.0, 2.0));
}

TEST(Lemma3Bound, Examples)
{
    EXPECT_EQ(lemma3_bound(singleton_partition(BlockShape(4, 4)), kOne, kOne, kTwo), 0.0);
    EXPECT_EQ(lemma3_bound(singleton_partition(BlockShape(4, 4)), kInf, kOne, kTwo), 0.0);
    for (std::size_t s : {4u, 9u, 16u})
        EXPECT_DOUBLE_EQ(lemma3_bound(transposition_partition(s), kInf, kOne, kTwo),
                         std::sqrt(static_cast<double>(s)));
    EXPECT_DOUBLE_EQ(lemma3_bound(good_partition(16, 16, 2), kInf, kOne, kTwo), 16.0);
    // p = 2, q1 = 1, q2 = 2 on (r, l) = (4, 4): 4^{1/2} * 1 * 3^{1/2}
    EXPECT_DOUBLE_EQ(lemma3_bound(good_partition(16, 16, 2), kTwo, kOne, kTwo), 2.0 * std::sqrt(3.0));
}

TEST(CheckLemma3, ZeroAndRandomColumns)
{
    const SpreadOperator op(good_partition(16, 16, 2));
    auto zero = check_lemma3(op, kInf, kOne, kTwo, BlockMatrix(BlockShape(16, 16)));
    EXPECT_EQ(zero.lhs, 0.0);
    EXPECT_EQ(zero.rhs, 0.0);
    EXPECT_TRUE(zero.ok);

    std::mt19937_64 rng(17);
    std::normal_distribution<double> g;
    std::uniform_int_distribution<std::size_t> col(0, 15);
    for (int trial = 0; trial < 200; ++trial) {
        BlockMatrix x(BlockShape(16, 16));
        const auto j = col(rng);
        for (auto& e : x.column(j))
            e = g(rng);
        for (const auto& p : {kOne, kTwo, kInf}) {
            const auto check = check_lemma3(op, p, kOne, kTwo, x);
            const double lhs = mixed_norm(x - op.apply(x), {kOne, kTwo});
            ASSERT_NEAR(check.lhs, lhs, 1e-12 * (1 + lhs));
            ASSERT_NEAR(check.rhs, lemma3_bound(op.partition(), p, kOne, kTwo) * lq_norm(x.column(j), p),
                        1e-12 * (1 + check.rhs));
            ASSERT_TRUE(check.ok) << check.lhs << " > " << check.rhs;
        }
    }
}

TEST(CheckLemma3, TranspositionIsNearlyTight)
{
    const std::size_t s = 8;
    const SpreadOperator op(transposition_partition(s));
    BlockMatrix x(BlockShape(s, s));
    for (std::size_t i = 0; i < s; ++i)
        x(i, 3) = (i % 3 == 0) ? -1.0 : 1.0;
    const auto check = check_lemma3(op, kInf, kOne, kTwo, x);
    EXPECT_DOUBLE_EQ(check.lhs, std::sqrt(static_cast<double>(s - 1)));
    EXPECT_DOUBLE_EQ(check.rhs, std::sqrt(static_cast<double>(s)));
}

TEST(CheckLemma3, RejectsTwoColumns)
{
    const SpreadOperator op(row_partition(2, 2));
    BlockMatrix x(BlockShape(2, 2), {1, 0, 0, 1});
    EXPECT_THROW(check_lemma3(op, kInf, kOne, kTwo, x), std::invalid_argument);
}

TEST(SigmaK, HandExamples)
{
    const std::vector<double> y{3, 2, 1};
    auto r = sigma_k(y, 1, kInf);
    EXPECT_EQ(r.error, 2.0);
    EXPECT_EQ(r.support, (std::vector<std::size_t>{0}));
    EXPECT_EQ(sigma_k(y, 3, kOne).error, 0.0);
    EXPECT_EQ(sigma_k(y, 0, kOne).error, 6.0);
    EXPECT_EQ(sigma_k(std::vector<double>{1, -1, 1}, 2, kOne).support, (std::vector<std::size_t>{0, 1}));
    EXPECT_EQ(sigma_k(std::vector<double>{0, 5, 0, 0}, 2, kTwo).error, 0.0);
    EXPECT_THROW(sigma_k(y, 4, kOne), std::invalid_argument);
}

TEST(SigmaK, GreedyIsOptimal)
{
    std::mt19937_64 rng(23);
    std::normal_distribution<double> g;
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<double> y(1 + trial % 8);
        for (auto& e : y)
            e = g(rng);
        if (trial % 5 == 0)
            y[0] = y.back();
        for (std::size_t k = 0; k <= y.size(); ++k)
            for (const char* q : {"1", "3/2", "2", "inf"}) {
                const auto qe = Exponent::parse(q);
                ASSERT_NEAR(sigma_k(y, k, qe).error, oracle::sigma_brute(y, k, qe.value()), 1e-12);
            }
    }
}

TEST(SigmaK, StechkinInequality)
{
    std::mt19937_64 rng(29);
    std::normal_distribution<double> g;
    const std::vector<Exponent> exps{kOne, Exponent::parse("3/2"), kTwo, Exponent::from_int(4), kInf};
    for (int trial = 0; trial < 2000; ++trial) {
        std::vector<double> y(1 + trial % 30);
        for (auto& e : y)
            e = g(rng);
        for (std::size_t a = 0; a < exps.size(); ++a)
            for (std::size_t c = a + 1; c < exps.size(); ++c) {
                const auto& p = exps[a];
                const auto& q = exps[c];
                for (std::size_t k = 1; k <= y.size(); ++k) {
                    const double lhs = sigma_k(y, k - 1, q).error;
                    const double rhs =
                        rational_pow(static_cast<double>(k), -(p.recip() - q.recip())) * lq_norm(y, p);
                    ASSERT_LE(lhs, rhs * (1 + 1e-12));
                }
            }
    }
}
