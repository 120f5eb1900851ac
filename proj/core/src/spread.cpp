#include "mixwidth/spread.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace mixwidth {

namespace {

constexpr double kLemma3Slack = 1e-9;

}  // namespace

SpreadOperator::SpreadOperator(Partition partition) : partition_(std::move(partition))
{
    const auto& shape = partition_.shape;
    constexpr auto unset = static_cast<std::uint32_t>(-1);
    cell_group_.assign(shape.size(), unset);
    for (std::size_t k = 0; k < partition_.groups.size(); ++k) {
        for (const auto& c : partition_.groups[k]) {
            if (c.row >= shape.s || c.col >= shape.b)
                throw std::invalid_argument("spread operator: cell outside the grid");
            auto& slot = cell_group_[std::size_t{c.col} * shape.s + c.row];
            if (slot != unset)
                throw std::invalid_argument("spread operator: groups are not disjoint");
            slot = static_cast<std::uint32_t>(k);
        }
    }
    if (std::find(cell_group_.begin(), cell_group_.end(), unset) != cell_group_.end())
        throw std::invalid_argument("spread operator: groups do not cover the grid");
}

BlockMatrix SpreadOperator::apply(const BlockMatrix& x) const
{
    if (!(x.shape() == partition_.shape))
        throw std::invalid_argument("apply_spread: shape mismatch");
    std::vector<double> sums(partition_.groups.size(), 0.0);
    auto in = x.entries();
    for (std::size_t idx = 0; idx < in.size(); ++idx)
        sums[cell_group_[idx]] += in[idx];
    BlockMatrix out(partition_.shape);
    auto dst = out.entries();
    for (std::size_t idx = 0; idx < dst.size(); ++idx)
        dst[idx] = sums[cell_group_[idx]];
    return out;
}

double lemma3_bound(const Partition& partition, const Exponent& p, const Exponent& q1,
                    const Exponent& q2)
{
    double spread_factor = 1.0;
    if (!p.is_infinite())
        spread_factor = partition.r <= 1 ? 0.0
                                         : rational_pow(static_cast<double>(partition.r - 1),
                                                        p.recip());
    return rational_pow(static_cast<double>(partition.l), embedding_exponent(p, q1)) *
           rational_pow(static_cast<double>(partition.shape.b), embedding_exponent(p, q2)) *
           spread_factor;
}

Lemma3Check check_lemma3_column(const SpreadOperator& op, const Exponent& p, const Exponent& q1,
                                const Exponent& q2, std::size_t col,
                                std::span<const double> values)
{
    const auto& part = op.partition();
    if (col >= part.shape.b || values.size() != part.shape.s)
        throw std::invalid_argument("check_lemma3: column does not match the partition");

    // x - Dx vanishes on the source column (each group meets it once) and is
    // -x(i, col) on every other cell of the group of (i, col).
    std::vector<std::pair<std::uint32_t, double>> residual;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] == 0.0)
            continue;
        for (const auto& c : part.groups[op.group_of(i, col)])
            if (c.col != col)
                residual.emplace_back(c.col, -values[i]);
    }
    std::sort(residual.begin(), residual.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    std::vector<double> column_norms;
    std::vector<double> scratch;
    for (std::size_t t = 0; t < residual.size();) {
        scratch.clear();
        std::size_t u = t;
        while (u < residual.size() && residual[u].first == residual[t].first)
            scratch.push_back(residual[u++].second);
        column_norms.push_back(lq_norm(scratch, q1));
        t = u;
    }

    Lemma3Check check;
    check.lhs = lq_norm(column_norms, q2);
    check.rhs = lemma3_bound(part, p, q1, q2) * lq_norm(values, p);
    check.ok = check.lhs <= check.rhs + kLemma3Slack;
    return check;
}

Lemma3Check check_lemma3(const SpreadOperator& op, const Exponent& p, const Exponent& q1,
                         const Exponent& q2, const BlockMatrix& x)
{
    if (!(x.shape() == op.shape()))
        throw std::invalid_argument("check_lemma3: shape mismatch");
    std::size_t support_col = 0;
    bool found = false;
    for (std::size_t j = 0; j < x.cols(); ++j) {
        auto col = x.column(j);
        if (std::any_of(col.begin(), col.end(), [](double v) { return v != 0.0; })) {
            if (found)
                throw std::invalid_argument("check_lemma3: x is supported in more than one column");
            found = true;
            support_col = j;
        }
    }
    return check_lemma3_column(op, p, q1, q2, support_col, x.column(support_col));
}

SigmaK sigma_k(std::span<const double> y, std::size_t k, const Exponent& q)
{
    if (k > y.size())
        throw std::invalid_argument("sigma_k: k exceeds the vector length");
    std::vector<std::size_t> order(y.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::abs(y[a]) > std::abs(y[b]);
    });

    SigmaK out;
    out.support.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k));
    std::sort(out.support.begin(), out.support.end());
    std::vector<double> rest;
    rest.reserve(y.size() - k);
    for (std::size_t t = k; t < order.size(); ++t)
        rest.push_back(y[order[t]]);
    out.error = lq_norm(rest, q);
    return out;
}

Partition transposition_partition(std::size_t s)
{
    if (s == 0)
        throw std::invalid_argument("transposition_partition needs s >= 1");
    Partition out;
    out.shape = BlockShape(s, s);
    out.r = 2;
    out.l = 1;
    for (std::uint32_t i = 0; i < s; ++i)
        for (std::uint32_t j = i + 1; j < s; ++j)
            out.groups.push_back({{i, j}, {j, i}});
    for (std::uint32_t i = 0; i < s; ++i)
        out.groups.push_back({{i, i}});
    return out;
}

}  // namespace mixwidth
