#include "mixwidth/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "mixwidth/errors.hpp"
#include "mixwidth/sampling.hpp"
#include "mixwidth/widths.hpp"

namespace mixwidth {

namespace {

constexpr double kBallSlack = 1e-9;

std::int64_t ceil_div(std::int64_t num, std::int64_t den) { return (num + den - 1) / den; }

// Names the first clause of the exceptional-case predicate the tuple violates.
std::string exceptional_failure(const RegimeReport& report)
{
    const auto& t = report.tuple;
    switch (report.label) {
    case RegimeCase::InnerFail:
        return "condition (i) q1 <= max{p1,2} fails; the tuple is non-rigid through the inner l_p balls";
    case RegimeCase::OuterFail:
        return "condition (ii) q2 <= max{p2,2} fails; the tuple is non-rigid through the outer l_p balls";
    default:
        break;
    }
    if (!(t.q1 < t.p1))
        return "q1 < p1 fails (tuple is rigid, case " + to_string(report.label) + ")";
    if (!(t.q1 < t.q2))
        return "q1 < q2 fails (tuple is rigid, case " + to_string(report.label) + ")";
    if (!(t.p2 < t.q2))
        return "p2 < q2 fails (tuple is rigid, case " + to_string(report.label) + ")";
    return "q2 <= 2 fails (tuple is rigid, case " + to_string(report.label) + ")";
}

void check_membership(const BlockMatrix& x, const ExponentTuple& t)
{
    double norm = mixed_norm(x, {t.p1, t.p2});
    if (norm > 1.0 + kBallSlack)
        throw PreconditionError("approximate: x is outside the unit ball of l_{p1,p2} (norm " +
                                std::to_string(norm) + ")");
}

}  // namespace

std::string ExponentTuple::str() const
{
    return "(" + p1.str() + "," + p2.str() + "," + q1.str() + "," + q2.str() + ")";
}

Rational pipeline_alpha(const ExponentTuple& t)
{
    return (t.q1.recip() - t.p1.recip()) - positive_part(t.q2.recip() - t.p1.recip());
}

unsigned choose_design_dimension(const Rational& alpha, const Exponent& q1)
{
    if (alpha <= 0)
        throw std::invalid_argument("choose_design_dimension: alpha must be positive");
    // (1/d)(1/q1) <= alpha/2  <=>  d >= 2 (1/q1) / alpha.
    Rational bound = Rational(2) * q1.recip() / alpha;
    auto d = ceil_div(bound.numerator(), bound.denominator());
    return static_cast<unsigned>(std::max<std::int64_t>(2, d));
}

std::size_t choose_block_budget(const Rational& alpha, std::size_t b)
{
    using boost::multiprecision::cpp_int;
    if (alpha <= 0)
        return 1;
    // Smallest k with k^den >= b^num, where alpha/4 = num/den.
    const Rational e = alpha / 4;
    const auto num = static_cast<unsigned>(e.numerator());
    const auto den = static_cast<unsigned>(e.denominator());
    const cpp_int target = boost::multiprecision::pow(cpp_int(b), num);

    auto guess = static_cast<std::size_t>(
        std::ceil(std::pow(static_cast<double>(b), to_double(e))));
    std::size_t k = std::max<std::size_t>(1, guess);
    while (k > 1 && boost::multiprecision::pow(cpp_int(k - 1), den) >= target)
        --k;
    while (boost::multiprecision::pow(cpp_int(k), den) < target)
        ++k;
    return std::max<std::size_t>(1, k);
}

PipelineParams choose_params(const ExponentTuple& tuple, std::size_t s, std::size_t b)
{
    if (s == 0 || b == 0)
        throw std::invalid_argument("choose_params: s and b must be positive");
    const auto report = classify(tuple);
    if (report.label != RegimeCase::Exceptional)
        throw PreconditionError("tuple " + tuple.str() + " is not in the exceptional case: " +
                                exceptional_failure(report));
    PipelineParams params;
    params.tuple = tuple;
    params.alpha = pipeline_alpha(tuple);
    params.d = choose_design_dimension(params.alpha, tuple.q1);
    params.k = choose_block_budget(params.alpha, b);
    return params;
}

ApproxResult approximate(const BlockMatrix& x, const PipelineParams& params,
                         const SpreadOperator& op)
{
    if (!(x.shape() == op.shape()))
        throw std::invalid_argument("approximate: x does not match the partition's shape");
    const auto& t = params.tuple;
    check_membership(x, t);
    if (params.k == 0)
        throw std::invalid_argument("approximate: block budget k must be >= 1");

    const auto& shape = x.shape();
    const auto y = block_norm_vector(x, t.p1);
    const auto kept = sigma_k(y, std::min(params.k - 1, shape.b), t.q2);

    BlockMatrix head(shape);
    for (auto j : kept.support) {
        auto src = x.column(j);
        std::copy(src.begin(), src.end(), head.column(j).begin());
    }

    ApproxResult out;
    out.lambda = kept.support;
    out.delta = kept.error;
    out.dimension = op.dimension();
    out.approximant = op.apply(head);
    out.measured_error = mixed_norm(x - out.approximant, {t.q1, t.q2});

    const double column_bound = lemma3_bound(op.partition(), t.p1, t.q1, t.q2);
    double bound = kept.error *
                   rational_pow(static_cast<double>(shape.s), embedding_exponent(t.p1, t.q1));
    for (auto j : kept.support)
        bound += column_bound * y[j];
    out.certified_bound = bound;
    return out;
}

ApproxResult approximate(const BlockMatrix& x, const PipelineParams& params,
                         const Partition& partition)
{
    return approximate(x, params, SpreadOperator(partition));
}

GroupedSubspace::GroupedSubspace(std::size_t s, std::size_t b, unsigned d) : shape_(s, b)
{
    if (s >= b)
        throw std::invalid_argument("grouped subspace needs s < b; use a single partition");
    std::vector<std::size_t> widths;
    for (std::size_t start = 0; start < b; start += s) {
        const std::size_t width = std::min(s, b - start);
        auto it = std::find(widths.begin(), widths.end(), width);
        if (it == widths.end()) {
            widths.push_back(width);
            ops_.emplace_back(good_partition(s, width, d));
            it = widths.end() - 1;
        }
        offsets_.push_back(start);
        op_index_.push_back(static_cast<std::size_t>(it - widths.begin()));
    }
}

std::size_t GroupedSubspace::dimension() const
{
    std::size_t total = 0;
    for (auto idx : op_index_)
        total += ops_[idx].dimension();
    return total;
}

ApproxResult grouped_subspace_approximate(const BlockMatrix& x, const PipelineParams& params,
                                          const GroupedSubspace& subspace)
{
    if (!(x.shape() == subspace.shape()))
        throw std::invalid_argument("grouped approximate: shape mismatch");
    const auto& t = params.tuple;
    check_membership(x, t);

    ApproxResult out;
    out.approximant = BlockMatrix(x.shape());
    out.dimension = subspace.dimension();
    std::vector<double> group_bounds;
    for (std::size_t g = 0; g < subspace.group_count(); ++g) {
        const auto& op = subspace.op(g);
        const std::size_t offset = subspace.offset(g);
        const std::size_t width = op.shape().b;
        BlockMatrix part(op.shape());
        for (std::size_t j = 0; j < width; ++j) {
            auto src = x.column(offset + j);
            std::copy(src.begin(), src.end(), part.column(j).begin());
        }
        auto local = approximate(part, params, op);
        for (std::size_t j = 0; j < width; ++j) {
            auto src = local.approximant.column(j);
            std::copy(src.begin(), src.end(), out.approximant.column(offset + j).begin());
        }
        for (auto j : local.lambda)
            out.lambda.push_back(offset + j);
        group_bounds.push_back(local.certified_bound);
        out.delta = std::max(out.delta, local.delta);
    }
    out.measured_error = mixed_norm(x - out.approximant, {t.q1, t.q2});
    out.certified_bound = lq_norm(group_bounds, t.q2);
    return out;
}

ApproxResult grouped_subspace_approximate(const BlockMatrix& x, const PipelineParams& params)
{
    GroupedSubspace subspace(x.rows(), x.cols(), params.d);
    return grouped_subspace_approximate(x, params, subspace);
}

PartitionKind parse_partition_kind(const std::string& name)
{
    if (name == "good")
        return PartitionKind::Good;
    if (name == "transposition" || name == "transpose")
        return PartitionKind::Transposition;
    throw std::invalid_argument("unknown partition kind '" + name + "' (expected good|transposition)");
}

std::string to_string(PartitionKind kind)
{
    return kind == PartitionKind::Good ? "good" : "transposition";
}

SizeEvaluation evaluate_size(const ExponentTuple& tuple, std::size_t s, std::size_t b,
                             const EvaluationOptions& options)
{
    if (options.samples == 0)
        throw std::invalid_argument("evaluate_size: samples must be >= 1");
    auto params = choose_params(tuple, s, b);
    if (options.d)
        params.d = *options.d;
    if (options.k)
        params.k = *options.k;

    const BlockShape shape(s, b);
    SizeEvaluation eval;
    eval.s = s;
    eval.b = b;
    eval.d = params.d;
    eval.k = params.k;
    eval.d0 = d0_mixed(shape, tuple.p1, tuple.p2, tuple.q1, tuple.q2);

    std::optional<SpreadOperator> single;
    std::optional<GroupedSubspace> grouped;
    if (options.kind == PartitionKind::Transposition) {
        if (s != b)
            throw std::invalid_argument("transposition partition needs s = b");
        single.emplace(transposition_partition(s));
    } else if (s >= b) {
        single.emplace(good_partition(s, b, params.d));
    } else {
        grouped.emplace(s, b, params.d);
    }
    if (single) {
        eval.r = single->partition().r;
        eval.l = single->partition().l;
        eval.dimension = single->dimension();
    } else {
        for (std::size_t g = 0; g < grouped->group_count(); ++g) {
            eval.r = std::max(eval.r, grouped->op(g).partition().r);
            eval.l = std::max(eval.l, grouped->op(g).partition().l);
        }
        eval.dimension = grouped->dimension();
    }

    auto run = [&](const BlockMatrix& x) {
        auto res = single ? approximate(x, params, *single)
                          : grouped_subspace_approximate(x, params, *grouped);
        eval.sup_sampled_error = std::max(eval.sup_sampled_error, res.measured_error);
        eval.certified_bound = std::max(eval.certified_bound, res.certified_bound);
        ++eval.samples;
    };
    if (tuple.p1.is_infinite() && tuple.p2 == Exponent::from_int(1))
        for (const auto& x : extreme_points_inf1(shape, options.seed, options.samples))
            run(x);
    for (const auto& x : sample_ball(shape, tuple.p1, tuple.p2, options.seed, options.samples))
        run(x);

    eval.ratio = eval.sup_sampled_error / eval.d0;
    return eval;
}

}  // namespace mixwidth
