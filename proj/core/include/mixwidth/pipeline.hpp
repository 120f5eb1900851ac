#pragma once

// Approximation of mixed-norm ball elements by group-constant matrices in the
// exceptional parameter region q1 < min{p1, q2}, p2 < q2 <= 2.
//
// For x in B_{p1,p2} the k-1 columns with the largest l_{p1} norms are kept
// (the set Lambda) and the approximant is D x^Lambda. The certified bound is
// the triangle inequality
//   ||x - D x^Lambda|| <= s^{(1/q1-1/p1)_+} sigma_{k-1}(y)_{q2}
//                         + sum_{j in Lambda} lemma3_bound * ||x[j]||_{p1}
// evaluated with the actual parameters of the partition.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mixwidth/exponent.hpp"
#include "mixwidth/norms.hpp"
#include "mixwidth/spread.hpp"

namespace mixwidth {

struct ExponentTuple {
    Exponent p1, p2, q1, q2;
    std::string str() const;  // "(p1,p2,q1,q2)"
};

struct PipelineParams {
    ExponentTuple tuple;
    unsigned d = 2;      // design dimension
    std::size_t k = 1;   // block budget: |Lambda| <= k - 1
    Rational alpha;      // (1/q1 - 1/p1) - (1/q2 - 1/p1)_+
};

/// (1/q1 - 1/p1) - (1/q2 - 1/p1)_+, exactly.
Rational pipeline_alpha(const ExponentTuple& t);

/// Smallest d >= 2 with (1/d)(1/q1) <= alpha/2.
unsigned choose_design_dimension(const Rational& alpha, const Exponent& q1);

/// max(1, ceil(b^{alpha/4})), computed in exact integer arithmetic.
std::size_t choose_block_budget(const Rational& alpha, std::size_t b);

/// Parameters for the exceptional case. Throws PreconditionError naming the
/// failing condition when the tuple is not exceptional.
PipelineParams choose_params(const ExponentTuple& tuple, std::size_t s, std::size_t b);

struct ApproxResult {
    std::vector<std::size_t> lambda;  // selected columns, ascending
    BlockMatrix approximant;          // element of the group-constant subspace
    double measured_error = 0.0;      // ||x - approximant||_{q1,q2}
    double certified_bound = 0.0;
    double delta = 0.0;               // sigma_{k-1}(y)_{q2}
    std::size_t dimension = 0;        // dimension of the approximating subspace
};

/// Single-partition pipeline for an x of the operator's shape with
/// ||x||_{p1,p2} <= 1 + 1e-9 (PreconditionError otherwise).
ApproxResult approximate(const BlockMatrix& x, const PipelineParams& params,
                         const SpreadOperator& op);
ApproxResult approximate(const BlockMatrix& x, const PipelineParams& params,
                         const Partition& partition);

/// Column groups of width <= s for s < b, each carrying its own good partition.
class GroupedSubspace {
public:
    GroupedSubspace(std::size_t s, std::size_t b, unsigned d);

    const BlockShape& shape() const { return shape_; }
    std::size_t group_count() const { return offsets_.size(); }
    std::size_t offset(std::size_t g) const { return offsets_[g]; }
    const SpreadOperator& op(std::size_t g) const { return ops_[op_index_[g]]; }
    /// Sum of the per-group subspace dimensions.
    std::size_t dimension() const;

private:
    BlockShape shape_;
    std::vector<std::size_t> offsets_;
    std::vector<std::size_t> op_index_;  // groups of equal width share an operator
    std::vector<SpreadOperator> ops_;
};

/// Runs approximate() on every contiguous group of <= s columns and
/// concatenates. The certified bound is the l_{q2} norm of the per-group bounds.
/// Throws std::invalid_argument for s >= b.
ApproxResult grouped_subspace_approximate(const BlockMatrix& x, const PipelineParams& params,
                                          const GroupedSubspace& subspace);
ApproxResult grouped_subspace_approximate(const BlockMatrix& x, const PipelineParams& params);

enum class PartitionKind { Good, Transposition };

PartitionKind parse_partition_kind(const std::string& name);
std::string to_string(PartitionKind kind);

/// One size of a sweep: the pipeline run over seeded samples of the ball.
struct SizeEvaluation {
    std::size_t s = 0;
    std::size_t b = 0;
    unsigned d = 0;
    std::size_t k = 0;
    std::size_t r = 0;
    std::size_t l = 0;
    std::size_t dimension = 0;
    double d0 = 0.0;
    double sup_sampled_error = 0.0;
    double ratio = 0.0;  // sup_sampled_error / d0
    double certified_bound = 0.0;  // largest certified bound over the samples
    std::size_t samples = 0;
};

struct EvaluationOptions {
    PartitionKind kind = PartitionKind::Good;
    std::optional<unsigned> d;         // overrides choose_params
    std::optional<std::size_t> k;      // overrides choose_params
    std::size_t samples = 32;
    std::uint64_t seed = 0;
};

/// Builds the subspace for (s, b) (grouped when s < b under Good), evaluates
/// `samples` ball points plus, for (p1,p2) = (inf,1), `samples` extreme points.
SizeEvaluation evaluate_size(const ExponentTuple& tuple, std::size_t s, std::size_t b,
                             const EvaluationOptions& options);

}  // namespace mixwidth
