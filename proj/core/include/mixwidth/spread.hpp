#pragma once

// The spreading operator D of a partition and the quantities around it.
//
// D sends the unit vector of a cell to the indicator of the cell's group, so
// (Dx) is constant on every group with value equal to the group sum of x.
// Its range is the space of group-constant matrices, of dimension m.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "mixwidth/norms.hpp"
#include "mixwidth/partition.hpp"

namespace mixwidth {

class SpreadOperator {
public:
    explicit SpreadOperator(Partition partition);

    const Partition& partition() const { return partition_; }
    const BlockShape& shape() const { return partition_.shape; }
    /// Dimension of the range: the number of nonempty groups.
    std::size_t dimension() const { return partition_.groups.size(); }
    std::size_t group_of(std::size_t row, std::size_t col) const
    {
        return cell_group_[col * partition_.shape.s + row];
    }

    /// D x. Throws std::invalid_argument on a shape mismatch.
    BlockMatrix apply(const BlockMatrix& x) const;

private:
    Partition partition_;
    std::vector<std::uint32_t> cell_group_;  // column-block-major, like BlockMatrix
};

inline BlockMatrix apply_spread(const SpreadOperator& op, const BlockMatrix& x) { return op.apply(x); }

/// l^{(1/q1-1/p)_+} b^{(1/q2-1/p)_+} (r-1)^{1/p} for the partition's declared r and l.
/// (r-1)^{1/p} is 1 for p = inf and 0 for r = 1, p < inf.
double lemma3_bound(const Partition& partition, const Exponent& p, const Exponent& q1,
                    const Exponent& q2);

struct Lemma3Check {
    double lhs = 0.0;  // ||x - Dx||_{q1,q2}
    double rhs = 0.0;  // lemma3_bound * ||x||_p
    bool ok = true;    // lhs <= rhs + 1e-9
};

/// Compares ||x - Dx||_{q1,q2} with the one-column operator bound. x must be
/// supported in a single column (std::invalid_argument otherwise).
Lemma3Check check_lemma3(const SpreadOperator& op, const Exponent& p, const Exponent& q1,
                         const Exponent& q2, const BlockMatrix& x);

/// Same check for the matrix whose column `col` is `values` and is zero
/// elsewhere; touches only the O(s r) cells the residual can reach.
Lemma3Check check_lemma3_column(const SpreadOperator& op, const Exponent& p, const Exponent& q1,
                                const Exponent& q2, std::size_t col,
                                std::span<const double> values);

struct SigmaK {
    double error = 0.0;                // ||y - y^support||_q
    std::vector<std::size_t> support;  // kept indices, ascending
};

/// Best k-term approximation of y in l_q: keeps the k largest magnitudes,
/// ties going to the lower index. Throws std::invalid_argument for k > |y|.
SigmaK sigma_k(std::span<const double> y, std::size_t k, const Exponent& q);

/// Pairs {(i,j),(j,i)} for i < j, then the diagonal singletons:
/// an (s(s+1)/2, 2, 1)-partition of [s] x [s].
Partition transposition_partition(std::size_t s);

}  // namespace mixwidth
