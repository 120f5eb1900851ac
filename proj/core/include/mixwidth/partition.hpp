#pragma once

// (m, r, l)-partitions of the grid [s] x [b].
//
// A partition splits the cells into disjoint groups such that
//   (i)   every group has at most r cells,
//   (ii)  every column meets each group at most once,
//   (iii) any two columns are met together by at most l groups.
// Cells are 0-based (row, column) pairs.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "mixwidth/design.hpp"
#include "mixwidth/norms.hpp"

namespace mixwidth {

struct Cell {
    std::uint32_t row = 0;
    std::uint32_t col = 0;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

struct Partition {
    BlockShape shape;
    std::vector<std::vector<Cell>> groups;  // nonempty groups only
    std::size_t r = 0;             // declared bound on group size
    std::size_t l = 0;             // declared bound on column-pair co-occurrence
    std::size_t empty_groups = 0;  // source sets that received no cell

    /// Number of nonempty groups, i.e. the dimension of the group-constant subspace.
    std::size_t m() const { return groups.size(); }
};

/// Places cell (i, j) into the i-th lowest-indexed set containing j.
///
/// Every point must lie in at least s sets and every set must have at most r
/// points; `r` and `l` are the caller's certified bounds on set size and pair
/// multiplicity and are recorded as the partition parameters. Throws
/// std::invalid_argument naming the first deficient point.
Partition partition_from_sets(const std::vector<std::vector<std::size_t>>& sets, std::size_t s,
                              std::size_t b, std::size_t r, std::size_t l);

/// Same, with r and l measured from the set system itself.
Partition partition_from_sets(const std::vector<std::vector<std::size_t>>& sets, std::size_t s,
                              std::size_t b);

/// Parameters used by good_partition, exposed for reporting.
struct GoodPartitionPlan {
    unsigned u = 0;
    std::size_t r = 0;         // 2^u
    std::size_t b_padded = 0;  // b' = 2^{u d}
    std::size_t l = 0;         // ceil(s (r-1) / (b'-1))
};

/// u minimal with b <= 2^{u d}; requires s >= b >= 1, d >= 2.
GoodPartitionPlan plan_good_partition(std::size_t s, std::size_t b, unsigned d);

/// Affine-line design over GF(2^u) on b' = 2^{u d} points, each line repeated
/// l times, fed to partition_from_sets on [s] x [b'] and restricted to [s] x [b].
/// b = 1 gives s singleton groups.
Partition good_partition(std::size_t s, std::size_t b, unsigned d);

/// Intersects every group with [s'] x [b'] and drops the groups left empty.
Partition restrict(const Partition& partition, std::size_t s_new, std::size_t b_new);

/// Groups are the rows: r = b, l = s.
Partition row_partition(std::size_t s, std::size_t b);

/// Every cell on its own: r = 1, l = 0.
Partition singleton_partition(const BlockShape& shape);

struct PartitionReport {
    bool ok = false;
    bool cover_ok = false;   // every cell in exactly one group, all in range
    bool column_ok = false;  // property (ii)
    std::size_t r_observed = 0;
    std::size_t l_observed = 0;
    std::vector<std::string> violations;
};

/// Exhaustive check of the cover and of (i)-(iii) against the declared r, l.
PartitionReport verify_partition(const Partition& partition);

}  // namespace mixwidth
