#include "mixwidth/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace mixwidth {

namespace {

constexpr std::size_t kMaxViolations = 32;
constexpr std::size_t kDensePairLimit = 4096;

void note(PartitionReport& report, std::string msg)
{
    if (report.violations.size() < kMaxViolations)
        report.violations.push_back(std::move(msg));
}

std::size_t max_pair_multiplicity(const std::vector<std::vector<std::size_t>>& sets, std::size_t b)
{
    std::vector<std::uint64_t> keys;
    for (const auto& set : sets) {
        auto sorted = set;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t t = 0; t < sorted.size(); ++t)
            for (std::size_t u = 0; u < t; ++u)
                keys.push_back(std::uint64_t{sorted[u]} * b + sorted[t]);
    }
    std::sort(keys.begin(), keys.end());
    std::size_t best = 0;
    for (std::size_t i = 0; i < keys.size();) {
        std::size_t j = i;
        while (j < keys.size() && keys[j] == keys[i])
            ++j;
        best = std::max(best, j - i);
        i = j;
    }
    return best;
}

}  // namespace

Partition partition_from_sets(const std::vector<std::vector<std::size_t>>& sets, std::size_t s,
                              std::size_t b, std::size_t r, std::size_t l)
{
    if (s == 0 || b == 0)
        throw std::invalid_argument("partition_from_sets: empty grid");

    // containing[j] lists the indices of the sets containing j, ascending.
    std::vector<std::vector<std::size_t>> containing(b);
    for (std::size_t k = 0; k < sets.size(); ++k) {
        if (sets[k].size() > r)
            throw std::invalid_argument("partition_from_sets: set " + std::to_string(k) +
                                        " has more than r = " + std::to_string(r) + " points");
        for (auto j : sets[k]) {
            if (j >= b)
                throw std::invalid_argument("partition_from_sets: set " + std::to_string(k) +
                                            " contains point " + std::to_string(j) +
                                            " outside [b]");
            containing[j].push_back(k);
        }
    }
    for (std::size_t j = 0; j < b; ++j) {
        if (containing[j].size() < s)
            throw std::invalid_argument("partition_from_sets: point " + std::to_string(j) +
                                        " lies in " + std::to_string(containing[j].size()) +
                                        " sets, needs at least s = " + std::to_string(s));
    }

    std::vector<std::vector<Cell>> groups(sets.size());
    for (std::size_t j = 0; j < b; ++j)
        for (std::size_t i = 0; i < s; ++i)
            groups[containing[j][i]].push_back(
                {static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)});

    Partition out;
    out.shape = BlockShape(s, b);
    out.r = r;
    out.l = l;
    for (auto& g : groups) {
        if (g.empty())
            ++out.empty_groups;
        else
            out.groups.push_back(std::move(g));
    }
    return out;
}

Partition partition_from_sets(const std::vector<std::vector<std::size_t>>& sets, std::size_t s,
                              std::size_t b)
{
    std::size_t r = 0;
    for (const auto& set : sets)
        r = std::max(r, set.size());
    return partition_from_sets(sets, s, b, r, max_pair_multiplicity(sets, b));
}

GoodPartitionPlan plan_good_partition(std::size_t s, std::size_t b, unsigned d)
{
    if (d < 2)
        throw std::invalid_argument("good_partition needs d >= 2");
    if (b == 0 || s < b)
        throw std::invalid_argument("good_partition needs s >= b >= 1 (got s = " +
                                    std::to_string(s) + ", b = " + std::to_string(b) +
                                    "); use the grouped construction for s < b");
    GoodPartitionPlan plan;
    for (plan.u = 1;; ++plan.u) {
        if (plan.u * d >= 40)
            throw std::invalid_argument("good_partition: padded size 2^{ud} too large");
        std::size_t padded = std::size_t{1} << (plan.u * d);
        if (b <= padded) {
            plan.b_padded = padded;
            break;
        }
    }
    plan.r = std::size_t{1} << plan.u;
    plan.l = (s * (plan.r - 1) + plan.b_padded - 2) / (plan.b_padded - 1);
    return plan;
}

Partition good_partition(std::size_t s, std::size_t b, unsigned d)
{
    const auto plan = plan_good_partition(s, b, d);
    if (b == 1)
        return singleton_partition(BlockShape(s, 1));

    const auto lines = affine_line_design(static_cast<std::uint32_t>(plan.r), d);
    const auto design = repeat_design(lines, plan.l);
    auto full = partition_from_sets(design.sets, s, plan.b_padded, plan.r, plan.l);
    return restrict(full, s, b);
}

Partition restrict(const Partition& partition, std::size_t s_new, std::size_t b_new)
{
    if (s_new == 0 || b_new == 0 || s_new > partition.shape.s || b_new > partition.shape.b)
        throw std::invalid_argument("restrict: target grid must lie inside the partition's grid");
    Partition out;
    out.shape = BlockShape(s_new, b_new);
    out.r = partition.r;
    out.l = partition.l;
    out.empty_groups = partition.empty_groups;
    for (const auto& g : partition.groups) {
        std::vector<Cell> kept;
        for (const auto& c : g)
            if (c.row < s_new && c.col < b_new)
                kept.push_back(c);
        if (kept.empty())
            ++out.empty_groups;
        else
            out.groups.push_back(std::move(kept));
    }
    return out;
}

Partition row_partition(std::size_t s, std::size_t b)
{
    Partition out;
    out.shape = BlockShape(s, b);
    out.r = b;
    out.l = s;
    out.groups.resize(s);
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < b; ++j)
            out.groups[i].push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)});
    return out;
}

Partition singleton_partition(const BlockShape& shape)
{
    Partition out;
    out.shape = shape;
    out.r = 1;
    out.l = 0;
    out.groups.reserve(shape.size());
    for (std::size_t j = 0; j < shape.b; ++j)
        for (std::size_t i = 0; i < shape.s; ++i)
            out.groups.push_back({{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)}});
    return out;
}

PartitionReport verify_partition(const Partition& partition)
{
    PartitionReport report;
    const std::size_t s = partition.shape.s;
    const std::size_t b = partition.shape.b;

    std::vector<std::uint32_t> hits(s * b, 0);
    bool in_range = true;
    report.column_ok = true;
    std::vector<std::size_t> cols;
    std::vector<std::uint64_t> pair_keys;
    const bool dense = b <= kDensePairLimit;
    std::vector<std::uint32_t> pair_counts(dense ? b * b : 0, 0);

    for (std::size_t k = 0; k < partition.groups.size(); ++k) {
        const auto& g = partition.groups[k];
        report.r_observed = std::max(report.r_observed, g.size());
        if (g.empty())
            note(report, "group " + std::to_string(k) + " is empty");
        cols.clear();
        for (const auto& c : g) {
            if (c.row >= s || c.col >= b) {
                in_range = false;
                note(report, "group " + std::to_string(k) + " has out-of-range cell (" +
                                 std::to_string(c.row) + "," + std::to_string(c.col) + ")");
                continue;
            }
            ++hits[std::size_t{c.col} * s + c.row];
            cols.push_back(c.col);
        }
        std::sort(cols.begin(), cols.end());
        auto dup = std::adjacent_find(cols.begin(), cols.end());
        if (dup != cols.end()) {
            report.column_ok = false;
            note(report, "group " + std::to_string(k) + " meets column " + std::to_string(*dup) +
                             " more than once");
        }
        cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
        for (std::size_t t = 0; t < cols.size(); ++t) {
            for (std::size_t u = 0; u < t; ++u) {
                if (dense)
                    ++pair_counts[cols[u] * b + cols[t]];
                else
                    pair_keys.push_back(std::uint64_t{cols[u]} * b + cols[t]);
            }
        }
    }

    report.cover_ok = in_range;
    for (std::size_t idx = 0; idx < hits.size(); ++idx) {
        if (hits[idx] != 1) {
            report.cover_ok = false;
            note(report, "cell (" + std::to_string(idx % s) + "," + std::to_string(idx / s) +
                             ") covered " + std::to_string(hits[idx]) + " times");
        }
    }

    if (dense) {
        for (auto c : pair_counts)
            report.l_observed = std::max<std::size_t>(report.l_observed, c);
    } else {
        std::sort(pair_keys.begin(), pair_keys.end());
        for (std::size_t i = 0; i < pair_keys.size();) {
            std::size_t j = i;
            while (j < pair_keys.size() && pair_keys[j] == pair_keys[i])
                ++j;
            report.l_observed = std::max(report.l_observed, j - i);
            i = j;
        }
    }

    if (report.r_observed > partition.r)
        note(report, "largest group has " + std::to_string(report.r_observed) +
                         " cells, declared r = " + std::to_string(partition.r));
    if (report.l_observed > partition.l)
        note(report, "two columns share " + std::to_string(report.l_observed) +
                         " groups, declared l = " + std::to_string(partition.l));
    report.ok = report.cover_ok && report.column_ok && report.r_observed <= partition.r &&
                report.l_observed <= partition.l;
    return report;
}

}  // namespace mixwidth
