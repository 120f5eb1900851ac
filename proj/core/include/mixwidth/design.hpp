#pragma once

// (b, r, l)-designs: families of r-subsets of {0, ..., b-1} in which every
// pair of distinct points lies in exactly l of the sets.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace mixwidth {

struct Design {
    std::size_t b = 0;  // ground set {0, ..., b-1}
    std::size_t r = 0;  // set size
    std::size_t l = 0;  // pair multiplicity
    std::vector<std::vector<std::size_t>> sets;  // each sorted ascending

    std::size_t size() const { return sets.size(); }
    friend bool operator==(const Design&, const Design&) = default;
};

/// All affine lines of F_r^d, an (r^d, r, 1)-design with
/// r^{d-1} (r^d - 1) / (r - 1) lines.
///
/// Point (c_0, ..., c_{d-1}) has index sum c_i r^{d-1-i}. Directions are the
/// nonzero vectors whose first nonzero coordinate is 1; lines are ordered by
/// direction index, then by their smallest point.
Design affine_line_design(std::uint32_t r, unsigned d);

/// Each set repeated h times in place (A1 x h, A2 x h, ...): a (b, r, l*h)-design.
Design repeat_design(const Design& design, std::size_t h);

struct DesignReport {
    bool ok = false;
    std::size_t l_observed = 0;  // largest pair count
    std::size_t l_min = 0;       // smallest pair count
    std::size_t replication_min = 0;
    std::size_t replication_max = 0;
    std::vector<std::string> violations;  // truncated to a few dozen entries
};

/// Exhaustive pair scan; ok iff every set has exactly r distinct in-range
/// points and every pair is covered exactly `design.l` times.
DesignReport verify_design(const Design& design);

}  // namespace mixwidth
