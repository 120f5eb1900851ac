#include "mixwidth/design.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "mixwidth/field.hpp"

namespace mixwidth {

namespace {

constexpr std::size_t kMaxViolations = 32;
constexpr std::size_t kMaxVerifyPoints = 4096;

void note(DesignReport& report, std::string msg)
{
    if (report.violations.size() < kMaxViolations)
        report.violations.push_back(std::move(msg));
}

}  // namespace

Design affine_line_design(std::uint32_t r, unsigned d)
{
    if (d < 2)
        throw std::invalid_argument("affine_line_design needs d >= 2");
    const FiniteField field(r);

    std::size_t b = 1;
    for (unsigned i = 0; i < d; ++i) {
        if (b > std::numeric_limits<std::uint32_t>::max() / r)
            throw std::invalid_argument("affine_line_design: r^d too large");
        b *= r;
    }

    auto coords = [&](std::size_t index) {
        std::vector<FiniteField::Element> c(d);
        for (unsigned i = d; i-- > 0;) {
            c[i] = static_cast<FiniteField::Element>(index % r);
            index /= r;
        }
        return c;
    };
    auto index_of = [&](const std::vector<FiniteField::Element>& c) {
        std::size_t index = 0;
        for (auto ci : c)
            index = index * r + ci;
        return index;
    };

    Design design;
    design.b = b;
    design.r = r;
    design.l = 1;

    const auto scalars = field.elements();
    std::vector<char> covered(b);
    std::vector<FiniteField::Element> point(d);
    for (std::size_t dir_index = 1; dir_index < b; ++dir_index) {
        const auto dir = coords(dir_index);
        auto lead = std::find_if(dir.begin(), dir.end(), [](auto c) { return c != 0; });
        if (*lead != 1)
            continue;

        std::fill(covered.begin(), covered.end(), 0);
        for (std::size_t base = 0; base < b; ++base) {
            if (covered[base])
                continue;
            const auto a = coords(base);
            std::vector<std::size_t> line;
            line.reserve(r);
            for (auto t : scalars) {
                for (unsigned i = 0; i < d; ++i)
                    point[i] = field.add(a[i], field.mul(t, dir[i]));
                auto idx = index_of(point);
                covered[idx] = 1;
                line.push_back(idx);
            }
            std::sort(line.begin(), line.end());
            design.sets.push_back(std::move(line));
        }
    }
    return design;
}

Design repeat_design(const Design& design, std::size_t h)
{
    if (h == 0)
        throw std::invalid_argument("repeat_design needs h >= 1");
    Design out;
    out.b = design.b;
    out.r = design.r;
    out.l = design.l * h;
    out.sets.reserve(design.sets.size() * h);
    for (const auto& set : design.sets)
        for (std::size_t c = 0; c < h; ++c)
            out.sets.push_back(set);
    return out;
}

DesignReport verify_design(const Design& design)
{
    DesignReport report;
    const std::size_t b = design.b;
    if (b > kMaxVerifyPoints)
        throw std::invalid_argument("verify_design: b > 4096 is outside the exhaustive scan range");

    // Upper-triangular pair counts, index of (j1 < j2) is j2*(j2-1)/2 + j1.
    std::vector<std::uint32_t> pairs(b * (b - (b > 0 ? 1 : 0)) / 2, 0);
    std::vector<std::size_t> replication(b, 0);
    bool sets_ok = true;

    for (std::size_t k = 0; k < design.sets.size(); ++k) {
        const auto& set = design.sets[k];
        if (set.size() != design.r) {
            sets_ok = false;
            note(report, "set " + std::to_string(k) + " has size " + std::to_string(set.size()));
        }
        bool in_range = true;
        for (std::size_t t = 0; t < set.size(); ++t) {
            if (set[t] >= b) {
                in_range = false;
                sets_ok = false;
                note(report, "set " + std::to_string(k) + " has out-of-range point " +
                                 std::to_string(set[t]));
            } else if (t > 0 && set[t] <= set[t - 1]) {
                in_range = false;
                sets_ok = false;
                note(report, "set " + std::to_string(k) + " is not strictly increasing");
            }
        }
        if (!in_range)
            continue;
        for (std::size_t t = 0; t < set.size(); ++t) {
            ++replication[set[t]];
            for (std::size_t u = 0; u < t; ++u)
                ++pairs[set[t] * (set[t] - 1) / 2 + set[u]];
        }
    }

    bool pairs_ok = true;
    if (!pairs.empty()) {
        auto [lo, hi] = std::minmax_element(pairs.begin(), pairs.end());
        report.l_min = *lo;
        report.l_observed = *hi;
        for (std::size_t j2 = 1; j2 < b; ++j2) {
            for (std::size_t j1 = 0; j1 < j2; ++j1) {
                auto count = pairs[j2 * (j2 - 1) / 2 + j1];
                if (count != design.l) {
                    pairs_ok = false;
                    note(report, "pair {" + std::to_string(j1) + "," + std::to_string(j2) +
                                     "} covered " + std::to_string(count) + " times, expected " +
                                     std::to_string(design.l));
                }
            }
        }
    }
    if (!replication.empty()) {
        auto [lo, hi] = std::minmax_element(replication.begin(), replication.end());
        report.replication_min = *lo;
        report.replication_max = *hi;
    }
    report.ok = sets_ok && pairs_ok;
    return report;
}

}  // namespace mixwidth
