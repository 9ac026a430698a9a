#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace kproc {

// Component-size order statistics for one graph state. L(i) / L_hat(i) are
// total: they return 0 past the component count so aggregation never branches.
class ComponentStats {
public:
    ComponentStats(std::vector<std::pair<std::uint32_t, std::uint32_t>> entries, std::uint64_t n)
        : entries_(std::move(entries)), n_(n) {
        for (const auto& [size, special] : entries_) {
            if (special > 0) special_sizes_.push_back(size);
        }
    }

    std::uint64_t n() const { return n_; }
    std::size_t component_count() const { return entries_.size(); }

    std::uint64_t L(std::size_t i) const {
        if (i == 0) throw std::invalid_argument("order statistics are 1-based");
        return i <= entries_.size() ? entries_[i - 1].first : 0;
    }

    std::uint64_t L_hat(std::size_t i) const {
        if (i == 0) throw std::invalid_argument("order statistics are 1-based");
        return i <= special_sizes_.size() ? special_sizes_[i - 1] : 0;
    }

    double chi() const {
        if (entries_.empty()) throw std::invalid_argument("susceptibility of empty state");
        std::uint64_t sum_sq = 0;
        for (const auto& [size, special] : entries_) sum_sq += static_cast<std::uint64_t>(size) * size;
        return static_cast<double>(sum_sq) / static_cast<double>(n_);
    }

    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& entries() const { return entries_; }
    const std::vector<std::uint32_t>& special_sizes() const { return special_sizes_; }

private:
    std::vector<std::pair<std::uint32_t, std::uint32_t>> entries_;  // descending by size
    std::vector<std::uint32_t> special_sizes_;                      // descending by size
    std::uint64_t n_;
};

struct RunAggregate {
    double mean = 0;
    double stderr_ = 0;
    double median = 0;
    double p01 = 0;
    double p99 = 0;
    std::size_t count = 0;
};

// Nearest-rank percentile on a sorted sample, p in (0, 100].
inline double nearest_rank(const std::vector<double>& sorted, double p) {
    std::size_t rank = static_cast<std::size_t>(std::ceil(p / 100.0 * static_cast<double>(sorted.size())));
    if (rank == 0) rank = 1;
    if (rank > sorted.size()) rank = sorted.size();
    return sorted[rank - 1];
}

inline RunAggregate aggregate(std::vector<double> values) {
    if (values.empty()) throw std::invalid_argument("aggregate needs at least one value");
    RunAggregate agg;
    agg.count = values.size();
    double sum = 0;
    for (double v : values) sum += v;
    agg.mean = sum / static_cast<double>(values.size());
    if (values.size() > 1) {
        double ss = 0;
        for (double v : values) ss += (v - agg.mean) * (v - agg.mean);
        double var = ss / static_cast<double>(values.size() - 1);
        agg.stderr_ = std::sqrt(var / static_cast<double>(values.size()));
    }
    std::sort(values.begin(), values.end());
    agg.median = nearest_rank(values, 50.0);
    agg.p01 = nearest_rank(values, 1.0);
    agg.p99 = nearest_rank(values, 99.0);
    return agg;
}

}  // namespace kproc
