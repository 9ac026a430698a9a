#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "kproc/rng.hpp"
#include "kproc/partition.hpp"

namespace kproc {

inline std::uint64_t pair_count(std::uint64_t n) { return n * (n - 1) / 2; }

// Colexicographic pair <-> index bijection: index(u,v) = v(v-1)/2 + u, u < v.
inline std::uint64_t pair_to_index(Vertex u, Vertex v) {
    return static_cast<std::uint64_t>(v) * (v - 1) / 2 + u;
}

inline std::pair<Vertex, Vertex> index_to_pair(std::uint64_t idx) {
    auto v = static_cast<std::uint64_t>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(idx))) / 2.0);
    while (v * (v - 1) / 2 > idx) --v;
    while ((v + 1) * v / 2 <= idx) ++v;
    return {static_cast<Vertex>(idx - v * (v - 1) / 2), static_cast<Vertex>(v)};
}

// Open-addressing set of pair indices (keys stored +1; 0 marks empty).
// Memory scales with the number of pairs emitted, not with C(n,2).
class PairIndexSet {
public:
    PairIndexSet() : slots_(1024, 0) {}

    bool insert(std::uint64_t key) {
        if ((count_ + 1) * 10 > slots_.size() * 7) grow();
        std::uint64_t k = key + 1;
        std::size_t mask = slots_.size() - 1;
        std::size_t i = static_cast<std::size_t>(hash(k)) & mask;
        while (slots_[i] != 0) {
            if (slots_[i] == k) return false;
            i = (i + 1) & mask;
        }
        slots_[i] = k;
        ++count_;
        return true;
    }

    bool contains(std::uint64_t key) const {
        std::uint64_t k = key + 1;
        std::size_t mask = slots_.size() - 1;
        std::size_t i = static_cast<std::size_t>(hash(k)) & mask;
        while (slots_[i] != 0) {
            if (slots_[i] == k) return true;
            i = (i + 1) & mask;
        }
        return false;
    }

    std::size_t size() const { return count_; }
    std::size_t capacity() const { return slots_.size(); }

private:
    static std::uint64_t hash(std::uint64_t x) {
        x ^= x >> 33;
        x *= 0xff51afd7ed558ccdULL;
        x ^= x >> 33;
        x *= 0xc4ceb9fe1a85ec53ULL;
        x ^= x >> 33;
        return x;
    }

    void grow() {
        std::vector<std::uint64_t> old;
        old.swap(slots_);
        slots_.assign(old.size() * 2, 0);
        std::size_t mask = slots_.size() - 1;
        for (std::uint64_t k : old) {
            if (k == 0) continue;
            std::size_t i = static_cast<std::size_t>(hash(k)) & mask;
            while (slots_[i] != 0) i = (i + 1) & mask;
            slots_[i] = k;
        }
    }

    std::vector<std::uint64_t> slots_;
    std::size_t count_ = 0;
};

enum class StreamMode { Lazy, FullShuffle };

struct StreamExhausted : std::runtime_error {
    StreamExhausted() : std::runtime_error("edge stream exhausted") {}
};

// Uniform-without-replacement sampler over the C(n,2) unordered vertex pairs.
// Lazy mode samples pair indices with rejection against a seen-set; if the
// stream ever passes the halfway point (only possible at n <= 2^16 here) it
// falls back to shuffling the remaining pairs.
class EdgeStream {
public:
    static constexpr Vertex kMaxShuffleN = 1u << 16;

    EdgeStream(Vertex n, std::uint64_t seed, StreamMode mode = StreamMode::Lazy)
        : n_(n), seed_(seed), mode_(mode), total_(pair_count(n)), rng_(seed) {
        if (n < 2) throw std::invalid_argument("edge stream needs n >= 2");
        if (mode == StreamMode::FullShuffle) {
            if (n > kMaxShuffleN) throw std::invalid_argument("n too large for FullShuffle mode");
            queue_.resize(total_);
            for (std::uint64_t i = 0; i < total_; ++i) queue_[i] = i;
            shuffle_in_place(queue_, rng_);
        }
    }

    std::pair<Vertex, Vertex> next_pair() {
        if (emitted_ == total_) throw StreamExhausted{};
        std::uint64_t idx;
        if (!queue_.empty()) {
            idx = queue_[queue_pos_++];
        } else {
            if (emitted_ * 2 > total_ && n_ <= kMaxShuffleN) {
                switch_to_shuffle();
                idx = queue_[queue_pos_++];
            } else {
                do {
                    idx = rng_.next_below(total_);
                } while (!seen_.insert(idx));
            }
        }
        ++emitted_;
        return index_to_pair(idx);
    }

    Vertex n() const { return n_; }
    std::uint64_t seed() const { return seed_; }
    StreamMode mode() const { return mode_; }
    std::uint64_t emitted() const { return emitted_; }
    std::uint64_t total() const { return total_; }
    std::size_t seen_set_size() const { return seen_.size(); }
    std::size_t seen_set_capacity_slots() const { return seen_.capacity(); }

private:
    void switch_to_shuffle() {
        queue_.reserve(total_ - emitted_);
        for (std::uint64_t i = 0; i < total_; ++i)
            if (!seen_.contains(i)) queue_.push_back(i);
        shuffle_in_place(queue_, rng_);
    }

    Vertex n_;
    std::uint64_t seed_;
    StreamMode mode_;
    std::uint64_t total_;
    SplitMix64 rng_;
    std::uint64_t emitted_ = 0;
    PairIndexSet seen_;
    std::vector<std::uint64_t> queue_;
    std::size_t queue_pos_ = 0;
};

}  // namespace kproc
