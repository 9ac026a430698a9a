#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kproc {

using Vertex = std::uint32_t;

enum class MergeOutcome { Merged, SameComponent, Collision };

// Disjoint-set forest with union by size. A merge is refused when it would
// put two special vertices in one component (k-process rule) or complete a
// forbidden set (CDF rule). Rejected calls leave the structure untouched;
// path compression happens only on successful merges, so a refused call is
// bit-identical to a no-op.
class Partition {
public:
    Partition(Vertex n, const std::vector<Vertex>& specials,
              const std::vector<std::vector<Vertex>>& family = {})
        : n_(n),
          num_components_(n),
          parent_(n),
          size_(n, 1),
          special_count_(n, 0),
          sum_sq_(n) {
        for (Vertex v = 0; v < n; ++v) parent_[v] = v;
        for (Vertex s : specials) {
            if (s >= n) throw std::out_of_range("special vertex out of range");
            if (special_count_[s] != 0) throw std::invalid_argument("duplicate special vertex");
            special_count_[s] = 1;
        }
        num_special_ = static_cast<Vertex>(specials.size());
        special_total_ = num_special_;
        largest_ = n > 0 ? 1 : 0;
        largest_special_ = num_special_ > 0 ? 1 : 0;
        if (!family.empty()) {
            set_sizes_.reserve(family.size());
            counters_.resize(n);
            for (std::size_t id = 0; id < family.size(); ++id) {
                const auto& set = family[id];
                if (set.size() < 2)
                    throw std::invalid_argument("forbidden set must have at least 2 vertices");
                for (Vertex v : set) {
                    if (v >= n) throw std::out_of_range("forbidden-set vertex out of range");
                    auto& cs = counters_[v];
                    for (const auto& [sid, cnt] : cs)
                        if (sid == id)
                            throw std::invalid_argument("duplicate vertex inside forbidden set");
                    cs.emplace_back(static_cast<std::uint32_t>(id), 1u);
                }
                set_sizes_.push_back(static_cast<std::uint32_t>(set.size()));
            }
            for (auto& cs : counters_)
                std::sort(cs.begin(), cs.end());
        }
    }

    MergeOutcome try_union_kprocess(Vertex u, Vertex v) {
        if (u == v) throw std::invalid_argument("self-pair");
        Vertex a = check_and_find(u), b = check_and_find(v);
        if (a == b) return MergeOutcome::SameComponent;
        if (special_count_[a] > 0 && special_count_[b] > 0) return MergeOutcome::Collision;
        merge(u, v, a, b);
        return MergeOutcome::Merged;
    }

    MergeOutcome try_union_cdf(Vertex u, Vertex v) {
        if (u == v) throw std::invalid_argument("self-pair");
        Vertex a = check_and_find(u), b = check_and_find(v);
        if (a == b) return MergeOutcome::SameComponent;
        if (!counters_.empty() && would_complete_forbidden(a, b)) return MergeOutcome::Collision;
        merge(u, v, a, b);
        return MergeOutcome::Merged;
    }

    Vertex find(Vertex v) const {
        while (parent_[v] != v) v = parent_[v];
        return v;
    }

    Vertex n() const { return n_; }
    Vertex num_special() const { return num_special_; }
    std::uint64_t num_components() const { return num_components_; }
    std::uint32_t component_size(Vertex v) const { return size_[find(v)]; }
    std::uint32_t special_count_of(Vertex v) const { return special_count_[find(v)]; }
    std::uint32_t largest() const { return largest_; }
    std::uint32_t largest_special() const { return largest_special_; }
    std::uint64_t special_total() const { return special_total_; }
    std::uint64_t sum_sq_sizes() const { return sum_sq_; }

    // (size, special_count) per component, largest first.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> component_sizes() const {
        std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
        out.reserve(num_components_);
        for (Vertex v = 0; v < n_; ++v)
            if (find(v) == v) out.emplace_back(size_[v], special_count_[v]);
        std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
            return x.first != y.first ? x.first > y.first : x.second > y.second;
        });
        return out;
    }

    bool operator==(const Partition&) const = default;

private:
    Vertex check_and_find(Vertex u) const {
        if (u >= n_) throw std::out_of_range("vertex out of range");
        return find(u);
    }

    bool would_complete_forbidden(Vertex a, Vertex b) const {
        const auto* small = &counters_[a];
        const auto* big = &counters_[b];
        if (small->size() > big->size()) std::swap(small, big);
        for (const auto& [id, cnt] : *small) {
            auto it = std::lower_bound(big->begin(), big->end(),
                                       std::make_pair(id, std::uint32_t{0}));
            if (it != big->end() && it->first == id && cnt + it->second >= set_sizes_[id])
                return true;
        }
        return false;
    }

    void merge(Vertex u, Vertex v, Vertex a, Vertex b) {
        // smaller component attaches to larger; on ties the lower root wins
        if (size_[a] < size_[b] || (size_[a] == size_[b] && a > b)) std::swap(a, b);
        sum_sq_ += 2ull * size_[a] * size_[b];
        bool a_special = special_count_[a] > 0;
        bool b_special = special_count_[b] > 0;
        if (a_special && !b_special) special_total_ += size_[b];
        if (b_special && !a_special) special_total_ += size_[a];
        parent_[b] = a;
        size_[a] += size_[b];
        special_count_[a] += special_count_[b];
        if (size_[a] > largest_) largest_ = size_[a];
        if ((a_special || b_special) && size_[a] > largest_special_) largest_special_ = size_[a];
        if (!counters_.empty() && !(counters_[a].empty() && counters_[b].empty()))
            fold_counters(a, b);
        --num_components_;
        compress(u, a);
        compress(v, a);
    }

    void fold_counters(Vertex a, Vertex b) {
        auto& ca = counters_[a];
        auto& cb = counters_[b];
        if (ca.size() < cb.size()) ca.swap(cb);
        std::vector<std::pair<std::uint32_t, std::uint32_t>> merged;
        merged.reserve(ca.size() + cb.size());
        std::size_t i = 0, j = 0;
        while (i < ca.size() && j < cb.size()) {
            if (ca[i].first < cb[j].first) merged.push_back(ca[i++]);
            else if (cb[j].first < ca[i].first) merged.push_back(cb[j++]);
            else {
                merged.emplace_back(ca[i].first, ca[i].second + cb[j].second);
                ++i, ++j;
            }
        }
        while (i < ca.size()) merged.push_back(ca[i++]);
        while (j < cb.size()) merged.push_back(cb[j++]);
        ca = std::move(merged);
        cb.clear();
        cb.shrink_to_fit();
    }

    void compress(Vertex v, Vertex root) {
        while (parent_[v] != root) {
            Vertex next = parent_[v];
            parent_[v] = root;
            v = next;
        }
    }

    Vertex n_;
    Vertex num_special_ = 0;
    std::uint64_t num_components_;
    std::vector<Vertex> parent_;
    std::vector<std::uint32_t> size_;
    std::vector<std::uint32_t> special_count_;
    // per root, sorted (forbidden-set id, members present) pairs
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> counters_;
    std::vector<std::uint32_t> set_sizes_;
    std::uint64_t sum_sq_;
    std::uint64_t special_total_ = 0;
    std::uint32_t largest_ = 0;
    std::uint32_t largest_special_ = 0;
};

}  // namespace kproc
