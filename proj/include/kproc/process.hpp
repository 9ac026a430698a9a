#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kproc/edge_stream.hpp"
#include "kproc/partition.hpp"

namespace kproc {

enum class StopRule { AtKComponents, AtStep, Exhaustive };

struct Snapshot {
    std::uint64_t step = 0;
    std::uint64_t num_components = 0;
    std::uint32_t largest = 0;
    std::uint32_t largest_special = 0;
    std::uint64_t special_total = 0;
    double chi = 0;
    std::uint64_t accepted = 0;
    std::uint64_t collisions = 0;

    bool operator==(const Snapshot&) const = default;
};

struct EventRecord {
    std::string name;
    std::uint64_t step = 0;
    bool fired = false;

    bool operator==(const EventRecord&) const = default;
};

struct EventSpec {
    std::string name;
    // evaluated after every considered pair; first trigger wins
    std::function<bool(std::uint64_t step, const Partition&)> predicate;
    std::uint64_t arm_after = 0;  // predicate ignored for step <= arm_after
};

// Built-in event names.
inline constexpr const char* kEventLargestComponentSpecial = "LargestComponentSpecial";
inline EventSpec largest_component_special_event(std::uint64_t arm_after = 0) {
    return {kEventLargestComponentSpecial,
            [](std::uint64_t, const Partition& p) {
                return p.largest_special() == p.largest() && p.num_special() > 0;
            },
            arm_after};
}
inline EventSpec component_count_reaches_event(std::uint64_t k) {
    return {"ComponentCountReaches(" + std::to_string(k) + ")",
            [k](std::uint64_t, const Partition& p) { return p.num_components() <= k; },
            0};
}

struct ProcessConfig {
    Vertex n = 0;
    std::vector<Vertex> specials;  // k-process; empty = unconstrained G(n,m)
    std::optional<std::vector<std::vector<Vertex>>> family;  // CDF-process
    std::uint64_t seed = 0;
    StreamMode stream_mode = StreamMode::Lazy;
    StopRule stop = StopRule::AtKComponents;
    std::uint64_t stop_step = 0;  // AtStep only
    std::vector<std::uint64_t> snapshot_steps;  // strictly increasing
    bool record_trace = false;
    std::vector<EventSpec> events;
};

inline ProcessConfig& register_event(ProcessConfig& cfg, EventSpec spec) {
    for (const auto& e : cfg.events)
        if (e.name == spec.name) throw std::invalid_argument("duplicate event name: " + spec.name);
    cfg.events.push_back(std::move(spec));
    return cfg;
}

struct TraceEntry {
    Vertex u, v;
    MergeOutcome outcome;
};

struct ProcessReport {
    Vertex n = 0;
    std::uint64_t k = 0;
    std::uint64_t seed = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> final_sizes;  // (size, special_count) desc
    std::uint64_t M = 0;           // accepted edges at completion
    std::uint64_t M_hat = 0;       // first step with exactly k components
    bool M_hat_set = false;
    std::uint64_t collisions = 0;  // rejected pairs at completion
    std::uint64_t steps_consumed = 0;
    std::vector<Snapshot> snapshots;
    std::vector<EventRecord> events;
    std::vector<TraceEntry> trace;
};

inline std::uint64_t choose2(std::uint64_t s) { return s * (s - 1) / 2; }

// M of a frozen k-process state: every final component is a clique.
inline std::uint64_t analytic_edge_count(
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& sizes) {
    std::uint64_t m = 0;
    for (const auto& [s, sp] : sizes) m += choose2(s);
    return m;
}

namespace detail {

inline void validate_config(const ProcessConfig& cfg) {
    if (cfg.n < 1) throw std::invalid_argument("n must be positive");
    for (std::size_t i = 1; i < cfg.snapshot_steps.size(); ++i)
        if (cfg.snapshot_steps[i] <= cfg.snapshot_steps[i - 1])
            throw std::invalid_argument("snapshot steps must be strictly increasing");
    if (cfg.stop == StopRule::AtKComponents && cfg.specials.empty() && !cfg.family)
        throw std::invalid_argument("AtKComponents requires special vertices or a forbidden family");
    if (cfg.stop == StopRule::Exhaustive && cfg.n > EdgeStream::kMaxShuffleN)
        throw std::invalid_argument("Exhaustive mode limited to n <= 65536");
}

inline Snapshot take_snapshot(const Partition& p, std::uint64_t step, std::uint64_t accepted,
                              std::uint64_t collisions) {
    Snapshot s;
    s.step = step;
    s.num_components = p.num_components();
    s.largest = p.largest();
    s.largest_special = p.largest_special();
    s.special_total = p.special_total();
    s.chi = static_cast<double>(p.sum_sq_sizes()) / static_cast<double>(p.n());
    s.accepted = accepted;
    s.collisions = collisions;
    return s;
}

inline ProcessReport run_engine(const ProcessConfig& cfg, bool cdf_rule) {
    validate_config(cfg);
    Partition part(cfg.n, cfg.specials, cfg.family ? *cfg.family : std::vector<std::vector<Vertex>>{});

    ProcessReport rep;
    rep.n = cfg.n;
    rep.k = cfg.specials.size();
    rep.seed = cfg.seed;
    rep.events.reserve(cfg.events.size());
    for (const auto& e : cfg.events) rep.events.push_back({e.name, 0, false});

    const std::uint64_t k = cfg.specials.size();
    const std::uint64_t total = cfg.n >= 2 ? pair_count(cfg.n) : 0;
    std::uint64_t accepted = 0, collisions = 0, step = 0;
    std::size_t snap_idx = 0;
    bool frozen = false;

    auto check_events = [&](std::uint64_t at_step) {
        for (std::size_t i = 0; i < cfg.events.size(); ++i) {
            auto& r = rep.events[i];
            if (r.fired || at_step <= cfg.events[i].arm_after) continue;
            if (cfg.events[i].predicate(at_step, part)) {
                r.fired = true;
                r.step = at_step;
            }
        }
    };

    if (cfg.stop == StopRule::AtKComponents && part.num_components() == k) {
        rep.M_hat = 0;
        rep.M_hat_set = true;
        frozen = true;
        check_events(0);
    }

    if (!frozen && total > 0) {
        EdgeStream stream(cfg.n, cfg.seed, cfg.stream_mode);
        std::uint64_t limit = total;
        if (cfg.stop == StopRule::AtStep) {
            if (cfg.stop_step > total) throw std::invalid_argument("stop step exceeds pair count");
            limit = cfg.stop_step;
        }
        while (step < limit) {
            auto [u, v] = stream.next_pair();
            ++step;
            MergeOutcome out = cdf_rule ? part.try_union_cdf(u, v) : part.try_union_kprocess(u, v);
            if (out == MergeOutcome::Collision) ++collisions;
            else ++accepted;
            if (cfg.record_trace) rep.trace.push_back({u, v, out});
            if (!rep.M_hat_set && !cfg.specials.empty() && part.num_components() == k) {
                rep.M_hat = step;
                rep.M_hat_set = true;
            }
            check_events(step);
            if (snap_idx < cfg.snapshot_steps.size() && cfg.snapshot_steps[snap_idx] == step) {
                rep.snapshots.push_back(take_snapshot(part, step, accepted, collisions));
                ++snap_idx;
            }
            if (cfg.stop == StopRule::AtKComponents && rep.M_hat_set) {
                frozen = true;
                break;
            }
        }
    }

    rep.steps_consumed = step;
    rep.final_sizes = part.component_sizes();
    if (frozen && !cdf_rule) {
        // Structure is fixed once k components exist: every later within-component
        // pair is accepted and every cross-component pair collides.
        rep.M = analytic_edge_count(rep.final_sizes);
        rep.collisions = total - rep.M;
    } else {
        rep.M = accepted;
        rep.collisions = collisions;
    }
    // Snapshot steps past the stopping point see the frozen final structure.
    for (; snap_idx < cfg.snapshot_steps.size(); ++snap_idx) {
        if (cfg.stop == StopRule::AtStep || !frozen) break;
        rep.snapshots.push_back(take_snapshot(part, cfg.snapshot_steps[snap_idx], rep.M, rep.collisions));
    }
    return rep;
}

}  // namespace detail

// Unconstrained random graph G(n,m): first m pairs of the stream, all accepted.
inline ProcessReport run_gnm(Vertex n, std::uint64_t m, std::uint64_t seed,
                             StreamMode mode = StreamMode::Lazy) {
    if (n >= 2 && m > pair_count(n)) throw std::invalid_argument("m exceeds pair count");
    ProcessConfig cfg;
    cfg.n = n;
    cfg.seed = seed;
    cfg.stream_mode = mode;
    cfg.stop = StopRule::AtStep;
    cfg.stop_step = m;
    return detail::run_engine(cfg, false);
}

inline ProcessReport run_kprocess(const ProcessConfig& cfg) {
    if (cfg.specials.empty()) throw std::invalid_argument("k-process needs at least one special vertex");
    if (cfg.family) throw std::invalid_argument("k-process takes no forbidden family");
    return detail::run_engine(cfg, false);
}

inline ProcessReport run_cdf(const ProcessConfig& cfg) {
    if (!cfg.family) throw std::invalid_argument("CDF-process needs a forbidden family");
    if (cfg.stop == StopRule::AtKComponents)
        throw std::invalid_argument("CDF-process has no k-component stopping rule");
    return detail::run_engine(cfg, true);
}

// Both processes over the identical pair sequence with nested special sets
// (specials are 0..k-1, so the k1 set is a prefix of the k2 set).
inline std::pair<ProcessReport, ProcessReport> run_coupled_monotonicity(
    Vertex n, Vertex k1, Vertex k2, std::uint64_t seed,
    std::vector<std::uint64_t> snapshot_steps = {},
    StopRule stop = StopRule::AtKComponents, StreamMode mode = StreamMode::Lazy) {
    if (k1 < 1 || k1 > k2 || k2 > n) throw std::invalid_argument("need 1 <= k1 <= k2 <= n");
    auto make = [&](Vertex k) {
        ProcessConfig cfg;
        cfg.n = n;
        cfg.specials.resize(k);
        for (Vertex i = 0; i < k; ++i) cfg.specials[i] = i;
        cfg.seed = seed;
        cfg.stream_mode = mode;
        cfg.stop = stop;
        cfg.snapshot_steps = snapshot_steps;
        return cfg;
    };
    auto cfg1 = make(k1);
    auto cfg2 = make(k2);
    return {run_kprocess(cfg1), run_kprocess(cfg2)};
}

}  // namespace kproc
