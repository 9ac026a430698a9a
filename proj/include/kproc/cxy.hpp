#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "kproc/rng.hpp"
#include "kproc/stats.hpp"

namespace kproc {

struct CxyConfig {
    std::vector<std::uint64_t> C;  // increments c_1..c_r
    std::uint64_t x = 1;
    std::uint64_t y = 1;
    std::uint64_t seed = 0;
};

inline void validate_cxy(const CxyConfig& cfg) {
    if (cfg.x < 1 || cfg.y < 1) throw std::invalid_argument("x and y must be positive");
    for (auto c : cfg.C)
        if (c < 1) throw std::invalid_argument("all increments must be positive");
}

inline std::uint64_t max_increment(const std::vector<std::uint64_t>& C) {
    std::uint64_t c = 0;
    for (auto v : C) c = std::max(c, v);
    return c;
}

inline std::uint64_t sum_increments(const std::vector<std::uint64_t>& C) {
    std::uint64_t s = 0;
    for (auto v : C) s += v;
    return s;
}

struct CxyTrajectory {
    std::vector<std::uint64_t> t;  // t_0..t_r
    std::vector<std::uint64_t> X;  // X(t_0)..X(t_r)
    std::vector<std::uint64_t> Y;
    std::vector<double> p;  // p_1..p_r
};

// Rich-get-richer urn: at step q the increment c_q goes to X with probability
// X/(X+Y). One uniform variate per step, so equal seeds couple runs draw-for-draw.
inline CxyTrajectory run_cxy(const CxyConfig& cfg) {
    validate_cxy(cfg);
    SplitMix64 rng(cfg.seed);
    CxyTrajectory tr;
    tr.t.reserve(cfg.C.size() + 1);
    tr.X.reserve(cfg.C.size() + 1);
    tr.Y.reserve(cfg.C.size() + 1);
    tr.p.reserve(cfg.C.size());
    std::uint64_t X = cfg.x, Y = cfg.y;
    tr.t.push_back(X + Y);
    tr.X.push_back(X);
    tr.Y.push_back(Y);
    for (auto c : cfg.C) {
        double pq = static_cast<double>(X) / static_cast<double>(X + Y);
        tr.p.push_back(pq);
        if (rng.next_double() < pq) X += c;
        else Y += c;
        tr.t.push_back(X + Y);
        tr.X.push_back(X);
        tr.Y.push_back(Y);
    }
    return tr;
}

// Final X(t_r) only; the fast path for Monte Carlo loops.
inline std::uint64_t run_cxy_final(const CxyConfig& cfg, SplitMix64& rng) {
    std::uint64_t X = cfg.x, Y = cfg.y;
    for (auto c : cfg.C) {
        double pq = static_cast<double>(X) / static_cast<double>(X + Y);
        if (rng.next_double() < pq) X += c;
        else Y += c;
    }
    return X;
}

struct ChernoffBounds {
    double upper_tail = 1;  // P(max_j (S_j - mu_j) >= t)
    double lower_tail = 1;  // P(max_j (mu_j - S_j) >= t)
    double two_sided = 2;   // P(max_j |S_j - mu_j| >= eps*mu), eps = t/mu
    double mu = 0;
    std::uint64_t c = 0;
};

inline ChernoffBounds chernoff_bounds(const std::vector<std::uint64_t>& C, double p, double t) {
    if (C.empty()) throw std::invalid_argument("C must be nonempty");
    if (p <= 0 || p >= 1) throw std::invalid_argument("p must be in (0,1)");
    if (t < 0) throw std::invalid_argument("t must be nonnegative");
    ChernoffBounds b;
    b.c = max_increment(C);
    b.mu = p * static_cast<double>(sum_increments(C));
    double cd = static_cast<double>(b.c);
    if (t > 0) {
        b.upper_tail = std::exp(-t * t / (2.0 * cd * (b.mu + t / 3.0)));
        b.lower_tail = std::exp(-t * t / (2.0 * cd * b.mu));
        b.two_sided = 2.0 * std::exp(-(t / b.mu) * (t / b.mu) * b.mu / (3.0 * cd));
    }
    return b;
}

struct KeyLemmaCheck {
    double empirical = 0;   // estimate of P(X(t_r) > x t_r/(x+y) + x/w)
    double bound = 0;       // exp(-x/(12 c w^2))
    double stderr_ = 0;
    std::uint64_t runs = 0;
};

inline KeyLemmaCheck check_key_lemma(const CxyConfig& cfg, double w, std::uint64_t runs) {
    validate_cxy(cfg);
    if (w < 1) throw std::invalid_argument("w must be at least 1");
    if (runs < 1) throw std::invalid_argument("need at least one run");
    std::uint64_t sum_c = sum_increments(cfg.C);
    if (2 * sum_c >= cfg.x + cfg.y)
        throw std::invalid_argument("hypothesis violated: sum of increments must be below (x+y)/2");
    std::uint64_t c = max_increment(cfg.C);
    std::uint64_t tr = cfg.x + cfg.y + sum_c;
    double ratio = static_cast<double>(cfg.x) / static_cast<double>(cfg.x + cfg.y);
    double threshold = ratio * static_cast<double>(tr) + static_cast<double>(cfg.x) / w;

    KeyLemmaCheck out;
    out.runs = runs;
    out.bound = std::exp(-static_cast<double>(cfg.x) / (12.0 * static_cast<double>(c) * w * w));
    std::uint64_t hits = 0;
    for (std::uint64_t i = 0; i < runs; ++i) {
        SplitMix64 rng(cfg.seed + i);
        if (static_cast<double>(run_cxy_final(cfg, rng)) > threshold) ++hits;
    }
    out.empirical = static_cast<double>(hits) / static_cast<double>(runs);
    out.stderr_ = std::sqrt(out.empirical * (1.0 - out.empirical) / static_cast<double>(runs));
    return out;
}

struct CxyLemmaCheck {
    RunAggregate ratio;      // distribution of X(t_r) * y / (x * t_r)
    double bound_prob = 0;   // exp(-x/(20c)) failure probability
    std::uint64_t runs = 0;
};

inline CxyLemmaCheck check_cxy_lemma(const CxyConfig& cfg, std::uint64_t runs) {
    validate_cxy(cfg);
    if (runs < 1) throw std::invalid_argument("need at least one run");
    std::uint64_t c = max_increment(cfg.C);
    if (c * 100 > cfg.y || cfg.x * 100 > cfg.y)
        throw std::invalid_argument("scale separation violated: need c <= y/100 and x <= y/100");
    std::uint64_t tr = cfg.x + cfg.y + sum_increments(cfg.C);
    CxyLemmaCheck out;
    out.runs = runs;
    out.bound_prob = std::exp(-static_cast<double>(cfg.x) / (20.0 * static_cast<double>(c)));
    std::vector<double> ratios;
    ratios.reserve(runs);
    for (std::uint64_t i = 0; i < runs; ++i) {
        SplitMix64 rng(cfg.seed + i);
        double xr = static_cast<double>(run_cxy_final(cfg, rng));
        ratios.push_back(xr * static_cast<double>(cfg.y) /
                         (static_cast<double>(cfg.x) * static_cast<double>(tr)));
    }
    out.ratio = aggregate(std::move(ratios));
    return out;
}

}  // namespace kproc
