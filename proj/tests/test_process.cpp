#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "kproc/milestones.hpp"
#include "kproc/process.hpp"
#include "kproc/stats.hpp"
#include "test_util.hpp"

using namespace kproc;
using kproc::test::first_k;

namespace {

ProcessConfig kprocess_config(Vertex n, Vertex k, std::uint64_t seed,
                              StopRule stop = StopRule::AtKComponents,
                              StreamMode mode = StreamMode::Lazy) {
    ProcessConfig cfg;
    cfg.n = n;
    cfg.specials = first_k(k);
    cfg.seed = seed;
    cfg.stop = stop;
    cfg.stream_mode = mode;
    return cfg;
}

std::vector<std::uint32_t> sizes_only(const ProcessReport& rep) {
    std::vector<std::uint32_t> s;
    for (const auto& [size, sp] : rep.final_sizes) s.push_back(size);
    return s;
}

}  // namespace

TEST(RunGnm, CompleteGraph) {
    auto rep = run_gnm(4, 6, 123);
    ASSERT_EQ(rep.final_sizes.size(), 1u);
    EXPECT_EQ(rep.final_sizes[0].first, 4u);
    EXPECT_EQ(rep.M, 6u);
    EXPECT_EQ(rep.collisions, 0u);
}

TEST(RunGnm, ZeroEdges) {
    auto rep = run_gnm(10, 0, 1);
    EXPECT_EQ(rep.final_sizes.size(), 10u);
    EXPECT_EQ(rep.M, 0u);
}

TEST(RunGnm, MOutOfRange) {
    EXPECT_THROW(run_gnm(4, 7, 1), std::invalid_argument);
}

TEST(RunKProcess, AllSpecialStopsImmediately) {
    auto rep = run_kprocess(kprocess_config(6, 6, 5));
    EXPECT_EQ(rep.M, 0u);
    EXPECT_EQ(rep.M_hat, 0u);
    EXPECT_TRUE(rep.M_hat_set);
    EXPECT_EQ(rep.final_sizes.size(), 6u);
    EXPECT_EQ(rep.collisions, pair_count(6));
}

TEST(RunKProcess, SingleSpecialConnects) {
    auto rep = run_kprocess(kprocess_config(4, 1, 9, StopRule::Exhaustive, StreamMode::FullShuffle));
    EXPECT_EQ(rep.M, 6u);
    EXPECT_EQ(rep.collisions, 0u);
    ASSERT_EQ(rep.final_sizes.size(), 1u);
    EXPECT_EQ(rep.final_sizes[0].first, 4u);
    EXPECT_TRUE(rep.M_hat_set);
    EXPECT_GE(rep.M_hat, 3u);  // needs at least n-1 merges
}

// The early stop plus analytic M must match the naive full-enumeration run
// field for field on the same stream.
TEST(RunKProcess, EarlyStopMatchesExhaustive) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        auto fast = run_kprocess(kprocess_config(12, 3, seed, StopRule::AtKComponents));
        auto slow = run_kprocess(kprocess_config(12, 3, seed, StopRule::Exhaustive));
        EXPECT_EQ(fast.final_sizes, slow.final_sizes);
        EXPECT_EQ(fast.M, slow.M);
        EXPECT_EQ(fast.M_hat, slow.M_hat);
        EXPECT_EQ(fast.collisions, slow.collisions);
    }
}

TEST(RunKProcess, StructuralFinalityAndBounds) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        Vertex n = 20, k = 4;
        auto rep = run_kprocess(kprocess_config(n, k, seed, StopRule::Exhaustive));
        ASSERT_EQ(rep.final_sizes.size(), k);
        std::uint64_t total = 0;
        for (const auto& [s, sp] : rep.final_sizes) {
            EXPECT_EQ(sp, 1u);
            total += s;
        }
        EXPECT_EQ(total, n);
        EXPECT_EQ(rep.M, analytic_edge_count(rep.final_sizes));
        EXPECT_LE(rep.M, choose2(n - k + 1));
        EXPECT_EQ(rep.M + rep.collisions, pair_count(n));
    }
}

// After the component count reaches k, no later pair changes the structure.
TEST(RunKProcess, StructureFrozenAfterMhat) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        auto cfg = kprocess_config(16, 3, seed, StopRule::Exhaustive);
        cfg.record_trace = true;
        auto rep = run_kprocess(cfg);
        ASSERT_TRUE(rep.M_hat_set);
        Partition replay(16, first_k(3));
        std::vector<std::pair<std::uint32_t, std::uint32_t>> at_mhat;
        for (std::uint64_t step = 1; step <= rep.trace.size(); ++step) {
            const auto& e = rep.trace[step - 1];
            replay.try_union_kprocess(e.u, e.v);
            if (step == rep.M_hat) at_mhat = replay.component_sizes();
            if (step > rep.M_hat) EXPECT_EQ(replay.component_sizes(), at_mhat);
        }
    }
}

TEST(RunCdf, PairwiseFamilyMatchesKProcess) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Vertex n = 10, k = 3;
        auto kcfg = kprocess_config(n, k, seed, StopRule::Exhaustive);
        auto krep = run_kprocess(kcfg);

        ProcessConfig ccfg;
        ccfg.n = n;
        ccfg.seed = seed;
        ccfg.stop = StopRule::Exhaustive;
        std::vector<std::vector<Vertex>> family;
        for (Vertex i = 0; i < k; ++i)
            for (Vertex j = i + 1; j < k; ++j) family.push_back({i, j});
        ccfg.family = family;
        auto crep = run_cdf(ccfg);

        EXPECT_EQ(sizes_only(krep), sizes_only(crep));
        EXPECT_EQ(krep.M, crep.M);
        EXPECT_EQ(krep.collisions, crep.collisions);
    }
}

TEST(RunCdf, EmptyFamilyConnectsEverything) {
    ProcessConfig cfg;
    cfg.n = 8;
    cfg.seed = 4;
    cfg.family = std::vector<std::vector<Vertex>>{};
    cfg.stop = StopRule::Exhaustive;
    auto rep = run_cdf(cfg);
    ASSERT_EQ(rep.final_sizes.size(), 1u);
    EXPECT_EQ(rep.M, pair_count(8));
    EXPECT_EQ(rep.collisions, 0u);
}

TEST(RunCdf, TripleForbiddenSetNeverContained) {
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        ProcessConfig cfg;
        cfg.n = 5;
        cfg.seed = seed;
        cfg.family = std::vector<std::vector<Vertex>>{{0, 1, 2}};
        cfg.stop = StopRule::Exhaustive;
        cfg.record_trace = true;
        auto rep = run_cdf(cfg);
        EXPECT_GE(rep.final_sizes.size(), 2u);
        Partition replay(5, {}, *cfg.family);
        for (const auto& e : rep.trace) {
            replay.try_union_cdf(e.u, e.v);
            bool contained = replay.find(0) == replay.find(1) && replay.find(1) == replay.find(2);
            EXPECT_FALSE(contained);
        }
    }
}

// With nested special sets on the same pair stream, the larger-k partition
// refines the smaller-k one at every step, so its largest component can never
// be bigger. At exhaustion every component holds a special vertex, so the
// dominance statement also holds in its special-component form there. The
// stopping times satisfy M_hat(k1) >= M_hat(k2); strictness is only typical,
// not guaranteed (both counts can hit their targets on the same step).
TEST(CoupledMonotonicity, LargestComponentDominance) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto [r1, r2] = run_coupled_monotonicity(200, 2, 8, seed, {50, 100, 150},
                                                 StopRule::Exhaustive, StreamMode::FullShuffle);
        ASSERT_EQ(r1.snapshots.size(), r2.snapshots.size());
        for (std::size_t i = 0; i < r1.snapshots.size(); ++i)
            EXPECT_GE(r1.snapshots[i].largest, r2.snapshots[i].largest);
        EXPECT_GE(r1.M_hat, r2.M_hat);
        // end state: every component is special, so L1 = Lhat1 on both sides
        EXPECT_EQ(r1.final_sizes.front().second >= 1, true);
        EXPECT_GE(r1.final_sizes.front().first, r2.final_sizes.front().first);
    }
}

TEST(CoupledMonotonicity, EqualKGivesIdenticalReports) {
    auto [r1, r2] = run_coupled_monotonicity(100, 5, 5, 77);
    EXPECT_EQ(r1.final_sizes, r2.final_sizes);
    EXPECT_EQ(r1.M, r2.M);
    EXPECT_EQ(r1.M_hat, r2.M_hat);
    EXPECT_EQ(r1.collisions, r2.collisions);
}

TEST(Events, DuplicateNameRejected) {
    ProcessConfig cfg = kprocess_config(10, 2, 1);
    register_event(cfg, largest_component_special_event());
    EXPECT_THROW(register_event(cfg, largest_component_special_event()), std::invalid_argument);
}

TEST(Events, ComponentCountReachesMatchesMhat) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto cfg = kprocess_config(30, 4, seed, StopRule::Exhaustive);
        register_event(cfg, component_count_reaches_event(4));
        auto rep = run_kprocess(cfg);
        ASSERT_TRUE(rep.events[0].fired);
        EXPECT_EQ(rep.events[0].step, rep.M_hat);
    }
}

// Replay check: the event fires exactly at the first step where some largest
// component is special.
TEST(Events, LargestComponentSpecialMatchesReplay) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto cfg = kprocess_config(100, 1, seed, StopRule::AtKComponents);
        cfg.record_trace = true;
        register_event(cfg, largest_component_special_event());
        auto rep = run_kprocess(cfg);
        ASSERT_TRUE(rep.events[0].fired);

        Partition replay(100, first_k(1));
        std::uint64_t expected_step = 0;
        for (std::uint64_t step = 1; step <= rep.trace.size(); ++step) {
            const auto& e = rep.trace[step - 1];
            replay.try_union_kprocess(e.u, e.v);
            auto sizes = replay.component_sizes();
            std::uint32_t max_size = sizes.front().first;
            bool special_is_largest = false;
            for (const auto& [s, sp] : sizes)
                if (s == max_size && sp > 0) special_is_largest = true;
            if (special_is_largest) {
                expected_step = step;
                break;
            }
        }
        ASSERT_GT(expected_step, 0u);
        EXPECT_EQ(rep.events[0].step, expected_step);
    }
}

// m2 falls in the window (m1, (n/2)(1 + lambda2 n^{-1/3})] in nearly all runs.
TEST(Events, M2WindowStatistical) {
    const std::uint64_t n = 10000, k = 10;
    auto ms = Milestones::compute(n, k, OmegaSpec{OmegaSpec::Kind::Log});
    double n13 = std::cbrt(static_cast<double>(n));
    auto upper = static_cast<std::uint64_t>(n / 2.0 * (1.0 + ms.lambda2 / n13));
    int in_window = 0;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        auto cfg = kprocess_config(static_cast<Vertex>(n), static_cast<Vertex>(k), seed);
        register_event(cfg, largest_component_special_event(ms.m1));
        auto rep = run_kprocess(cfg);
        if (rep.events[0].fired && rep.events[0].step > ms.m1 && rep.events[0].step <= upper)
            ++in_window;
    }
    EXPECT_GE(in_window, 45);
}

TEST(Snapshots, RecordedAtRequestedSteps) {
    auto cfg = kprocess_config(50, 2, 3, StopRule::Exhaustive);
    cfg.snapshot_steps = {10, 100, 500};
    auto rep = run_kprocess(cfg);
    ASSERT_EQ(rep.snapshots.size(), 3u);
    EXPECT_EQ(rep.snapshots[0].step, 10u);
    EXPECT_EQ(rep.snapshots[1].step, 100u);
    EXPECT_EQ(rep.snapshots[0].accepted + rep.snapshots[0].collisions, 10u);
    for (const auto& s : rep.snapshots) {
        EXPECT_GE(s.chi, 1.0);
        EXPECT_GE(s.largest, s.largest_special);
    }
}

TEST(Snapshots, MisorderedStepsRejected) {
    auto cfg = kprocess_config(10, 2, 1);
    cfg.snapshot_steps = {5, 5};
    EXPECT_THROW(run_kprocess(cfg), std::invalid_argument);
}

TEST(ConfigValidation, Errors) {
    ProcessConfig cfg;
    cfg.n = 10;
    cfg.stop = StopRule::AtKComponents;
    EXPECT_THROW(run_kprocess(cfg), std::invalid_argument);  // no specials
    cfg.specials = first_k(2);
    cfg.family = std::vector<std::vector<Vertex>>{{0, 1}};
    EXPECT_THROW(run_kprocess(cfg), std::invalid_argument);  // family on k-process
    ProcessConfig cdf;
    cdf.n = 10;
    cdf.family = std::vector<std::vector<Vertex>>{{0, 1}};
    cdf.stop = StopRule::AtKComponents;
    EXPECT_THROW(run_cdf(cdf), std::invalid_argument);  // no k-component rule for CDF
}
