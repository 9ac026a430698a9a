// Command-line harness: single runs, sweeps, phase estimation, greedy cuts,
// and (C,x,y)-process checks, with CSV/JSONL output carrying enough metadata
// to reproduce any run.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kproc/cxy.hpp"
#include "kproc/edge_stream.hpp"
#include "kproc/greedy_cut.hpp"
#include "kproc/io.hpp"
#include "kproc/milestones.hpp"
#include "kproc/parallel.hpp"
#include "kproc/process.hpp"
#include "kproc/stats.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

using json = nlohmann::json;
using namespace kproc;

json meta_json() {
    return {{"rng", std::string(SplitMix64::name())}, {"version", kVersion}};
}

json milestones_json(const Milestones& ms, const OmegaSpec& omega) {
    return {{"omega_kind", omega.to_string()}, {"omega", ms.omega},
            {"lambda1", ms.lambda1},          {"lambda2", ms.lambda2},
            {"lambda3", ms.lambda3},          {"m1", ms.m1},
            {"m3", ms.m3},                    {"lambda3_clamped", ms.lambda3_clamped}};
}

json report_json(const ProcessReport& rep) {
    json snaps = json::array();
    for (const auto& s : rep.snapshots)
        snaps.push_back({{"step", s.step},
                         {"num_components", s.num_components},
                         {"L1", s.largest},
                         {"Lhat1", s.largest_special},
                         {"special_total", s.special_total},
                         {"chi", s.chi},
                         {"accepted", s.accepted},
                         {"collisions", s.collisions}});
    json events = json::array();
    for (const auto& e : rep.events)
        events.push_back({{"name", e.name}, {"step", e.step}, {"fired", e.fired}});
    ComponentStats stats(rep.final_sizes, rep.n);
    json top_sizes = json::array();
    for (std::size_t i = 0; i < rep.final_sizes.size() && i < 10; ++i)
        top_sizes.push_back(rep.final_sizes[i].first);
    return {{"M", rep.M},
            {"M_hat", rep.M_hat},
            {"M_hat_set", rep.M_hat_set},
            {"collisions", rep.collisions},
            {"steps_consumed", rep.steps_consumed},
            {"num_components", rep.final_sizes.size()},
            {"L1", stats.L(1)},
            {"L2", stats.L(2)},
            {"Lhat1", stats.L_hat(1)},
            {"chi", stats.chi()},
            {"top_sizes", top_sizes},
            {"snapshots", snaps},
            {"events", events}};
}

StreamMode parse_stream(const std::string& s) {
    if (s == "lazy") return StreamMode::Lazy;
    if (s == "shuffle") return StreamMode::FullShuffle;
    throw CLI::ValidationError("--stream must be lazy or shuffle");
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open output file " + path);
    return file;
}

// --- run ------------------------------------------------------------------

struct RunArgs {
    std::uint64_t n = 1000;
    std::uint64_t k = 1;
    std::uint64_t seed = 0;
    std::string mode = "atk";
    std::uint64_t steps = 0;
    std::string stream = "lazy";
    std::string snapshots;
    std::string family_file;
    std::string omega = "loglog";
    std::string out;
};

int cmd_run(const RunArgs& a) {
    ProcessConfig cfg;
    cfg.n = static_cast<Vertex>(a.n);
    cfg.seed = a.seed;
    cfg.stream_mode = parse_stream(a.stream);
    OmegaSpec omega = OmegaSpec::parse(a.omega);
    Milestones ms{};
    bool have_ms = a.n >= 3 && a.k >= 1;
    if (have_ms) ms = Milestones::compute(a.n, a.k, omega);

    if (a.mode == "atk") cfg.stop = StopRule::AtKComponents;
    else if (a.mode == "exhaustive") cfg.stop = StopRule::Exhaustive;
    else if (a.mode == "step") {
        cfg.stop = StopRule::AtStep;
        cfg.stop_step = a.steps;
    } else throw CLI::ValidationError("--mode must be atk, exhaustive, or step");

    if (!a.snapshots.empty()) {
        std::istringstream ss(a.snapshots);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok == "m1") cfg.snapshot_steps.push_back(ms.m1);
            else if (tok == "m3") cfg.snapshot_steps.push_back(ms.m3);
            else cfg.snapshot_steps.push_back(std::stoull(tok));
        }
        std::sort(cfg.snapshot_steps.begin(), cfg.snapshot_steps.end());
        cfg.snapshot_steps.erase(
            std::unique(cfg.snapshot_steps.begin(), cfg.snapshot_steps.end()),
            cfg.snapshot_steps.end());
        while (!cfg.snapshot_steps.empty() && cfg.snapshot_steps.front() == 0)
            cfg.snapshot_steps.erase(cfg.snapshot_steps.begin());
    }

    ProcessReport rep;
    std::string kind;
    if (!a.family_file.empty()) {
        kind = "cdf";
        cfg.family = load_family_file(a.family_file);
        if (cfg.stop == StopRule::AtKComponents) cfg.stop = StopRule::Exhaustive;
        rep = run_cdf(cfg);
    } else if (a.k == 0) {
        kind = "gnm";
        rep = run_gnm(cfg.n, a.steps, a.seed, cfg.stream_mode);
    } else {
        kind = "kprocess";
        cfg.specials.resize(a.k);
        for (std::uint64_t i = 0; i < a.k; ++i) cfg.specials[i] = static_cast<Vertex>(i);
        register_event(cfg, largest_component_special_event(have_ms ? ms.m1 : 0));
        rep = run_kprocess(cfg);
    }

    json rec = {{"cmd", "run"},   {"kind", kind},       {"n", a.n},
                {"k", a.k},       {"seed", a.seed},     {"mode", a.mode},
                {"stream", a.stream}, {"meta", meta_json()},
                {"report", report_json(rep)}};
    if (have_ms) rec["milestones"] = milestones_json(ms, omega);
    std::ofstream file;
    open_out(file, a.out) << rec.dump() << "\n";
    return 0;
}

// --- sweep ----------------------------------------------------------------

struct SweepArgs {
    std::string n_list = "100000";
    std::string k_list = "10";
    std::uint64_t reps = 1;
    std::uint64_t seed = 0;
    std::string omega = "loglog";
    std::string out;
    std::string summary;
    std::size_t workers = 0;
};

// k tokens: plain integer or "a*n^b"
std::uint64_t resolve_k(const std::string& tok, std::uint64_t n) {
    auto star = tok.find("*n^");
    if (star == std::string::npos) return std::stoull(tok);
    double alpha = std::stod(tok.substr(0, star));
    double beta = std::stod(tok.substr(star + 3));
    double k = alpha * std::pow(static_cast<double>(n), beta);
    auto rounded = static_cast<std::uint64_t>(std::llround(k));
    return std::clamp<std::uint64_t>(rounded, 1, n);
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(tok);
    return out;
}

struct SweepRow {
    std::uint64_t n, k, seed, M, M_hat, collisions, L1;
    double L1_over_n, M_frac;
    std::uint64_t Lhat2_sum;
    double chi_at_m3;
    std::uint64_t m2_step;
    std::int64_t runtime_ms;
};

SweepRow sweep_one(std::uint64_t n, std::uint64_t k, std::uint64_t seed, const OmegaSpec& omega) {
    auto t0 = std::chrono::steady_clock::now();
    Milestones ms = Milestones::compute(n, k, omega);

    ProcessConfig cfg;
    cfg.n = static_cast<Vertex>(n);
    cfg.specials.resize(k);
    for (std::uint64_t i = 0; i < k; ++i) cfg.specials[i] = static_cast<Vertex>(i);
    cfg.seed = seed;
    cfg.stop = StopRule::AtKComponents;
    if (ms.m3 >= 1) cfg.snapshot_steps.push_back(ms.m3);

    // capture Lhat2_sum at the moment the m2 event fires
    std::uint64_t m2_lhat2 = 0;
    bool m2_captured = false;
    EventSpec m2_event{kEventLargestComponentSpecial,
                       [&](std::uint64_t, const Partition& p) {
                           if (p.largest_special() == p.largest()) {
                               m2_lhat2 = p.special_total() - p.largest_special();
                               m2_captured = true;
                               return true;
                           }
                           return false;
                       },
                       ms.m1};
    register_event(cfg, std::move(m2_event));

    ProcessReport rep = run_kprocess(cfg);

    SweepRow row{};
    row.n = n;
    row.k = k;
    row.seed = seed;
    row.M = rep.M;
    row.M_hat = rep.M_hat;
    row.collisions = rep.collisions;
    ComponentStats stats(rep.final_sizes, n);
    row.L1 = stats.L(1);
    row.L1_over_n = static_cast<double>(row.L1) / static_cast<double>(n);
    row.M_frac = static_cast<double>(rep.M) / static_cast<double>(pair_count(n));
    row.chi_at_m3 = rep.snapshots.empty() ? 1.0 : rep.snapshots.front().chi;
    if (rep.events.front().fired) {
        row.m2_step = rep.events.front().step;
        row.Lhat2_sum = m2_lhat2;
    } else {
        // process froze before m1; the frozen largest component is special,
        // so the event condition holds from the first armed step onward
        row.m2_step = std::max(rep.M_hat, ms.m1 + 1);
        row.Lhat2_sum = static_cast<std::uint64_t>(n) - row.L1;
        (void)m2_captured;
    }
    auto t1 = std::chrono::steady_clock::now();
    row.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    return row;
}

int cmd_sweep(const SweepArgs& a) {
    if (a.reps < 1) throw CLI::ValidationError("--reps must be >= 1");
    OmegaSpec omega = OmegaSpec::parse(a.omega);
    struct Point {
        std::uint64_t n, k, seed;
    };
    std::vector<Point> points;
    for (const auto& ntok : split_commas(a.n_list)) {
        std::uint64_t n = std::stoull(ntok);
        for (const auto& ktok : split_commas(a.k_list)) {
            std::uint64_t k = resolve_k(ktok, n);
            // seeds repeat across (n,k) points: same-n points share pair
            // streams, which couples the runs
            for (std::uint64_t r = 0; r < a.reps; ++r) points.push_back({n, k, a.seed + r});
        }
    }
    std::sort(points.begin(), points.end(), [](const Point& x, const Point& y) {
        return std::tie(x.n, x.k, x.seed) < std::tie(y.n, y.k, y.seed);
    });
    points.erase(std::unique(points.begin(), points.end(),
                             [](const Point& x, const Point& y) {
                                 return x.n == y.n && x.k == y.k && x.seed == y.seed;
                             }),
                 points.end());

    std::vector<SweepRow> rows(points.size());
    parallel_for(points.size(), [&](std::size_t i) {
        rows[i] = sweep_one(points[i].n, points[i].k, points[i].seed, omega);
    }, a.workers);

    std::ofstream file;
    auto& out = open_out(file, a.out);
    out << "n,k,seed,M,M_hat,collisions,L1,L1_over_n,Lhat2_sum,chi_at_m3,m2_step,runtime_ms\n";
    for (const auto& r : rows) {
        out << r.n << ',' << r.k << ',' << r.seed << ',' << r.M << ',' << r.M_hat << ','
            << r.collisions << ',' << r.L1 << ',' << r.L1_over_n << ',' << r.Lhat2_sum << ','
            << r.chi_at_m3 << ',' << r.m2_step << ',' << r.runtime_ms << "\n";
    }

    if (!a.summary.empty()) {
        std::map<std::pair<std::uint64_t, std::uint64_t>, std::vector<const SweepRow*>> groups;
        for (const auto& r : rows) groups[{r.n, r.k}].push_back(&r);
        std::ofstream sum(a.summary);
        if (!sum) throw std::runtime_error("cannot open summary file " + a.summary);
        sum << "n,k,runs,L1_over_n_mean,L1_over_n_stderr,M_frac_mean,M_hat_mean,"
               "chi_at_m3_mean,m2_step_mean\n";
        for (const auto& [key, rs] : groups) {
            auto pick = [&](auto f) {
                std::vector<double> v;
                for (const auto* r : rs) v.push_back(f(*r));
                return aggregate(std::move(v));
            };
            auto l1 = pick([](const SweepRow& r) { return r.L1_over_n; });
            auto mf = pick([](const SweepRow& r) { return r.M_frac; });
            auto mh = pick([](const SweepRow& r) { return static_cast<double>(r.M_hat); });
            auto chi = pick([](const SweepRow& r) { return r.chi_at_m3; });
            auto m2 = pick([](const SweepRow& r) { return static_cast<double>(r.m2_step); });
            sum << key.first << ',' << key.second << ',' << rs.size() << ',' << l1.mean << ','
                << l1.stderr_ << ',' << mf.mean << ',' << mh.mean << ',' << chi.mean << ','
                << m2.mean << "\n";
        }
    }
    return 0;
}

// --- phase-estimate -------------------------------------------------------

struct PhaseArgs {
    std::uint64_t n = 100000;
    std::string k_grid = "4,46,500,5000";
    std::uint64_t reps = 10;
    std::uint64_t seed = 0;
    std::string out;
    std::size_t workers = 0;
};

int cmd_phase_estimate(const PhaseArgs& a) {
    std::vector<std::uint64_t> grid;
    for (const auto& tok : split_commas(a.k_grid)) grid.push_back(resolve_k(tok, a.n));
    std::sort(grid.begin(), grid.end());
    if (grid.size() < 2) throw CLI::ValidationError("--k-grid needs at least two points");

    std::vector<std::pair<std::uint64_t, std::uint64_t>> tasks;  // (k, seed)
    for (auto k : grid)
        for (std::uint64_t r = 0; r < a.reps; ++r) tasks.emplace_back(k, a.seed + r);
    std::vector<double> l1n(tasks.size());
    parallel_for(tasks.size(), [&](std::size_t i) {
        ProcessConfig cfg;
        cfg.n = static_cast<Vertex>(a.n);
        cfg.specials.resize(tasks[i].first);
        for (std::uint64_t j = 0; j < tasks[i].first; ++j) cfg.specials[j] = static_cast<Vertex>(j);
        cfg.seed = tasks[i].second;
        cfg.stop = StopRule::AtKComponents;
        auto rep = run_kprocess(cfg);
        l1n[i] = static_cast<double>(rep.final_sizes.front().first) / static_cast<double>(a.n);
    }, a.workers);

    std::vector<double> means(grid.size(), 0);
    for (std::size_t i = 0; i < tasks.size(); ++i) means[i / a.reps] += l1n[i];
    for (auto& m : means) m /= static_cast<double>(a.reps);

    json rec = {{"cmd", "phase-estimate"}, {"n", a.n},      {"reps", a.reps},
                {"seed", a.seed},          {"meta", meta_json()}};
    json pts = json::array();
    for (std::size_t i = 0; i < grid.size(); ++i)
        pts.push_back({{"k", grid[i]}, {"mean_L1_over_n", means[i]}});
    rec["grid"] = pts;

    double n13 = std::cbrt(static_cast<double>(a.n));
    bool found = false;
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        if (means[i] >= 0.5 && means[i + 1] < 0.5) {
            double x0 = std::log(static_cast<double>(grid[i]));
            double x1 = std::log(static_cast<double>(grid[i + 1]));
            double xs = x0 + (0.5 - means[i]) * (x1 - x0) / (means[i + 1] - means[i]);
            double k_star = std::exp(xs);
            rec["result"] = {{"k_star", k_star}, {"k_star_over_n13", k_star / n13}};
            found = true;
            break;
        }
    }
    if (!found) rec["result"] = {{"no_crossing", true}};
    std::ofstream file;
    open_out(file, a.out) << rec.dump() << "\n";
    return 0;
}

// --- greedy ---------------------------------------------------------------

struct GreedyArgs {
    std::string graph_file;
    std::uint64_t example_n = 0;
    double example_eps = 0.5;
    std::string terminals;
    std::uint64_t seed = 0;
    bool oracle = false;
    std::string out;
};

int cmd_greedy(const GreedyArgs& a) {
    WeightedGraph g;
    std::vector<Vertex> terminals;
    if (a.example_n >= 2) {
        std::tie(g, terminals) = build_example_graph(static_cast<Vertex>(a.example_n), a.example_eps);
    } else if (!a.graph_file.empty()) {
        g = load_graph_file(a.graph_file);
        terminals = parse_vertex_list(a.terminals);
    } else {
        throw CLI::ValidationError("need --graph or --example-n");
    }

    CutResult cut = edge_first_greedy(g, terminals, a.seed);
    json rec = {{"cmd", "greedy"},
                {"n", g.n},
                {"edges", g.edges.size()},
                {"terminals", terminals.size()},
                {"seed", a.seed},
                {"meta", meta_json()},
                {"total_weight", total_weight(g)},
                {"retained_weight", cut.retained_weight},
                {"removed_weight", cut.removed_weight},
                {"removed_edges", cut.removed.size()}};
    if (a.oracle) {
        OracleResult opt = brute_force_multiway_cut(g, terminals);
        rec["oracle_removed_weight"] = opt.removed_weight;
        rec["ratio"] = opt.removed_weight > 0 ? cut.removed_weight / opt.removed_weight : 1.0;
    }
    std::ofstream file;
    open_out(file, a.out) << rec.dump() << "\n";
    return 0;
}

// --- cxy ------------------------------------------------------------------

struct CxyArgs {
    std::string c_spec;
    std::string c_file;
    std::uint64_t x = 1;
    std::uint64_t y = 1;
    std::uint64_t seed = 0;
    std::uint64_t runs = 100000;
    std::string check = "none";
    double w = 2.0;
    std::string out;
};

int cmd_cxy(const CxyArgs& a) {
    CxyConfig cfg;
    if (!a.c_file.empty()) cfg.C = load_increments_file(a.c_file);
    else if (!a.c_spec.empty()) cfg.C = parse_increments(a.c_spec);
    else throw CLI::ValidationError("need --C or --C-file");
    cfg.x = a.x;
    cfg.y = a.y;
    cfg.seed = a.seed;

    json rec = {{"cmd", "cxy"},  {"x", a.x},       {"y", a.y},
                {"r", cfg.C.size()}, {"sum_c", sum_increments(cfg.C)},
                {"c_max", max_increment(cfg.C)},   {"seed", a.seed},
                {"meta", meta_json()}};

    if (a.check == "none") {
        auto tr = run_cxy(cfg);
        rec["trajectory"] = {{"t_r", tr.t.back()},
                             {"X_final", tr.X.back()},
                             {"Y_final", tr.Y.back()},
                             {"X_ratio", static_cast<double>(tr.X.back()) / static_cast<double>(tr.t.back())},
                             {"martingale_ratio", static_cast<double>(a.x) / static_cast<double>(a.x + a.y)}};
    } else if (a.check == "key") {
        auto chk = check_key_lemma(cfg, a.w, a.runs);
        rec["check"] = {{"name", "key"},
                        {"w", a.w},
                        {"runs", chk.runs},
                        {"empirical", chk.empirical},
                        {"stderr", chk.stderr_},
                        {"bound", chk.bound}};
    } else if (a.check == "cxy") {
        auto chk = check_cxy_lemma(cfg, a.runs);
        rec["check"] = {{"name", "cxy"},
                        {"runs", chk.runs},
                        {"bound_prob", chk.bound_prob},
                        {"ratio_mean", chk.ratio.mean},
                        {"ratio_median", chk.ratio.median},
                        {"ratio_p99", chk.ratio.p99}};
    } else {
        throw CLI::ValidationError("--check must be none, key, or cxy");
    }
    std::ofstream file;
    open_out(file, a.out) << rec.dump() << "\n";
    return 0;
}

// --- selftest -------------------------------------------------------------

int cmd_selftest() {
    int failures = 0;
    auto check = [&](bool ok, const std::string& name) {
        std::cout << (ok ? "[pass] " : "[FAIL] ") << name << "\n";
        if (!ok) ++failures;
    };

    {
        Partition p(5, {0, 1});
        check(p.num_components() == 5 && p.special_count_of(0) == 1 && p.special_count_of(2) == 0,
              "partition init specials");
        check(p.try_union_kprocess(0, 1) == MergeOutcome::Collision && p.num_components() == 5,
              "special singletons collide");
        check(p.try_union_kprocess(2, 3) == MergeOutcome::Merged &&
                  p.try_union_kprocess(2, 3) == MergeOutcome::SameComponent,
              "repeat merge is SameComponent");
    }
    {
        EdgeStream s(3, 42);
        std::set<std::pair<Vertex, Vertex>> seen;
        for (int i = 0; i < 3; ++i) seen.insert(s.next_pair());
        bool exhausted = false;
        try {
            s.next_pair();
        } catch (const StreamExhausted&) {
            exhausted = true;
        }
        check(seen.size() == 3 && exhausted, "edge stream emits all pairs then exhausts");
    }
    {
        auto rep = run_gnm(4, 6, 7, StreamMode::FullShuffle);
        check(rep.final_sizes.size() == 1 && rep.final_sizes[0].first == 4, "G(4,6) is connected");
        ProcessConfig cfg;
        cfg.n = 1000;
        cfg.specials.resize(1000);
        for (Vertex i = 0; i < 1000; ++i) cfg.specials[i] = i;
        cfg.seed = 1;
        auto all_special = run_kprocess(cfg);
        check(all_special.M == 0 && all_special.M_hat == 0, "k=n stops immediately");
    }
    {
        auto [g, terminals] = build_example_graph(3, 0.5);
        auto cut = edge_first_greedy(g, terminals, 1);
        check(std::abs(cut.retained_weight - 13.5) < 1e-9 &&
                  std::abs(total_weight(g) - 40.5) < 1e-9,
              "adversarial example weights");
    }
    {
        CxyConfig cfg;
        cfg.C = {};
        cfg.x = 3;
        cfg.y = 4;
        auto tr = run_cxy(cfg);
        check(tr.X.back() == 3 && tr.Y.back() == 4 && tr.t.back() == 7, "empty C trajectory");
        check(std::abs(chernoff_bounds({1, 1}, 0.5, 0).upper_tail - 1.0) < 1e-12,
              "chernoff t=0 bound is 1");
    }
    {
        ComponentStats st({{2, 0}, {1, 1}, {1, 0}}, 4);
        check(std::abs(st.chi() - 1.5) < 1e-12 && st.L(2) == 1 && st.L(5) == 0,
              "stats susceptibility and order statistics");
    }
    std::cout << (failures == 0 ? "selftest OK\n" : "selftest FAILED\n");
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Constrained random graph process harness"};
    app.require_subcommand(1);

    RunArgs run_args;
    auto* run = app.add_subcommand("run", "Execute one process run, emit a JSONL record");
    run->add_option("--n", run_args.n, "vertex count")->required();
    run->add_option("--k", run_args.k, "special vertex count (0 = unconstrained G(n,m))");
    run->add_option("--seed", run_args.seed, "seed");
    run->add_option("--mode", run_args.mode, "atk | exhaustive | step");
    run->add_option("--steps", run_args.steps, "pair count for --mode step / --k 0");
    run->add_option("--stream", run_args.stream, "lazy | shuffle");
    run->add_option("--snapshots", run_args.snapshots, "comma list of steps; m1/m3 allowed");
    run->add_option("--family", run_args.family_file, "forbidden family file (CDF-process)");
    run->add_option("--omega", run_args.omega, "loglog | log | const:<c>");
    run->add_option("--out", run_args.out, "output path (default stdout)");

    SweepArgs sweep_args;
    auto* sweep = app.add_subcommand("sweep", "Run an (n,k) sweep, emit CSV");
    sweep->add_option("--n", sweep_args.n_list, "comma list of n")->required();
    sweep->add_option("--k", sweep_args.k_list, "comma list of k; tokens may be a*n^b")->required();
    sweep->add_option("--reps", sweep_args.reps, "repetitions per point");
    sweep->add_option("--seed", sweep_args.seed, "base seed; run r uses seed+r");
    sweep->add_option("--omega", sweep_args.omega, "loglog | log | const:<c>");
    sweep->add_option("--out", sweep_args.out, "raw CSV path (default stdout)");
    sweep->add_option("--summary", sweep_args.summary, "aggregate CSV path");
    sweep->add_option("--workers", sweep_args.workers, "worker threads (default FUSIONPROC_WORKERS)");

    PhaseArgs phase_args;
    auto* phase = app.add_subcommand("phase-estimate", "Estimate k* where mean L1/n crosses 1/2");
    phase->add_option("--n", phase_args.n, "vertex count")->required();
    phase->add_option("--k-grid", phase_args.k_grid, "comma list of k; tokens may be a*n^b");
    phase->add_option("--reps", phase_args.reps, "repetitions per grid point");
    phase->add_option("--seed", phase_args.seed, "base seed");
    phase->add_option("--out", phase_args.out, "output path (default stdout)");
    phase->add_option("--workers", phase_args.workers, "worker threads");

    GreedyArgs greedy_args;
    auto* greedy = app.add_subcommand("greedy", "Edge-first greedy multiway cut");
    greedy->add_option("--graph", greedy_args.graph_file, "graph file: 'n m' then 'u v w' lines");
    greedy->add_option("--example-n", greedy_args.example_n, "build the K_{n^2} adversarial example");
    greedy->add_option("--example-eps", greedy_args.example_eps, "epsilon for the example");
    greedy->add_option("--terminals", greedy_args.terminals, "comma list of terminal vertices");
    greedy->add_option("--seed", greedy_args.seed, "tie-break seed");
    greedy->add_flag("--oracle", greedy_args.oracle, "also run the exact brute-force oracle");
    greedy->add_option("--out", greedy_args.out, "output path (default stdout)");

    CxyArgs cxy_args;
    auto* cxy = app.add_subcommand("cxy", "(C,x,y)-process runs and bound checks");
    cxy->add_option("--C", cxy_args.c_spec, "inline increments, e.g. 5x1000");
    cxy->add_option("--C-file", cxy_args.c_file, "increments file, one integer per line");
    cxy->add_option("--x", cxy_args.x, "initial X")->required();
    cxy->add_option("--y", cxy_args.y, "initial Y")->required();
    cxy->add_option("--seed", cxy_args.seed, "seed");
    cxy->add_option("--runs", cxy_args.runs, "Monte Carlo runs for checks");
    cxy->add_option("--check", cxy_args.check, "none | key | cxy");
    cxy->add_option("--w", cxy_args.w, "deviation parameter for --check key");
    cxy->add_option("--out", cxy_args.out, "output path (default stdout)");

    auto* selftest = app.add_subcommand("selftest", "Run built-in deterministic checks");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run) return cmd_run(run_args);
        if (*sweep) return cmd_sweep(sweep_args);
        if (*phase) return cmd_phase_estimate(phase_args);
        if (*greedy) return cmd_greedy(greedy_args);
        if (*cxy) return cmd_cxy(cxy_args);
        if (*selftest) return cmd_selftest();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
