// Acceptance suite: one criterion per function, one PASS/FAIL line each.
// Exits nonzero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "fixtures.hpp"
#include "hedonic/dynamics.hpp"
#include "hedonic/nash_core.hpp"
#include "hedonic/rng.hpp"
#include "hedonic/social_optimum.hpp"
#include "hedonic/stability.hpp"
#include "oracles.hpp"
#include "repro.hpp"

using namespace hedonic;
using testing::four_player_game;

namespace {

struct Criterion {
    int number;
    std::string name;
    std::function<bool(std::string&)> body;
    double time_limit_ms;  // 0 = untimed
};

bool approx(double a, double b, double tol) { return std::abs(a - b) <= tol; }

AllocationRule srg(const CharacteristicFunction& u) {
    return AllocationRule{SymmetricRelativeGain{u}};
}

// 1. The four-player fixture admits no Nash-stable partition under symmetric
//    relative gain; exact scan of all 15 partitions.
bool counterexample_emptiness(std::string& detail) {
    const auto stable = find_nash_stable(srg(four_player_game()));
    detail = std::to_string(stable.size()) + " stable partitions";
    return stable.empty();
}

// 2. The derived positive-gain preference lists match the published four.
bool preference_lists(std::string& detail) {
    const auto u = four_player_game();
    const std::vector<std::vector<PlayerSet>> expected = {
        {PlayerSet{1, 3}, PlayerSet{1, 4}, PlayerSet{1, 2}, PlayerSet{1, 3, 4},
         PlayerSet{1, 2, 3}, PlayerSet{1, 2, 4}, PlayerSet{1}},
        {PlayerSet{1, 2}, PlayerSet{1, 2, 3}, PlayerSet{1, 2, 4}, PlayerSet{2}},
        {PlayerSet{1, 3}, PlayerSet{1, 3, 4}, PlayerSet{1, 2, 3}, PlayerSet{3}},
        {PlayerSet{1, 4}, PlayerSet{1, 3, 4}, PlayerSet{1, 2, 4}, PlayerSet{4}},
    };
    for (int player = 1; player <= 4; ++player) {
        const auto derived = cli::positive_gain_preference_list(u, player);
        if (derived != expected[static_cast<std::size_t>(player - 1)]) {
            detail = "player " + std::to_string(player) + " list differs";
            return false;
        }
    }
    detail = "all four ranked lists match exactly";
    return true;
}

// 3. 1000 random games each for n = 2 and n = 3 all admit a stable partition
//    under symmetric relative gain.
bool small_game_stability_suites(std::string& detail) {
    Xorshift64 rng(0x1ea5);
    for (int n = 2; n <= 3; ++n)
        for (int trial = 0; trial < 1000; ++trial) {
            const auto u = testing::random_game(n, rng);
            if (find_nash_stable(srg(u)).empty()) {
                detail = "empty stable set at n = " + std::to_string(n) +
                         ", trial " + std::to_string(trial);
                return false;
            }
        }
    detail = "2000 games, zero empty stable sets";
    return true;
}

// 4. Relaxed-efficiency LP on the worked example: objective within 1e-3 of
//    -0.7225 (cross-checked against active-set enumeration), rows within 1e-7.
bool relaxed_lp(std::string& detail) {
    const auto u = four_player_game();
    const auto fit = relaxed_efficiency_fit(u);
    if (!approx(fit.objective, -0.7225, 1e-3)) {
        detail = "objective " + std::to_string(fit.objective);
        return false;
    }
    const auto sys = build_pair_system(u);
    LinearProgram lp;
    lp.objective = sys.c;
    for (std::size_t r = 0; r < sys.b.size(); ++r) {
        LpConstraint row;
        row.coeffs.resize(sys.c.size());
        for (std::size_t k = 0; k < sys.c.size(); ++k) row.coeffs[k] = sys.a(r, k);
        row.rel = Relation::le;
        row.rhs = sys.b[r];
        lp.constraints.push_back(std::move(row));
    }
    const auto oracle = testing::vertex_enumeration_optimum(lp);
    if (!oracle || !approx(fit.objective, *oracle, 1e-6)) {
        detail = "disagrees with the active-set oracle";
        return false;
    }
    const auto av = sys.a.apply(fit.v.raw());
    for (std::size_t r = 0; r < sys.b.size(); ++r)
        if (av[r] > sys.b[r] + 1e-7) {
            detail = "row " + std::to_string(r) + " violated";
            return false;
        }
    detail = "objective -0.7225 within 1e-3, matches oracle, rows feasible";
    return true;
}

// 5. Social optimum of the worked example, exact values.
bool social_optimum_values(std::string& detail) {
    const auto u = four_player_game();
    const auto [pi, value] = social_optimum(u);
    const Partition expected(4, {PlayerSet{1, 3}, PlayerSet{2}, PlayerSet{4}});
    if (!approx(value, 4.52, 1e-9) || !(pi == expected)) {
        detail = "optimum " + pi.to_string() + " at " + std::to_string(value);
        return false;
    }
    const Partition published(4, {PlayerSet{1, 4}, PlayerSet{2}, PlayerSet{3}});
    if (!approx(social_value(u, published), 4.49, 1e-9)) {
        detail = "published partition value not 4.49";
        return false;
    }
    detail = "S_u* = 4.52 at {1,3|2|4}; S_u({1,4|2|3}) = 4.49";
    return true;
}

// 6. Dynamics soundness over 200 random games with a non-empty stable set:
//    every converged partition must verify (zero soundness failures), and
//    convergence within 20 seeds x 500 rounds is required whenever the
//    exhaustive move-graph oracle confirms a best-reply path to stability
//    exists from the all-singleton start. Games the oracle proves trapped
//    (no such path, so no scheduler can ever converge) are counted and
//    reported; they lie outside the reachability hypothesis that guarantees convergence.
bool dynamics_soundness(std::string& detail) {
    Xorshift64 rng(0xd15c0);
    int games = 0, attempts = 0, trapped = 0;
    while (games < 200) {
        ++attempts;
        const int n = 2 + static_cast<int>(rng.next_below(5));
        const auto u = testing::random_game(n, rng);
        const auto rule = srg(u);
        if (find_nash_stable(rule).empty()) continue;
        ++games;
        bool reached = false;
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            const auto trace = run_dynamics(rule, seed, 500);
            if (!trace.outcome.converged) continue;
            reached = true;
            if (!is_nash_stable(rule, *trace.outcome.partition).stable) {
                detail = "soundness failure: converged partition fails check";
                return false;
            }
        }
        if (!reached) {
            if (testing::stable_profile_reachable(rule)) {
                detail = "reachable stable profile missed by all 20 seeds";
                return false;
            }
            ++trapped;
        }
    }
    detail = "200 games (" + std::to_string(attempts) + " sampled); " +
             std::to_string(trapped) +
             " proved best-reply-trapped by the move-graph oracle; all "
             "converged partitions verified; zero soundness failures";
    return true;
}

// 7. The fixture game never converges: all 20 seeds exhaust 1000 rounds.
bool dynamics_non_convergence(std::string& detail) {
    const auto rule = srg(four_player_game());
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const auto trace = run_dynamics(rule, seed, 1000);
        if (trace.outcome.converged) {
            detail = "seed " + std::to_string(seed) + " converged unexpectedly";
            return false;
        }
    }
    detail = "20 seeds, all reached the 1000-round limit";
    return true;
}

// 8. Partition stream counts equal the Bell numbers for n = 1..10.
bool bell_numbers(std::string& detail) {
    const std::uint64_t bell[] = {1,    2,    5,    15,    52,
                                  203,  877,  4140, 21147, 115975};
    for (int n = 1; n <= 10; ++n) {
        PartitionStream stream(n);
        std::uint64_t count = 0;
        while (stream.next()) ++count;
        if (count != bell[n - 1]) {
            detail = "n = " + std::to_string(n) + " counted " +
                     std::to_string(count);
            return false;
        }
    }
    detail = "counts 1..10 match";
    return true;
}

// 9. Solver oracles: 500 tiny LPs vs vertex enumeration (1e-6), 100 pair
//    systems vs the QR pseudo-inverse (1e-9), 100 planted separable games
//    recovered exactly.
bool solver_oracles(std::string& detail) {
    Xorshift64 rng(0x5eed);
    for (int trial = 0; trial < 500; ++trial) {
        const int nvars = 1 + static_cast<int>(rng.next_below(3));
        LinearProgram lp;
        lp.objective.resize(static_cast<std::size_t>(nvars));
        for (double& c : lp.objective) c = rng.next_uniform(-1.0, 1.0);
        for (int j = 0; j < nvars; ++j) {
            Vector up(static_cast<std::size_t>(nvars), 0.0), lo = up;
            up[static_cast<std::size_t>(j)] = 1.0;
            lo[static_cast<std::size_t>(j)] = -1.0;
            lp.constraints.push_back(LpConstraint{std::move(up), Relation::le, 10.0});
            lp.constraints.push_back(LpConstraint{std::move(lo), Relation::le, 10.0});
        }
        Vector interior(static_cast<std::size_t>(nvars));
        for (double& x : interior) x = rng.next_uniform(-5.0, 5.0);
        const int extra = static_cast<int>(rng.next_below(3));
        for (int k = 0; k < extra; ++k) {
            Vector coeffs(static_cast<std::size_t>(nvars));
            for (double& c : coeffs) c = rng.next_uniform(-1.0, 1.0);
            const double rhs = dot(coeffs, interior) + rng.next_uniform(0.0, 2.0);
            lp.constraints.push_back(
                LpConstraint{std::move(coeffs), Relation::le, rhs});
        }
        const auto sol = solve_lp(lp);
        const auto oracle = testing::vertex_enumeration_optimum(lp);
        if (sol.status != LpStatus::optimal || !oracle ||
            !approx(sol.objective, *oracle, 1e-6)) {
            detail = "lp trial " + std::to_string(trial) + " diverged";
            return false;
        }
    }
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + static_cast<int>(rng.next_below(5));
        const auto u = testing::random_game(n, rng);
        const auto fit = lls_fit(u);
        const auto sys = build_pair_system(u);
        const auto oracle = testing::qr_least_squares(sys.a, sys.b);
        for (std::size_t k = 0; k < oracle.size(); ++k)
            if (!approx(fit.v.raw()[k], oracle[k], 1e-9)) {
                detail = "lls trial " + std::to_string(trial) + " diverged";
                return false;
            }
    }
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + static_cast<int>(rng.next_below(5));
        std::vector<double> planted(
            static_cast<std::size_t>(PairValues::pair_count(n)));
        for (double& x : planted) x = rng.next_uniform(-1.0, 1.0);
        const PairValues v0(n, planted);
        std::vector<double> singletons(static_cast<std::size_t>(n));
        for (double& s : singletons) s = rng.next_uniform(0.0, 2.0);
        std::unordered_map<std::uint32_t, double> deltas;
        const std::uint32_t universe = PlayerSet::full(n).bits();
        for (std::uint32_t m = 1; m <= universe; ++m)
            if (PlayerSet(m).size() >= 2)
                deltas[m] = 2.0 * v0.pair_sum(PlayerSet(m));
        const auto u =
            CharacteristicFunction::from_marginals(n, singletons, deltas);
        const auto fit = exact_separable_fit(u);
        if (!fit) {
            detail = "planted system reported infeasible";
            return false;
        }
        for (std::size_t k = 0; k < planted.size(); ++k)
            if (!approx(fit->raw()[k], planted[k], 1e-9)) {
                detail = "planted recovery trial " + std::to_string(trial) +
                         " diverged";
                return false;
            }
    }
    detail = "500 LPs, 100 LLS systems, 100 planted recoveries, zero failures";
    return true;
}

// 10. Two-player Nash-stable core: feasible across the surplus range with the
//     sign-matched partition and efficient allocation.
bool two_player_ncore(std::string& detail) {
    Xorshift64 rng(0xcafe);
    for (int trial = 0; trial < 100; ++trial) {
        const double delta = rng.next_uniform(-1.0, 1.0);
        const double u1 = rng.next_uniform(0.0, 2.0);
        const double u2 = rng.next_uniform(0.0, 2.0);
        const auto u = CharacteristicFunction::from_marginals(
            2, {u1, u2}, {{PlayerSet{1, 2}.bits(), delta}});
        const auto result = ncore_feasible(u);
        if (!result) {
            detail = "infeasible at delta = " + std::to_string(delta);
            return false;
        }
        const bool merged = result->partition == Partition::grand(2);
        if (delta > 1e-12 && !merged) {
            detail = "positive surplus but split partition";
            return false;
        }
        if (delta < -1e-12 && merged) {
            detail = "negative surplus but merged partition";
            return false;
        }
        const auto& phi = result->allocation;
        const double eff_single1 = std::abs(phi.value(1, PlayerSet{1}) - u1);
        const double eff_single2 = std::abs(phi.value(2, PlayerSet{2}) - u2);
        const double eff_pair = std::abs(phi.value(1, PlayerSet{1, 2}) +
                                         phi.value(2, PlayerSet{1, 2}) -
                                         u.value(PlayerSet{1, 2}));
        if (eff_single1 > 1e-7 || eff_single2 > 1e-7 || eff_pair > 1e-7) {
            detail = "efficiency residual beyond 1e-7";
            return false;
        }
    }
    detail = "100 samples, partitions match the surplus sign, efficient";
    return true;
}

// 11. The published claim about {(1,4),(2),(3)} under the reported pair
//     values deviates from the oracle: `check` reports UNSTABLE with the
//     player-1-to-{2} witness, the repro suite marks it expected-deviation,
//     and some Nash-stable partition does exist under those values.
bool documented_deviation(std::string& detail) {
    const auto fixture = cli::paper_fixture();
    const AllocationRule rule{
        AdditivePairwise{fixture.game, fixture.reported_v}};
    const Partition claimed(4, {PlayerSet{1, 4}, PlayerSet{2}, PlayerSet{3}});
    const auto result = is_nash_stable(rule, claimed);
    if (result.stable || !result.witness || result.witness->player != 1 ||
        !(result.witness->to_block == PlayerSet{2})) {
        detail = "expected the player-1-to-{2} deviation";
        return false;
    }
    if (find_nash_stable(rule).empty()) {
        detail = "no stable partition under the reported values";
        return false;
    }

    // Same verdict through the CLI surface.
    const auto game_path =
        std::filesystem::temp_directory_path() / "hedonic_acceptance.game";
    {
        std::ofstream game(game_path);
        game << "{ n: 4\n  u: { 1: 0.15 2: 1.68 3: 0.01 4: 1.78 }\n"
                "  delta: { 1,2: 0.86 1,3: 0.90 1,4: 0.87 2,3: -1.22\n"
                "    2,4: -1.25 3,4: -1.21 1,2,3: 0.27 1,2,4: 0.24\n"
                "    1,3,4: 0.28 2,3,4: -1.84 1,2,3,4: -0.35 }\n"
                "  v: { 1,2: 0.3725 1,3: 0.3724 1,4: 0.3723 2,3: -0.61\n"
                "    2,4: -0.625 3,4: -0.605 } }\n";
    }
    std::ostringstream out, err;
    const int code = cli::run_cli(
        {"check", game_path.string(), "--rule", "pairs", "{1,4|2|3}"}, out, err);
    std::filesystem::remove(game_path);
    if (code != 1 || out.str().find("UNSTABLE") != 0 ||
        out.str().find("player 1 moves (1,4) -> (2)") == std::string::npos) {
        detail = "CLI check did not report the documented deviation";
        return false;
    }

    const auto items = cli::run_repro_suite(fixture);
    for (const auto& item : items)
        if (item.name == "claimed-partition-under-reported-v") {
            if (item.status != cli::ReproStatus::expected_deviation) {
                detail = "repro item is not expected-deviation";
                return false;
            }
            detail = "deviation reproduced and documented; stable set non-empty";
            return true;
        }
    detail = "repro item missing";
    return false;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "counterexample-emptiness", counterexample_emptiness, 1.0},
        {2, "counterexample-preference-lists", preference_lists, 0.0},
        {3, "small-game-stability-suites", small_game_stability_suites, 5000.0},
        {4, "relaxed-efficiency-lp", relaxed_lp, 10.0},
        {5, "social-optimum", social_optimum_values, 0.0},
        {6, "dynamics-soundness", dynamics_soundness, 30000.0},
        {7, "dynamics-non-convergence", dynamics_non_convergence, 5000.0},
        {8, "bell-numbers", bell_numbers, 2000.0},
        {9, "solver-oracles", solver_oracles, 0.0},
        {10, "two-player-ncore", two_player_ncore, 0.0},
        {11, "documented-deviation", documented_deviation, 0.0},
    };

    int failures = 0;
    for (const auto& criterion : criteria) {
        std::string detail;
        const auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = criterion.body(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double ms =
            std::chrono::duration<double, std::milli>(
                std::chrono::steady_clock::now() - start)
                .count();
        if (ok && criterion.time_limit_ms > 0 && ms > criterion.time_limit_ms) {
            ok = false;
            detail += " [exceeded " + std::to_string(criterion.time_limit_ms) +
                      " ms limit]";
        }
        if (!ok) ++failures;
        std::printf("%-4s %2d  %-34s %9.2f ms  %s\n", ok ? "PASS" : "FAIL",
                    criterion.number, criterion.name.c_str(), ms,
                    detail.c_str());
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
