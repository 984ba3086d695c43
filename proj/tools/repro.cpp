#include "repro.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hedonic/allocation.hpp"
#include "hedonic/dynamics.hpp"
#include "hedonic/nash_core.hpp"
#include "hedonic/social_optimum.hpp"
#include "hedonic/stability.hpp"

namespace hedonic::cli {

ReproFixture paper_fixture() {
    const std::vector<double> singletons = {0.15, 1.68, 0.01, 1.78};
    const std::unordered_map<std::uint32_t, double> deltas = {
        {PlayerSet{1, 2}.bits(), 0.86},     {PlayerSet{1, 3}.bits(), 0.90},
        {PlayerSet{1, 4}.bits(), 0.87},     {PlayerSet{2, 3}.bits(), -1.22},
        {PlayerSet{2, 4}.bits(), -1.25},    {PlayerSet{3, 4}.bits(), -1.21},
        {PlayerSet{1, 2, 3}.bits(), 0.27},  {PlayerSet{1, 2, 4}.bits(), 0.24},
        {PlayerSet{1, 3, 4}.bits(), 0.28},  {PlayerSet{2, 3, 4}.bits(), -1.84},
        {PlayerSet{1, 2, 3, 4}.bits(), -0.35},
    };
    return ReproFixture{
        CharacteristicFunction::from_marginals(4, singletons, deltas),
        PairValues(4, {0.3725, 0.3724, 0.3723, -0.6100, -0.6250, -0.6050}),
    };
}

std::vector<PlayerSet> positive_gain_preference_list(
    const CharacteristicFunction& u, int player) {
    const int n = u.player_count();
    std::vector<PlayerSet> ranked;
    const std::uint32_t universe = PlayerSet::full(n).bits();
    for (std::uint32_t mask = 1; mask <= universe; ++mask) {
        const PlayerSet s(mask);
        if (!s.contains(player) || s.size() < 2) continue;
        if (u.marginal(s) / s.size() > kPreferenceEpsilon) ranked.push_back(s);
    }
    std::stable_sort(ranked.begin(), ranked.end(),
                     [&](PlayerSet a, PlayerSet b) {
                         const double ga = u.marginal(a) / a.size();
                         const double gb = u.marginal(b) / b.size();
                         if (ga != gb) return ga > gb;
                         return a.bits() < b.bits();
                     });
    ranked.push_back(PlayerSet::singleton(player));
    return ranked;
}

namespace {

std::string render_list(const std::vector<PlayerSet>& list) {
    std::ostringstream out;
    for (std::size_t i = 0; i < list.size(); ++i) {
        if (i) out << " > ";
        out << '(' << list[i].to_string() << ')';
    }
    return out.str();
}

ReproItem check_counterexample_emptiness(const ReproFixture& fx) {
    const AllocationRule rule{SymmetricRelativeGain{fx.game}};
    const auto stable = find_nash_stable(rule);
    if (stable.empty())
        return {"counterexample-emptiness", ReproStatus::pass,
                "no Nash-stable partition among the 15"};
    return {"counterexample-emptiness", ReproStatus::fail,
            "found " + std::to_string(stable.size()) +
                " stable partitions, first " + stable.front().to_string()};
}

ReproItem check_preference_lists(const ReproFixture& fx) {
    const std::vector<std::vector<PlayerSet>> expected = {
        {PlayerSet{1, 3}, PlayerSet{1, 4}, PlayerSet{1, 2}, PlayerSet{1, 3, 4},
         PlayerSet{1, 2, 3}, PlayerSet{1, 2, 4}, PlayerSet{1}},
        {PlayerSet{1, 2}, PlayerSet{1, 2, 3}, PlayerSet{1, 2, 4}, PlayerSet{2}},
        {PlayerSet{1, 3}, PlayerSet{1, 3, 4}, PlayerSet{1, 2, 3}, PlayerSet{3}},
        {PlayerSet{1, 4}, PlayerSet{1, 3, 4}, PlayerSet{1, 2, 4}, PlayerSet{4}},
    };
    for (int player = 1; player <= 4; ++player) {
        const auto derived = positive_gain_preference_list(fx.game, player);
        if (derived != expected[static_cast<std::size_t>(player - 1)])
            return {"counterexample-preference-lists", ReproStatus::fail,
                    "player " + std::to_string(player) + " derived " +
                        render_list(derived)};
    }
    return {"counterexample-preference-lists", ReproStatus::pass,
            "all four ranked lists match"};
}

ReproItem check_relaxed_objective(const ReproFixture& fx) {
    const auto fit = relaxed_efficiency_fit(fx.game);
    const double target = -0.7225;
    if (std::abs(fit.objective - target) > 1e-3)
        return {"relaxed-lp-objective", ReproStatus::fail,
                "objective " + std::to_string(fit.objective)};
    const auto sys = build_pair_system(fx.game);
    const auto av = sys.a.apply(fit.v.raw());
    for (std::size_t r = 0; r < sys.b.size(); ++r)
        if (av[r] > sys.b[r] + 1e-7)
            return {"relaxed-lp-objective", ReproStatus::fail,
                    "constraint violation on row " + std::to_string(r)};
    return {"relaxed-lp-objective", ReproStatus::pass,
            "objective within 1e-3 of -0.7225, all rows feasible"};
}

ReproItem check_social_optimum(const ReproFixture& fx) {
    const auto [pi, value] = social_optimum(fx.game);
    const Partition expected(4, {PlayerSet{1, 3}, PlayerSet{2}, PlayerSet{4}});
    const Partition published(4, {PlayerSet{1, 4}, PlayerSet{2}, PlayerSet{3}});
    if (std::abs(value - 4.52) > 1e-9 || !(pi == expected))
        return {"social-optimum", ReproStatus::fail,
                "got " + pi.to_string() + " at " + std::to_string(value)};
    if (std::abs(social_value(fx.game, published) - 4.49) > 1e-9)
        return {"social-optimum", ReproStatus::fail,
                "published partition value is not 4.49"};
    return {"social-optimum", ReproStatus::pass,
            "optimum 4.52 at {1,3|2|4}; published partition scores 4.49"};
}

ReproItem check_dynamics_convergence(const ReproFixture& fx) {
    const auto fit = relaxed_efficiency_fit(fx.game);
    const AllocationRule rule{AdditivePairwise{fx.game, fit.v}};
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const auto trace = run_dynamics(rule, seed, 500);
        if (!trace.outcome.converged) continue;
        if (!is_nash_stable(rule, *trace.outcome.partition).stable)
            return {"dynamics-convergence", ReproStatus::fail,
                    "converged partition fails the stability check"};
        return {"dynamics-convergence", ReproStatus::pass,
                "seed " + std::to_string(seed) + " converged to " +
                    trace.outcome.partition->to_string() + " in " +
                    std::to_string(trace.outcome.rounds) + " rounds"};
    }
    return {"dynamics-convergence", ReproStatus::fail,
            "no convergence across 20 seeds"};
}

ReproItem check_claimed_partition(const ReproFixture& fx) {
    // The published run claims {(1,4),(2),(3)} is Nash-stable under the
    // published pair values, yet those values let player 1 gain by moving
    // to {2}. The oracle's verdict is reported as an expected deviation,
    // together with the fact that stable partitions do exist there.
    const AllocationRule rule{AdditivePairwise{fx.game, fx.reported_v}};
    const Partition claimed(4, {PlayerSet{1, 4}, PlayerSet{2}, PlayerSet{3}});
    const auto result = is_nash_stable(rule, claimed);
    if (result.stable)
        return {"claimed-partition-under-reported-v", ReproStatus::fail,
                "claimed partition unexpectedly checks as stable"};
    const auto& w = *result.witness;
    if (w.player != 1 || !(w.to_block == PlayerSet{2}))
        return {"claimed-partition-under-reported-v", ReproStatus::fail,
                "unexpected witness: player " + std::to_string(w.player) +
                    " -> {" + w.to_block.to_string() + "}"};
    const auto stable = find_nash_stable(rule);
    if (stable.empty())
        return {"claimed-partition-under-reported-v", ReproStatus::fail,
                "no stable partition exists under the reported values"};
    return {"claimed-partition-under-reported-v", ReproStatus::expected_deviation,
            "claimed {1,4|2|3} is unstable (player 1 -> {2}); " +
                std::to_string(stable.size()) + " stable partition(s) exist, " +
                "e.g. " + stable.front().to_string()};
}

}  // namespace

std::vector<ReproItem> run_repro_suite(const ReproFixture& fixture) {
    return {
        check_counterexample_emptiness(fixture),
        check_preference_lists(fixture),
        check_relaxed_objective(fixture),
        check_social_optimum(fixture),
        check_dynamics_convergence(fixture),
        check_claimed_partition(fixture),
    };
}

}  // namespace hedonic::cli
