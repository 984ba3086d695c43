#include "hedonic/social_optimum.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "hedonic/dynamics.hpp"
#include "hedonic/errors.hpp"

namespace hedonic {

namespace {

constexpr int kSocialOptimumMaxPlayers = 20;

// Member-list lexicographic order on coalitions; the tie-break order for
// reconstructed blocks.
bool member_lex_less(PlayerSet a, PlayerSet b) {
    const auto ma = a.members(), mb = b.members();
    return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(),
                                        mb.end());
}

}  // namespace

double social_value(const CharacteristicFunction& u, const Partition& pi) {
    double total = 0.0;
    for (const PlayerSet& block : pi.blocks()) total += u.value(block);
    return total;
}

std::pair<Partition, double> social_optimum(const CharacteristicFunction& u) {
    const int n = u.player_count();
    if (n > kSocialOptimumMaxPlayers)
        throw LimitExceededError("social optimum capped at n = " +
                                 std::to_string(kSocialOptimumMaxPlayers));

    const std::uint32_t universe = PlayerSet::full(n).bits();
    std::vector<double> utility(universe + 1, 0.0);
    for (std::uint32_t mask = 1; mask <= universe; ++mask)
        utility[mask] = u.value(PlayerSet(mask));

    // best[mask]: optimal total over partitions of mask. The first block of
    // any decomposition is forced to contain mask's lowest player, which
    // visits every submask pair exactly once.
    std::vector<double> best(universe + 1, 0.0);
    for (std::uint32_t mask = 1; mask <= universe; ++mask) {
        const std::uint32_t low = mask & (0u - mask);
        const std::uint32_t rest = mask ^ low;
        double best_value = utility[low] + best[rest];
        for (std::uint32_t sub = rest; sub != 0; sub = (sub - 1) & rest) {
            const double candidate = utility[sub | low] + best[mask ^ (sub | low)];
            if (candidate > best_value) best_value = candidate;
        }
        best[mask] = best_value;
    }

    // Reconstruct, choosing at each level the member-lex smallest first block
    // among those attaining the optimum.
    std::vector<PlayerSet> blocks;
    std::uint32_t remaining = universe;
    while (remaining != 0) {
        const std::uint32_t low = remaining & (0u - remaining);
        const std::uint32_t rest = remaining ^ low;
        PlayerSet chosen(low);
        bool found = utility[low] + best[rest] == best[remaining];
        for (std::uint32_t sub = rest; sub != 0; sub = (sub - 1) & rest) {
            const std::uint32_t block = sub | low;
            if (utility[block] + best[remaining ^ block] != best[remaining])
                continue;
            if (!found || member_lex_less(PlayerSet(block), chosen)) {
                chosen = PlayerSet(block);
                found = true;
            }
        }
        blocks.push_back(chosen);
        remaining ^= chosen.bits();
    }
    return {Partition(n, std::move(blocks)), best[universe]};
}

SocialReport anarchy_gap(const CharacteristicFunction& u,
                         const AllocationRule& rule, std::uint64_t seed,
                         std::uint64_t max_rounds) {
    auto [pi_star, optimum] = social_optimum(u);
    SocialReport report{optimum, std::move(pi_star), std::nullopt, std::nullopt};
    const DynamicsTrace trace = run_dynamics(rule, seed, max_rounds);
    if (trace.outcome.converged) {
        const double achieved = social_value(u, *trace.outcome.partition);
        report.achieved_value = achieved;
        report.gap = optimum - achieved;
    }
    return report;
}

}  // namespace hedonic
