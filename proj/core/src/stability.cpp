#include "hedonic/stability.hpp"

namespace hedonic {

StabilityResult is_nash_stable(const AllocationRule& rule, const Partition& pi) {
    const int n = pi.player_count();
    for (int player = 1; player <= n; ++player) {
        const PlayerSet home = pi.block_of(player);
        const double staying = rule.value(player, home);
        auto improves = [&](PlayerSet target_block) -> std::optional<DeviationWitness> {
            const double moving = rule.value(player, target_block.with(player));
            if (moving > staying + kPreferenceEpsilon)
                return DeviationWitness{player, home, target_block, staying, moving};
            return std::nullopt;
        };
        for (const PlayerSet& block : pi.blocks()) {
            if (block.contains(player)) continue;
            if (auto w = improves(block)) return {false, w};
        }
        if (auto w = improves(PlayerSet{})) return {false, w};
    }
    return {true, std::nullopt};
}

std::vector<Partition> find_nash_stable(const AllocationRule& rule) {
    std::vector<Partition> stable;
    PartitionStream stream(rule.player_count());
    while (auto pi = stream.next())
        if (is_nash_stable(rule, *pi).stable) stable.push_back(std::move(*pi));
    return stable;
}

bool is_essential(const CharacteristicFunction& u) {
    return u.marginal(PlayerSet::full(u.player_count())) >= 0.0;
}

GrandCoalitionResult grand_coalition_stable(const CharacteristicFunction& u) {
    if (!is_essential(u)) return {false, {}};
    const int n = u.player_count();
    const double share = u.marginal(PlayerSet::full(n)) / n;
    GrandCoalitionResult out{true, {}};
    out.allocation.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        out.allocation.push_back(u.singleton_value(i) + share);
    return out;
}

}  // namespace hedonic
