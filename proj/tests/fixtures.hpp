#pragma once

#include <unordered_map>
#include <vector>

#include "hedonic/characteristic_function.hpp"
#include "hedonic/pair_values.hpp"
#include "hedonic/player_set.hpp"

namespace hedonic::testing {

inline std::uint32_t mask(std::initializer_list<int> members) {
    return PlayerSet(members).bits();
}

// Four-player game with no Nash-stable partition under symmetric relative
// gain; singleton values from the worked example that reuses it.
inline CharacteristicFunction four_player_game(
    MissingPolicy policy = MissingPolicy::strict) {
    const std::vector<double> singletons = {0.15, 1.68, 0.01, 1.78};
    const std::unordered_map<std::uint32_t, double> deltas = {
        {mask({1, 2}), 0.86},     {mask({1, 3}), 0.90},
        {mask({1, 4}), 0.87},     {mask({2, 3}), -1.22},
        {mask({2, 4}), -1.25},    {mask({3, 4}), -1.21},
        {mask({1, 2, 3}), 0.27},  {mask({1, 2, 4}), 0.24},
        {mask({1, 3, 4}), 0.28},  {mask({2, 3, 4}), -1.84},
        {mask({1, 2, 3, 4}), -0.35},
    };
    return CharacteristicFunction::from_marginals(4, singletons, deltas, policy);
}

// The pair values the worked example reports for the four-player game.
inline PairValues reported_pair_values() {
    return PairValues(4, {0.3725, 0.3724, 0.3723, -0.6100, -0.6250, -0.6050});
}

}  // namespace hedonic::testing
