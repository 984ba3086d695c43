#pragma once

#include <optional>
#include <vector>

#include "hedonic/allocation.hpp"
#include "hedonic/characteristic_function.hpp"
#include "hedonic/partition.hpp"

namespace hedonic {

/// A profitable unilateral move: the player leaves `from` and joins
/// `to_block` (empty set = opens a fresh singleton), strictly improving
/// their payoff beyond the preference tolerance.
struct DeviationWitness {
    int player = 0;
    PlayerSet from;
    PlayerSet to_block;
    double gain_before = 0.0;
    double gain_after = 0.0;
};

struct StabilityResult {
    bool stable = false;
    std::optional<DeviationWitness> witness;
};

/// Nash stability of a partition: no player strictly gains by moving to
/// another existing block or to a fresh singleton. When unstable, the
/// witness is the first deviation in (ascending player, ascending
/// target-block minimum, empty set last) scan order, so results are
/// reproducible across runs and platforms.
StabilityResult is_nash_stable(const AllocationRule& rule, const Partition& pi);

/// All Nash-stable partitions in enumeration order (possibly none).
/// Materialized: callers need the count, and stable partitions are rare.
std::vector<Partition> find_nash_stable(const AllocationRule& rule);

/// u(N) >= sum of singleton values, i.e. delta(N) >= 0.
bool is_essential(const CharacteristicFunction& u);

struct GrandCoalitionResult {
    bool feasible = false;
    std::vector<double> allocation;  // phi_i^N when feasible
};

/// The grand coalition admits a stable efficient allocation iff the game is
/// essential; the witness splits the surplus equally: phi_i^N = u(i) + delta(N)/n.
GrandCoalitionResult grand_coalition_stable(const CharacteristicFunction& u);

}  // namespace hedonic
