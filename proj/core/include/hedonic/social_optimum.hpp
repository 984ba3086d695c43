#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "hedonic/allocation.hpp"
#include "hedonic/characteristic_function.hpp"
#include "hedonic/partition.hpp"

namespace hedonic {

struct SocialReport {
    double optimum_value = 0.0;            // S_u*
    Partition optimum_partition;           // Pi*
    std::optional<double> achieved_value;  // S_u of the equilibrium partition
    std::optional<double> gap;             // optimum - achieved
};

/// Total utility sum_{S in Pi} u(S).
double social_value(const CharacteristicFunction& u, const Partition& pi);

/// Exact set-partitioning optimum by dynamic programming over subsets
/// (O(3^n) time, O(2^n) memory; n <= 20). Ties break toward the partition
/// whose sorted block list is lexicographically smallest.
std::pair<Partition, double> social_optimum(const CharacteristicFunction& u);

/// Runs the best-reply dynamics and reports the equilibrium's total utility
/// against the social optimum; achieved/gap stay empty when the run does not
/// converge.
SocialReport anarchy_gap(const CharacteristicFunction& u,
                         const AllocationRule& rule, std::uint64_t seed,
                         std::uint64_t max_rounds);

}  // namespace hedonic
