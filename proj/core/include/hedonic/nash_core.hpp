#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "hedonic/allocation.hpp"
#include "hedonic/characteristic_function.hpp"
#include "hedonic/lp.hpp"
#include "hedonic/pair_values.hpp"
#include "hedonic/partition.hpp"

namespace hedonic {

/// The pair-value constraint system of a game: one row per coalition S with
/// |S| >= 2 (ascending bitmask order), one 0/1 column per pair in row-major
/// order; a(S,k) = 1 iff pair k lies inside S, b(S) = delta(S)/2, c = ones.
struct PairSystem {
    int n = 0;
    Matrix a;
    Vector b;
    Vector c;
    std::vector<PlayerSet> row_coalitions;
};

/// Requires a complete game (or the additive-default policy) with 2 <= n <= 16.
PairSystem build_pair_system(const CharacteristicFunction& u);

/// Pair values solving A v = b when the equality system is consistent: the
/// existence question for additively separable symmetric preferences.
/// Infeasibility comes back as nullopt; solver breakdown throws.
std::optional<PairValues> exact_separable_fit(const CharacteristicFunction& u);

/// Free-signed dual weights covering every pair index with total weight one
/// while sum_S w(S) delta(S) <= delta(N).
struct BalancednessCertificate {
    std::unordered_map<std::uint32_t, double> weights;  // keyed by coalition mask
    double slack = 0.0;  // delta(N) - sum_S w(S) delta(S)
};

std::optional<BalancednessCertificate> balancedness_check(
    const CharacteristicFunction& u);

struct RelaxedFit {
    PairValues v;
    double objective = 0.0;  // sum of the fitted pair values
};

/// Maximizes sum_k v_k subject to A v <= b. Always solvable: each pair column
/// is capped by its own pair row, so the LP is feasible and bounded along c.
RelaxedFit relaxed_efficiency_fit(const CharacteristicFunction& u);

struct LlsFit {
    PairValues v;
    double residual = 0.0;  // ||b - Av||_2
};

/// Least-squares fit of A v ~ b; the pair rows embed an identity over the
/// columns, so the normal equations are nonsingular.
LlsFit lls_fit(const CharacteristicFunction& u);

struct NcoreResult {
    Partition partition;
    TableRule allocation;  // full kappa-entry table
};

/// Scans partitions in enumeration order and tests, per partition, the LP
/// over all kappa allocation entries with full efficiency plus Nash-stability
/// rows; returns the first feasible pair. Empty result means the Nash-stable
/// core under full efficiency is empty. Requires n <= 8.
std::optional<NcoreResult> ncore_feasible(const CharacteristicFunction& u);

}  // namespace hedonic
