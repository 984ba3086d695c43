#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <variant>

#include "hedonic/characteristic_function.hpp"
#include "hedonic/pair_values.hpp"
#include "hedonic/player_set.hpp"

namespace hedonic {

/// Absolute tolerance for all preference comparisons. Strict improvement in
/// the dynamics must not oscillate on rounding noise, so two payoffs within
/// epsilon are treated as indifferent.
inline constexpr double kPreferenceEpsilon = 1e-9;

enum class Preference { strictly_preferred, indifferent, strictly_dispreferred };

/// Explicit allocation table phi_i^S. A complete table carries
/// kappa = n * 2^(n-1) entries (one per player/containing-coalition pair);
/// partial tables are rejected at construction.
class TableRule {
public:
    TableRule(int n, std::unordered_map<std::uint64_t, double> entries);

    static std::uint64_t key(int player, PlayerSet s) {
        return (static_cast<std::uint64_t>(player) << 32) | s.bits();
    }

    int player_count() const { return n_; }
    double value(int player, PlayerSet s) const;
    const std::unordered_map<std::uint64_t, double>& entries() const {
        return entries_;
    }

private:
    int n_;
    std::unordered_map<std::uint64_t, double> entries_;
};

/// phi_i^S = u(i) + delta(S)/|S|: the coalition's marginal utility divided
/// equally among its members.
struct SymmetricRelativeGain {
    CharacteristicFunction u;
};

/// phi_i^S = u(i) + sum_{j in S} v(i,j): additively separable symmetric
/// preferences.
struct AdditivePairwise {
    CharacteristicFunction u;
    PairValues v;
};

/// One of three concrete allocation methods; assigns each player a payoff in
/// every coalition containing them and thereby induces the preference
/// profile. Immutable; value() is a pure function.
class AllocationRule {
public:
    enum class Kind { table, symmetric_relative_gain, additive_pairwise };

    AllocationRule(TableRule rule);
    AllocationRule(SymmetricRelativeGain rule);
    AllocationRule(AdditivePairwise rule);

    Kind kind() const;
    /// "table", "srg", or "pairs"; used by trace headers and reports.
    std::string kind_name() const;
    int player_count() const;

    /// phi_i^S. Requires player in S.
    double value(int player, PlayerSet s) const;

    /// Three-way comparison of value(player, s) vs value(player, t) under
    /// kPreferenceEpsilon. Requires player in both coalitions.
    Preference prefers(int player, PlayerSet s, PlayerSet t) const;

private:
    std::variant<TableRule, SymmetricRelativeGain, AdditivePairwise> impl_;
};

}  // namespace hedonic
