#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "hedonic/player_set.hpp"

namespace hedonic {

/// What to do when u(S) is requested for a coalition the game never listed.
enum class MissingPolicy {
    strict,            // raise UnknownCoalitionError
    additive_default,  // fall back to u(S) = sum of member singletons
};

/// Characteristic-form utility u(S) over non-empty coalitions of {1..n}.
/// All n singleton values must be present; the marginal utility
/// delta(S) = u(S) - sum_{i in S} u(i) is always derived, never stored.
/// Immutable after construction.
class CharacteristicFunction {
public:
    CharacteristicFunction(int n, std::unordered_map<std::uint32_t, double> values,
                           MissingPolicy policy = MissingPolicy::strict);

    /// Builds u from singleton values and marginal utilities:
    /// u(S) = sum_{i in S} u(i) + delta(S) for every listed delta key.
    static CharacteristicFunction from_marginals(
        int n, const std::vector<double>& singleton_values,
        const std::unordered_map<std::uint32_t, double>& deltas,
        MissingPolicy policy = MissingPolicy::strict);

    int player_count() const { return n_; }
    MissingPolicy policy() const { return policy_; }

    double value(PlayerSet s) const;  // u(S)
    double marginal(PlayerSet s) const { return value(s) - singleton_sum(s); }
    double singleton_value(int player) const;
    double singleton_sum(PlayerSet s) const;
    bool has_value(PlayerSet s) const;

    const std::unordered_map<std::uint32_t, double>& values() const {
        return values_;
    }

private:
    int n_;
    MissingPolicy policy_;
    std::unordered_map<std::uint32_t, double> values_;
    std::vector<double> singletons_;  // singletons_[i-1] = u(i)
};

/// delta(S) = u(S) - sum of member singletons; zero for any singleton.
inline double marginal_utility(const CharacteristicFunction& u, PlayerSet s) {
    return u.marginal(s);
}

}  // namespace hedonic
