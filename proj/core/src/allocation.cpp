#include "hedonic/allocation.hpp"

#include <cmath>
#include <stdexcept>

#include "hedonic/errors.hpp"

namespace hedonic {

TableRule::TableRule(int n, std::unordered_map<std::uint64_t, double> entries)
    : n_(n), entries_(std::move(entries)) {
    if (n < 1 || n > PlayerSet::kMaxPlayers)
        throw std::invalid_argument("player count outside 1..32");
    const std::uint64_t expected =
        static_cast<std::uint64_t>(n) << (n - 1);  // n * 2^(n-1)
    if (entries_.size() != expected)
        throw std::invalid_argument(
            "allocation table has " + std::to_string(entries_.size()) +
            " entries; a complete table for n = " + std::to_string(n) + " needs " +
            std::to_string(expected));
    for (const auto& [key, v] : entries_) {
        const int player = static_cast<int>(key >> 32);
        const PlayerSet s(static_cast<std::uint32_t>(key));
        if (player < 1 || player > n || !s.contains(player) ||
            !PlayerSet::full(n).contains_all(s))
            throw std::invalid_argument("allocation table key (player " +
                                        std::to_string(player) + ", {" +
                                        s.to_string() + "}) is invalid");
        if (!std::isfinite(v))
            throw std::invalid_argument("non-finite allocation table entry");
    }
}

double TableRule::value(int player, PlayerSet s) const {
    auto it = entries_.find(key(player, s));
    if (it == entries_.end())
        throw UnknownCoalitionError("allocation table has no entry for player " +
                                    std::to_string(player) + " in {" +
                                    s.to_string() + "}");
    return it->second;
}

AllocationRule::AllocationRule(TableRule rule) : impl_(std::move(rule)) {}
AllocationRule::AllocationRule(SymmetricRelativeGain rule) : impl_(std::move(rule)) {}
AllocationRule::AllocationRule(AdditivePairwise rule) : impl_(std::move(rule)) {
    const auto& ap = std::get<AdditivePairwise>(impl_);
    if (ap.u.player_count() != ap.v.player_count())
        throw std::invalid_argument("pair values and utilities disagree on n");
}

AllocationRule::Kind AllocationRule::kind() const {
    return static_cast<Kind>(impl_.index());
}

std::string AllocationRule::kind_name() const {
    switch (kind()) {
        case Kind::table: return "table";
        case Kind::symmetric_relative_gain: return "srg";
        case Kind::additive_pairwise: return "pairs";
    }
    return {};
}

int AllocationRule::player_count() const {
    return std::visit(
        [](const auto& rule) {
            using T = std::decay_t<decltype(rule)>;
            if constexpr (std::is_same_v<T, TableRule>)
                return rule.player_count();
            else
                return rule.u.player_count();
        },
        impl_);
}

double AllocationRule::value(int player, PlayerSet s) const {
    if (!s.contains(player))
        throw std::invalid_argument("player " + std::to_string(player) +
                                    " is not in coalition {" + s.to_string() + "}");
    return std::visit(
        [&](const auto& rule) -> double {
            using T = std::decay_t<decltype(rule)>;
            if constexpr (std::is_same_v<T, TableRule>) {
                return rule.value(player, s);
            } else if constexpr (std::is_same_v<T, SymmetricRelativeGain>) {
                return rule.u.singleton_value(player) + rule.u.marginal(s) / s.size();
            } else {
                return rule.u.singleton_value(player) + rule.v.row_sum(player, s);
            }
        },
        impl_);
}

Preference AllocationRule::prefers(int player, PlayerSet s, PlayerSet t) const {
    const double in_s = value(player, s);
    const double in_t = value(player, t);
    if (in_s > in_t + kPreferenceEpsilon) return Preference::strictly_preferred;
    if (in_t > in_s + kPreferenceEpsilon) return Preference::strictly_dispreferred;
    return Preference::indifferent;
}

}  // namespace hedonic
