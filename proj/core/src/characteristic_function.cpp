#include "hedonic/characteristic_function.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "hedonic/errors.hpp"

namespace hedonic {

namespace {

PlayerSet checked_set(std::uint32_t mask, int n) {
    PlayerSet s(mask);
    if (s.empty()) throw std::invalid_argument("empty coalition has no utility");
    if (!PlayerSet::full(n).contains_all(s))
        throw std::invalid_argument("coalition {" + s.to_string() +
                                    "} has members beyond player count " +
                                    std::to_string(n));
    return s;
}

}  // namespace

CharacteristicFunction::CharacteristicFunction(
    int n, std::unordered_map<std::uint32_t, double> values, MissingPolicy policy)
    : n_(n), policy_(policy), values_(std::move(values)) {
    if (n < 1 || n > PlayerSet::kMaxPlayers)
        throw std::invalid_argument("player count outside 1..32");
    singletons_.resize(static_cast<std::size_t>(n));
    for (const auto& [mask, v] : values_) {
        checked_set(mask, n);
        if (!std::isfinite(v))
            throw std::invalid_argument("non-finite utility for coalition {" +
                                        PlayerSet(mask).to_string() + "}");
    }
    for (int i = 1; i <= n; ++i) {
        auto it = values_.find(PlayerSet::singleton(i).bits());
        if (it == values_.end())
            throw std::invalid_argument("singleton value u(" + std::to_string(i) +
                                        ") missing");
        singletons_[static_cast<std::size_t>(i - 1)] = it->second;
    }
}

CharacteristicFunction CharacteristicFunction::from_marginals(
    int n, const std::vector<double>& singleton_values,
    const std::unordered_map<std::uint32_t, double>& deltas, MissingPolicy policy) {
    if (static_cast<int>(singleton_values.size()) != n)
        throw std::invalid_argument("expected " + std::to_string(n) +
                                    " singleton values");
    std::unordered_map<std::uint32_t, double> values;
    for (int i = 1; i <= n; ++i)
        values.emplace(PlayerSet::singleton(i).bits(),
                       singleton_values[static_cast<std::size_t>(i - 1)]);
    for (const auto& [mask, delta] : deltas) {
        PlayerSet s = checked_set(mask, n);
        if (s.size() < 2)
            throw std::invalid_argument("marginal utility of singleton {" +
                                        s.to_string() + "} is identically zero");
        double base = 0.0;
        for (int i : s) base += singleton_values[static_cast<std::size_t>(i - 1)];
        values[mask] = base + delta;
    }
    return CharacteristicFunction(n, std::move(values), policy);
}

double CharacteristicFunction::value(PlayerSet s) const {
    checked_set(s.bits(), n_);
    auto it = values_.find(s.bits());
    if (it != values_.end()) return it->second;
    if (policy_ == MissingPolicy::additive_default) return singleton_sum(s);
    throw UnknownCoalitionError("no utility value for coalition {" +
                                s.to_string() + "}");
}

double CharacteristicFunction::singleton_value(int player) const {
    if (player < 1 || player > n_)
        throw std::invalid_argument("player index " + std::to_string(player) +
                                    " outside 1.." + std::to_string(n_));
    return singletons_[static_cast<std::size_t>(player - 1)];
}

double CharacteristicFunction::singleton_sum(PlayerSet s) const {
    double sum = 0.0;
    for (int i : s) sum += singleton_value(i);
    return sum;
}

bool CharacteristicFunction::has_value(PlayerSet s) const {
    return values_.contains(s.bits());
}

}  // namespace hedonic
