#include "hedonic/pair_values.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hedonic {

PairValues::PairValues(int n, std::vector<double> values)
    : n_(n), values_(std::move(values)) {
    if (n < 1 || n > PlayerSet::kMaxPlayers)
        throw std::invalid_argument("player count outside 1..32");
    if (static_cast<int>(values_.size()) != pair_count(n))
        throw std::invalid_argument("expected " + std::to_string(pair_count(n)) +
                                    " pair values, got " +
                                    std::to_string(values_.size()));
    for (double v : values_)
        if (!std::isfinite(v))
            throw std::invalid_argument("non-finite pair value");
}

int PairValues::pair_index(int n, int i, int j) {
    if (i > j) std::swap(i, j);
    if (i < 1 || j > n || i == j)
        throw std::invalid_argument("invalid pair (" + std::to_string(i) + "," +
                                    std::to_string(j) + ") for n = " +
                                    std::to_string(n));
    return (i - 1) * n - i * (i - 1) / 2 + (j - i - 1);
}

std::pair<int, int> PairValues::pair_at(int n, int k) {
    if (k < 0 || k >= pair_count(n))
        throw std::invalid_argument("pair index out of range");
    int i = 1;
    while (k >= n - i) {
        k -= n - i;
        ++i;
    }
    return {i, i + 1 + k};
}

double PairValues::value(int i, int j) const {
    if (i == j) return 0.0;
    return values_[static_cast<std::size_t>(pair_index(n_, i, j))];
}

double PairValues::pair_sum(PlayerSet s) const {
    double sum = 0.0;
    for (int i : s)
        for (int j : s)
            if (j > i) sum += value(i, j);
    return sum;
}

double PairValues::row_sum(int player, PlayerSet s) const {
    double sum = 0.0;
    for (int j : s)
        if (j != player) sum += value(player, j);
    return sum;
}

}  // namespace hedonic
