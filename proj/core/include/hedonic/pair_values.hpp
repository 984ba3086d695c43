#pragma once

#include <utility>
#include <vector>

#include "hedonic/player_set.hpp"

namespace hedonic {

/// Symmetric pair values v(i,j) = v(j,i) for 1 <= i < j <= n, with v(i,i) = 0.
/// Stored once per unordered pair in row-major enumeration order
/// (1,2),(1,3),...,(1,n),(2,3),...,(n-1,n); every matrix, file, and report
/// keyed by pair index uses this order.
class PairValues {
public:
    PairValues(int n, std::vector<double> values);

    static int pair_count(int n) { return n * (n - 1) / 2; }

    /// 0-based index of pair {i,j} in the row-major order; i != j.
    static int pair_index(int n, int i, int j);

    /// Inverse of pair_index: the k-th pair as (i, j) with i < j.
    static std::pair<int, int> pair_at(int n, int k);

    int player_count() const { return n_; }
    double value(int i, int j) const;

    /// Values in pair-index order.
    const std::vector<double>& raw() const { return values_; }

    /// Sum of v(i,j) over the distinct pairs {i,j} within S.
    double pair_sum(PlayerSet s) const;

    /// Sum of v(player, j) over the other members j of S.
    double row_sum(int player, PlayerSet s) const;

private:
    int n_;
    std::vector<double> values_;
};

}  // namespace hedonic
