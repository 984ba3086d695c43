#include "hedonic/nash_core.hpp"

#include <stdexcept>
#include <string>

#include "hedonic/errors.hpp"
#include "hedonic/least_squares.hpp"

namespace hedonic {

namespace {

constexpr int kPairSystemMaxPlayers = 16;
constexpr int kNcoreMaxPlayers = 8;

}  // namespace

PairSystem build_pair_system(const CharacteristicFunction& u) {
    const int n = u.player_count();
    if (n < 2) throw std::invalid_argument("pair system needs at least 2 players");
    if (n > kPairSystemMaxPlayers)
        throw LimitExceededError("pair system capped at n = " +
                                 std::to_string(kPairSystemMaxPlayers));

    const int cols = PairValues::pair_count(n);
    const std::uint32_t universe = PlayerSet::full(n).bits();
    PairSystem sys;
    sys.n = n;
    sys.c.assign(static_cast<std::size_t>(cols), 1.0);
    for (std::uint32_t mask = 1; mask <= universe; ++mask) {
        PlayerSet s(mask);
        if (s.size() < 2) continue;
        sys.row_coalitions.push_back(s);
        sys.b.push_back(0.5 * u.marginal(s));
    }
    sys.a = Matrix(sys.row_coalitions.size(), static_cast<std::size_t>(cols));
    for (std::size_t r = 0; r < sys.row_coalitions.size(); ++r) {
        const PlayerSet s = sys.row_coalitions[r];
        for (int i : s)
            for (int j : s)
                if (j > i)
                    sys.a(r, static_cast<std::size_t>(
                                 PairValues::pair_index(n, i, j))) = 1.0;
    }
    return sys;
}

std::optional<PairValues> exact_separable_fit(const CharacteristicFunction& u) {
    const PairSystem sys = build_pair_system(u);
    auto v = check_feasible_equalities(sys.a, sys.b);
    if (!v) return std::nullopt;
    return PairValues(sys.n, std::move(*v));
}

std::optional<BalancednessCertificate> balancedness_check(
    const CharacteristicFunction& u) {
    const PairSystem sys = build_pair_system(u);
    const std::size_t n_weights = sys.row_coalitions.size();
    const std::size_t n_pairs = sys.c.size();
    const double delta_n = u.marginal(PlayerSet::full(sys.n));

    // Feasibility program over free weights: one cover equality per pair
    // index, one inequality bounding the weighted marginal sum.
    LinearProgram lp;
    lp.objective.assign(n_weights, 0.0);
    for (std::size_t k = 0; k < n_pairs; ++k) {
        LpConstraint row;
        row.coeffs.resize(n_weights);
        for (std::size_t s = 0; s < n_weights; ++s) row.coeffs[s] = sys.a(s, k);
        row.rel = Relation::eq;
        row.rhs = 1.0;
        lp.constraints.push_back(std::move(row));
    }
    {
        LpConstraint row;
        row.coeffs.resize(n_weights);
        for (std::size_t s = 0; s < n_weights; ++s)
            row.coeffs[s] = u.marginal(sys.row_coalitions[s]);
        row.rel = Relation::le;
        row.rhs = delta_n;
        lp.constraints.push_back(std::move(row));
    }

    const LpSolution sol = solve_lp(lp);
    if (sol.status == LpStatus::infeasible) return std::nullopt;
    if (sol.status != LpStatus::optimal)
        throw NumericalError("balancedness feasibility solve failed");

    BalancednessCertificate cert;
    double weighted = 0.0;
    for (std::size_t s = 0; s < n_weights; ++s) {
        cert.weights.emplace(sys.row_coalitions[s].bits(), sol.point[s]);
        weighted += sol.point[s] * u.marginal(sys.row_coalitions[s]);
    }
    cert.slack = delta_n - weighted;
    return cert;
}

RelaxedFit relaxed_efficiency_fit(const CharacteristicFunction& u) {
    const PairSystem sys = build_pair_system(u);
    LinearProgram lp;
    lp.objective = sys.c;
    lp.constraints.reserve(sys.row_coalitions.size());
    for (std::size_t r = 0; r < sys.row_coalitions.size(); ++r) {
        LpConstraint row;
        row.coeffs.resize(sys.c.size());
        for (std::size_t k = 0; k < sys.c.size(); ++k) row.coeffs[k] = sys.a(r, k);
        row.rel = Relation::le;
        row.rhs = sys.b[r];
        lp.constraints.push_back(std::move(row));
    }
    const LpSolution sol = solve_lp(lp);
    if (sol.status != LpStatus::optimal)
        throw NumericalError("relaxed-efficiency LP did not reach an optimum");
    return RelaxedFit{PairValues(sys.n, sol.point), sol.objective};
}

LlsFit lls_fit(const CharacteristicFunction& u) {
    const PairSystem sys = build_pair_system(u);
    LeastSquaresResult ls = solve_least_squares(sys.a, sys.b);
    return LlsFit{PairValues(sys.n, std::move(ls.x)), ls.residual};
}

namespace {

// Variable layout for the ncore program: one phi entry per (coalition,
// member) in ascending (mask, player) order -- the full kappa set.
struct PhiIndex {
    explicit PhiIndex(int n) {
        const std::uint32_t universe = PlayerSet::full(n).bits();
        for (std::uint32_t mask = 1; mask <= universe; ++mask)
            for (int i : PlayerSet(mask))
                slots_.emplace(TableRule::key(i, PlayerSet(mask)),
                               slots_.size());
    }

    std::size_t count() const { return slots_.size(); }
    std::size_t at(int player, PlayerSet s) const {
        return slots_.at(TableRule::key(player, s));
    }

private:
    std::unordered_map<std::uint64_t, std::size_t> slots_;
};

}  // namespace

std::optional<NcoreResult> ncore_feasible(const CharacteristicFunction& u) {
    const int n = u.player_count();
    if (n > kNcoreMaxPlayers)
        throw LimitExceededError("Nash-stable-core scan capped at n = " +
                                 std::to_string(kNcoreMaxPlayers));

    const PhiIndex phi(n);
    const std::uint32_t universe = PlayerSet::full(n).bits();

    // Efficiency rows are partition-independent; build once.
    std::vector<LpConstraint> efficiency;
    for (std::uint32_t mask = 1; mask <= universe; ++mask) {
        const PlayerSet s(mask);
        LpConstraint row;
        row.coeffs.assign(phi.count(), 0.0);
        for (int i : s) row.coeffs[phi.at(i, s)] = 1.0;
        row.rel = Relation::eq;
        row.rhs = u.value(s);
        efficiency.push_back(std::move(row));
    }

    PartitionStream stream(n);
    while (auto pi = stream.next()) {
        LinearProgram lp;
        lp.objective.assign(phi.count(), -1.0);  // minimize the total allocation
        lp.constraints = efficiency;
        for (int i = 1; i <= n; ++i) {
            const PlayerSet home = pi->block_of(i);
            auto stay_beats = [&](PlayerSet target) {
                LpConstraint row;
                row.coeffs.assign(phi.count(), 0.0);
                row.coeffs[phi.at(i, home)] += 1.0;
                row.coeffs[phi.at(i, target.with(i))] -= 1.0;
                row.rel = Relation::ge;
                row.rhs = 0.0;
                lp.constraints.push_back(std::move(row));
            };
            for (const PlayerSet& block : pi->blocks())
                if (!block.contains(i)) stay_beats(block);
            stay_beats(PlayerSet{});
        }

        const LpSolution sol = solve_lp(lp);
        if (sol.status == LpStatus::infeasible) continue;
        if (sol.status != LpStatus::optimal)
            throw NumericalError("Nash-stable-core LP solve failed");

        std::unordered_map<std::uint64_t, double> entries;
        for (std::uint32_t mask = 1; mask <= universe; ++mask)
            for (int i : PlayerSet(mask))
                entries.emplace(TableRule::key(i, PlayerSet(mask)),
                                sol.point[phi.at(i, PlayerSet(mask))]);
        return NcoreResult{std::move(*pi), TableRule(n, std::move(entries))};
    }
    return std::nullopt;
}

}  // namespace hedonic
