#include "hedonic/dynamics.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>

#include "hedonic/rng.hpp"

namespace hedonic {

StrategyProfile::StrategyProfile(std::vector<int> labels)
    : labels_(std::move(labels)) {
    const int n = player_count();
    if (n < 1 || n > PlayerSet::kMaxPlayers)
        throw std::invalid_argument("profile size outside 1..32");
    for (int label : labels_)
        if (label < 1 || label > n)
            throw std::invalid_argument("strategy label " + std::to_string(label) +
                                        " outside 1.." + std::to_string(n));
}

StrategyProfile StrategyProfile::all_distinct(int n) {
    std::vector<int> labels(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) labels[static_cast<std::size_t>(i)] = i + 1;
    return StrategyProfile(std::move(labels));
}

int StrategyProfile::label(int player) const {
    if (player < 1 || player > player_count())
        throw std::invalid_argument("player index out of range");
    return labels_[static_cast<std::size_t>(player - 1)];
}

void StrategyProfile::set_label(int player, int label) {
    if (player < 1 || player > player_count())
        throw std::invalid_argument("player index out of range");
    if (label < 1 || label > player_count())
        throw std::invalid_argument("strategy label out of range");
    labels_[static_cast<std::size_t>(player - 1)] = label;
}

PlayerSet StrategyProfile::holders(int label) const {
    PlayerSet s;
    for (int i = 1; i <= player_count(); ++i)
        if (labels_[static_cast<std::size_t>(i - 1)] == label) s = s.with(i);
    return s;
}

Partition induced_partition(const StrategyProfile& sigma) {
    const int n = sigma.player_count();
    std::vector<PlayerSet> blocks;
    for (int label = 1; label <= n; ++label) {
        const PlayerSet s = sigma.holders(label);
        if (!s.empty()) blocks.push_back(s);
    }
    return Partition(n, std::move(blocks));
}

int best_reply(const AllocationRule& rule, const StrategyProfile& sigma,
               int player) {
    const int n = sigma.player_count();
    const int current = sigma.label(player);
    int best = current;
    double best_payoff = rule.value(player, sigma.holders(current));
    for (int label = 1; label <= n; ++label) {
        if (label == current) continue;
        const PlayerSet joined = sigma.holders(label).with(player);
        const double payoff = rule.value(player, joined);
        if (payoff > best_payoff + kPreferenceEpsilon) {
            best = label;
            best_payoff = payoff;
        }
    }
    return best;
}

DynamicsTrace run_dynamics(const AllocationRule& rule, std::uint64_t seed,
                           std::uint64_t max_rounds) {
    if (max_rounds < 1) throw std::invalid_argument("max_rounds must be >= 1");
    const int n = rule.player_count();

    DynamicsTrace trace;
    trace.seed = seed;
    trace.rule_kind = rule.kind_name();

    Xorshift64 rng(seed);
    StrategyProfile sigma = StrategyProfile::all_distinct(n);
    std::uint64_t step = 0;

    for (std::uint64_t round = 1; round <= max_rounds; ++round) {
        const std::vector<int> order = rng.permutation(n);
        bool changed = false;
        for (int player : order) {
            ++step;
            const int old_label = sigma.label(player);
            const int new_label = best_reply(rule, sigma, player);
            if (new_label == old_label) continue;
            const double before = rule.value(player, sigma.holders(old_label));
            const double after =
                rule.value(player, sigma.holders(new_label).with(player));
            sigma.set_label(player, new_label);
            trace.steps.push_back(DynamicsStep{step, round, player, old_label,
                                               new_label, before, after});
            changed = true;
        }
        if (!changed) {
            trace.outcome =
                DynamicsOutcome{true, induced_partition(sigma), round};
            return trace;
        }
    }
    trace.outcome = DynamicsOutcome{false, std::nullopt, max_rounds};
    return trace;
}

namespace {

std::string decimal9(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", value);
    return buf;
}

}  // namespace

void DynamicsTrace::write(std::ostream& out) const {
    out << "# seed=" << seed << " rule=" << rule_kind << '\n';
    for (const DynamicsStep& s : steps)
        out << s.step << ',' << s.round << ',' << s.player << ',' << s.old_label
            << ',' << s.new_label << ',' << decimal9(s.payoff_before) << ','
            << decimal9(s.payoff_after) << '\n';
    if (outcome.converged)
        out << "# outcome=converged rounds=" << outcome.rounds
            << " partition=" << outcome.partition->to_string() << '\n';
    else
        out << "# outcome=round-limit-reached rounds=" << outcome.rounds << '\n';
}

}  // namespace hedonic
