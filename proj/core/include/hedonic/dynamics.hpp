#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hedonic/allocation.hpp"
#include "hedonic/partition.hpp"

namespace hedonic {

/// One strategy label per player, each in {1..n}. Players holding the same
/// label form a coalition, so a profile induces a partition of N.
class StrategyProfile {
public:
    explicit StrategyProfile(std::vector<int> labels);

    /// The opening profile: every player on their own label.
    static StrategyProfile all_distinct(int n);

    int player_count() const { return static_cast<int>(labels_.size()); }
    int label(int player) const;
    void set_label(int player, int label);
    const std::vector<int>& labels() const { return labels_; }

    /// Players currently holding the label.
    PlayerSet holders(int label) const;

private:
    std::vector<int> labels_;
};

Partition induced_partition(const StrategyProfile& sigma);

/// The label maximizing the player's payoff when joining that label's
/// current holders (an unused label forms a fresh singleton). The current
/// label is kept unless an alternative is strictly better beyond the
/// preference tolerance; ties among strictly-better alternatives break to
/// the smallest label.
int best_reply(const AllocationRule& rule, const StrategyProfile& sigma, int player);

struct DynamicsStep {
    std::uint64_t step = 0;   // s, counting every player turn
    std::uint64_t round = 0;  // ceil(s / n)
    int player = 0;
    int old_label = 0;
    int new_label = 0;
    double payoff_before = 0.0;
    double payoff_after = 0.0;
};

struct DynamicsOutcome {
    bool converged = false;
    std::optional<Partition> partition;  // set when converged
    std::uint64_t rounds = 0;            // rounds executed
};

/// Full record of one run: recorded steps are exactly the strict-improvement
/// moves, and replaying the seed reproduces the trace byte-for-byte.
struct DynamicsTrace {
    std::uint64_t seed = 0;
    std::string rule_kind;
    std::vector<DynamicsStep> steps;
    DynamicsOutcome outcome;

    /// Line-oriented text: a header carrying seed and rule kind, one step per
    /// line as s,round,player,old,new,payoff_before,payoff_after with
    /// 9-significant-digit payoffs, and a closing outcome line.
    void write(std::ostream& out) const;
};

/// Best-reply rounds under a per-round random round-robin scheduler, starting
/// from all-distinct labels. Converges when a full round changes nothing (the
/// profile is then a Nash equilibrium, so the induced partition is
/// Nash-stable); otherwise stops after max_rounds. Within a round, later
/// players see earlier players' updated labels.
DynamicsTrace run_dynamics(const AllocationRule& rule, std::uint64_t seed,
                           std::uint64_t max_rounds);

}  // namespace hedonic
