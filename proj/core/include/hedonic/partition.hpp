#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hedonic/player_set.hpp"

namespace hedonic {

/// A coalition structure: non-empty, pairwise disjoint blocks covering
/// {1..n}. Canonical form orders blocks by their minimum member, so equality
/// is structural.
class Partition {
public:
    Partition(int n, std::vector<PlayerSet> blocks);

    static Partition singletons(int n);
    static Partition grand(int n);

    int player_count() const { return n_; }
    const std::vector<PlayerSet>& blocks() const { return blocks_; }

    /// S_Pi(i): the unique block containing the player.
    PlayerSet block_of(int player) const;

    /// Literal form "{1,4|2|3}" with blocks in canonical order.
    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    friend class PartitionStream;
    struct Trusted {};
    Partition(Trusted, int n, std::vector<PlayerSet> blocks)
        : n_(n), blocks_(std::move(blocks)) {}

    int n_ = 0;
    std::vector<PlayerSet> blocks_;
};

/// Streams every partition of {1..n} exactly once, in restricted-growth-string
/// lexicographic order; the total count equals the Bell number of n. One
/// consumer per stream instance.
class PartitionStream {
public:
    static constexpr int kMaxPlayers = 13;

    explicit PartitionStream(int n);

    std::optional<Partition> next();

private:
    Partition current() const;
    bool advance();

    int n_;
    bool exhausted_ = false;
    std::vector<int> labels_;  // restricted growth string, labels_[0] == 0
};

}  // namespace hedonic
