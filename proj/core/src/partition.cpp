#include "hedonic/partition.hpp"

#include <algorithm>
#include <stdexcept>

#include "hedonic/errors.hpp"

namespace hedonic {

Partition::Partition(int n, std::vector<PlayerSet> blocks)
    : n_(n), blocks_(std::move(blocks)) {
    if (n < 1 || n > PlayerSet::kMaxPlayers)
        throw std::invalid_argument("player count outside 1..32");
    std::uint32_t seen = 0;
    for (const PlayerSet& block : blocks_) {
        if (block.empty()) throw std::invalid_argument("partition block is empty");
        if (block.bits() & seen)
            throw std::invalid_argument("partition blocks overlap");
        seen |= block.bits();
    }
    const std::uint32_t universe = PlayerSet::full(n).bits();
    if (seen != universe) {
        for (int i = 1; i <= n; ++i)
            if (!(seen >> (i - 1) & 1u))
                throw std::invalid_argument("player " + std::to_string(i) +
                                            " missing from partition");
        throw std::invalid_argument("partition contains players beyond n");
    }
    std::sort(blocks_.begin(), blocks_.end(),
              [](PlayerSet a, PlayerSet b) { return a.min_member() < b.min_member(); });
}

Partition Partition::singletons(int n) {
    std::vector<PlayerSet> blocks;
    blocks.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) blocks.push_back(PlayerSet::singleton(i));
    return Partition(n, std::move(blocks));
}

Partition Partition::grand(int n) { return Partition(n, {PlayerSet::full(n)}); }

PlayerSet Partition::block_of(int player) const {
    for (const PlayerSet& block : blocks_)
        if (block.contains(player)) return block;
    throw std::invalid_argument("player " + std::to_string(player) +
                                " not in partition");
}

std::string Partition::to_string() const {
    std::string out = "{";
    for (std::size_t k = 0; k < blocks_.size(); ++k) {
        if (k > 0) out += '|';
        out += blocks_[k].to_string();
    }
    out += '}';
    return out;
}

PartitionStream::PartitionStream(int n) : n_(n) {
    if (n < 1)
        throw std::invalid_argument("player count must be at least 1");
    if (n > kMaxPlayers)
        throw LimitExceededError("partition enumeration capped at n = " +
                                 std::to_string(kMaxPlayers) + ", got " +
                                 std::to_string(n));
    labels_.assign(static_cast<std::size_t>(n), 0);
}

std::optional<Partition> PartitionStream::next() {
    if (exhausted_) return std::nullopt;
    Partition out = current();
    exhausted_ = !advance();
    return out;
}

Partition PartitionStream::current() const {
    // Label k's first occurrence precedes label k+1's, so grouping by label
    // already orders blocks by minimum member.
    int block_count = 0;
    for (int label : labels_) block_count = std::max(block_count, label + 1);
    std::vector<PlayerSet> blocks(static_cast<std::size_t>(block_count));
    for (int i = 0; i < n_; ++i) {
        std::size_t k = static_cast<std::size_t>(labels_[static_cast<std::size_t>(i)]);
        blocks[k] = blocks[k].with(i + 1);
    }
    return Partition(Partition::Trusted{}, n_, std::move(blocks));
}

bool PartitionStream::advance() {
    // Lexicographic successor of the restricted growth string: bump the
    // rightmost position that can still grow, reset everything after it.
    for (int i = n_ - 1; i >= 1; --i) {
        int prefix_max = 0;
        for (int j = 0; j < i; ++j)
            prefix_max = std::max(prefix_max, labels_[static_cast<std::size_t>(j)]);
        if (labels_[static_cast<std::size_t>(i)] <= prefix_max) {
            ++labels_[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < n_; ++j) labels_[static_cast<std::size_t>(j)] = 0;
            return true;
        }
    }
    return false;
}

}  // namespace hedonic
