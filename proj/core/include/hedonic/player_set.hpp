#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <stdexcept>
#include <string>
#include <vector>

namespace hedonic {

/// A coalition over up to 32 players. Players carry 1-based indices; player i
/// is present iff bit i-1 of the mask is set. Iteration yields members in
/// ascending index order.
class PlayerSet {
public:
    static constexpr int kMaxPlayers = 32;

    constexpr PlayerSet() = default;
    constexpr explicit PlayerSet(std::uint32_t bits) : bits_(bits) {}

    PlayerSet(std::initializer_list<int> members) {
        for (int p : members) *this = with(p);
    }

    static PlayerSet singleton(int player) { return PlayerSet{}.with(player); }

    /// The full coalition {1..n}.
    static PlayerSet full(int n) {
        check_index(n);
        return PlayerSet(n == 32 ? ~std::uint32_t{0}
                                 : (std::uint32_t{1} << n) - 1);
    }

    constexpr std::uint32_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }

    constexpr bool contains(int player) const {
        return player >= 1 && player <= kMaxPlayers &&
               (bits_ >> (player - 1)) & 1u;
    }
    constexpr bool contains_all(PlayerSet other) const {
        return (bits_ & other.bits_) == other.bits_;
    }
    constexpr bool intersects(PlayerSet other) const {
        return (bits_ & other.bits_) != 0;
    }

    PlayerSet with(int player) const {
        check_index(player);
        return PlayerSet(bits_ | (std::uint32_t{1} << (player - 1)));
    }
    PlayerSet without(int player) const {
        check_index(player);
        return PlayerSet(bits_ & ~(std::uint32_t{1} << (player - 1)));
    }

    int min_member() const {
        if (empty()) throw std::invalid_argument("empty coalition has no members");
        return std::countr_zero(bits_) + 1;
    }

    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (int p : *this) out.push_back(p);
        return out;
    }

    /// Comma-separated ascending member list, e.g. "1,3,4".
    std::string to_string() const {
        std::string out;
        for (int p : *this) {
            if (!out.empty()) out += ',';
            out += std::to_string(p);
        }
        return out;
    }

    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = int;
        using difference_type = std::ptrdiff_t;

        constexpr iterator() = default;
        constexpr explicit iterator(std::uint32_t rest) : rest_(rest) {}
        int operator*() const { return std::countr_zero(rest_) + 1; }
        iterator& operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        iterator operator++(int) {
            iterator old = *this;
            ++*this;
            return old;
        }
        friend bool operator==(iterator a, iterator b) = default;

    private:
        std::uint32_t rest_ = 0;
    };

    iterator begin() const { return iterator(bits_); }
    iterator end() const { return iterator(0); }

    friend constexpr bool operator==(PlayerSet, PlayerSet) = default;
    friend constexpr auto operator<=>(PlayerSet a, PlayerSet b) {
        return a.bits_ <=> b.bits_;
    }

private:
    static void check_index(int player) {
        if (player < 1 || player > kMaxPlayers)
            throw std::invalid_argument("player index " + std::to_string(player) +
                                        " outside 1.." + std::to_string(kMaxPlayers));
    }

    std::uint32_t bits_ = 0;
};

}  // namespace hedonic
