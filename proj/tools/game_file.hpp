#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "hedonic/allocation.hpp"
#include "hedonic/characteristic_function.hpp"
#include "hedonic/pair_values.hpp"
#include "hedonic/partition.hpp"

namespace hedonic::cli {

class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Parsed game file. Grammar (documented in docs/game-format.md): a braced
/// object of key: value entries where coalition keys are comma-separated
/// ascending 1-based member lists. `delta` entries give marginal utilities
/// directly and exclude non-singleton `u` entries; `v` entries give symmetric
/// pair values with unlisted pairs defaulting to zero.
struct GameFile {
    int n = 0;
    MissingPolicy policy = MissingPolicy::strict;
    std::map<std::uint32_t, double> u;
    std::map<std::uint32_t, double> delta;
    std::map<int, double> v;  // keyed by pair index
    bool has_v = false;

    CharacteristicFunction characteristic() const;
    PairValues pair_values() const;
};

GameFile parse_game_file(std::string_view text);
GameFile load_game_file(const std::string& path);

/// Table files carry `n` plus a `phi` object keyed PLAYER@MEMBERS, one entry
/// per (player, containing coalition).
TableRule load_table_file(const std::string& path);

/// Partition literal like "{1,4|2|3}"; must cover {1..n} exactly.
Partition parse_partition(std::string_view literal, int n);

}  // namespace hedonic::cli
