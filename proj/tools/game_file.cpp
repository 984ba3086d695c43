#include "game_file.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <unordered_map>
#include <vector>

namespace hedonic::cli {

namespace {

// Tokens: '{', '}', ':', and atoms (runs of non-structural characters).
// '#' comments run to end of line.
struct Tokenizer {
    explicit Tokenizer(std::string_view text) : text_(text) {}

    std::optional<std::string> next() {
        skip_blank();
        if (pos_ >= text_.size()) return std::nullopt;
        const char c = text_[pos_];
        if (c == '{' || c == '}' || c == ':') {
            ++pos_;
            return std::string(1, c);
        }
        std::size_t start = pos_;
        while (pos_ < text_.size() && !is_structural(text_[pos_])) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

private:
    static bool is_structural(char c) {
        return c == '{' || c == '}' || c == ':' || c == '#' ||
               std::isspace(static_cast<unsigned char>(c));
    }

    void skip_blank() {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
            } else {
                break;
            }
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

[[noreturn]] void fail(const std::string& message) { throw ParseError(message); }

std::string expect(Tokenizer& tok, const std::string& what) {
    auto t = tok.next();
    if (!t) fail("unexpected end of input, expected " + what);
    return *t;
}

double parse_number(const std::string& token) {
    char* end = nullptr;
    const double value = std::strtod(token.c_str(), &end);
    if (end != token.c_str() + token.size())
        fail("malformed number '" + token + "'");
    return value;
}

int parse_int(const std::string& token, const std::string& what) {
    char* end = nullptr;
    const long value = std::strtol(token.c_str(), &end, 10);
    if (end != token.c_str() + token.size() || value < 1)
        fail("malformed " + what + " '" + token + "'");
    return static_cast<int>(value);
}

// "1,3,4" -> PlayerSet; members must be strictly ascending and within 1..n.
PlayerSet parse_coalition_key(const std::string& key, int n) {
    PlayerSet s;
    int previous = 0;
    std::stringstream parts(key);
    std::string part;
    while (std::getline(parts, part, ',')) {
        const int member = parse_int(part, "player index");
        if (member <= previous)
            fail("coalition key '" + key + "' is not strictly ascending");
        if (member > n)
            fail("coalition key '" + key + "' exceeds player count " +
                 std::to_string(n));
        s = s.with(member);
        previous = member;
    }
    if (s.empty()) fail("empty coalition key");
    return s;
}

// A flat object of key: number entries.
std::vector<std::pair<std::string, double>> parse_value_object(Tokenizer& tok) {
    if (expect(tok, "'{'") != "{") fail("expected '{'");
    std::vector<std::pair<std::string, double>> entries;
    for (;;) {
        std::string key = expect(tok, "key or '}'");
        if (key == "}") return entries;
        if (expect(tok, "':'") != ":") fail("expected ':' after '" + key + "'");
        entries.emplace_back(key, parse_number(expect(tok, "number")));
    }
}

}  // namespace

GameFile parse_game_file(std::string_view text) {
    Tokenizer tok(text);
    if (expect(tok, "'{'") != "{") fail("game file must start with '{'");

    GameFile file;
    std::vector<std::pair<std::string, double>> u_raw, delta_raw, v_raw;
    bool saw_n = false, saw_u = false, saw_delta = false, saw_policy = false;
    for (;;) {
        std::string key = expect(tok, "section or '}'");
        if (key == "}") break;
        if (expect(tok, "':'") != ":") fail("expected ':' after '" + key + "'");
        if (key == "n") {
            if (saw_n) fail("duplicate n");
            file.n = parse_int(expect(tok, "player count"), "player count");
            saw_n = true;
        } else if (key == "policy") {
            if (saw_policy) fail("duplicate policy");
            const std::string value = expect(tok, "policy value");
            if (value == "strict")
                file.policy = MissingPolicy::strict;
            else if (value == "additive-default")
                file.policy = MissingPolicy::additive_default;
            else
                fail("unknown policy '" + value +
                     "' (expected strict or additive-default)");
            saw_policy = true;
        } else if (key == "u") {
            if (saw_u) fail("duplicate u section");
            u_raw = parse_value_object(tok);
            saw_u = true;
        } else if (key == "delta") {
            if (saw_delta) fail("duplicate delta section");
            delta_raw = parse_value_object(tok);
            saw_delta = true;
        } else if (key == "v") {
            if (file.has_v) fail("duplicate v section");
            v_raw = parse_value_object(tok);
            file.has_v = true;
        } else {
            fail("unknown section '" + key + "'");
        }
    }
    if (tok.next()) fail("trailing content after closing '}'");
    if (!saw_n) fail("missing n");
    if (file.n > PlayerSet::kMaxPlayers)
        fail("player count " + std::to_string(file.n) + " exceeds 32");
    if (!saw_u) fail("missing u section");

    for (const auto& [key, value] : u_raw) {
        const PlayerSet s = parse_coalition_key(key, file.n);
        if (!file.u.emplace(s.bits(), value).second)
            fail("duplicate u entry for '" + key + "'");
    }
    for (int i = 1; i <= file.n; ++i)
        if (!file.u.contains(PlayerSet::singleton(i).bits()))
            fail("u is missing singleton value for player " + std::to_string(i));

    for (const auto& [key, value] : delta_raw) {
        const PlayerSet s = parse_coalition_key(key, file.n);
        if (s.size() < 2)
            fail("delta entry '" + key + "' is a singleton; delta(i) is zero");
        if (!file.delta.emplace(s.bits(), value).second)
            fail("duplicate delta entry for '" + key + "'");
    }
    if (!file.delta.empty())
        for (const auto& [mask, value] : file.u)
            if (PlayerSet(mask).size() >= 2)
                fail("delta section excludes non-singleton u entries (found u entry "
                     "for '" + PlayerSet(mask).to_string() + "')");

    for (const auto& [key, value] : v_raw) {
        const PlayerSet s = parse_coalition_key(key, file.n);
        if (s.size() != 2) fail("v entry '" + key + "' is not a pair");
        const auto members = s.members();
        const int idx = PairValues::pair_index(file.n, members[0], members[1]);
        if (!file.v.emplace(idx, value).second)
            fail("duplicate v entry for '" + key + "'");
    }
    return file;
}

GameFile load_game_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open game file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_game_file(buffer.str());
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

CharacteristicFunction GameFile::characteristic() const {
    if (!delta.empty()) {
        std::vector<double> singletons(static_cast<std::size_t>(n));
        for (int i = 1; i <= n; ++i)
            singletons[static_cast<std::size_t>(i - 1)] =
                u.at(PlayerSet::singleton(i).bits());
        const std::unordered_map<std::uint32_t, double> deltas(delta.begin(),
                                                               delta.end());
        return CharacteristicFunction::from_marginals(n, singletons, deltas,
                                                      policy);
    }
    return CharacteristicFunction(
        n, std::unordered_map<std::uint32_t, double>(u.begin(), u.end()), policy);
}

PairValues GameFile::pair_values() const {
    if (!has_v) throw ParseError("game file has no v section");
    std::vector<double> values(
        static_cast<std::size_t>(PairValues::pair_count(n)), 0.0);
    for (const auto& [idx, value] : v)
        values[static_cast<std::size_t>(idx)] = value;
    return PairValues(n, values);
}

TableRule load_table_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open table file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();

    Tokenizer tok(text);
    if (expect(tok, "'{'") != "{") throw ParseError(path + ": expected '{'");
    int n = 0;
    std::vector<std::pair<std::string, double>> phi_raw;
    bool saw_n = false, saw_phi = false;
    for (;;) {
        std::string key = expect(tok, "section or '}'");
        if (key == "}") break;
        if (expect(tok, "':'") != ":") fail("expected ':' after '" + key + "'");
        if (key == "n") {
            n = parse_int(expect(tok, "player count"), "player count");
            saw_n = true;
        } else if (key == "phi") {
            phi_raw = parse_value_object(tok);
            saw_phi = true;
        } else {
            fail("unknown section '" + key + "' in table file");
        }
    }
    if (!saw_n || !saw_phi) fail("table file needs n and phi sections");

    std::unordered_map<std::uint64_t, double> entries;
    for (const auto& [key, value] : phi_raw) {
        const auto at = key.find('@');
        if (at == std::string::npos)
            fail("phi key '" + key + "' is not PLAYER@MEMBERS");
        const int player = parse_int(key.substr(0, at), "player index");
        const PlayerSet s = parse_coalition_key(key.substr(at + 1), n);
        if (!s.contains(player))
            fail("phi key '" + key + "': player is not a coalition member");
        if (!entries.emplace(TableRule::key(player, s), value).second)
            fail("duplicate phi entry '" + key + "'");
    }
    try {
        return TableRule(n, std::move(entries));
    } catch (const std::invalid_argument& e) {
        throw ParseError(path + ": " + e.what());
    }
}

Partition parse_partition(std::string_view literal, int n) {
    std::string text(literal);
    if (text.size() < 2 || text.front() != '{' || text.back() != '}')
        throw ParseError("partition literal must look like {1,4|2|3}");
    text = text.substr(1, text.size() - 2);

    std::vector<PlayerSet> blocks;
    std::stringstream stream(text);
    std::string block;
    while (std::getline(stream, block, '|')) {
        try {
            blocks.push_back(parse_coalition_key(block, n));
        } catch (const ParseError& e) {
            throw ParseError("partition literal: " + std::string(e.what()));
        }
    }
    try {
        return Partition(n, std::move(blocks));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string(e.what()));
    }
}

}  // namespace hedonic::cli
