#include "commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "game_file.hpp"
#include "hedonic/dynamics.hpp"
#include "hedonic/errors.hpp"
#include "hedonic/nash_core.hpp"
#include "hedonic/social_optimum.hpp"
#include "hedonic/stability.hpp"
#include "repro.hpp"

namespace hedonic::cli {

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUnstableOrReproFail = 1;
constexpr int kExitInputError = 2;
constexpr int kExitNoConvergence = 3;

std::string decimal9(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", value);
    return buf;
}

// Doubles entering JSON are rounded through the 9-significant-digit text form
// so --json output diffs cleanly across platforms.
double round9(double value) { return std::strtod(decimal9(value).c_str(), nullptr); }

std::string coalition_literal(PlayerSet s) {
    return s.empty() ? std::string("()") : "(" + s.to_string() + ")";
}

AllocationRule resolve_rule(std::string spec, const std::string& pairs_from,
                            const GameFile& file) {
    if (!pairs_from.empty()) {
        if (spec != "pairs")
            throw ParseError("--pairs-from combines only with --rule pairs");
        spec = "pairs-from:" + pairs_from;
    }
    if (spec == "srg")
        return AllocationRule{SymmetricRelativeGain{file.characteristic()}};
    if (spec == "pairs") {
        if (!file.has_v)
            throw ParseError(
                "--rule pairs needs a v section in the game file; use pairs:PATH "
                "or pairs-from:METHOD otherwise");
        return AllocationRule{
            AdditivePairwise{file.characteristic(), file.pair_values()}};
    }
    if (spec.rfind("table:", 0) == 0) {
        TableRule table = load_table_file(spec.substr(6));
        if (table.player_count() != file.n)
            throw ParseError("table file player count mismatch");
        return AllocationRule{std::move(table)};
    }
    if (spec.rfind("pairs:", 0) == 0) {
        const GameFile other = load_game_file(spec.substr(6));
        if (other.n != file.n)
            throw ParseError("pair file player count mismatch");
        return AllocationRule{
            AdditivePairwise{file.characteristic(), other.pair_values()}};
    }
    if (spec.rfind("pairs-from:", 0) == 0) {
        const std::string method = spec.substr(11);
        const auto u = file.characteristic();
        if (method == "exact") {
            auto fit = exact_separable_fit(u);
            if (!fit)
                throw ParseError(
                    "exact separable fit is infeasible for this game");
            return AllocationRule{AdditivePairwise{u, std::move(*fit)}};
        }
        if (method == "relaxed")
            return AllocationRule{AdditivePairwise{u, relaxed_efficiency_fit(u).v}};
        if (method == "lls")
            return AllocationRule{AdditivePairwise{u, lls_fit(u).v}};
        throw ParseError("unknown fit method '" + method +
                         "' (expected exact, relaxed or lls)");
    }
    throw ParseError("unknown rule spec '" + spec +
                     "' (srg | table:PATH | pairs | pairs:PATH | "
                     "pairs-from:exact|relaxed|lls)");
}

json witness_json(const DeviationWitness& w) {
    return json{{"player", w.player},
                {"from", w.from.to_string()},
                {"to_block", w.to_block.to_string()},
                {"gain_before", round9(w.gain_before)},
                {"gain_after", round9(w.gain_after)}};
}

// ---- check ----------------------------------------------------------------

struct CheckArgs {
    std::string game, rule, pairs_from, partition;
    bool as_json = false;
};

int cmd_check(const CheckArgs& args, std::ostream& out) {
    const GameFile file = load_game_file(args.game);
    const AllocationRule rule = resolve_rule(args.rule, args.pairs_from, file);
    const Partition pi = parse_partition(args.partition, file.n);
    const StabilityResult result = is_nash_stable(rule, pi);
    if (args.as_json) {
        json doc{{"command", "check"},
                 {"partition", pi.to_string()},
                 {"stable", result.stable},
                 {"witness", result.witness ? witness_json(*result.witness)
                                            : json(nullptr)}};
        out << doc.dump(2) << '\n';
    } else if (result.stable) {
        out << "STABLE\n";
    } else {
        const auto& w = *result.witness;
        out << "UNSTABLE\n"
            << "witness: player " << w.player << " moves " << coalition_literal(w.from)
            << " -> " << coalition_literal(w.to_block) << " (payoff "
            << decimal9(w.gain_before) << " -> " << decimal9(w.gain_after)
            << ")\n";
    }
    return result.stable ? kExitOk : kExitUnstableOrReproFail;
}

// ---- enumerate ------------------------------------------------------------

struct EnumerateArgs {
    std::string game, rule, pairs_from;
    bool as_json = false;
};

int cmd_enumerate(const EnumerateArgs& args, std::ostream& out) {
    const GameFile file = load_game_file(args.game);
    const AllocationRule rule = resolve_rule(args.rule, args.pairs_from, file);
    const auto stable = find_nash_stable(rule);
    if (args.as_json) {
        json list = json::array();
        for (const Partition& pi : stable) list.push_back(pi.to_string());
        out << json{{"command", "enumerate"},
                    {"count", stable.size()},
                    {"stable_partitions", list}}
                   .dump(2)
            << '\n';
    } else {
        for (const Partition& pi : stable) out << pi.to_string() << '\n';
        out << stable.size() << " Nash-stable partition"
            << (stable.size() == 1 ? "" : "s") << '\n';
    }
    return kExitOk;
}

// ---- fit ------------------------------------------------------------------

struct FitArgs {
    std::string game, method;
    bool as_json = false;
};

std::vector<PlayerSet> full_preference_list(const AllocationRule& rule,
                                            int player, int n) {
    std::vector<std::pair<double, PlayerSet>> scored;
    const std::uint32_t universe = PlayerSet::full(n).bits();
    for (std::uint32_t mask = 1; mask <= universe; ++mask) {
        const PlayerSet s(mask);
        if (s.contains(player)) scored.emplace_back(rule.value(player, s), s);
    }
    std::stable_sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second.bits() < b.second.bits();
    });
    std::vector<PlayerSet> out;
    out.reserve(scored.size());
    for (const auto& [value, s] : scored) out.push_back(s);
    return out;
}

int cmd_fit(const FitArgs& args, std::ostream& out) {
    const GameFile file = load_game_file(args.game);
    const auto u = file.characteristic();

    std::optional<PairValues> v;
    std::optional<double> objective, residual;
    if (args.method == "exact") {
        if (auto fit = exact_separable_fit(u)) v = std::move(*fit);
    } else if (args.method == "relaxed") {
        auto fit = relaxed_efficiency_fit(u);
        v = std::move(fit.v);
        objective = fit.objective;
    } else if (args.method == "lls") {
        auto fit = lls_fit(u);
        v = std::move(fit.v);
        residual = fit.residual;
    } else {
        throw ParseError("unknown fit method '" + args.method +
                         "' (expected exact, relaxed or lls)");
    }

    json doc{{"command", "fit"}, {"method", args.method}, {"feasible", v.has_value()}};
    if (!v) {
        if (args.as_json)
            out << doc.dump(2) << '\n';
        else
            out << "method: exact\nINFEASIBLE\n";
        return kExitOk;
    }

    const AllocationRule rule{AdditivePairwise{u, *v}};
    if (args.as_json) {
        json pairs = json::array();
        for (int k = 0; k < PairValues::pair_count(file.n); ++k) {
            const auto [i, j] = PairValues::pair_at(file.n, k);
            pairs.push_back(json{{"pair", std::to_string(i) + "," + std::to_string(j)},
                                 {"value", round9(v->raw()[static_cast<std::size_t>(k)])}});
        }
        doc["v"] = pairs;
        if (objective) doc["objective"] = round9(*objective);
        if (residual) doc["residual"] = round9(*residual);
        json prefs = json::object();
        for (int player = 1; player <= file.n; ++player) {
            json list = json::array();
            for (const PlayerSet& s : full_preference_list(rule, player, file.n))
                list.push_back(s.to_string());
            prefs[std::to_string(player)] = list;
        }
        doc["preferences"] = prefs;
        out << doc.dump(2) << '\n';
    } else {
        out << "method: " << args.method << '\n';
        for (int k = 0; k < PairValues::pair_count(file.n); ++k) {
            const auto [i, j] = PairValues::pair_at(file.n, k);
            out << "v(" << i << ',' << j << ") = "
                << decimal9(v->raw()[static_cast<std::size_t>(k)]) << '\n';
        }
        if (objective) out << "objective = " << decimal9(*objective) << '\n';
        if (residual) out << "residual = " << decimal9(*residual) << '\n';
        out << "preferences:\n";
        for (int player = 1; player <= file.n; ++player) {
            out << "  player " << player << ':';
            bool first = true;
            for (const PlayerSet& s : full_preference_list(rule, player, file.n)) {
                out << (first ? " " : " > ") << coalition_literal(s);
                first = false;
            }
            out << '\n';
        }
    }
    return kExitOk;
}

// ---- dynamics --------------------------------------------------------------

struct DynamicsArgs {
    std::string game, rule, pairs_from, trace_path;
    std::uint64_t seed = 1;
    std::uint64_t max_rounds = 1000;
    bool as_json = false;
};

int cmd_dynamics(const DynamicsArgs& args, std::ostream& out) {
    const GameFile file = load_game_file(args.game);
    const AllocationRule rule = resolve_rule(args.rule, args.pairs_from, file);
    const DynamicsTrace trace = run_dynamics(rule, args.seed, args.max_rounds);

    if (!args.trace_path.empty()) {
        std::ofstream trace_file(args.trace_path);
        if (!trace_file)
            throw ParseError("cannot open trace file '" + args.trace_path + "'");
        trace.write(trace_file);
    }

    if (args.as_json) {
        json doc{{"command", "dynamics"},
                 {"seed", trace.seed},
                 {"rule", trace.rule_kind},
                 {"converged", trace.outcome.converged},
                 {"rounds", trace.outcome.rounds},
                 {"steps", trace.steps.size()},
                 {"partition", trace.outcome.converged
                                   ? json(trace.outcome.partition->to_string())
                                   : json(nullptr)}};
        out << doc.dump(2) << '\n';
    } else if (trace.outcome.converged) {
        out << "CONVERGED\npartition: " << trace.outcome.partition->to_string()
            << "\nrounds: " << trace.outcome.rounds << '\n';
    } else {
        out << "NO-CONVERGENCE\nrounds: " << trace.outcome.rounds << '\n';
    }
    return trace.outcome.converged ? kExitOk : kExitNoConvergence;
}

// ---- social ----------------------------------------------------------------

struct SocialArgs {
    std::string game, rule, pairs_from;
    std::uint64_t seed = 1;
    std::uint64_t max_rounds = 1000;
    bool as_json = false;
};

int cmd_social(const SocialArgs& args, std::ostream& out) {
    const GameFile file = load_game_file(args.game);
    const auto u = file.characteristic();

    std::optional<SocialReport> report;
    if (args.rule.empty()) {
        auto [pi, value] = social_optimum(u);
        report = SocialReport{value, std::move(pi), std::nullopt, std::nullopt};
    } else {
        const AllocationRule rule = resolve_rule(args.rule, args.pairs_from, file);
        report = anarchy_gap(u, rule, args.seed, args.max_rounds);
    }

    std::optional<double> ratio;
    if (report->achieved_value && *report->achieved_value != 0.0)
        ratio = report->optimum_value / *report->achieved_value;

    if (args.as_json) {
        json doc{{"command", "social"},
                 {"optimum_value", round9(report->optimum_value)},
                 {"optimum_partition", report->optimum_partition.to_string()},
                 {"achieved_value", report->achieved_value
                                        ? json(round9(*report->achieved_value))
                                        : json(nullptr)},
                 {"gap", report->gap ? json(round9(*report->gap)) : json(nullptr)},
                 {"ratio", ratio ? json(round9(*ratio)) : json(nullptr)}};
        out << doc.dump(2) << '\n';
    } else {
        out << "S_u* = " << decimal9(report->optimum_value) << '\n'
            << "Pi* = " << report->optimum_partition.to_string() << '\n';
        if (report->achieved_value)
            out << "S_u = " << decimal9(*report->achieved_value) << '\n'
                << "gap = " << decimal9(*report->gap) << '\n';
        if (ratio) out << "ratio = " << decimal9(*ratio) << '\n';
        if (!args.rule.empty() && !report->achieved_value)
            out << "NO-CONVERGENCE\n";
    }
    return kExitOk;
}

// ---- repro-paper -----------------------------------------------------------

int cmd_repro(bool as_json, std::ostream& out) {
    const auto items = run_repro_suite(paper_fixture());
    std::size_t failures = 0;
    for (const auto& item : items)
        if (item.status == ReproStatus::fail) ++failures;

    if (as_json) {
        json list = json::array();
        for (const auto& item : items) {
            const char* status = item.status == ReproStatus::pass ? "pass"
                                 : item.status == ReproStatus::fail
                                     ? "fail"
                                     : "expected-deviation";
            list.push_back(json{{"name", item.name},
                                {"status", status},
                                {"detail", item.detail}});
        }
        out << json{{"command", "repro-paper"},
                    {"items", list},
                    {"failures", failures}}
                   .dump(2)
            << '\n';
    } else {
        for (const auto& item : items) {
            const char* status = item.status == ReproStatus::pass ? "PASS"
                                 : item.status == ReproStatus::fail
                                     ? "FAIL"
                                     : "EXPECTED-DEVIATION";
            out << status << ' ' << item.name << " - " << item.detail << '\n';
        }
        out << failures << " failure" << (failures == 1 ? "" : "s") << '\n';
    }
    return failures == 0 ? kExitOk : kExitUnstableOrReproFail;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"Hedonic coalition formation solver"};
    app.require_subcommand(1);

    CheckArgs check_args;
    auto* check = app.add_subcommand(
        "check", "Decide Nash stability of a partition under a rule");
    check->add_option("game", check_args.game, "game file")->required();
    check->add_option("partition", check_args.partition,
                      "partition literal like {1,4|2|3}")
        ->required();
    check->add_option("--rule", check_args.rule, "allocation rule spec")
        ->required();
    check->add_option("--pairs-from", check_args.pairs_from,
                      "fit method when --rule pairs");
    check->add_flag("--json", check_args.as_json, "machine-readable output");

    EnumerateArgs enum_args;
    auto* enumerate = app.add_subcommand(
        "enumerate", "List every Nash-stable partition of the game");
    enumerate->add_option("game", enum_args.game, "game file")->required();
    enumerate->add_option("--rule", enum_args.rule, "allocation rule spec")
        ->required();
    enumerate->add_option("--pairs-from", enum_args.pairs_from,
                          "fit method when --rule pairs");
    enumerate->add_flag("--json", enum_args.as_json, "machine-readable output");

    FitArgs fit_args;
    auto* fit = app.add_subcommand(
        "fit", "Fit additively separable symmetric pair values");
    fit->add_option("game", fit_args.game, "game file")->required();
    fit->add_option("--method", fit_args.method, "exact | relaxed | lls")
        ->required();
    fit->add_flag("--json", fit_args.as_json, "machine-readable output");

    DynamicsArgs dyn_args;
    auto* dynamics = app.add_subcommand(
        "dynamics", "Run the decentralized best-reply rounds");
    dynamics->add_option("game", dyn_args.game, "game file")->required();
    dynamics->add_option("--rule", dyn_args.rule, "allocation rule spec")
        ->required();
    dynamics->add_option("--pairs-from", dyn_args.pairs_from,
                         "fit method when --rule pairs");
    dynamics->add_option("--seed", dyn_args.seed, "scheduler seed");
    dynamics->add_option("--max-rounds", dyn_args.max_rounds,
                         "round limit before giving up");
    dynamics->add_option("--trace", dyn_args.trace_path, "write a step trace");
    dynamics->add_flag("--json", dyn_args.as_json, "machine-readable output");

    SocialArgs social_args;
    auto* social = app.add_subcommand(
        "social", "Exact social optimum and price of anarchy");
    social->add_option("game", social_args.game, "game file")->required();
    social->add_option("--rule", social_args.rule,
                       "allocation rule spec (enables the equilibrium gap)");
    social->add_option("--pairs-from", social_args.pairs_from,
                       "fit method when --rule pairs");
    social->add_option("--seed", social_args.seed, "scheduler seed");
    social->add_option("--max-rounds", social_args.max_rounds, "round limit");
    social->add_flag("--json", social_args.as_json, "machine-readable output");

    bool repro_json = false;
    auto* repro = app.add_subcommand(
        "repro-paper", "Re-derive the published example results");
    repro->add_flag("--json", repro_json, "machine-readable output");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("hedonic");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (app.got_subcommand(check)) return cmd_check(check_args, out);
        if (app.got_subcommand(enumerate)) return cmd_enumerate(enum_args, out);
        if (app.got_subcommand(fit)) return cmd_fit(fit_args, out);
        if (app.got_subcommand(dynamics)) return cmd_dynamics(dyn_args, out);
        if (app.got_subcommand(social)) return cmd_social(social_args, out);
        if (app.got_subcommand(repro)) return cmd_repro(repro_json, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const UnknownCoalitionError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const LimitExceededError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const NumericalError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    return kExitInputError;
}

}  // namespace hedonic::cli
