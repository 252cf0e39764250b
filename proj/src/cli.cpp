#include "gridresolve/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <optional>

#include "CLI11.hpp"
#include "gridresolve/characterize.hpp"
#include "gridresolve/errors.hpp"
#include "gridresolve/io.hpp"
#include "gridresolve/resolve.hpp"

namespace gridresolve::cli {

namespace {

using Clock = std::chrono::steady_clock;

struct Common {
    bool no_timing = false;
    int indent = -1;
};

struct CheckArgs {
    std::string grid;
    std::string set;
    bool minimal = false;
    bool local = false;
    bool witness = false;
};

struct EnumerateArgs {
    std::string grid;
    std::optional<int> k_max;
    std::string mode = "pure";
    std::string out_path;
    std::uint64_t budget = kDefaultBudget;
    bool certify = false;
};

struct SolveArgs {
    std::string grid;
    std::string weights = "unit";
    std::string algo = "bb";
    std::string minimality_of;
    std::uint64_t node_budget = kDefaultNodeBudget;
    std::uint64_t enumeration_budget = kDefaultBudget;
};

struct ConstructArgs {
    std::string grid;
    std::optional<int> k;
    bool staircase = false;
};

class Timer {
public:
    explicit Timer(bool enabled) : enabled_(enabled), t0_(Clock::now()) {}
    double ms() const {
        return enabled_ ? std::chrono::duration<double, std::milli>(Clock::now() - t0_).count() : -1.0;
    }

private:
    bool enabled_;
    Clock::time_point t0_;
};

void emit(std::ostream& out, const Json& j, const Common& c) { out << j.dump(c.indent) << '\n'; }

Json pair_list(const std::vector<UnresolvedPair>& pairs) {
    Json arr = Json::array();
    for (const auto& p : pairs) arr.push_back(to_json(p));
    return arr;
}

int cmd_check(const CheckArgs& a, const Common& c, std::ostream& out) {
    const Timer timer(!c.no_timing);
    const Grid g = parse_grid_spec(a.grid);
    const VertexSet S = parse_set_spec(a.set);
    S.require_within(g);

    Json result;
    bool value = false;
    const auto unresolved = unresolved_pairs(g, S);
    const bool resolving = unresolved.empty();

    if (a.local) {
        std::vector<Vertex> failing;
        for (const auto& v : g.vertices()) {
            if (!has_locally_resolved_neighbourhood(g, S, v)) failing.push_back(v);
        }
        value = failing.empty();
        result = Json{{"predicate", "locally-resolved"}, {"value", value}, {"set", format_set(S)}};
        if (!failing.empty()) {
            result["first_failing_vertex"] = to_string(failing.front());
        }
        if (a.witness) {
            Json details = Json::array();
            for (const auto& v : failing) {
                Json entry{{"vertex", to_string(v)}};
                if (auto w = quadrant_unresolved_witness(g, S, v)) entry["quadrant_witness"] = to_json(*w);
                details.push_back(std::move(entry));
            }
            result["failing_vertices"] = std::move(details);
        }
    } else if (a.minimal) {
        value = is_minimal(g, S);
        result = Json{{"predicate", "minimal"}, {"value", value}, {"set", format_set(S)}, {"resolving", resolving}};
        if (!resolving) result["witness"] = to_json(unresolved.front());
        if (a.witness) {
            if (!resolving) {
                result["unresolved_pairs"] = pair_list(unresolved);
            } else {
                Json removable = Json::array();
                for (const auto& v : S) {
                    if (S.size() > 1 && is_resolving(g, S.without(v))) removable.push_back(to_string(v));
                }
                result["removable"] = std::move(removable);
            }
        }
    } else {
        value = resolving;
        result = Json{{"predicate", "resolving"}, {"value", value}, {"set", format_set(S)}};
        if (!resolving) result["witness"] = to_json(unresolved.front());
        if (a.witness && !resolving) result["unresolved_pairs"] = pair_list(unresolved);
    }
    emit(out, make_report("check", g, std::move(result), timer.ms()), c);
    return value ? kTrue : kFalse;
}

EnumerationMode parse_mode(const std::string& s) {
    if (s == "pure") return EnumerationMode::PureOracle;
    if (s == "pruned") return EnumerationMode::TheoremPruned;
    throw InputError("unknown mode " + s);
}

int cmd_enumerate(const EnumerateArgs& a, const Common& c, std::ostream& out) {
    const Timer timer(!c.no_timing);
    const Grid g = parse_grid_spec(a.grid);
    const EnumerationOptions options{a.budget};
    if (a.certify) {
        const bool ok = certify_bound(g, options);
        Json result{{"certified", ok}, {"bound", max_minimal_cardinality(g)}};
        emit(out, make_report("enumerate", g, std::move(result), timer.ms()), c);
        return ok ? kTrue : kFalse;
    }
    const int k_max = a.k_max.value_or(2 * g.n());
    const auto cat = enumerate_minimals(g, k_max, parse_mode(a.mode), options);
    if (!a.out_path.empty()) {
        std::ofstream file(a.out_path);
        if (!file) throw InputError("cannot write " + a.out_path);
        file << make_report("enumerate", g, to_json(cat, true), -1.0).dump(c.indent) << '\n';
        if (!file) throw InputError("failed writing " + a.out_path);
        Json result = to_json(cat, false);
        result["written_to"] = a.out_path;
        emit(out, make_report("enumerate", g, std::move(result), timer.ms()), c);
    } else {
        emit(out, make_report("enumerate", g, to_json(cat, true), timer.ms()), c);
    }
    return kTrue;
}

Algorithm parse_algo(const std::string& s) {
    if (s == "bb") return Algorithm::BranchBound;
    if (s == "exhaustive") return Algorithm::ExhaustiveMinimals;
    if (s == "greedy") return Algorithm::Greedy;
    throw InputError("unknown algorithm " + s);
}

int cmd_solve(const SolveArgs& a, const Common& c, std::ostream& out) {
    const Timer timer(!c.no_timing);
    const Grid g = parse_grid_spec(a.grid);
    SolverOptions options;
    options.node_budget = a.node_budget;
    options.enumeration.budget = a.enumeration_budget;

    if (!a.minimality_of.empty()) {
        const VertexSet S = parse_set_spec(a.minimality_of);
        const auto verdict = minimality_by_weights(g, S, options);
        Json result{{"set", format_set(S)}, {"verdict", to_string(verdict)}};
        emit(out, make_report("solve", g, std::move(result), timer.ms()), c);
        return verdict == MinimalityVerdict::Minimal ? kTrue : kFalse;
    }

    const WeightMap w = a.weights == "unit" ? WeightMap::unit(g) : load_weights(g, a.weights);
    const auto algorithm = parse_algo(a.algo);
    const auto sol = solve_min_weight(g, w, algorithm, options);
    Json result = to_json(sol);
    result["algorithm"] = to_string(algorithm);
    emit(out, make_report("solve", g, std::move(result), timer.ms()), c);
    return kTrue;
}

int cmd_construct(const ConstructArgs& a, const Common& c, std::ostream& out) {
    const Timer timer(!c.no_timing);
    const Grid g = parse_grid_spec(a.grid);
    VertexSet S;
    if (a.staircase) {
        S = construct_staircase_max(g);
    } else {
        S = construct_k_minimal(g, a.k.value());
    }
    Json result{{"set", format_set(S)}, {"size", S.size()}, {"minimal", is_minimal(g, S)}};
    emit(out, make_report("construct", g, std::move(result), timer.ms()), c);
    return kTrue;
}

std::vector<std::string> reversed(const std::vector<std::string>& args) {
    return {args.rbegin(), args.rend()};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Minimal resolving sets on grid graphs"};
    app.name("gridresolve");
    app.require_subcommand(1);

    Common common;
    app.add_flag("--no-timing", common.no_timing, "Leave elapsed_ms out of the report");
    app.add_option("--indent", common.indent, "Pretty-print JSON with this indent");

    CheckArgs check;
    auto* c = app.add_subcommand("check", "Test whether a vertex set resolves the grid");
    c->add_option("grid", check.grid, "Grid spec WxH")->required();
    c->add_option("set", check.set, "Set spec (x,y);(x,y)")->required();
    auto* minimal_flag = c->add_flag("--minimal", check.minimal, "Test minimality instead");
    c->add_flag("--local", check.local, "Test that every neighbourhood is locally resolved")->excludes(minimal_flag);
    c->add_flag("--witness", check.witness, "List every unresolved pair or failing vertex");

    EnumerateArgs enumerate;
    auto* e = app.add_subcommand("enumerate", "List every minimal resolving set up to a cardinality");
    e->add_option("grid", enumerate.grid, "Grid spec WxH")->required();
    e->add_option("--kmax", enumerate.k_max, "Largest cardinality (default 2*min(W,H))");
    e->add_option("--mode", enumerate.mode, "pure or pruned")->check(CLI::IsMember({"pure", "pruned"}));
    e->add_option("--out", enumerate.out_path, "Write the full catalog here");
    e->add_option("--budget", enumerate.budget, "Subset budget (pure) or node budget (pruned)");
    e->add_flag("--certify", enumerate.certify, "Check the largest minimal has 2*min(W,H)-2 vertices");

    SolveArgs solve;
    auto* s = app.add_subcommand("solve", "Minimum-weight resolving set");
    s->add_option("grid", solve.grid, "Grid spec WxH")->required();
    s->add_option("--weights", solve.weights, "Weights JSON file or \"unit\"");
    s->add_option("--algo", solve.algo, "bb, exhaustive or greedy")
        ->check(CLI::IsMember({"bb", "exhaustive", "greedy"}));
    s->add_option("--minimality-of", solve.minimality_of, "Classify this set via the weight reduction");
    s->add_option("--node-budget", solve.node_budget, "Branch-and-bound node limit");
    s->add_option("--budget", solve.enumeration_budget, "Subset budget for --algo exhaustive");

    ConstructArgs construct;
    auto* k = app.add_subcommand("construct", "Build a minimal resolving set of a given size");
    k->add_option("grid", construct.grid, "Grid spec WxH")->required();
    auto* k_opt = k->add_option("--k", construct.k, "Cardinality");
    k->add_flag("--staircase", construct.staircase, "Largest minimal, 2*min(W,H)-2 vertices")->excludes(k_opt);

    try {
        auto argv = reversed(args);
        app.parse(argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }

    if (k->parsed() && !construct.k && !construct.staircase) {
        err << "construct needs --k or --staircase\nRun with --help for more information.\n";
        return kUsage;
    }

    try {
        if (c->parsed()) return cmd_check(check, common, out);
        if (e->parsed()) return cmd_enumerate(enumerate, common, out);
        if (s->parsed()) return cmd_solve(solve, common, out);
        if (k->parsed()) return cmd_construct(construct, common, out);
    } catch (const ConstructionError& ex) {
        err << "construction failed: " << ex.what() << '\n';
        return kConstructionFailed;
    } catch (const ResourceError& ex) {
        err << "resource limit: " << ex.what() << '\n';
        return kInputOrResource;
    } catch (const InputError& ex) {
        err << "invalid input: " << ex.what() << '\n';
        return kInputOrResource;
    }
    return kUsage;
}

}  // namespace gridresolve::cli
