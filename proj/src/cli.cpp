#include "bsat/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bsat/biclique.hpp"
#include "bsat/bipartite_graph.hpp"
#include "bsat/bounds.hpp"
#include "bsat/constructions.hpp"
#include "bsat/decomposition.hpp"
#include "bsat/bitrow.hpp"
#include "bsat/search.hpp"

namespace bsat::cli {

namespace {

using nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

struct Ctx {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
};

BipartiteGraph load_graph(const std::string& path, Ctx& ctx) {
    if (path == "-") return read_bmat(ctx.in);
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open input file: " + path);
    return read_bmat(f);
}

void emit_text(const std::string& path, Ctx& ctx, const std::string& text) {
    if (path == "-") {
        ctx.out << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open output file: " + path);
    f << text;
}

std::string orientation_name(const SatParams& p) {
    return p.orientation == Orientation::kUnordered ? "unordered" : "ordered";
}

ordered_json params_json(const SatParams& p) {
    return {{"s", p.s}, {"t", p.t}, {"orientation", orientation_name(p)}};
}

ordered_json graph_json(const BipartiteGraph& g) {
    return {{"n_left", g.left_size()},
            {"n_right", g.right_size()},
            {"edges", g.edge_count()},
            {"bmat", to_bmat(g)}};
}

ordered_json record(const std::string& command) {
    return {{"schema_version", kSchemaVersion}, {"command", command}};
}

std::string list_str(const std::vector<int>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "}";
}

ordered_json bound_json(const BoundReport& b) {
    ordered_json j{{"name", b.name},
                   {"value", b.value},
                   {"s", b.s},
                   {"t", b.t},
                   {"n", b.n},
                   {"in_stated_range", b.in_stated_range}};
    if (!b.note.empty()) j["note"] = b.note;
    return j;
}

// ---- verify ----------------------------------------------------------

int cmd_verify(Ctx& ctx, const SatParams& params, const std::string& input,
               const std::string& format) {
    BipartiteGraph g = load_graph(input, ctx);
    SaturationVerdict v = is_saturated(g, params);

    if (format == "json") {
        ordered_json j = record("verify");
        j["params"] = params_json(params);
        j["n_left"] = g.left_size();
        j["n_right"] = g.right_size();
        j["edges"] = g.edge_count();
        switch (v.kind) {
            case SaturationVerdict::Kind::kSaturated:
                j["verdict"] = "saturated";
                break;
            case SaturationVerdict::Kind::kContainsCopy:
                j["verdict"] = "contains_copy";
                j["witness"] = {{"left", v.witness->left}, {"right", v.witness->right}};
                break;
            case SaturationVerdict::Kind::kMisses:
                j["verdict"] = "misses";
                j["missing_edge"] = {v.missing_edge->first, v.missing_edge->second};
                break;
        }
        ctx.out << j.dump(2) << "\n";
    } else {
        ctx.out << "graph: " << g.left_size() << "x" << g.right_size() << ", "
                << g.edge_count() << " edges\n";
        ctx.out << "target: K_{" << params.s << "," << params.t << "} ("
                << orientation_name(params) << ")\n";
        switch (v.kind) {
            case SaturationVerdict::Kind::kSaturated:
                ctx.out << "verdict: saturated\n";
                break;
            case SaturationVerdict::Kind::kContainsCopy:
                ctx.out << "verdict: contains copy, left " << list_str(v.witness->left)
                        << " right " << list_str(v.witness->right) << "\n";
                break;
            case SaturationVerdict::Kind::kMisses:
                ctx.out << "verdict: not saturated, adding (" << v.missing_edge->first << ","
                        << v.missing_edge->second << ") creates no copy\n";
                break;
        }
    }
    return v.saturated() ? 0 : 1;
}

// ---- generate --------------------------------------------------------

int cmd_generate(Ctx& ctx, const std::string& kind, int s, int t, int n, int l,
                 const std::vector<int>& block_sizes, std::uint64_t seed,
                 const std::string& output) {
    BipartiteGraph g(1, 1);
    if (kind == "family") {
        ConstructionSpec spec;
        spec.s = s;
        spec.t = t;
        spec.n = n;
        spec.l = l;
        spec.block_sizes = block_sizes;
        if (seed != 0) spec.regular_seeds.assign(l, seed);
        g = build_family(spec);
    } else if (kind == "star") {
        g = build_ordered_star(s, t, n);
    } else {
        g = build_k23_extremal(n);
    }
    emit_text(output, ctx, to_bmat(g));
    return 0;
}

// ---- saturate --------------------------------------------------------

int cmd_saturate(Ctx& ctx, const SatParams& params, std::uint64_t seed,
                 const std::string& input, const std::string& output,
                 const std::string& format) {
    BipartiteGraph g = load_graph(input, ctx);
    BipartiteGraph result = greedy_saturate(g, params, seed);
    if (format == "json") {
        ordered_json j = record("saturate");
        j["params"] = params_json(params);
        j["seed"] = seed;
        j["edges_before"] = g.edge_count();
        j["edges_after"] = result.edge_count();
        j["graph"] = graph_json(result);
        emit_text(output, ctx, j.dump(2) + "\n");
    } else {
        emit_text(output, ctx, to_bmat(result));
    }
    return 0;
}

// ---- bounds ----------------------------------------------------------

int cmd_bounds(Ctx& ctx, int s, int t, int n, const std::string& format) {
    auto reports = bound_reports(s, t, n);
    if (format == "json") {
        ordered_json j = record("bounds");
        j["s"] = s;
        j["t"] = t;
        j["n"] = n;
        j["bounds"] = ordered_json::array();
        for (const auto& b : reports) j["bounds"].push_back(bound_json(b));
        ctx.out << j.dump(2) << "\n";
    } else {
        ctx.out << "bounds at s=" << s << " t=" << t << " n=" << n << "\n";
        for (const auto& b : reports) {
            ctx.out << "  " << std::left << std::setw(18) << b.name << std::right
                    << std::setw(8) << b.value;
            if (!b.in_stated_range) ctx.out << "  [outside stated range]";
            if (!b.note.empty()) ctx.out << "  (" << b.note << ")";
            ctx.out << "\n";
        }
    }
    return 0;
}

// ---- decompose -------------------------------------------------------

void claim_json(ordered_json& j, const std::string& name, const ClaimCheck& c) {
    ordered_json cj{{"pass", c.pass}};
    if (c.vertex) cj["vertex"] = *c.vertex;
    if (c.pair) cj["pair"] = {c.pair->first, c.pair->second};
    j[name] = cj;
}

int cmd_decompose(Ctx& ctx, const SatParams& params, int user_u0, int user_u0p,
                  const std::string& input, const std::string& format) {
    BipartiteGraph g = load_graph(input, ctx);
    const bool json = format == "json";
    ordered_json j = record("decompose");
    j["params"] = params_json(params);
    j["n"] = g.left_size();
    j["edges"] = g.edge_count();
    std::ostringstream text;
    text << "graph: " << g.left_size() << "x" << g.right_size() << ", " << g.edge_count()
         << " edges, min degree " << g.min_degree() << "\n";

    // the structure presumes a saturated input; desk-sized graphs get checked
    if (static_cast<long long>(g.left_size()) * g.right_size() <= 10000) {
        bool sat = is_saturated(g, params).saturated();
        j["input_saturated"] = sat;
        if (!sat) text << "warning: input is not " << orientation_name(params) << "-saturated\n";
    }

    if (g.min_degree() < params.t - 1) {
        auto p = verify_prop1_path(g, params);
        j["path"] = "prop1";
        j["prop1"] = {{"bound", p.bound}, {"edges", p.edges}, {"holds", p.holds}};
        text << "min degree < t-1: proposition path, bound " << p.bound << ", edges "
             << p.edges << (p.holds ? " (holds)" : " (VIOLATED)") << "\n";
    } else {
        std::optional<CoreSpec> core;
        if (user_u0 >= 0 || user_u0p >= 0) {
            if (user_u0 < 0 || user_u0p < 0)
                throw std::runtime_error("supply both --u0 and --u0p or neither");
            if (g.has_edge(user_u0, user_u0p))
                throw std::runtime_error("(--u0, --u0p) must be a non-edge");
            CoreSpec c;
            c.u0 = user_u0;
            c.u0p = user_u0p;
            c.a0.push_back(user_u0);
            bits::for_each_bit(g.right_row(user_u0p), [&](int w) { c.a0.push_back(w); });
            c.a0p.push_back(user_u0p);
            bits::for_each_bit(g.left_row(user_u0), [&](int w) { c.a0p.push_back(w); });
            std::sort(c.a0.begin(), c.a0.end());
            c.a0.erase(std::unique(c.a0.begin(), c.a0.end()), c.a0.end());
            std::sort(c.a0p.begin(), c.a0p.end());
            c.a0p.erase(std::unique(c.a0p.begin(), c.a0p.end()), c.a0p.end());
            core = std::move(c);
        } else {
            core = find_core(g, params);
        }
        if (!core) {
            j["path"] = "no_core";
            text << "no core: every pair of non-adjacent low-degree vertices is missing\n";
        } else {
            j["path"] = "lemma1";
            Decomposition d = decompose(g, params, *core);
            auto l1 = verify_lemma1(g, params, d);
            auto cons = verify_consequences(g, params, d);
            auto eq = verify_equality_conditions(g, params, d);

            ordered_json cj{{"u0", core->u0}, {"u0p", core->u0p}, {"a0", core->a0},
                            {"a0p", core->a0p}};
            j["core"] = cj;
            j["parts"] = {{"a", d.a},   {"b1", d.b1},   {"b2", d.b2},   {"c1", d.c1},
                          {"c2", d.c2}, {"ap", d.ap},   {"b1p", d.b1p}, {"b2p", d.b2p},
                          {"c1p", d.c1p}, {"c2p", d.c2p}};
            j["stats"] = {{"x0", d.stats.x0}, {"x0p", d.stats.x0p}, {"x", d.stats.x},
                          {"xp", d.stats.xp}, {"core_edges", d.stats.core_edges},
                          {"y", d.stats.y},   {"yp", d.stats.yp}};
            j["lemma1"] = {{"bound", l1.bound}, {"edges", l1.edges}, {"slack", l1.slack},
                           {"holds", l1.holds}};
            ordered_json cons_j;
            claim_json(cons_j, "c2_complete", cons.c2_complete);
            claim_json(cons_j, "cprime_degree", cons.cprime_degree);
            claim_json(cons_j, "c_degree", cons.c_degree);
            j["consequences"] = cons_j;
            ordered_json eq_j{{"applicable", eq.applicable}};
            if (!eq.applicable) {
                eq_j["skip_reason"] = eq.skip_reason;
            } else {
                claim_json(eq_j, "b1p_cp_exact", eq.b1p_cp_exact);
                claim_json(eq_j, "b_exact", eq.b_exact);
                claim_json(eq_j, "c1_exact", eq.c1_exact);
                eq_j["y_identity"] = eq.y_identity;
            }
            j["equality"] = eq_j;

            text << "core: u0=" << core->u0 << " u0'=" << core->u0p << " A0="
                 << list_str(core->a0) << " A0'=" << list_str(core->a0p) << " e="
                 << d.stats.core_edges << "\n";
            text << "shell: A=" << list_str(d.a) << " A'=" << list_str(d.ap) << "\n";
            text << "left:  B1=" << list_str(d.b1) << " B2=" << list_str(d.b2) << " C1="
                 << list_str(d.c1) << " C2=" << list_str(d.c2) << "\n";
            text << "right: B1'=" << list_str(d.b1p) << " B2'=" << list_str(d.b2p)
                 << " C1'=" << list_str(d.c1p) << " C2'=" << list_str(d.c2p) << "\n";
            text << "stats: x0=" << d.stats.x0 << " x0'=" << d.stats.x0p << " x=" << d.stats.x
                 << " x'=" << d.stats.xp << " e=" << d.stats.core_edges << " y=" << d.stats.y
                 << " y'=" << d.stats.yp << "\n";
            text << "lemma bound " << l1.bound << " vs edges " << l1.edges << ": slack "
                 << l1.slack << (l1.holds ? " (holds)" : " (VIOLATED)") << "\n";
            text << "consequences: C2xC2' complete=" << (cons.c2_complete.pass ? "yes" : "NO")
                 << ", C' degrees=" << (cons.cprime_degree.pass ? "yes" : "NO")
                 << ", C degrees=" << (cons.c_degree.pass ? "yes" : "NO") << "\n";
            if (eq.applicable)
                text << "equality conditions: " << (eq.all_pass() ? "all pass" : "FAILED")
                     << "\n";
            else
                text << "equality conditions: skipped (" << eq.skip_reason << ")\n";
        }
    }
    if (json)
        ctx.out << j.dump(2) << "\n";
    else
        ctx.out << text.str();
    return 0;
}

// ---- search / wsat-search / table -------------------------------------

ordered_json outcome_json(const SearchOutcome& o) {
    ordered_json j{{"mode", o.mode == SearchOutcome::Mode::kSat ? "sat" : "wsat"},
                   {"params", params_json(o.params)},
                   {"n", o.n}};
    if (o.minimum)
        j["minimum"] = *o.minimum;
    else
        j["minimum"] = nullptr;
    j["witness_count"] = o.witness_count;
    j["witnesses"] = ordered_json::array();
    for (const auto& w : o.witnesses) j["witnesses"].push_back(graph_json(w));
    j["stats"] = {{"graphs_tested", o.graphs_tested},
                  {"graphs_generated", o.graphs_generated},
                  {"pruned_not_free", o.pruned_not_free}};
    return j;
}

void outcome_text(std::ostream& os, const SearchOutcome& o) {
    os << (o.mode == SearchOutcome::Mode::kSat ? "sat" : "w-sat") << "(K_{" << o.n << ","
       << o.n << "}, K_{" << o.params.s << "," << o.params.t << "} "
       << orientation_name(o.params) << ")";
    if (o.minimum)
        os << ": minimum " << *o.minimum << " (" << o.witness_count
           << " witness class" << (o.witness_count == 1 ? "" : "es") << ")\n";
    else
        os << ": none\n";
    os << "  tested " << o.graphs_tested << " canonical graphs, generated "
       << o.graphs_generated << ", pruned " << o.pruned_not_free << " non-free extensions\n";
    for (const auto& w : o.witnesses) {
        os << "witness:\n";
        std::istringstream lines(to_bmat(w));
        std::string line;
        while (std::getline(lines, line)) os << "  " << line << "\n";
    }
}

int cmd_search(Ctx& ctx, bool wsat, int n, const SatParams& params, int witness_cap,
               const SearchLimits& limits, const std::string& format) {
    SearchOutcome o =
        wsat ? search_wsat(n, params, limits) : search_sat(n, params, witness_cap, limits);
    if (format == "json") {
        ordered_json j = record(wsat ? "wsat-search" : "search");
        j["result"] = outcome_json(o);
        ctx.out << j.dump(2) << "\n";
    } else {
        outcome_text(ctx.out, o);
    }
    return 0;
}

int cmd_table(Ctx& ctx, const SatParams& params, int n_min, int n_max,
              const SearchLimits& limits, const std::string& format) {
    SatTable table = sat_table(params, n_min, n_max, limits);
    if (format == "json") {
        ordered_json j = record("table");
        j["params"] = params_json(params);
        j["rows"] = ordered_json::array();
        for (const auto& row : table.rows) {
            ordered_json rj{{"n", row.n}, {"result", outcome_json(row.outcome)}};
            rj["bounds"] = ordered_json::array();
            for (const auto& b : row.bounds) {
                ordered_json bj = bound_json(b);
                if (row.outcome.minimum) bj["matches_exact"] = b.value == *row.outcome.minimum;
                rj["bounds"].push_back(bj);
            }
            j["rows"].push_back(rj);
        }
        j["refused"] = ordered_json::array();
        for (const auto& [n, why] : table.refused)
            j["refused"].push_back({{"n", n}, {"reason", why}});
        ctx.out << j.dump(2) << "\n";
    } else {
        ctx.out << "exact " << "K_{" << params.s << "," << params.t << "} "
                << orientation_name(params) << " saturation numbers\n";
        for (const auto& row : table.rows) {
            ctx.out << "n=" << std::setw(2) << row.n << "  minimum=";
            if (row.outcome.minimum)
                ctx.out << std::setw(4) << *row.outcome.minimum;
            else
                ctx.out << "none";
            for (const auto& b : row.bounds) {
                if (b.name == "wsat_envelope") continue;
                ctx.out << "  " << b.name << "=" << b.value;
                if (row.outcome.minimum)
                    ctx.out << (b.value == *row.outcome.minimum ? " (=)" : "");
                if (!b.in_stated_range) ctx.out << " [outside stated range]";
            }
            ctx.out << "\n";
        }
        for (const auto& [n, why] : table.refused)
            ctx.out << "n=" << std::setw(2) << n << "  refused: " << why << "\n";
    }
    return 0;
}

std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> out;
    if (csv.empty()) return out;
    std::istringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ','))
        out.push_back(std::stoi(tok));
    return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    Ctx ctx{in, out, err};

    CLI::App app{"bipartite biclique saturation toolkit"};
    app.require_subcommand(1);

    int s = 1, t = 1, n = 0, l = 1, n_min = 1, n_max = 1;
    int witness_cap = 3, jobs = 1, max_n = -1;
    std::uint64_t seed = 0, max_nodes = 0;
    bool ordered = false;
    std::string input = "-", output = "-", format = "text", block_sizes_csv;

    auto add_st = [&](CLI::App* cmd, bool with_orientation = true) {
        cmd->add_option("--s", s, "smaller class size s")->required()->check(CLI::PositiveNumber);
        cmd->add_option("--t", t, "larger class size t")->required()->check(CLI::PositiveNumber);
        if (with_orientation) {
            auto* of = cmd->add_flag("--ordered", ordered, "s-class must lie on the left side");
            cmd->add_flag("--unordered", "either orientation may land anywhere (default)")
                ->excludes(of);
        }
    };
    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "text | json")
            ->check(CLI::IsMember({"text", "json"}));
    };
    auto add_limits = [&](CLI::App* cmd) {
        cmd->add_option("--jobs", jobs, "worker threads; the outcome does not depend on it")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--max-n", max_n, "raise the feasibility side cap");
        cmd->add_option("--max-nodes", max_nodes, "generated-graph budget before refusal");
    };

    auto* verify = app.add_subcommand("verify", "read a bmat graph and test saturation");
    add_st(verify);
    verify->add_option("--input,-i", input, "bmat file, - for stdin");
    add_format(verify);

    auto* generate = app.add_subcommand("generate", "emit a construction in bmat form");
    bool gen_family = false, gen_star = false, gen_k23 = false;
    generate->add_flag("--family", gen_family, "block family with the conjectured edge count");
    generate->add_flag("--star", gen_star, "ordered star construction");
    generate->add_flag("--k23", gen_k23, "3n-2 edge K_{2,3}-extremal graph");
    generate->add_option("--s", s, "smaller class size s")->check(CLI::PositiveNumber);
    generate->add_option("--t", t, "larger class size t")->check(CLI::PositiveNumber);
    generate->add_option("--n", n, "side size")->required()->check(CLI::PositiveNumber);
    generate->add_option("--l", l, "number of blocks (family)")->check(CLI::PositiveNumber);
    generate->add_option("--block-sizes", block_sizes_csv, "comma list, l block sizes");
    generate->add_option("--seed", seed, "rotation seed for the regular block graphs");
    generate->add_option("--output,-o", output, "bmat file, - for stdout");

    auto* saturate = app.add_subcommand("saturate", "greedily saturate an H-free seed graph");
    add_st(saturate);
    saturate->add_option("--seed", seed, "order seed for the greedy completion");
    saturate->add_option("--input,-i", input, "bmat file, - for stdin");
    saturate->add_option("--output,-o", output, "bmat file, - for stdout");
    add_format(saturate);

    auto* bounds_cmd = app.add_subcommand("bounds", "print the closed-form bound values");
    add_st(bounds_cmd, false);
    bounds_cmd->add_option("--n", n, "side size")->required()->check(CLI::PositiveNumber);
    add_format(bounds_cmd);

    auto* decomp = app.add_subcommand("decompose", "core/shell structure and bound checks");
    add_st(decomp);
    int user_u0 = -1, user_u0p = -1;
    decomp->add_option("--u0", user_u0, "left vertex of a user-supplied core pair");
    decomp->add_option("--u0p", user_u0p, "right vertex of a user-supplied core pair");
    decomp->add_option("--input,-i", input, "bmat file, - for stdin");
    add_format(decomp);

    auto* search_cmd = app.add_subcommand("search", "exact saturation number by search");
    add_st(search_cmd);
    search_cmd->add_option("--n", n, "side size")->required()->check(CLI::PositiveNumber);
    search_cmd->add_option("--witness-cap", witness_cap, "witnesses to keep");
    add_limits(search_cmd);
    add_format(search_cmd);

    auto* wsat_cmd = app.add_subcommand("wsat-search", "exact weak saturation number");
    add_st(wsat_cmd);
    wsat_cmd->add_option("--n", n, "side size")->required()->check(CLI::PositiveNumber);
    add_limits(wsat_cmd);
    add_format(wsat_cmd);

    auto* table_cmd = app.add_subcommand("table", "search a range of n and compare to bounds");
    add_st(table_cmd);
    table_cmd->add_option("--n-min", n_min, "first n")->required()->check(CLI::PositiveNumber);
    table_cmd->add_option("--n-max", n_max, "last n")->required()->check(CLI::PositiveNumber);
    add_limits(table_cmd);
    add_format(table_cmd);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        SearchLimits limits;
        if (max_n > 0) {
            limits.max_side = max_n;
            limits.wsat_max_side = max_n;
        }
        if (max_nodes > 0) limits.max_generated = max_nodes;
        limits.jobs = jobs;
        auto params = [&] {
            return SatParams(s, t, ordered ? Orientation::kOrdered : Orientation::kUnordered);
        };

        if (app.got_subcommand(verify)) return cmd_verify(ctx, params(), input, format);
        if (app.got_subcommand(generate)) {
            int picked = int(gen_family) + int(gen_star) + int(gen_k23);
            if (picked != 1)
                throw CLI::ValidationError("generate",
                                           "pick exactly one of --family/--star/--k23");
            std::string kind = gen_family ? "family" : gen_star ? "star" : "k23";
            if (kind != "k23" && (s < 1 || t < s))
                throw CLI::ValidationError("generate", "needs 1 <= s <= t");
            return cmd_generate(ctx, kind, s, t, n, l, parse_int_list(block_sizes_csv), seed,
                                output);
        }
        if (app.got_subcommand(saturate))
            return cmd_saturate(ctx, params(), seed, input, output, format);
        if (app.got_subcommand(bounds_cmd)) return cmd_bounds(ctx, s, t, n, format);
        if (app.got_subcommand(decomp))
            return cmd_decompose(ctx, params(), user_u0, user_u0p, input, format);
        if (app.got_subcommand(search_cmd))
            return cmd_search(ctx, false, n, params(), witness_cap, limits, format);
        if (app.got_subcommand(wsat_cmd))
            return cmd_search(ctx, true, n, params(), witness_cap, limits, format);
        if (app.got_subcommand(table_cmd))
            return cmd_table(ctx, params(), n_min, n_max, limits, format);
        err << "error: no command\n";
        return 2;
    } catch (const CLI::Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const SearchRefused& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const BmatParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace bsat::cli
