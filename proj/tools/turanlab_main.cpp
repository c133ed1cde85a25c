#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "turanlab/canonical.hpp"
#include "turanlab/counting.hpp"
#include "turanlab/enumeration.hpp"
#include "turanlab/extremal.hpp"
#include "turanlab/graph.hpp"
#include "turanlab/theorem_lab.hpp"

using json = nlohmann::json;
using namespace turanlab;

namespace {

// Graph arguments: an inline graph6 record, "-" for one line from standard
// input, or "@path" for the first line of a file.
Graph read_graph_arg(const std::string& arg) {
    if (arg == "-") {
        std::string line;
        if (!std::getline(std::cin, line)) throw MalformedGraph6("no graph6 record on stdin");
        if (!line.empty() && line.back() == '\r') line.pop_back();
        return graph_from_graph6(line);
    }
    if (!arg.empty() && arg.front() == '@') {
        std::ifstream in(arg.substr(1));
        if (!in.is_open()) throw IoFailure("cannot open " + arg.substr(1));
        std::string line;
        if (!std::getline(in, line)) throw MalformedGraph6("no graph6 record in " + arg.substr(1));
        if (!line.empty() && line.back() == '\r') line.pop_back();
        return graph_from_graph6(line);
    }
    return graph_from_graph6(arg);
}

std::string resolve_catalog_path(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("TURANLAB_CATALOG")) return env;
    return {};
}

json record_to_json(const ExtremalRecord& rec) {
    return json{{"n", rec.n},
                {"pattern", rec.h_g6},
                {"forbidden", rec.f_g6},
                {"value", rec.value},
                {"witnesses", rec.witnesses},
                {"exhaustive", rec.exhaustive},
                {"witnesses_truncated", rec.witnesses_truncated}};
}

json bracket_to_json(const DensityBracket& b) {
    return json{{"lower", b.lower.str()},
                {"upper", b.upper.str()},
                {"lower_n", b.lower_n},
                {"upper_n", b.upper_n}};
}

DensityBracket bracket_from_catalog(const Graph& h, const Graph& f, const Catalog& catalog) {
    int max_n = -1;
    for (const ExtremalRecord& rec : catalog.entries_for(h, f))
        if (rec.exhaustive && rec.n >= h.order()) max_n = std::max(max_n, rec.n);
    if (max_n < 0)
        throw NoValidM("catalog holds no exhaustive ex(n, h, f) record for this pair");
    return density_bracket(h, f, max_n, catalog);
}

struct Options {
    std::string pattern, host, forbid, graph, from, to, stream, catalog, threshold, c, alpha, q;
    int n = 0, parts = 0, r = 0, k = 0, t = 0, m = 0, x = 0, max_n = 0, threads = 1;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"turanlab: exact generalized Turan computations at desk scale"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--threads", o.threads, "worker pool size for shardable operations");

    auto* cmd_count = app.add_subcommand("count", "count copies of a pattern in a host graph");
    cmd_count->add_option("--pattern", o.pattern)->required();
    cmd_count->add_option("--host", o.host)->required();

    auto* cmd_cliques = app.add_subcommand("cliques", "count K_r copies in a host graph");
    cmd_cliques->add_option("--r", o.r)->required();
    cmd_cliques->add_option("--host", o.host)->required();

    auto* cmd_chromatic = app.add_subcommand("chromatic", "exact chromatic number");
    cmd_chromatic->add_option("--graph", o.graph)->required();

    auto* cmd_hom = app.add_subcommand("hom", "does a homomorphism exist from --from to --to");
    cmd_hom->add_option("--from", o.from)->required();
    cmd_hom->add_option("--to", o.to)->required();

    auto* cmd_turan = app.add_subcommand("turan-graph", "emit the Turan graph T_parts(n)");
    cmd_turan->add_option("--n", o.n)->required();
    cmd_turan->add_option("--parts", o.parts)->required();

    auto* cmd_blowup = app.add_subcommand("blowup", "emit the t-fold blow-up of a graph");
    cmd_blowup->add_option("--graph", o.graph)->required();
    cmd_blowup->add_option("--t", o.t)->required();

    auto* cmd_enum = app.add_subcommand(
        "enumerate", "stream one graph6 line per isomorphism class of F-free graphs");
    cmd_enum->add_option("--n", o.n)->required();
    cmd_enum->add_option("--forbid", o.forbid)->required();

    auto* cmd_extremal = app.add_subcommand("extremal", "compute ex(n, H, F) with witnesses");
    cmd_extremal->add_option("--n", o.n)->required();
    cmd_extremal->add_option("--pattern", o.pattern)->required();
    cmd_extremal->add_option("--forbid", o.forbid)->required();
    cmd_extremal->add_option("--stream", o.stream, "graph6 file from an external enumerator");
    cmd_extremal->add_option("--catalog", o.catalog);

    auto* cmd_degen = app.add_subcommand("degenerate", "is (H, F) a degenerate pair");
    cmd_degen->add_option("--pattern", o.pattern)->required();
    cmd_degen->add_option("--forbid", o.forbid)->required();

    auto* cmd_density = app.add_subcommand("density", "finite-n bracket for pi(H, F)");
    cmd_density->add_option("--pattern", o.pattern)->required();
    cmd_density->add_option("--forbid", o.forbid)->required();
    cmd_density->add_option("--max-n", o.max_n)->required();
    cmd_density->add_option("--catalog", o.catalog);

    auto* cmd_monotone =
        app.add_subcommand("monotone", "check ratio monotonicity over catalog values");
    cmd_monotone->add_option("--catalog", o.catalog);
    cmd_monotone->add_option("--pattern", o.pattern)->required();
    cmd_monotone->add_option("--forbid", o.forbid)->required();

    auto* cmd_census = app.add_subcommand("census", "heavy m-subset census");
    cmd_census->add_option("--host", o.host)->required();
    cmd_census->add_option("--pattern", o.pattern)->required();
    cmd_census->add_option("--m", o.m)->required();
    cmd_census->add_option("--threshold", o.threshold)->required();

    auto* cmd_supersat = app.add_subcommand("supersat", "supersaturation check");
    cmd_supersat->add_option("--host", o.host)->required();
    cmd_supersat->add_option("--pattern", o.pattern)->required();
    cmd_supersat->add_option("--forbid", o.forbid)->required();
    cmd_supersat->add_option("--c", o.c)->required();
    cmd_supersat->add_option("--catalog", o.catalog);

    auto* cmd_sym = app.add_subcommand("symmetrize", "Zykov symmetrization trace");
    cmd_sym->add_option("--graph", o.graph)->required();
    cmd_sym->add_option("--r", o.r)->required();

    auto* cmd_delete = app.add_subcommand("delete-greedy", "greedy minimum-copy deletion trace");
    cmd_delete->add_option("--graph", o.graph)->required();
    cmd_delete->add_option("--r", o.r)->required();
    cmd_delete->add_option("--k", o.k)->required();
    cmd_delete->add_option("--alpha", o.alpha)->required();
    cmd_delete->add_option("--q", o.q);

    auto* cmd_degree = app.add_subcommand("degree-check", "neighborhood degree-bound check");
    cmd_degree->add_option("--graph", o.graph)->required();
    cmd_degree->add_option("--x", o.x)->required();
    cmd_degree->add_option("--k", o.k)->required();
    cmd_degree->add_option("--r", o.r)->required();
    cmd_degree->add_option("--alpha", o.alpha)->required();

    auto* cmd_distance = app.add_subcommand("distance", "edit distance to the nearest balanced "
                                                        "complete multipartite graph");
    cmd_distance->add_option("--graph", o.graph)->required();
    cmd_distance->add_option("--parts", o.parts)->required();

    for (CLI::App* sub : app.get_subcommands([](CLI::App*) { return true; }))
        sub->fallthrough();  // lets --threads sit after the subcommand name

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << json{{"status", "error"}, {"error", "Usage"}, {"message", e.what()}}.dump()
                  << "\n";
        return 2;
    }

    auto started = std::chrono::steady_clock::now();
    try {
        json payload;

        if (cmd_count->parsed()) {
            Graph h = read_graph_arg(o.pattern);
            Graph g = read_graph_arg(o.host);
            payload = json{{"count", count_copies(h, g, o.threads)}};
        } else if (cmd_cliques->parsed()) {
            Graph g = read_graph_arg(o.host);
            payload = json{{"count", count_cliques(o.r, g, o.threads)}};
        } else if (cmd_chromatic->parsed()) {
            payload = json{{"chi", chromatic_number(read_graph_arg(o.graph))}};
        } else if (cmd_hom->parsed()) {
            payload =
                json{{"exists", exists_homomorphism(read_graph_arg(o.from), read_graph_arg(o.to))}};
        } else if (cmd_turan->parsed()) {
            payload = json{{"graph6", graph_to_graph6(turan_graph(o.n, o.parts))}};
        } else if (cmd_blowup->parsed()) {
            payload = json{{"graph6", graph_to_graph6(blow_up(read_graph_arg(o.graph), o.t))}};
        } else if (cmd_enum->parsed()) {
            enumerate_free_graphs(
                o.n, read_graph_arg(o.forbid),
                [](const Graph& g) { std::cout << graph_to_graph6(g) << "\n"; }, o.threads);
            return 0;  // raw graph6 stream, no JSON envelope
        } else if (cmd_extremal->parsed()) {
            Graph h = read_graph_arg(o.pattern);
            Graph f = read_graph_arg(o.forbid);
            ExtremalRecord rec;
            if (!o.stream.empty()) {
                std::ifstream in(o.stream);
                if (!in.is_open()) throw IoFailure("cannot open stream file " + o.stream);
                rec = generalized_turan_over_stream(in, o.n, h, f);
            } else {
                rec = generalized_turan(o.n, h, f, o.threads);
            }
            std::string cat_path = resolve_catalog_path(o.catalog);
            if (!cat_path.empty()) {
                Catalog catalog(cat_path);
                catalog.put(rec);
            }
            payload = record_to_json(rec);
        } else if (cmd_degen->parsed()) {
            payload = json{{"degenerate", is_degenerate_pair(read_graph_arg(o.pattern),
                                                             read_graph_arg(o.forbid))}};
        } else if (cmd_density->parsed()) {
            Catalog catalog(resolve_catalog_path(o.catalog));
            payload = bracket_to_json(
                density_bracket(read_graph_arg(o.pattern), read_graph_arg(o.forbid), o.max_n,
                                catalog));
        } else if (cmd_monotone->parsed()) {
            Catalog catalog(resolve_catalog_path(o.catalog));
            Graph h = read_graph_arg(o.pattern);
            Graph f = read_graph_arg(o.forbid);
            std::vector<std::pair<int, CopyCount>> table;
            for (const ExtremalRecord& rec : catalog.entries_for(h, f))
                if (rec.exhaustive) table.emplace_back(rec.n, rec.value);
            auto violations = check_ratio_monotone(table, h.order());
            json vio = json::array();
            for (const auto& v : violations)
                vio.push_back(json{{"n_lo", v.n_lo},
                                   {"n_hi", v.n_hi},
                                   {"ratio_lo", v.ratio_lo.str()},
                                   {"ratio_hi", v.ratio_hi.str()}});
            json tab = json::array();
            for (const auto& [n, value] : table) tab.push_back(json::array({n, value}));
            payload = json{{"table", tab}, {"violations", vio}};
        } else if (cmd_census->parsed()) {
            CensusResult res = heavy_subset_census(read_graph_arg(o.host),
                                                   read_graph_arg(o.pattern), o.m,
                                                   Rational::parse(o.threshold));
            payload = json{{"heavy_count", res.heavy_count}, {"copy_sum", res.copy_sum}};
        } else if (cmd_supersat->parsed()) {
            Catalog catalog(resolve_catalog_path(o.catalog));
            Graph g = read_graph_arg(o.host);
            Graph h = read_graph_arg(o.pattern);
            Graph f = read_graph_arg(o.forbid);
            DensityBracket bracket = bracket_from_catalog(h, f, catalog);
            SupersaturationReport rep =
                supersaturation_check(g, h, f, Rational::parse(o.c), bracket, catalog);
            payload = json{{"host_copies", rep.host_copies},
                           {"extremal_reference", rep.extremal_reference.str()},
                           {"reference_exact", rep.reference_exact},
                           {"required", rep.required.str()},
                           {"hypothesis_holds", rep.hypothesis_holds},
                           {"m", rep.m},
                           {"threshold", rep.threshold.str()},
                           {"heavy_count", rep.heavy_count},
                           {"copy_sum", rep.copy_sum},
                           {"implied_f_lower", rep.implied_f_lower.str()},
                           {"f_copies", rep.f_copies},
                           {"bracket", bracket_to_json(bracket)}};
        } else if (cmd_sym->parsed()) {
            SymmetrizationTrace trace = symmetrize(read_graph_arg(o.graph), o.r);
            json steps = json::array();
            for (const auto& s : trace.steps)
                steps.push_back(json::array({s.kept, s.replaced, s.count_after}));
            payload = json{{"start", graph_to_graph6(trace.start)},
                           {"end", graph_to_graph6(trace.end)},
                           {"steps", steps},
                           {"step_cap", trace.step_cap}};
        } else if (cmd_delete->parsed()) {
            std::optional<Rational> q;
            if (!o.q.empty()) q = Rational::parse(o.q);
            DeletionTrace trace = greedy_min_copy_deletion(read_graph_arg(o.graph), o.r, o.k,
                                                           Rational::parse(o.alpha), q);
            json steps = json::array();
            for (const auto& s : trace.steps)
                steps.push_back(json::array({s.vertex, s.copies, s.order_before}));
            payload = json{{"outcome", to_string(trace.outcome)},
                           {"q", trace.q.str()},
                           {"beta", trace.beta.str()},
                           {"steps", steps},
                           {"end", graph_to_graph6(trace.end)}};
        } else if (cmd_degree->parsed()) {
            DegreeLemmaReport rep = check_degree_lemma(read_graph_arg(o.graph), o.x, o.k, o.r,
                                                       Rational::parse(o.alpha));
            payload = json{{"neighborhood_copies", rep.neighborhood_copies},
                           {"hypothesis_threshold", rep.hypothesis_threshold.str()},
                           {"hypothesis_holds", rep.hypothesis_holds},
                           {"degree", rep.degree},
                           {"degree_bound", rep.degree_bound.str()},
                           {"conclusion_holds", rep.conclusion_holds}};
        } else if (cmd_distance->parsed()) {
            StabilityReport rep = turan_edit_distance(read_graph_arg(o.graph), o.parts);
            payload = json{{"distance", rep.distance},
                           {"assignment", rep.assignment},
                           {"normalized", rep.normalized.str()}};
        }

        auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - started)
                           .count();
        std::cout << json{{"status", "ok"}, {"elapsed_ms", elapsed}, {"payload", payload}}.dump()
                  << "\n";
        return 0;
    } catch (const Error& e) {
        std::cerr << json{{"status", "error"}, {"error", e.name()}, {"message", e.what()}}.dump()
                  << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << json{{"status", "error"}, {"error", "Usage"}, {"message", e.what()}}.dump()
                  << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << json{{"status", "error"}, {"error", "Internal"}, {"message", e.what()}}.dump()
                  << "\n";
        return 1;
    }
}
