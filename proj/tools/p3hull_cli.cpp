// p3hull: build graphs, search hull/decycling numbers, simulate infection and
// run verification campaigns.
//
// Exit codes: 0 success, 1 verification failure, 2 invalid input,
// 3 capacity exceeded, 4 construction failed.

#include <unistd.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "p3hull/campaign.hpp"
#include "p3hull/constructions.hpp"
#include "p3hull/decycling.hpp"
#include "p3hull/error.hpp"
#include "p3hull/infection.hpp"
#include "p3hull/io.hpp"
#include "p3hull/search.hpp"

using namespace p3hull;
using nlohmann::json;

namespace {

enum ExitCode { kOk = 0, kCheckFailed = 1, kInvalid = 2, kCapacity = 3, kConstruction = 4 };

struct SourceArgs {
    int n = 0;
    int k = 0;
    std::string perm;
    std::string path;
};

struct Source {
    CLI::App* gp = nullptr;
    CLI::App* surgery = nullptr;
    CLI::App* ggp = nullptr;
    CLI::App* file = nullptr;
};

Source add_sources(CLI::App& parent, SourceArgs& args) {
    Source s;
    s.gp = parent.add_subcommand("gp", "generalized Petersen graph G(n,k)");
    s.surgery = parent.add_subcommand("surgery", "two copies of G(n,k) joined along u0u1");
    s.ggp = parent.add_subcommand("ggp", "GGP(n, sigma) from a cycle-notation permutation");
    s.file = parent.add_subcommand("file", "graph JSON file");
    for (CLI::App* sub : {s.gp, s.surgery}) {
        sub->add_option("--n", args.n, "outer cycle length")->required();
        sub->add_option("--k", args.k, "interior step")->required();
    }
    s.ggp->add_option("--n", args.n, "number of spokes")->required();
    s.ggp->add_option("--perm", args.perm, "permutation, e.g. \"(0 1 2)(3 4 5)\"")->required();
    s.file->add_option("--path", args.path, "graph JSON")->required()->check(CLI::ExistingFile);
    for (CLI::App* sub : {s.gp, s.surgery, s.ggp, s.file}) sub->fallthrough();
    parent.require_subcommand(1);
    return s;
}

Graph load_graph(const Source& s, const SourceArgs& args) {
    if (s.gp->parsed()) return build_generalized_petersen(args.n, args.k);
    if (s.surgery->parsed()) return build_surgery(args.n, args.k);
    if (s.ggp->parsed()) return build_ggp(parse_permutation(args.perm, args.n));
    std::ifstream in(args.path);
    try {
        return graph_from_json(json::parse(in));
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("graph JSON: ") + e.what());
    }
}

std::string resolve_format(const std::string& requested) {
    if (!requested.empty()) return requested;
    return isatty(fileno(stdout)) ? "table" : "json";
}

std::string names(const Graph& g, const VertexSet& s) {
    std::string out;
    s.for_each([&](Vertex v) { out += (out.empty() ? "" : " ") + g.label(v); });
    return out;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw InvalidParams("cannot write " + out_path);
    out << text;
}

// Flat objects print as "key: value" lines in table mode.
void print(const json& doc, const std::string& format) {
    if (format == "json") {
        std::cout << doc.dump() << "\n";
        return;
    }
    for (const auto& [key, value] : doc.items()) {
        std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"P3-hull numbers, decycling sets and infection times of generalized Petersen graphs"};
    app.require_subcommand(1);

    SourceArgs source_args;
    std::string format;
    std::string out_path;
    int parallelism = 1;

    // build
    auto* build = app.add_subcommand("build", "emit a graph as JSON or DOT");
    const Source build_src = add_sources(*build, source_args);
    build->add_option("--format", format, "json | dot | table")->check(CLI::IsMember({"json", "dot", "table"}));
    build->add_option("--out", out_path, "output file (default stdout)");

    // hull
    bool exact = false;
    bool construct = false;
    bool trace = false;
    bool early_exit = false;
    std::optional<int> hint;
    auto* hull_cmd = app.add_subcommand("hull", "P3-hull number by exact search or closed-form construction");
    const Source hull_src = add_sources(*hull_cmd, source_args);
    auto* exact_flag = hull_cmd->add_flag("--exact", exact, "exhaustive search (default)");
    hull_cmd->add_flag("--construct", construct, "closed-form infecting set")->excludes(exact_flag);
    hull_cmd->add_flag("--trace", trace, "include the infection trace of the witness");
    hull_cmd->add_flag("--early-exit", early_exit, "do not refute the level below the starting cardinality");
    hull_cmd->add_option("--hint", hint, "starting cardinality");
    hull_cmd->add_option("--parallelism", parallelism, "worker threads")->check(CLI::PositiveNumber);
    hull_cmd->add_option("--format", format, "json | table")->check(CLI::IsMember({"json", "table"}));

    // decycle
    auto* decycle_cmd = app.add_subcommand("decycle", "decycling number by exact search");
    const Source decycle_src = add_sources(*decycle_cmd, source_args);
    decycle_cmd->add_option("--hint", hint, "starting cardinality");
    decycle_cmd->add_flag("--early-exit", early_exit, "do not refute the level below the starting cardinality");
    decycle_cmd->add_option("--parallelism", parallelism, "worker threads")->check(CLI::PositiveNumber);
    decycle_cmd->add_option("--format", format, "json | table")->check(CLI::IsMember({"json", "table"}));

    // time
    std::string set_text;
    auto* time_cmd = app.add_subcommand("time", "simulate infection from a vertex set");
    const Source time_src = add_sources(*time_cmd, source_args);
    time_cmd->add_option("--set", set_text, "vertices, e.g. \"u0,v2,v3\" or \"0 14 15\"")->required();
    time_cmd->add_option("--format", format, "json | table")->check(CLI::IsMember({"json", "table"}));

    // profile
    auto* profile_cmd = app.add_subcommand("profile", "forest structure of the complement of a decycling set");
    const Source profile_src = add_sources(*profile_cmd, source_args);
    profile_cmd->add_option("--set", set_text, "vertices, e.g. \"u0,v2,v3\"")->required();
    profile_cmd->add_option("--format", format, "json | table")->check(CLI::IsMember({"json", "table"}));

    // spectrum
    int spectrum_n = 0;
    auto* spectrum_cmd = app.add_subcommand("spectrum", "maximum tree diameters over all minimum hull sets of G(n,1)");
    spectrum_cmd->add_option("--n", spectrum_n, "3 <= n <= 12")->required();
    spectrum_cmd->add_option("--parallelism", parallelism, "worker threads")->check(CLI::PositiveNumber);
    spectrum_cmd->add_option("--format", format, "json | table")->check(CLI::IsMember({"json", "table"}));

    // verify
    std::string config_path;
    std::string family_text;
    std::string n_text;
    std::string k_text;
    std::string checks_text;
    bool no_timing = false;
    auto* verify_cmd = app.add_subcommand("verify", "run a verification campaign and write a report");
    verify_cmd->add_option("--config", config_path, "key=value config file")->check(CLI::ExistingFile);
    auto* family_opt = verify_cmd->add_option("--family", family_text, "gp | surgery | gn1-spectrum | ggp");
    auto* n_opt = verify_cmd->add_option("--n", n_text, "range a..b");
    auto* k_opt = verify_cmd->add_option("--k", k_text, "all | fixed k");
    auto* checks_opt = verify_cmd->add_option("--checks", checks_text, "comma-separated check ids");
    auto* out_opt = verify_cmd->add_option("--out", out_path, "report file (default stdout)");
    auto* par_opt = verify_cmd->add_option("--parallelism", parallelism, "worker threads")->check(CLI::PositiveNumber);
    verify_cmd->add_flag("--no-timing", no_timing, "write ms as 0 for byte-stable reports");
    verify_cmd->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInvalid;
    }

    try {
        if (build->parsed()) {
            const Graph g = load_graph(build_src, source_args);
            const std::string fmt = format.empty() ? "json" : format;
            if (fmt == "dot") {
                emit(to_dot(g), out_path);
            } else if (fmt == "json") {
                emit(graph_to_json(g).dump() + "\n", out_path);
            } else {
                const auto report = connectivity_and_degree_report(g);
                std::ostringstream table;
                table << "family: " << family_name(g.family().family) << "\nvertices: " << g.vertex_count()
                      << "\nedges: " << g.edge_count() << "\nconnected: " << report.connected
                      << "\ncubic: " << report.is_cubic << "\n";
                emit(table.str(), out_path);
            }
            return kOk;
        }

        if (hull_cmd->parsed()) {
            const Graph g = load_graph(hull_src, source_args);
            const std::string fmt = resolve_format(format);
            json doc;
            VertexSet witness;
            if (construct) {
                const auto& tag = g.family();
                switch (tag.family) {
                    case Family::GeneralizedPetersen:
                        witness = canonical_infecting_set(tag.n, tag.k);
                        doc["construction"] = "canonical";
                        doc["predicted_time"] = predicted_infecting_time(tag.n, tag.k);
                        break;
                    case Family::Surgery:
                        witness = surgery_infecting_set(tag.n, tag.k);
                        doc["construction"] = "surgery";
                        break;
                    case Family::GGP: {
                        const auto perm = Permutation::from_cycles(tag.n, tag.cycles);
                        const auto start = ggp_path_condition(perm);
                        if (!start) throw PathConditionUnmet("no exterior path meets distinct odd cycles");
                        witness = ggp_infecting_set(perm, *start);
                        doc["construction"] = "ggp-path";
                        doc["path_start"] = *start;
                        break;
                    }
                    case Family::Custom:
                        throw InvalidParams("--construct needs a gp, surgery or ggp graph");
                }
                doc["size"] = witness.count();
                doc["witness"] = witness.to_indices();
                const auto t = infecting_time(g, witness);
                doc["time"] = t ? json(*t) : json(nullptr);
            } else {
                SearchOptions options;
                options.lower_bound_hint = hint;
                options.early_exit = early_exit;
                options.parallelism = parallelism;
                const auto result = min_hull_number(g, options);
                witness = result.witness;
                doc = result_to_json(result);
            }
            if (fmt == "table") doc["witness"] = names(g, witness);
            if (trace) doc["trace"] = trace_to_json(hull_closure(g, witness));
            print(doc, fmt);
            return kOk;
        }

        if (decycle_cmd->parsed()) {
            const Graph g = load_graph(decycle_src, source_args);
            const std::string fmt = resolve_format(format);
            SearchOptions options;
            options.lower_bound_hint = hint;
            options.early_exit = early_exit;
            options.parallelism = parallelism;
            const auto result = min_decycling_number(g, options);
            json doc = result_to_json(result);
            if (fmt == "table") doc["witness"] = names(g, result.witness);
            print(doc, fmt);
            return kOk;
        }

        if (time_cmd->parsed()) {
            const Graph g = load_graph(time_src, source_args);
            const auto s = parse_vertex_set(g, set_text);
            print(trace_to_json(hull_closure(g, s)), resolve_format(format));
            return kOk;
        }

        if (profile_cmd->parsed()) {
            const Graph g = load_graph(profile_src, source_args);
            const auto s = parse_vertex_set(g, set_text);
            print(profile_to_json(forest_profile(g, s)), resolve_format(format));
            return kOk;
        }

        if (spectrum_cmd->parsed()) {
            print(spectrum_to_json(diameter_spectrum_gn1(spectrum_n, parallelism)), resolve_format(format));
            return kOk;
        }

        if (verify_cmd->parsed()) {
            CampaignConfig config;
            if (!config_path.empty()) {
                std::ifstream in(config_path);
                std::stringstream buffer;
                buffer << in.rdbuf();
                config = parse_config_file(buffer.str());
            }
            if (family_opt->count() > 0) config.family = parse_campaign_family(family_text);
            if (n_opt->count() > 0) std::tie(config.n_min, config.n_max) = parse_n_range(n_text);
            if (k_opt->count() > 0) {
                if (k_text == "all") config.fixed_k.reset();
                else config.fixed_k = std::stoi(k_text);
            }
            if (checks_opt->count() > 0) {
                config.checks.clear();
                std::stringstream list(checks_text);
                for (std::string item; std::getline(list, item, ',');)
                    if (!item.empty()) config.checks.push_back(item);
            }
            if (checks_opt->count() == 0 && config.checks.empty()) config.checks = checks_for(config.family);
            if (out_opt->count() > 0) config.output_path = out_path;
            if (par_opt->count() > 0) config.parallelism = parallelism;
            if (no_timing) config.timing = false;

            const auto report = run_campaign(config);
            const std::string text = format == "json" ? report_to_json(report, config.timing).dump(2) + "\n"
                                                      : report_to_csv(report, config.timing);
            emit(text, config.output_path);
            std::size_t failed = 0;
            for (const auto& row : report.rows) failed += row.pass ? 0 : 1;
            std::cerr << report.rows.size() << " checks, " << failed << " failed\n";
            return report.all_pass() ? kOk : kCheckFailed;
        }
    } catch (const ExceedsCapacity& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kCapacity;
    } catch (const ConstructionFailed& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kConstruction;
    } catch (const PathConditionUnmet& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kConstruction;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    }
    return kOk;
}
