// alliance: exact alliance numbers, spectral bounds and bound certification
// for small graphs.
//
//   alliance analyze <source> [--specs LIST] [--theorems LIST] [--format json|csv]
//                             [--max-n K] [--deterministic] [--bounds-only]
//                             [--node-budget N] [--time-budget MS]
//   alliance survey <family> --count N --seed S [--threads T] [--connected]
//   alliance generate <family> --format edgelist|graph6
//
// <source> is a file path, '-' for standard input, or a family spec such as
// petersen, complete:6 or gnp:20:0.3:seed=7.

#include <alliance/alliance.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

enum ExitCode : int {
    exit_ok = 0,
    exit_error = 1,
    exit_parse = 2,
    exit_resource = 3,
    exit_violation = 4,
};

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');)
        if (!item.empty()) out.push_back(item);
    return out;
}

alliance::InputFormat format_for(const std::string& requested, const std::string& path) {
    if (requested == "graph6") return alliance::InputFormat::graph6;
    if (requested == "edgelist") return alliance::InputFormat::edgelist;
    const auto ext = std::filesystem::path(path).extension().string();
    return (ext == ".g6" || ext == ".graph6") ? alliance::InputFormat::graph6 : alliance::InputFormat::edgelist;
}

alliance::Graph load_source(const std::string& source, const std::string& input_format) {
    if (source == "-") return alliance::parse_graph(std::cin, format_for(input_format, ""));
    if (std::filesystem::is_regular_file(source)) {
        std::ifstream in(source, std::ios::binary);
        if (!in) throw std::runtime_error("cannot open '" + source + "'");
        return alliance::parse_graph(in, format_for(input_format, source));
    }
    return alliance::build(source);
}

std::size_t solver_ceiling(std::optional<std::size_t> flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("ALLIANCE_MAX_N")) {
        try {
            return std::stoul(env);
        } catch (const std::exception&) {
            throw alliance::InvalidArgument(std::string("ALLIANCE_MAX_N is not a number: '") + env + "'");
        }
    }
    return alliance::SolverLimits{}.max_n;
}

alliance::Json survey_row_json(const alliance::SurveyRow& row) {
    alliance::Json j;
    j["index"] = row.index;
    j["spec"] = row.spec;
    j["n"] = row.report.n;
    j["m"] = row.report.m;
    j["connected"] = row.report.connected;
    j["violations"] = row.report.violations;
    alliance::Json bounds = alliance::Json::object();
    for (const auto& b : row.report.bounds) {
        if (!b.applicable) continue;
        bounds[b.theorem + "/" + b.target] = {{"bound", *b.value},
                                             {"exact", b.exact ? alliance::Json(*b.exact) : alliance::Json()},
                                             {"gap", b.gap ? alliance::Json(*b.gap) : alliance::Json()}};
    }
    j["bounds"] = bounds;
    return j;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact alliance numbers, spectral lower bounds and their certification"};
    app.require_subcommand(1);

    // analyze
    auto* analyze = app.add_subcommand("analyze", "Analyze one graph");
    std::string source;
    std::string specs_list;
    std::string theorems_list;
    std::string format = "json";
    std::string input_format = "auto";
    std::optional<std::size_t> max_n;
    bool deterministic = false;
    bool bounds_only = false;
    bool all = false;
    std::optional<std::size_t> node_budget;
    std::optional<std::size_t> time_budget_ms;
    analyze->add_option("source", source, "File path, '-' for stdin, or a family spec")->required();
    analyze->add_option("--specs", specs_list, "Comma-separated alliance specs to solve exactly");
    analyze->add_option("--theorems", theorems_list, "Comma-separated theorem ids to evaluate");
    analyze->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "csv"}));
    analyze->add_option("--input-format", input_format, "Input file format")
        ->check(CLI::IsMember({"auto", "edgelist", "graph6"}));
    analyze->add_option("--max-n", max_n, "Solver ceiling on graph order (overrides ALLIANCE_MAX_N)");
    analyze->add_option("--node-budget", node_budget, "Abort exact search after this many search nodes");
    analyze->add_option("--time-budget", time_budget_ms, "Abort exact search after this many milliseconds");
    analyze->add_flag("--deterministic", deterministic, "Omit the timestamp so output is byte-stable");
    analyze->add_flag("--bounds-only", bounds_only, "Skip exact solving");
    analyze->add_flag("--all", all, "Every spec and every theorem (the default)");

    // survey
    auto* survey = app.add_subcommand("survey", "Check bound soundness and tightness over a family");
    std::string family;
    std::size_t count = 1;
    std::uint64_t seed = 0;
    std::size_t threads = 1;
    bool connected_only = false;
    bool quiet = false;
    std::optional<std::size_t> survey_max_n;
    survey->add_option("family", family, "Family spec; integer ranges a..b expand")->required();
    survey->add_option("--count", count, "Samples per random family spec");
    survey->add_option("--seed", seed, "Base seed");
    survey->add_option("--threads", threads, "Worker threads");
    survey->add_option("--max-n", survey_max_n, "Solver ceiling on graph order (overrides ALLIANCE_MAX_N)");
    survey->add_flag("--connected", connected_only, "Redraw disconnected random samples");
    survey->add_flag("--quiet", quiet, "Print only the summary");

    // generate
    auto* generate = app.add_subcommand("generate", "Write a family graph");
    std::string gen_family;
    std::string gen_format = "edgelist";
    generate->add_option("family", gen_family, "Family spec")->required();
    generate->add_option("--format", gen_format, "Output format")->check(CLI::IsMember({"edgelist", "graph6"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) {
            alliance::AnalyzeOptions opt;
            opt.deterministic = deterministic;
            opt.bounds_only = bounds_only;
            opt.limits.max_n = solver_ceiling(max_n);
            opt.limits.max_nodes = node_budget;
            if (time_budget_ms) opt.limits.time_budget = std::chrono::milliseconds(*time_budget_ms);
            if (!all) {
                opt.specs = split_list(specs_list);
                for (const auto& name : opt.specs) {
                    const auto known = alliance::known_spec_names();
                    if (std::find(known.begin(), known.end(), name) == known.end())
                        throw alliance::InvalidArgument("unknown spec '" + name + "'");
                }
                for (const auto& name : split_list(theorems_list)) {
                    const auto t = alliance::theorem_from_name(name);
                    if (!t) throw alliance::InvalidArgument("unknown theorem '" + name + "'");
                    opt.theorems.push_back(*t);
                }
            }
            const auto g = load_source(source, input_format);
            const auto report = alliance::analyze(g, source, opt);
            if (format == "csv")
                std::cout << alliance::to_csv(report);
            else
                std::cout << alliance::to_json(report).dump(2) << "\n";
            return report.violations > 0 ? exit_violation : exit_ok;
        }

        if (survey->parsed()) {
            alliance::SurveyOptions opt;
            opt.family = family;
            opt.count = count;
            opt.seed = seed;
            opt.threads = threads;
            opt.connected_only = connected_only;
            opt.limits.max_n = solver_ceiling(survey_max_n);
            const auto summary = alliance::survey(opt, [&](const alliance::SurveyRow& row) {
                if (!quiet) std::cout << survey_row_json(row).dump() << "\n";
            });
            std::cout << alliance::to_json(summary).dump(2) << "\n";
            if (summary.violations > 0) {
                for (const auto& row : summary.offending)
                    std::cerr << "bound violation on sample " << row.index << " (" << row.spec << "):\n"
                              << row.edgelist;
                return exit_violation;
            }
            return exit_ok;
        }

        if (generate->parsed()) {
            const auto g = alliance::build(gen_family);
            std::cout << (gen_format == "graph6" ? alliance::write_graph6(g) : alliance::write_edgelist(g));
            return exit_ok;
        }
    } catch (const alliance::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return exit_parse;
    } catch (const alliance::ResourceLimit& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return exit_resource;
    } catch (const alliance::SearchTimeout& e) {
        std::cerr << "resource limit: " << e.what() << " (no alliance smaller than " << e.proven_lower_bound()
                  << ")\n";
        return exit_resource;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_error;
    }
    return exit_error;
}
