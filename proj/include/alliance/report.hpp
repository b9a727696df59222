#pragma once

#include "bounds.hpp"
#include "error.hpp"
#include "generators.hpp"
#include "graph.hpp"
#include "io.hpp"
#include "solver.hpp"
#include "spectral.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <functional>
#include <future>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace alliance {

using Json = nlohmann::ordered_json;

/// Rounds to 12 significant digits, the precision reports carry.
inline double report_real(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
}

/// Exact minimum for one alliance variant (or "dom" for γ).
struct ExactValue {
    std::string spec;     ///< spec name, e.g. "globdef"
    std::string quantity; ///< quantity bounded by the theorems, empty for "off"/"strongoff"
    std::size_t value = 0;
    std::vector<std::string> witness; ///< vertex labels
    std::size_t nodes_explored = 0;

    friend bool operator==(const ExactValue&, const ExactValue&) = default;
};

struct BoundEntry {
    std::string theorem;
    std::string target;
    bool applicable = false;
    bool degenerate = false;
    std::optional<long long> value;
    std::string reason;
    std::vector<std::pair<std::string, double>> inputs;
    std::optional<long long> exact;
    std::optional<long long> gap; ///< exact − bound

    friend bool operator==(const BoundEntry&, const BoundEntry&) = default;
};

struct SpectralEntry {
    double lambda = 0.0;
    double mu = 0.0;
    double mu_star = 0.0;
    double residual = 0.0;
    std::size_t iterations = 0;

    friend bool operator==(const SpectralEntry&, const SpectralEntry&) = default;
};

struct AnalysisReport {
    std::string label;
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t min_degree = 0;
    std::size_t max_degree = 0;
    std::optional<std::size_t> regular;
    bool connected = false;
    std::optional<std::size_t> girth; ///< empty = infinite
    std::optional<SpectralEntry> spectral;
    std::vector<ExactValue> exact;
    std::optional<std::string> exact_skipped;
    std::vector<BoundEntry> bounds;
    std::size_t violations = 0;
    std::optional<std::string> generated_at;

    friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

struct AnalyzeOptions {
    std::vector<std::string> specs;      ///< empty = every quantity the theorems bound
    std::vector<TheoremId> theorems;     ///< empty = all
    bool bounds_only = false;
    SolverLimits limits;
    bool deterministic = false;
};

inline constexpr std::string_view domination_spec_name = "dom";

/// All names accepted by --specs.
inline std::vector<std::string> known_spec_names() {
    std::vector<std::string> out;
    for (const auto& s : specs::all) out.emplace_back(spec_name(s));
    out.emplace_back(domination_spec_name);
    return out;
}

namespace detail {

inline std::string quantity_for_spec(const std::string& name) {
    if (name == domination_spec_name) return std::string(quantity_name(Quantity::gamma));
    for (auto q : {Quantity::a, Quantity::a_hat, Quantity::gamma_a, Quantity::gamma_a_hat, Quantity::gamma_ao,
                   Quantity::gamma_ao_hat, Quantity::gamma_ad, Quantity::gamma_ad_hat})
        if (spec_name(*spec_for(q)) == name) return std::string(quantity_name(q));
    return {};
}

inline std::string spec_for_quantity(Quantity q) {
    if (q == Quantity::gamma) return std::string(domination_spec_name);
    if (auto s = spec_for(q)) return std::string(spec_name(*s));
    return {};
}

inline std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

} // namespace detail

/**
 * Computes structure, spectrum, the requested exact alliance numbers and
 * theorem bounds for `g`, pairing each bound with its exact target when
 * available.
 *
 * Exact solving is skipped (and noted in `exact_skipped`) when the graph is
 * above the solver ceiling; other solver errors propagate.
 */
inline AnalysisReport analyze(const Graph& g, const std::string& label, const AnalyzeOptions& opt = {}) {
    AnalysisReport r;
    r.label = label;
    const auto inv = graph_invariants(g);
    r.n = inv.n;
    r.m = inv.m;
    r.min_degree = inv.min_degree;
    r.max_degree = inv.max_degree;
    r.regular = inv.regular;
    r.connected = inv.connected;
    if (const auto gi = girth(g); !gi.is_infinite()) r.girth = gi.length();
    if (inv.spectral)
        r.spectral = SpectralEntry{report_real(inv.spectral->lambda), report_real(inv.spectral->mu),
                                   report_real(inv.spectral->mu_star), report_real(inv.spectral->residual),
                                   inv.spectral->iterations};

    const std::vector<TheoremId> theorems =
        opt.theorems.empty() ? std::vector<TheoremId>(std::begin(all_theorems), std::end(all_theorems))
                             : opt.theorems;
    std::vector<BoundResult> bounds;
    for (auto t : theorems) {
        auto part = evaluate(t, inv);
        bounds.insert(bounds.end(), part.begin(), part.end());
    }

    std::vector<std::string> wanted = opt.specs;
    if (wanted.empty() && !opt.bounds_only) {
        for (const auto& b : bounds) {
            const auto name = detail::spec_for_quantity(b.target);
            if (!name.empty() && std::find(wanted.begin(), wanted.end(), name) == wanted.end())
                wanted.push_back(name);
        }
    }

    std::map<std::string, std::size_t> exact_by_quantity;
    if (r.girth) exact_by_quantity[std::string(quantity_name(Quantity::girth))] = *r.girth;
    if (!opt.bounds_only && !wanted.empty()) {
        if (g.order() > opt.limits.max_n) {
            r.exact_skipped = "graph order " + std::to_string(g.order()) + " exceeds the solver ceiling " +
                              std::to_string(opt.limits.max_n);
        } else {
            for (const auto& name : wanted) {
                AllianceResult res;
                if (name == domination_spec_name) {
                    res = domination_number(g, opt.limits);
                } else {
                    const auto spec = spec_from_name(name);
                    if (!spec) throw InvalidArgument("unknown alliance spec '" + name + "'");
                    res = min_alliance_number(g, *spec, opt.limits);
                }
                ExactValue ev{name, detail::quantity_for_spec(name), res.value, {}, res.nodes_explored};
                res.witness.for_each([&](Vertex v) { ev.witness.push_back(g.label(v)); });
                if (!ev.quantity.empty()) exact_by_quantity[ev.quantity] = ev.value;
                r.exact.push_back(std::move(ev));
            }
        }
    }

    for (const auto& b : bounds) {
        BoundEntry e;
        e.theorem = std::string(theorem_name(b.theorem));
        e.target = std::string(quantity_name(b.target));
        e.applicable = b.applicable;
        e.degenerate = b.degenerate;
        e.value = b.value;
        e.reason = b.reason;
        for (const auto& [k, v] : b.inputs) e.inputs.emplace_back(k, report_real(v));
        if (auto it = exact_by_quantity.find(e.target); it != exact_by_quantity.end()) {
            e.exact = static_cast<long long>(it->second);
            if (e.value) {
                e.gap = *e.exact - *e.value;
                if (*e.gap < 0) ++r.violations;
            }
        }
        r.bounds.push_back(std::move(e));
    }
    if (!opt.deterministic) r.generated_at = detail::utc_timestamp();
    return r;
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

namespace detail {
template <typename T>
Json optional_json(const std::optional<T>& v) {
    return v ? Json(*v) : Json(nullptr);
}

template <typename T>
std::optional<T> optional_from(const Json& j) {
    if (j.is_null()) return std::nullopt;
    return j.get<T>();
}
} // namespace detail

inline Json to_json(const AnalysisReport& r) {
    Json j;
    j["graph"] = {{"label", r.label},           {"n", r.n},
                  {"m", r.m},                   {"min_degree", r.min_degree},
                  {"max_degree", r.max_degree}, {"regular", detail::optional_json(r.regular)},
                  {"connected", r.connected},   {"girth", r.girth ? Json(*r.girth) : Json("inf")}};
    if (r.spectral)
        j["spectral"] = {{"lambda", r.spectral->lambda},
                         {"mu", r.spectral->mu},
                         {"mu_star", r.spectral->mu_star},
                         {"residual", r.spectral->residual},
                         {"iterations", r.spectral->iterations}};
    else
        j["spectral"] = nullptr;
    j["exact"] = Json::array();
    for (const auto& e : r.exact)
        j["exact"].push_back({{"spec", e.spec},
                              {"quantity", e.quantity},
                              {"value", e.value},
                              {"witness", e.witness},
                              {"nodes_explored", e.nodes_explored}});
    j["exact_skipped"] = detail::optional_json(r.exact_skipped);
    j["bounds"] = Json::array();
    for (const auto& b : r.bounds) {
        Json inputs = Json::object();
        for (const auto& [k, v] : b.inputs) inputs[k] = v;
        j["bounds"].push_back({{"theorem", b.theorem},
                               {"target", b.target},
                               {"applicable", b.applicable},
                               {"degenerate", b.degenerate},
                               {"value", detail::optional_json(b.value)},
                               {"reason", b.reason},
                               {"inputs", inputs},
                               {"exact", detail::optional_json(b.exact)},
                               {"gap", detail::optional_json(b.gap)}});
    }
    j["violations"] = r.violations;
    if (r.generated_at) j["generated_at"] = *r.generated_at;
    return j;
}

inline AnalysisReport report_from_json(const Json& j) {
    AnalysisReport r;
    const auto& g = j.at("graph");
    r.label = g.at("label").get<std::string>();
    r.n = g.at("n").get<std::size_t>();
    r.m = g.at("m").get<std::size_t>();
    r.min_degree = g.at("min_degree").get<std::size_t>();
    r.max_degree = g.at("max_degree").get<std::size_t>();
    r.regular = detail::optional_from<std::size_t>(g.at("regular"));
    r.connected = g.at("connected").get<bool>();
    if (!g.at("girth").is_string()) r.girth = g.at("girth").get<std::size_t>();
    if (const auto& s = j.at("spectral"); !s.is_null())
        r.spectral = SpectralEntry{s.at("lambda").get<double>(), s.at("mu").get<double>(),
                                   s.at("mu_star").get<double>(), s.at("residual").get<double>(),
                                   s.at("iterations").get<std::size_t>()};
    for (const auto& e : j.at("exact"))
        r.exact.push_back(ExactValue{e.at("spec").get<std::string>(), e.at("quantity").get<std::string>(),
                                     e.at("value").get<std::size_t>(),
                                     e.at("witness").get<std::vector<std::string>>(),
                                     e.at("nodes_explored").get<std::size_t>()});
    r.exact_skipped = detail::optional_from<std::string>(j.at("exact_skipped"));
    for (const auto& b : j.at("bounds")) {
        BoundEntry e;
        e.theorem = b.at("theorem").get<std::string>();
        e.target = b.at("target").get<std::string>();
        e.applicable = b.at("applicable").get<bool>();
        e.degenerate = b.at("degenerate").get<bool>();
        e.value = detail::optional_from<long long>(b.at("value"));
        e.reason = b.at("reason").get<std::string>();
        for (const auto& [k, v] : b.at("inputs").items()) e.inputs.emplace_back(k, v.get<double>());
        e.exact = detail::optional_from<long long>(b.at("exact"));
        e.gap = detail::optional_from<long long>(b.at("gap"));
        r.bounds.push_back(std::move(e));
    }
    r.violations = j.at("violations").get<std::size_t>();
    if (j.contains("generated_at")) r.generated_at = j.at("generated_at").get<std::string>();
    return r;
}

/// Bounds table, one row per (theorem, target).
inline std::string to_csv(const AnalysisReport& r) {
    const auto cell = [](const std::optional<long long>& v) { return v ? std::to_string(*v) : std::string(); };
    const auto quote = [](const std::string& s) {
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string out = "\"";
        for (char c : s) {
            if (c == '"') out += '"';
            out += c;
        }
        return out + "\"";
    };
    std::string out = "label,theorem,target,applicable,degenerate,bound,exact,gap,reason\n";
    for (const auto& b : r.bounds)
        out += quote(r.label) + "," + b.theorem + "," + b.target + "," + (b.applicable ? "true" : "false") + "," +
               (b.degenerate ? "true" : "false") + "," + cell(b.value) + "," + cell(b.exact) + "," + cell(b.gap) +
               "," + quote(b.reason) + "\n";
    return out;
}

// ---------------------------------------------------------------------------
// Survey
// ---------------------------------------------------------------------------

/**
 * Expands integer ranges "a..b" in family-spec parameters:
 * "complete:2..4" -> complete:2, complete:3, complete:4.
 */
inline std::vector<std::string> expand_family_ranges(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) return {text};
    std::size_t lo_start = dots;
    while (lo_start > 0 && std::isdigit(static_cast<unsigned char>(text[lo_start - 1]))) --lo_start;
    std::size_t hi_end = dots + 2;
    while (hi_end < text.size() && std::isdigit(static_cast<unsigned char>(text[hi_end]))) ++hi_end;
    if (lo_start == dots || hi_end == dots + 2)
        throw ParseError("family range '" + text + "': expected integer bounds around '..'", dots);
    const auto lo = std::stoull(text.substr(lo_start, dots - lo_start));
    const auto hi = std::stoull(text.substr(dots + 2, hi_end - dots - 2));
    if (lo > hi) throw ParseError("family range '" + text + "': empty range", dots);
    std::vector<std::string> out;
    for (auto v = lo; v <= hi; ++v)
        for (auto& rest : expand_family_ranges(text.substr(hi_end)))
            out.push_back(text.substr(0, lo_start) + std::to_string(v) + rest);
    return out;
}

struct SurveyOptions {
    std::string family;
    std::size_t count = 1; ///< samples per expanded spec, for random families
    std::uint64_t seed = 0;
    SolverLimits limits;
    std::size_t threads = 1;
    bool connected_only = false; ///< resample disconnected random draws
};

struct SurveyRow {
    std::size_t index = 0;
    std::string spec; ///< family spec with concrete seed
    std::string edgelist;
    AnalysisReport report;
};

struct TheoremStats {
    std::size_t applicable = 0;
    std::size_t compared = 0; ///< applicable and exact value known
    std::size_t tight = 0;
    long long max_gap = 0;
    double gap_sum = 0.0;

    double mean_gap() const { return compared ? gap_sum / static_cast<double>(compared) : 0.0; }
};

struct SurveySummary {
    std::size_t graphs = 0;
    std::size_t skipped_exact = 0;
    std::size_t violations = 0;
    std::map<std::string, TheoremStats> per_bound; ///< key "theorem/target"
    std::vector<SurveyRow> offending;               ///< rows with at least one violation
};

/// Concrete family specs (seeds filled in) a survey analyzes, in sample order.
inline std::vector<std::string> survey_samples(const SurveyOptions& opt) {
    std::vector<std::string> out;
    for (const auto& text : expand_family_ranges(opt.family)) {
        const auto spec = parse_family_spec(text);
        if (!spec.is_random()) {
            out.push_back(to_string(spec));
            continue;
        }
        for (std::size_t i = 0; i < opt.count; ++i) out.push_back(to_string(with_seed(spec, mix_seed(opt.seed + i))));
    }
    return out;
}

namespace detail {
inline Graph survey_graph(const std::string& spec_text, bool connected_only, std::string& used_spec) {
    auto spec = parse_family_spec(spec_text);
    used_spec = spec_text;
    Graph g = build(spec);
    if (!connected_only || !spec.is_random()) return g;
    for (std::uint64_t retry = 1; !is_connected(g); ++retry) {
        if (retry > 10000) throw InvalidArgument("survey: no connected draw for '" + spec_text + "'");
        spec = with_seed(spec, mix_seed(spec.seed.value_or(0) ^ retry));
        used_spec = to_string(spec);
        g = build(spec);
    }
    return g;
}
} // namespace detail

/**
 * Analyzes every sampled graph and aggregates bound quality per theorem.
 * Graphs are analyzed in parallel batches; rows are delivered to `on_row` in
 * sample order, so output is identical for any thread count.
 */
inline SurveySummary survey(const SurveyOptions& opt, const std::function<void(const SurveyRow&)>& on_row = {}) {
    const auto samples = survey_samples(opt);
    SurveySummary summary;
    AnalyzeOptions aopt;
    aopt.limits = opt.limits;
    aopt.deterministic = true;

    const auto work = [&](std::size_t i) {
        SurveyRow row;
        row.index = i;
        Graph g = detail::survey_graph(samples[i], opt.connected_only, row.spec);
        row.edgelist = write_edgelist(g);
        row.report = analyze(g, row.spec, aopt);
        return row;
    };

    const std::size_t threads = std::max<std::size_t>(1, opt.threads);
    const std::size_t batch = threads * 4;
    for (std::size_t base = 0; base < samples.size(); base += batch) {
        const std::size_t end = std::min(samples.size(), base + batch);
        std::vector<SurveyRow> rows(end - base);
        if (threads == 1) {
            for (std::size_t i = base; i < end; ++i) rows[i - base] = work(i);
        } else {
            std::vector<std::future<void>> jobs;
            std::atomic<std::size_t> next{base};
            for (std::size_t t = 0; t < threads; ++t)
                jobs.push_back(std::async(std::launch::async, [&] {
                    for (std::size_t i; (i = next.fetch_add(1)) < end;) rows[i - base] = work(i);
                }));
            for (auto& j : jobs) j.get();
        }
        for (auto& row : rows) {
            ++summary.graphs;
            if (row.report.exact_skipped) ++summary.skipped_exact;
            for (const auto& b : row.report.bounds) {
                auto& st = summary.per_bound[b.theorem + "/" + b.target];
                if (!b.applicable) continue;
                ++st.applicable;
                if (!b.gap) continue;
                ++st.compared;
                st.gap_sum += static_cast<double>(*b.gap);
                st.max_gap = std::max(st.max_gap, *b.gap);
                if (*b.gap == 0) ++st.tight;
            }
            summary.violations += row.report.violations;
            if (on_row) on_row(row);
            if (row.report.violations > 0) summary.offending.push_back(std::move(row));
        }
    }
    return summary;
}

inline Json to_json(const SurveySummary& s) {
    Json j;
    j["graphs"] = s.graphs;
    j["skipped_exact"] = s.skipped_exact;
    j["violations"] = s.violations;
    j["bounds"] = Json::object();
    for (const auto& [key, st] : s.per_bound)
        j["bounds"][key] = {{"applicable", st.applicable},
                            {"compared", st.compared},
                            {"tight", st.tight},
                            {"tight_fraction", st.compared ? report_real(static_cast<double>(st.tight) /
                                                                         static_cast<double>(st.compared))
                                                           : 0.0},
                            {"mean_gap", report_real(st.mean_gap())},
                            {"max_gap", st.max_gap}};
    return j;
}

} // namespace alliance
