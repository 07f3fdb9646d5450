// ekr: batch runner for verification suites, extremal searches and family files.
//
//   ekr verify <suite> [--t ..] [--t-max ..] [--workers ..] [--out ..] [--format json|csv] [--resume ckpt]
//   ekr search uniform|weight|seq --n .. [--k ..] --t .. [--p a/b] [--m ..] [--shifted] [--time-limit s]
//   ekr family export --n .. --t .. [--i ..] [--k ..] [--kind frankl|stability]
//   ekr family import <file>
//
// Exit codes: 0 verified, 1 refuted, 2 inconclusive or over budget, 64 usage error.

#include "ekr/ekr.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>

using namespace ekr;
using nlohmann::json;

namespace {

constexpr int kUsage = 64;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Params {
    std::string command, target, input;
    std::optional<int> t, t_max, n, k, m, i;
    std::string p_text, eta_text, kind = "frankl";
    int workers = default_workers();
    std::string out, format = "json", resume;
    bool shifted = false;
    double time_limit = 0;

    std::optional<Rational> p, eta;
};

int need(const std::optional<int>& v, const char* flag)
{
    if (!v) throw UsageError(std::string("missing required flag ") + flag);
    return *v;
}

std::string num_text(const Rational& r)
{
    if (denominator(r) == 1) return numerator(r).str();
    return to_string(r);
}

// ---- output

struct Output {
    std::ofstream file;
    std::ostream* os = &std::cout;
    explicit Output(const std::string& path)
    {
        if (path.empty()) return;
        file.open(path);
        if (!file) throw UsageError("cannot open " + path + " for writing");
        os = &file;
    }
};

void emit_reports(const Params& prm, const std::string& suite, const std::vector<VerificationReport>& reports,
                  json extra = json::object())
{
    Output out(prm.out);
    if (prm.format == "csv") {
        write_csv(*out.os, reports);
        return;
    }
    json j{{"suite", suite}, {"exit_code", exit_code(reports)}, {"reports", to_json(reports)}};
    for (auto& [key, value] : extra.items()) j[key] = value;
    *out.os << j.dump(2) << "\n";
}

json families_json(const std::vector<std::pair<Family, Family>>& ws)
{
    json arr = json::array();
    for (const auto& [a, b] : ws) arr.push_back({{"A", family_to_string(a)}, {"B", family_to_string(b)}});
    return arr;
}

json search_json(const search::SearchResult& r)
{
    json classes = json::array();
    for (auto c : r.witness_classes) classes.push_back(search::construction_name(c));
    return {{"max_product", num_text(r.max_product)},
            {"matched_construction", r.matched_construction ? json(search::construction_name(*r.matched_construction)) : json()},
            {"witness_classes", classes},
            {"witnesses", families_json(r.witnesses)},
            {"raw_witnesses", r.raw_witnesses},
            {"exhaustive", r.exhaustive},
            {"mode", r.mode},
            {"partner_shift_hypothesis_held", r.partner_shift_hypothesis_held},
            {"nodes", r.nodes},
            {"elapsed_ms", r.elapsed_ms}};
}

json seq_json(const seq::SeqSearchResult& r)
{
    json classes = json::array(), ws = json::array();
    for (auto c : r.witness_classes) classes.push_back(search::construction_name(c));
    for (const auto& [a, b] : r.witnesses) ws.push_back({{"A", seq::seq_family_to_string(a)}, {"B", seq::seq_family_to_string(b)}});
    return {{"max_product", num_text(r.max_product)},
            {"bound", num_text(r.bound)},
            {"matched_construction", r.matched_construction ? json(search::construction_name(*r.matched_construction)) : json()},
            {"witness_classes", classes},
            {"witnesses", ws},
            {"raw_witnesses", r.raw_witnesses},
            {"exhaustive", r.exhaustive},
            {"nodes", r.nodes},
            {"elapsed_ms", r.elapsed_ms}};
}

// Exhaustive runs become checks against the conjectured bound inside its regime.
VerificationReport bound_report(const std::string& id, const std::string& anchor_key, const Rational& max,
                                const Rational& bound, bool exhaustive, bool in_regime, json params)
{
    if (!exhaustive)
        return make_report(id, anchor_key, Status::inconclusive, max, bound, params, "search stopped before finishing");
    if (!in_regime) return make_report(id, anchor_key, Status::skipped, max, bound, params, "parameters outside the bound's range");
    return check_equal(id, anchor_key, max, bound, params);
}

search::SearchBudget budget_of(const Params& prm)
{
    search::SearchBudget b;
    b.workers = prm.workers;
    b.restrict_shifted = prm.shifted;
    b.time_limit = std::chrono::milliseconds(static_cast<long>(prm.time_limit * 1000));
    return b;
}

// ---- searches

int run_search_uniform(const Params& prm, bool as_suite)
{
    const int n = need(prm.n, "--n"), k = need(prm.k, "--k"), t = need(prm.t, "--t");
    auto r = search::max_uniform_product(n, k, t, budget_of(prm));
    const Rational bound = Rational(binom(n - t, k - t) * binom(n - t, k - t));
    json params{{"n", n}, {"k", k}, {"t", t}};
    std::vector<VerificationReport> reports{bound_report("search.uniform", "search.uniform", r.max_product, bound,
                                                         r.exhaustive, n > (t + 1) * (k - t + 1), params)};
    json body = search_json(r);
    body["parameters"] = params;
    emit_reports(prm, as_suite ? "search-uniform" : "search uniform", reports, body);
    return exit_code(reports);
}

int run_search_weight(const Params& prm, bool as_suite)
{
    const int n = need(prm.n, "--n"), t = need(prm.t, "--t");
    if (!prm.p) throw UsageError("missing required flag --p");
    const Rational p = *prm.p;
    auto r = search::max_weight_product(n, t, p, budget_of(prm));
    json params{{"n", n}, {"t", t}, {"p", to_string(p)}};
    std::vector<VerificationReport> reports{bound_report("search.weight", "search.weight", r.max_product, ipow(p, 2 * t),
                                                         r.exhaustive, p * (t + 1) < 1, params)};
    json body = search_json(r);
    body["parameters"] = params;
    emit_reports(prm, as_suite ? "search-weight" : "search weight", reports, body);
    return exit_code(reports);
}

int run_search_seq(const Params& prm, bool as_suite)
{
    const int n = need(prm.n, "--n"), m = need(prm.m, "--m"), t = need(prm.t, "--t");
    auto r = seq::verify_seq_theorem(n, m, t, budget_of(prm));
    json params{{"n", n}, {"m", m}, {"t", t}};
    std::vector<VerificationReport> reports{
        bound_report("search.seq", "search.seq", r.max_product, r.bound, r.exhaustive, m >= t + 1, params)};
    json body = seq_json(r);
    body["parameters"] = params;
    emit_reports(prm, as_suite ? "search-seq" : "search seq", reports, body);
    return exit_code(reports);
}

// ---- oracle suites

std::vector<VerificationReport> walk_oracle(int max_steps)
{
    std::vector<VerificationReport> parts;
    for (int len = 1; len <= max_steps; ++len)
        for (int y0 = 0; y0 <= len; ++y0) {
            const int x0 = len - y0;
            for (int c = 1; c < y0 && y0 < x0 + c; ++c) {
                const std::uint64_t hit = walks::enumerate_walks(x0, y0, [c](const Subset& w) { return walks::hits_line(w, c); });
                json w{{"x0", x0}, {"y0", y0}, {"c", c}};
                parts.push_back(check_equal("", "walk.hit", Rational(walks::count_hit(x0, y0, c)), Rational(long(hit)), w));
                const std::uint64_t all = walks::enumerate_walks(x0, y0, [](const Subset&) { return true; });
                parts.push_back(
                    check_equal("", "walk.hit", Rational(walks::count_miss(x0, y0, c)), Rational(long(all - hit)), w));
            }
        }
    return {bounds::fold("walk.count_oracle", "walk.hit", parts)};
}

std::vector<VerificationReport> measure_oracle(int max_n, const std::vector<Rational>& ps)
{
    std::vector<VerificationReport> frankl, event, g;
    for (const Rational& p : ps)
        for (int n = 1; n <= max_n; ++n) {
            const measure::WeightParams w(n, p);
            for (int t = 1; t <= std::min(4, n); ++t) {
                json at{{"n", n}, {"t", t}, {"p", to_string(p)}};
                for (int i = 0; i <= 2 && t + 2 * i <= n; ++i) {
                    at["i"] = i;
                    frankl.push_back(check_equal("", "measure.frankl", measure::mu(setfam::make_frankl(n, t, i), w),
                                                 measure::mu_frankl_closed(n, t, i, p), at));
                }
                if (n >= t + 1) {
                    std::vector<Mask> ev;
                    for (Mask m : setfam::power_set(n))
                        if (std::popcount(m & full_mask(t + 1)) == t && ((m >> t) & 1)) ev.push_back(m);
                    event.push_back(check_equal("", "measure.event", measure::mu(Family(n, ev), w),
                                                measure::mu_hit_1t_not_0t_closed(t, p), at));
                }
                if (n >= t + 2)
                    g.push_back(check_equal("", "measure.G", measure::mu(setfam::stability_weight_family(n, t), w),
                                            measure::mu_stability_family_closed(n, t, p), at));
            }
        }
    return {bounds::fold("measure.frankl_oracle", "measure.frankl", frankl), bounds::fold("measure.event_oracle", "measure.event", event),
            bounds::fold("measure.G_oracle", "measure.G", g)};
}

std::vector<VerificationReport> graph_suite(int max_n)
{
    std::vector<VerificationReport> parts;
    for (int n = 3; n <= max_n; ++n)
        for (int k = 1; 2 * k < n; ++k) {
            if (binom(n, k) > graph::kMaxKneserVertices) continue;
            auto g = graph::kneser_graph(n, k);
            const bool ok = graph::is_connected(g) && !graph::is_bipartite(g);
            parts.push_back(make_report("", "graph.kneser", ok ? Status::verified : Status::refuted, {}, {},
                                        ok ? std::nullopt : std::optional<json>(json{{"n", n}, {"k", k}})));
        }
    std::vector<VerificationReport> products;
    std::mt19937_64 rng(20240601);
    for (int rep = 0; rep < 20; ++rep) {
        const int a = std::uniform_int_distribution<int>(2, 10)(rng), b = std::uniform_int_distribution<int>(2, 10)(rng);
        auto g = graph::random_connected_graph(a, rep % 2 ? 0.3 : 0.0, rng);
        auto h = graph::random_connected_graph(b, 0.3, rng);
        const bool expect = !graph::is_bipartite(g) || !graph::is_bipartite(h);
        const bool ok = graph::is_connected(graph::direct_product(g, h)) == expect;
        products.push_back(make_report("", "graph.kneser", ok ? Status::verified : Status::refuted, {}, {},
                                       ok ? std::nullopt : std::optional<json>(json{{"rep", rep}})));
    }
    return {bounds::fold("graph.kneser_connected_nonbipartite", "graph.kneser", parts),
            bounds::fold("graph.product_connectivity", "graph.kneser", products)};
}

std::vector<VerificationReport> construction_reports(int n, int k, int t, const Rational& p, std::optional<Rational> eta)
{
    std::vector<VerificationReport> out;
    auto flag = [&](std::string id, const char* key, bool ok, json w) {
        out.push_back(make_report(std::move(id), key, ok ? Status::verified : Status::refuted, {}, {},
                                  ok ? std::nullopt : std::optional<json>(std::move(w))));
    };
    json uk{{"n", n}, {"k", k}, {"t", t}};
    Family fu = setfam::stability_uniform_family(n, k, t);
    flag("stab.uniform.shifted", "stab.f1f0", setfam::is_shifted(fu), uk);
    flag("stab.uniform.intersecting", "stab.f1f0", setfam::is_t_intersecting(fu, t), uk);
    flag("stab.uniform.not_in_star", "stab.f1f0", !setfam::find_star_copy_containing(fu, t), uk);
    if (n >= t + 2) {
        json wk{{"n", n}, {"t", t}, {"p", to_string(p)}};
        Family g = setfam::stability_weight_family(n, t);
        const measure::WeightParams w(n, p);
        flag("stab.weight.shifted", "measure.G", setfam::is_shifted(g), wk);
        flag("stab.weight.intersecting", "measure.G", setfam::is_t_intersecting(g, t), wk);
        flag("stab.weight.not_in_star", "measure.G", !setfam::find_star_copy_containing(g, t), wk);
        out.push_back(check_equal("stab.weight.formula", "measure.G", measure::mu(g, w), measure::mu_stability_family_closed(n, t, p), wk));
        if (eta) {
            auto d = bounds::decomposition_check(g, g, setfam::make_frankl(n, t, 0), p);
            out.push_back(check_less("stab.weight.decomposition_eta", "decomp", d.a1 + d.b1, *eta * d.f, wk));
        }
    }
    return out;
}

// ---- case2 checkpointing: one JSON row per line

std::map<int, bounds::Case2Row> load_checkpoint(const std::string& path)
{
    std::map<int, bounds::Case2Row> rows;
    std::ifstream in(path);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        try {
            auto row = bounds::row_from_json(json::parse(line));
            rows[row.k] = row;
        } catch (const std::exception&) {
            break; // a torn last line from an interrupted run
        }
    }
    return rows;
}

int run_verify(const Params& prm)
{
    const std::string& suite = prm.target;
    std::vector<VerificationReport> reports;
    json extra = json::object();
    if (suite == "bounds-all") {
        reports = bounds::bounds_all(prm.t_max.value_or(100));
    } else if (suite == "case2-finite") {
        const int t = need(prm.t, "--t");
        bounds::Case2Options opt;
        opt.workers = prm.workers;
        std::ofstream ckpt;
        if (!prm.resume.empty()) {
            opt.completed = load_checkpoint(prm.resume);
            ckpt.open(prm.resume, std::ios::app);
            if (!ckpt) throw UsageError("cannot open checkpoint " + prm.resume);
            opt.on_row = [&](const bounds::Case2Row& r) { ckpt << bounds::row_to_json(r).dump() << "\n" << std::flush; };
            extra["resumed_rows"] = opt.completed.size();
        }
        reports = bounds::verify_case2_finite(t, opt);
    } else if (suite == "walk-oracle") {
        reports = walk_oracle(prm.n.value_or(12));
    } else if (suite == "measure-oracle") {
        std::vector<Rational> ps{rat(1, 3), rat(1, 4), rat(1, 5), rat(1, 15)};
        if (prm.p) ps = {*prm.p};
        reports = measure_oracle(prm.n.value_or(12), ps);
    } else if (suite == "search-uniform") {
        return run_search_uniform(prm, true);
    } else if (suite == "search-weight") {
        return run_search_weight(prm, true);
    } else if (suite == "search-seq") {
        return run_search_seq(prm, true);
    } else if (suite == "stability") {
        reports = bounds::stability_suite(prm.t_max.value_or(100));
        const int t = prm.t.value_or(1);
        auto more = construction_reports(prm.n.value_or(8), prm.k.value_or(3), t, prm.p.value_or(rat(1, t + 2)), prm.eta);
        reports.insert(reports.end(), more.begin(), more.end());
        if (!prm.t) {
            auto w = construction_reports(6, 3, 2, prm.p.value_or(rat(1, 4)), prm.eta);
            reports.insert(reports.end(), w.begin(), w.end());
        }
    } else if (suite == "graphs") {
        reports = graph_suite(prm.n.value_or(9));
    } else {
        throw UsageError("unknown suite '" + suite + "'");
    }
    emit_reports(prm, suite, reports, extra);
    return exit_code(reports);
}

// ---- family files

int run_family(const Params& prm)
{
    if (prm.target == "export") {
        const int n = need(prm.n, "--n"), t = need(prm.t, "--t");
        Family f(n);
        if (prm.kind == "frankl") {
            const int i = prm.i.value_or(0);
            f = prm.k ? setfam::make_frankl_uniform(n, *prm.k, t, i) : setfam::make_frankl(n, t, i);
        } else if (prm.kind == "stability") {
            f = prm.k ? setfam::stability_uniform_family(n, *prm.k, t) : setfam::stability_weight_family(n, t);
        } else {
            throw UsageError("unknown family kind '" + prm.kind + "'");
        }
        Output out(prm.out);
        write_family(*out.os, f);
        return 0;
    }
    if (prm.target == "import") {
        if (prm.input.empty()) throw UsageError("family import needs a file");
        std::ifstream in(prm.input);
        if (!in) throw UsageError("cannot read " + prm.input);
        Family f = read_family(in);
        int t_max = 0;
        while (t_max < f.ground() && setfam::is_t_intersecting(f, t_max + 1)) ++t_max;
        json j{{"n", f.ground()},
               {"k", f.uniform_k() ? json(*f.uniform_k()) : json()},
               {"size", f.size()},
               {"shifted", setfam::is_shifted(f)},
               {"inclusion_maximal", setfam::is_inclusion_maximal(f)},
               {"max_t_intersecting", t_max},
               {"lambda", f.empty() ? json() : json(walks::lambda(f))}};
        if (prm.p) j["weight"] = to_string(measure::mu(f, measure::WeightParams(f.ground(), *prm.p)));
        Output out(prm.out);
        *out.os << j.dump(2) << "\n";
        return 0;
    }
    throw UsageError("family action must be export or import");
}

int dispatch(Params& prm)
{
    if (prm.format != "json" && prm.format != "csv") throw UsageError("--format must be json or csv");
    if (prm.workers < 1) throw UsageError("--workers must be at least 1");
    if (prm.time_limit < 0) throw UsageError("--time-limit must be nonnegative");
    try {
        if (!prm.p_text.empty()) prm.p = parse_rational(prm.p_text);
        if (!prm.eta_text.empty()) prm.eta = parse_rational(prm.eta_text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (prm.command == "verify") return run_verify(prm);
    if (prm.command == "search") {
        if (prm.target == "uniform") return run_search_uniform(prm, false);
        if (prm.target == "weight") return run_search_weight(prm, false);
        if (prm.target == "seq") return run_search_seq(prm, false);
        throw UsageError("search kind must be uniform, weight or seq");
    }
    return run_family(prm);
}

// Config entries become "--key=value" arguments placed before the command line,
// so later flags win. Section headers only group keys.
std::vector<std::string> with_config(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    std::string path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
        else if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
    }
    std::vector<std::string> out;
    if (!path.empty()) {
        std::ifstream in(path);
        if (!in) throw UsageError("cannot read config " + path);
        for (const auto& item : CLI::ConfigINI().from_config(in)) {
            if (item.name.empty() || item.name == "++" || item.name == "--") continue;
            std::string value;
            for (const auto& v : item.inputs) value += (value.empty() ? "" : ",") + v;
            out.push_back("--" + item.name + "=" + value);
        }
    }
    out.insert(out.end(), args.begin(), args.end());
    std::reverse(out.begin(), out.end()); // App::parse(vector) expects reversed order
    return out;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact-arithmetic checks for cross t-intersecting families"};
    app.require_subcommand(1);
    app.fallthrough();
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    std::string config_path;
    app.add_option("--config", config_path, "flat key=value file; flags on the command line win");

    Params prm;
    app.add_option("--t", prm.t, "intersection parameter t");
    app.add_option("--t-max", prm.t_max, "upper end of t sweeps");
    app.add_option("--n", prm.n, "ground set size");
    app.add_option("--k", prm.k, "uniformity");
    app.add_option("--m", prm.m, "alphabet size for sequences");
    app.add_option("--i", prm.i, "Frankl family index");
    app.add_option("--p", prm.p_text, "measure parameter a/b");
    app.add_option("--eta", prm.eta_text, "decomposition threshold a/b");
    app.add_option("--workers", prm.workers, "worker threads (default EKR_WORKERS or 1)");
    app.add_option("--out", prm.out, "output path (default stdout)");
    app.add_option("--format", prm.format, "json or csv");
    app.add_option("--resume", prm.resume, "case2-finite checkpoint file");
    app.add_option("--kind", prm.kind, "family kind for export: frankl or stability");
    app.add_flag("--shifted", prm.shifted, "search shifted families only");
    app.add_option("--time-limit", prm.time_limit, "search time limit in seconds (0 = none)");

    std::string suite_flag;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", prm.target, "bounds-all, case2-finite, walk-oracle, measure-oracle, search-uniform, "
                                            "search-weight, search-seq, stability, graphs");
    app.add_option("--suite", suite_flag, "suite name (same as the verify positional)");
    auto* search = app.add_subcommand("search", "exhaustive extremal search");
    search->add_option("kind", prm.target, "uniform, weight or seq")->required();
    auto* family = app.add_subcommand("family", "export or inspect a family file");
    family->add_option("action", prm.target, "export or import")->required();
    family->add_option("file", prm.input, "family file for import");

    try {
        app.parse(with_config(argc, argv));
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kUsage;
    }
    prm.command = verify->parsed() ? "verify" : search->parsed() ? "search" : "family";
    if (prm.command == "verify" && prm.target.empty()) prm.target = suite_flag;

    try {
        if (prm.command == "verify" && prm.target.empty()) throw UsageError("verify needs a suite");
        return dispatch(prm);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        // parameters the library rejects, budgets included
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
