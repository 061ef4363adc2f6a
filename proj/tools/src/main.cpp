#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lklab/coloring.hpp"
#include "lklab/dimacs.hpp"
#include "lklab/errors.hpp"
#include "lklab/graphs.hpp"
#include "lklab/independence.hpp"
#include "lklab/rng.hpp"

#include "report.hpp"
#include "verify_grid.hpp"

namespace {

using lklab::cli::json;
using namespace lklab;

struct CommonOpts {
    uint64_t seed = 0;
    std::string out;
    std::string format = "json";
    std::string timestamp = "on";
    bool with_time() const { return timestamp != "off"; }
};

void add_common(CLI::App* cmd, CommonOpts& o)
{
    cmd->add_option("--seed", o.seed, "random seed recorded in the report");
    cmd->add_option("--out", o.out, "write the report to this file instead of stdout");
    cmd->add_option("--format", o.format, "report format")->check(CLI::IsMember({ "json", "csv" }));
    cmd->add_option("--timestamp", o.timestamp, "'off' suppresses timestamp and wall time")
        ->check(CLI::IsMember({ "on", "off" }));
}

Graph build_family(const std::string& family, int m, int n, int r, int t)
{
    if (family == "kneser")
        return build_kneser(m, n);
    if (family == "local-complete")
        return build_local_complete(n, r);
    if (family == "local-kneser")
        return build_local_kneser(n, r, t);
    throw InvalidParameters("unknown family '" + family + "'");
}

int cmd_construct(const std::string& family, int m, int n, int r, int t, std::string out_path)
{
    const Graph g = build_family(family, m, n, r, t);
    if (out_path.empty()) {
        std::ostringstream name;
        name << family;
        if (family == "kneser")
            name << "_m" << m << "_n" << n;
        else {
            name << "_n" << n << "_r" << r;
            if (family == "local-kneser")
                name << "_t" << t;
        }
        name << ".dimacs";
        out_path = name.str();
    }
    const std::string labels_path = out_path + ".labels";
    {
        std::ofstream os(out_path, std::ios::binary);
        if (!os)
            throw std::runtime_error("cannot open " + out_path);
        write_dimacs(os, g);
    }
    {
        std::ofstream os(labels_path, std::ios::binary);
        if (!os)
            throw std::runtime_error("cannot open " + labels_path);
        write_label_sidecar(os, g);
    }
    std::cout << "family=" << g.family_name() << " graph=" << g.describe()
              << " vertices=" << g.vertex_count() << " edges=" << g.edge_count() << " out=" << out_path
              << " labels=" << labels_path << "\n";
    return 0;
}

int cmd_verify(const lklab::cli::VerifyOptions& vopt, const CommonOpts& common,
               const std::string& graph_path, const std::string& labels_path)
{
    const auto start = std::chrono::steady_clock::now();
    json rep = lklab::cli::make_report("verify", vopt.seed);
    if (!graph_path.empty()) {
        std::string labels = labels_path.empty() ? graph_path + ".labels" : labels_path;
        json body = lklab::cli::run_verify_file(graph_path, labels);
        rep["parameters"] = json { { "graph", graph_path }, { "labels", labels } };
        rep.update(body);
    } else {
        rep["parameters"] = json { { "max_n", vopt.max_n },
                                   { "sigma_samples", vopt.sigma_samples },
                                   { "lemma_roundtrips", vopt.lemma_roundtrips } };
        json body = lklab::cli::run_verify_grid(vopt);
        rep.update(body);
    }
    lklab::cli::stamp_report(rep, common.with_time(), start);
    lklab::cli::emit_report(rep, common.out);
    return lklab::cli::exit_code_for(rep);
}

int cmd_color(int n, int r, int t, const std::string& mode, int trials, int retry_cap,
              const CommonOpts& common)
{
    const auto start = std::chrono::steady_clock::now();
    const Budgets budgets = Budgets::from_env();
    const Graph g = build_local_kneser(n, r, t);
    json rep = lklab::cli::make_report("color", common.seed);
    rep["parameters"] = json { { "n", n }, { "r", r }, { "t", t }, { "mode", mode } };
    int exit_code = 0;

    if (mode == "random") {
        if (trials < 1)
            throw InvalidParameters("color: --trials must be >= 1");
        rep["parameters"]["trials"] = trials;
        rep["parameters"]["retry_cap"] = retry_cap;
        const int rounds = default_round_count(n, r, t);

        struct Trial {
            int palette = 0, attempts = 0, first_uncovered = 0;
            bool proper = false;
        };
        std::vector<Trial> per_trial(static_cast<size_t>(trials));
        std::atomic<int> next { 0 };
        std::atomic<bool> failed { false };
        auto worker = [&] {
            while (true) {
                const int i = next.fetch_add(1);
                if (i >= trials)
                    return;
                Rng rng(Rng::derive_stream(common.seed, static_cast<uint64_t>(i)));
                try {
                    const LasVegasResult res = las_vegas_coloring(g, rng, retry_cap);
                    Trial& tr = per_trial[static_cast<size_t>(i)];
                    tr.palette = res.coloring.palette;
                    tr.attempts = res.attempts;
                    tr.first_uncovered = res.first_uncovered;
                    tr.proper = is_proper(g, res.coloring);
                } catch (const RetriesExhausted&) {
                    failed = true;
                }
            }
        };
        unsigned hw = std::thread::hardware_concurrency();
        if (hw == 0)
            hw = 1;
        std::vector<std::thread> pool;
        for (unsigned i = 1; i < std::min<unsigned>(hw, static_cast<unsigned>(trials)); ++i)
            pool.emplace_back(worker);
        worker();
        for (auto& th : pool)
            th.join();
        if (failed)
            throw RetriesExhausted("color: a trial exhausted its retry cap");

        json trials_json = json::array();
        int max_palette = 0;
        long long attempts_total = 0;
        double mean_first_uncovered = 0;
        bool all_proper = true;
        for (int i = 0; i < trials; ++i) {
            const Trial& tr = per_trial[static_cast<size_t>(i)];
            trials_json.push_back(json { { "trial", i },
                                         { "palette", tr.palette },
                                         { "attempts", tr.attempts },
                                         { "first_uncovered", tr.first_uncovered },
                                         { "proper", tr.proper } });
            max_palette = std::max(max_palette, tr.palette);
            attempts_total += tr.attempts;
            mean_first_uncovered += tr.first_uncovered;
            all_proper = all_proper && tr.proper;
        }
        mean_first_uncovered /= trials;
        rep["trials"] = std::move(trials_json);
        rep["summary"] = json { { "rounds", rounds },
                                { "max_palette", max_palette },
                                { "mean_first_uncovered", mean_first_uncovered },
                                { "attempts_total", attempts_total },
                                { "all_proper", all_proper },
                                { "bound_respected", max_palette <= rounds } };
        if (!all_proper || max_palette > rounds)
            exit_code = 1;
        if (common.format == "csv") {
            std::ostringstream csv;
            csv << "trial,palette,attempts,first_uncovered,proper\n";
            for (int i = 0; i < trials; ++i) {
                const Trial& tr = per_trial[static_cast<size_t>(i)];
                csv << i << ',' << tr.palette << ',' << tr.attempts << ',' << tr.first_uncovered << ','
                    << (tr.proper ? "true" : "false") << "\n";
            }
            lklab::cli::emit_text(csv.str(), common.out);
            return exit_code;
        }
    } else if (mode == "projection") {
        const Coloring c = projection_coloring(g);
        const bool proper = is_proper(g, c);
        rep["summary"] = json { { "palette", c.palette }, { "proper", proper },
                                { "bound", n - 2 * t + 2 } };
        if (!proper)
            exit_code = 1;
        if (common.format == "csv") {
            std::ostringstream csv;
            write_coloring_csv(csv, g, c);
            lklab::cli::emit_text(csv.str(), common.out);
            return exit_code;
        }
    } else { // exact
        const ChiResult res = chi_exact_with_witness(g, budgets);
        const bool proper = is_proper(g, res.witness);
        rep["summary"] = json { { "chi", res.chi }, { "witness_palette", res.witness.palette },
                                { "witness_proper", proper } };
        if (!proper)
            exit_code = 1;
        if (common.format == "csv") {
            std::ostringstream csv;
            write_coloring_csv(csv, g, res.witness);
            lklab::cli::emit_text(csv.str(), common.out);
            return exit_code;
        }
    }

    lklab::cli::stamp_report(rep, common.with_time(), start);
    lklab::cli::emit_report(rep, common.out);
    return exit_code;
}

int cmd_psi(int n, int r, int t, const CommonOpts& common)
{
    const auto start = std::chrono::steady_clock::now();
    const Budgets budgets = Budgets::from_env();
    const Graph g = build_local_kneser(n, r, t);
    const int psi = psi_exact(g, budgets);
    const int bound = r - 2 * t + 2;
    json rep = lklab::cli::make_report("psi", common.seed);
    rep["parameters"] = json { { "n", n }, { "r", r }, { "t", t } };
    rep["summary"] = json { { "psi", psi },
                            { "upper_bound", bound },
                            { "coincide", psi == bound },
                            { "equality_status", "open-question" } };
    lklab::cli::stamp_report(rep, common.with_time(), start);
    lklab::cli::emit_report(rep, common.out);
    return psi <= bound ? 0 : 1;
}

int cmd_bounds(const std::vector<int>& ns, int r, int t, const CommonOpts& common)
{
    const auto start = std::chrono::steady_clock::now();
    json rep = lklab::cli::make_report("bounds", common.seed);
    rep["parameters"] = json { { "n", ns }, { "r", r }, { "t", t } };
    json records = json::array();
    for (int n : ns) {
        const BoundReport b = bound_report(n, r, t);
        json rec { { "n", b.n }, { "r", b.r }, { "t", b.t },
                   { "projection_bound", b.projection_bound }, { "random_bound", b.random_bound } };
        if (b.doubling_bound)
            rec["doubling_bound"] = *b.doubling_bound;
        if (!b.note.empty())
            rec["note"] = b.note;
        records.push_back(std::move(rec));
    }
    rep["records"] = std::move(records);
    lklab::cli::stamp_report(rep, common.with_time(), start);
    lklab::cli::emit_report(rep, common.out);
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app { "lklab: build local Kneser graphs, check their exact invariants, and run "
                   "coloring experiments" };
    app.require_subcommand(1);

    // construct
    auto* construct = app.add_subcommand("construct", "build a graph and export DIMACS + labels");
    std::string family;
    int c_m = 0, c_n = 0, c_r = 0, c_t = 1;
    std::string c_out;
    construct->add_option("family", family, "kneser | local-complete | local-kneser")->required();
    construct->add_option("-m", c_m, "ground size for kneser");
    construct->add_option("-n", c_n, "subset size for kneser; ground size for local families");
    construct->add_option("-r", c_r, "r parameter for local families");
    construct->add_option("-t", c_t, "t parameter for local-kneser");
    construct->add_option("--out", c_out, "output path (sidecar gets .labels appended)");

    // verify
    auto* verify = app.add_subcommand("verify", "run the verification grid or check a graph file");
    lklab::cli::VerifyOptions vopt;
    CommonOpts vcommon;
    std::string v_graph, v_labels;
    verify->add_option("--max-n", vopt.max_n, "largest ground size in the grid")->check(CLI::Range(2, 8));
    verify->add_option("--sigma-samples", vopt.sigma_samples, "random orderings sampled per instance");
    verify->add_option("--lemma-roundtrips", vopt.lemma_roundtrips, "random coloring roundtrips");
    verify->add_option("--threads", vopt.threads, "worker threads (0 = hardware)");
    verify->add_option("--graph", v_graph, "verify a DIMACS file instead of running the grid");
    verify->add_option("--labels", v_labels, "label sidecar path (default: <graph>.labels)");
    add_common(verify, vcommon);

    // color
    auto* color = app.add_subcommand("color", "coloring experiments on U_t(n,r)");
    int col_n = 0, col_r = 0, col_t = 0, col_trials = 1, col_retry = 50;
    std::string col_mode = "random";
    CommonOpts col_common;
    color->add_option("-n", col_n, "ground size")->required();
    color->add_option("-r", col_r, "r parameter")->required();
    color->add_option("-t", col_t, "t parameter")->required();
    color->add_option("--mode", col_mode, "random | projection | exact")
        ->check(CLI::IsMember({ "random", "projection", "exact" }));
    color->add_option("--trials", col_trials, "number of seeded runs (random mode)");
    color->add_option("--retry-cap", col_retry, "attempt cap per run (random mode)");
    add_common(color, col_common);

    // psi
    auto* psi = app.add_subcommand("psi", "exact local chromatic number of U_t(n,r)");
    int p_n = 0, p_r = 0, p_t = 0;
    CommonOpts p_common;
    psi->add_option("-n", p_n, "ground size")->required();
    psi->add_option("-r", p_r, "r parameter")->required();
    psi->add_option("-t", p_t, "t parameter")->required();
    add_common(psi, p_common);

    // bounds
    auto* bounds = app.add_subcommand("bounds", "evaluate the chromatic upper-bound formulas");
    std::vector<int> b_ns;
    int b_r = 0, b_t = 0;
    CommonOpts b_common;
    bounds->add_option("-n", b_ns, "ground sizes (repeatable)")->required();
    bounds->add_option("-r", b_r, "r parameter")->required();
    bounds->add_option("-t", b_t, "t parameter")->required();
    add_common(bounds, b_common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (construct->parsed())
            return cmd_construct(family, c_m, c_n, c_r, c_t, c_out);
        if (verify->parsed()) {
            vopt.seed = vcommon.seed;
            vopt.budgets = lklab::Budgets::from_env();
            return cmd_verify(vopt, vcommon, v_graph, v_labels);
        }
        if (color->parsed())
            return cmd_color(col_n, col_r, col_t, col_mode, col_trials, col_retry, col_common);
        if (psi->parsed())
            return cmd_psi(p_n, p_r, p_t, p_common);
        if (bounds->parsed())
            return cmd_bounds(b_ns, b_r, b_t, b_common);
    } catch (const lklab::BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const lklab::InvalidParameters& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return 2;
    } catch (const lklab::InvalidInput& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const lklab::SchemaError& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
