#include "genboot/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "genboot/bootstrap.hpp"
#include "genboot/discovery.hpp"
#include "genboot/entropy.hpp"
#include "genboot/error.hpp"
#include "genboot/experiment.hpp"
#include "genboot/io.hpp"

namespace genboot::cli {

namespace {

struct SamplerFlags {
    std::string lsm = "breeding";
    std::size_t n = 1000;
    std::size_t g = 1000;
    std::size_t k = 2;
    double p = 1.0;
    std::uint64_t seed = 42;

    void attach(CLI::App* cmd)
    {
        cmd->add_option("--lsm", lsm, "log sampling method")
            ->check(CLI::IsMember({"replacement", "breeding"}))
            ->capture_default_str();
        cmd->add_option("-n", n, "traces per replicate")->capture_default_str();
        cmd->add_option("-g", g, "breeding generations")->capture_default_str();
        cmd->add_option("-k", k, "common subtrace length")->capture_default_str();
        cmd->add_option("-p", p, "breeding probability")->capture_default_str();
        cmd->add_option("--seed", seed, "master seed")->capture_default_str();
    }

    [[nodiscard]] SamplerConfig config() const { return SamplerConfig{n, g, k, p, seed}; }
};

/// "0.25" or "1/3".
double parse_fraction(const std::string& text)
{
    const auto slash = text.find('/');
    try {
        std::size_t used = 0;
        if (slash == std::string::npos) {
            const double value = std::stod(text, &used);
            if (used == text.size()) {
                return value;
            }
        } else {
            const std::string num = text.substr(0, slash);
            const std::string den = text.substr(slash + 1);
            std::size_t used_den = 0;
            const double a = std::stod(num, &used);
            const double b = std::stod(den, &used_den);
            if (used == num.size() && used_den == den.size() && b != 0.0) {
                return a / b;
            }
        }
    } catch (const std::logic_error&) {
    }
    throw Error(ErrorCode::InvalidArgument, "'" + text + "' is not a number or a fraction a/b");
}

/// Writes to --out when given, else to the command's standard output.
template <class Write>
void emit(const std::string& path, std::ostream& out, Write&& write)
{
    if (path.empty()) {
        write(out);
        return;
    }
    std::ofstream file(path);
    if (!file) {
        throw Error(ErrorCode::InvalidArgument, "cannot write '" + path + "'");
    }
    write(file);
}

void summary_row(std::ostream& out, const char* name, const Summary& s, std::size_t replicates)
{
    out << name << '\t' << s.mean << '\t' << s.ci95 << '\t' << s.variance << '\t' << replicates << '\n';
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Bootstrap generalization estimates for process models"};
    app.name(args.empty() ? "genboot" : args.front());
    app.require_subcommand(1);

    // estimate
    auto* estimate = app.add_subcommand("estimate", "bootstrap precision and recall of a model w.r.t. a log");
    std::string model_path;
    std::string log_path;
    std::string out_path;
    std::string raw_path;
    std::string measure_name = "both";
    std::size_t replicates = 100;
    std::size_t workers = 1;
    bool harmonic = false;
    bool percentile = false;
    SamplerFlags sampler;
    estimate->add_option("--model", model_path, "model DFG file")->required();
    estimate->add_option("--log", log_path, "event log file")->required();
    sampler.attach(estimate);
    estimate->add_option("-m", replicates, "replicates")->capture_default_str();
    estimate->add_option("--measure", measure_name, "precision, recall or both")
        ->check(CLI::IsMember({"precision", "recall", "both"}))
        ->capture_default_str();
    estimate->add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
    estimate->add_flag("--harmonic", harmonic, "also report 2PR/(P+R)");
    estimate->add_flag("--percentile", percentile, "percentile instead of normal intervals");
    estimate->add_option("--raw", raw_path, "write per-replicate values to this file");
    estimate->add_option("--out", out_path, "output file");

    // measure
    auto* measure = app.add_subcommand("measure", "exact precision and recall of a model");
    std::string system_path;
    measure->add_option("--model", model_path, "model DFG file")->required();
    auto* system_opt = measure->add_option("--system", system_path, "system DFG file");
    auto* log_opt = measure->add_option("--log", log_path, "event log file");
    system_opt->excludes(log_opt);
    measure->add_option("--out", out_path, "output file");

    // discover
    auto* discover = app.add_subcommand("discover", "discover a DFG from a log");
    std::string filter_text = "0";
    discover->add_option("--log", log_path, "event log file")->required();
    discover->add_option("--filter-fraction", filter_text, "share of least frequent distinct traces dropped")
        ->capture_default_str();
    discover->add_option("--out", out_path, "output DFG file");

    // simulate
    auto* simulate = app.add_subcommand("simulate", "random-walk a DFG into a log");
    std::string dfg_path;
    WalkConfig walk;
    bool weighted = false;
    std::uint64_t walk_seed = 42;
    simulate->add_option("--dfg", dfg_path, "DFG file")->required();
    simulate->add_option("--traces", walk.trace_count, "traces to generate")->capture_default_str();
    simulate->add_option("--max-length", walk.max_length, "longest accepted walk")->capture_default_str();
    simulate->add_flag("--weighted", weighted, "follow arc frequencies");
    simulate->add_option("--seed", walk_seed, "seed")->capture_default_str();
    simulate->add_option("--out", out_path, "output log file");

    // sample
    auto* sample = app.add_subcommand("sample", "draw one replicate log");
    SamplerFlags one;
    sample->add_option("--log", log_path, "event log file")->required();
    one.attach(sample);
    sample->add_option("--out", out_path, "output log file");

    // entropy
    auto* entropy = app.add_subcommand("entropy", "topological entropy of a DFG or log language");
    auto* dfg_opt = entropy->add_option("--dfg", dfg_path, "DFG file");
    auto* elog_opt = entropy->add_option("--log", log_path, "event log file");
    dfg_opt->excludes(elog_opt);
    entropy->add_flag("--dfa-of", "accepted for compatibility; the DFA is always built from the input");
    entropy->add_option("--out", out_path, "output file");

    // reproduce-table1
    auto* table = app.add_subcommand("reproduce-table1", "bootstrap the running example over both panels");
    table->alias("reproduce_table1");
    Table1Config table_cfg;
    std::string data_dir;
    bool timing = false;
    table->add_option("--seed", table_cfg.seed, "master seed")->capture_default_str();
    table->add_option("--workers", table_cfg.workers, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
    table->add_option("-m", table_cfg.m, "replicates per cell")->capture_default_str();
    table->add_option("--n", table_cfg.n_values, "replicate sizes of panel (a)")->delimiter(',');
    table->add_option("--g", table_cfg.g_values, "generations of panel (b)")->delimiter(',');
    table->add_option("--g-fixed", table_cfg.g_fixed, "generations in panel (a)")->capture_default_str();
    table->add_option("--n-fixed", table_cfg.n_fixed, "replicate size in panel (b)")->capture_default_str();
    table->add_option("-k", table_cfg.k, "common subtrace length")->capture_default_str();
    table->add_option("-p", table_cfg.p, "breeding probability")->capture_default_str();
    table->add_option("--data-dir", data_dir, "directory with fig1a.dfg and running_example.log");
    table->add_flag("--timing", timing, "add wall-clock seconds per cell");
    table->add_option("--out", out_path, "output file");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    if (args.empty()) {
        argv.push_back("genboot");
    }
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (estimate->parsed()) {
            EstimatorSpec spec;
            spec.measure = parse_measure_selection(measure_name);
            spec.lsm = parse_sampling_method(sampler.lsm);
            spec.cfg = sampler.config();
            spec.m = replicates;
            spec.interval = percentile ? IntervalMethod::percentile : IntervalMethod::normal;
            spec.harmonic = harmonic;
            const Dfa model = dfg_to_dfa(read_dfg(model_path));
            const EventLog log = read_log(log_path);
            const auto result = bootstrap_generalization(model, log, spec, workers);
            emit(out_path, out, [&](std::ostream& o) {
                o << std::fixed << std::setprecision(6);
                o << "measure\tmean\tci95\tvariance\treplicates\n";
                if (result.precision) {
                    summary_row(o, "precision", *result.precision, result.replicates);
                }
                if (result.recall) {
                    summary_row(o, "recall", *result.recall, result.replicates);
                }
                if (result.harmonic) {
                    summary_row(o, "harmonic", *result.harmonic, result.replicates);
                }
                summary_row(o, "distinct_traces", result.distinct_traces, result.replicates);
            });
            if (!raw_path.empty()) {
                emit(raw_path, out, [&](std::ostream& o) {
                    o << std::fixed << std::setprecision(6);
                    o << "replicate\tprecision\trecall\tdistinct_traces\n";
                    for (std::size_t i = 0; i < result.per_replicate.size(); ++i) {
                        const auto& row = result.per_replicate[i];
                        o << i << '\t';
                        row.precision ? o << *row.precision : o << "NA";
                        o << '\t';
                        row.recall ? o << *row.recall : o << "NA";
                        o << '\t' << row.distinct_traces << '\n';
                    }
                });
            }
        } else if (measure->parsed()) {
            if (system_path.empty() && log_path.empty()) {
                err << "measure: one of --system or --log is required\n";
                return exit_usage;
            }
            const Dfa model = dfg_to_dfa(read_dfg(model_path));
            const Dfa system =
                system_path.empty() ? log_to_dfa(read_log(log_path)) : dfg_to_dfa(read_dfg(system_path));
            const MeasurePair m = ModelReference(model).measure(system);
            emit(out_path, out, [&](std::ostream& o) {
                o << std::fixed << std::setprecision(6);
                o << "precision\t" << m.precision << "\nrecall\t" << m.recall << '\n';
            });
        } else if (discover->parsed()) {
            const Dfg g = discover_dfg(read_log(log_path), DiscoveryConfig{parse_fraction(filter_text)});
            emit(out_path, out, [&](std::ostream& o) { write_dfg(o, g); });
        } else if (simulate->parsed()) {
            walk.weighting = weighted ? EdgeWeighting::frequency : EdgeWeighting::uniform;
            walk.seed = walk_seed;
            const EventLog log = simulate_log(read_dfg(dfg_path), walk);
            emit(out_path, out, [&](std::ostream& o) { write_log(o, log); });
        } else if (sample->parsed()) {
            const EventLog log = read_log(log_path);
            Rng rng(one.seed);
            const EventLog replicate = draw_replicate(log, parse_sampling_method(one.lsm), one.config(), rng);
            emit(out_path, out, [&](std::ostream& o) { write_log(o, replicate); });
        } else if (entropy->parsed()) {
            if (dfg_path.empty() && log_path.empty()) {
                err << "entropy: one of --dfg or --log is required\n";
                return exit_usage;
            }
            const Dfa a = dfg_path.empty() ? log_to_dfa(read_log(log_path)) : dfg_to_dfa(read_dfg(dfg_path));
            const EntropyValue e = topological_entropy(a);
            emit(out_path, out, [&](std::ostream& o) {
                o << std::fixed << std::setprecision(6);
                o << "entropy\t" << e.value << "\nspectral_radius\t" << e.spectral_radius << '\n';
            });
        } else if (table->parsed()) {
            if (!data_dir.empty()) {
                table_cfg.data_dir = data_dir;
            }
            const Table1Result result = reproduce_table1(table_cfg);
            const std::string report = format_table1(table_cfg, result, timing);
            emit(out_path, out, [&](std::ostream& o) { o << report; });
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_parse;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_domain;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_domain;
    }
    return exit_ok;
}

} // namespace genboot::cli
