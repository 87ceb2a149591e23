#include "genboot/experiment.hpp"

#include <chrono>
#include <iomanip>
#include <map>
#include <sstream>

#include "genboot/io.hpp"

namespace genboot {

std::filesystem::path default_data_dir()
{
    return GENBOOT_DATA_DIR;
}

Table1Result reproduce_table1(const Table1Config& cfg)
{
    const std::filesystem::path dir = cfg.data_dir.empty() ? default_data_dir() : cfg.data_dir;
    const Dfa model = dfg_to_dfa(read_dfg(dir / "fig1a.dfg"));
    const EventLog log = read_log(dir / "running_example.log");

    std::map<std::pair<std::size_t, std::size_t>, Table1Cell> cells;
    auto cell = [&](std::size_t n, std::size_t g) -> const Table1Cell& {
        const auto key = std::make_pair(n, g);
        if (const auto it = cells.find(key); it != cells.end()) {
            return it->second;
        }
        EstimatorSpec spec;
        spec.lsm = SamplingMethod::breeding;
        spec.m = cfg.m;
        spec.cfg.n = n;
        spec.cfg.g = g;
        spec.cfg.k = cfg.k;
        spec.cfg.p = cfg.p;
        spec.cfg.seed = derive_seed(derive_seed(cfg.seed, n), g);
        Table1Cell out{n, g, {}, 0.0};
        const auto start = std::chrono::steady_clock::now();
        out.estimate = bootstrap_generalization(model, log, spec, cfg.workers);
        out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return cells.emplace(key, std::move(out)).first->second;
    };

    Table1Result result;
    for (std::size_t n : cfg.n_values) {
        result.by_n.push_back(cell(n, cfg.g_fixed));
    }
    for (std::size_t g : cfg.g_values) {
        result.by_g.push_back(cell(cfg.n_fixed, g));
    }
    return result;
}

namespace {

void write_panel(std::ostream& out, const char* key, const std::vector<Table1Cell>& rows, bool by_n, bool timing)
{
    out << key << "\tprecision\tprecision_ci95\trecall\trecall_ci95\ttraces\ttraces_ci95";
    if (timing) {
        out << "\tseconds";
    }
    out << '\n';
    for (const auto& row : rows) {
        const auto& e = row.estimate;
        out << (by_n ? row.n : row.g) << '\t' << e.precision->mean << '\t' << e.precision->ci95 << '\t'
            << e.recall->mean << '\t' << e.recall->ci95 << '\t' << e.distinct_traces.mean << '\t'
            << e.distinct_traces.ci95;
        if (timing) {
            out << '\t' << row.seconds;
        }
        out << '\n';
    }
}

} // namespace

std::string format_table1(const Table1Config& cfg, const Table1Result& result, bool timing)
{
    std::ostringstream out;
    out << std::fixed << std::setprecision(6);
    out << "# (a) g = " << cfg.g_fixed << ", m = " << cfg.m << ", k = " << cfg.k << ", p = " << cfg.p
        << ", seed = " << cfg.seed << '\n';
    write_panel(out, "n", result.by_n, true, timing);
    out << "\n# (b) n = " << cfg.n_fixed << ", m = " << cfg.m << ", k = " << cfg.k << ", p = " << cfg.p
        << ", seed = " << cfg.seed << '\n';
    write_panel(out, "g", result.by_g, false, timing);
    return out.str();
}

} // namespace genboot
