#include "genboot/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "genboot/error.hpp"

namespace genboot {

namespace {

struct SparseRows {
    std::vector<std::size_t> offsets;
    std::vector<std::size_t> columns;
    std::vector<double> weights;
};

SparseRows rows_of(const WeightedDigraph& g)
{
    SparseRows rows;
    rows.offsets.assign(g.node_count() + 1, 0);
    const auto edges = g.edges(); // ordered by (from, to)
    for (const auto& e : edges) {
        ++rows.offsets[e.from + 1];
    }
    for (std::size_t i = 0; i < g.node_count(); ++i) {
        rows.offsets[i + 1] += rows.offsets[i];
    }
    rows.columns.reserve(edges.size());
    rows.weights.reserve(edges.size());
    for (const auto& e : edges) {
        rows.columns.push_back(e.to);
        rows.weights.push_back(static_cast<double>(e.multiplicity));
    }
    return rows;
}

Dfa entropy_view(const Dfa& a)
{
    return minimize(strip_terminal(a));
}

void require_language(const Dfa& a, const char* what)
{
    if (is_empty_language(a)) {
        throw Error(ErrorCode::EmptyLanguage, std::string(what) + " has an empty language");
    }
}

} // namespace

SpectralRadius spectral_radius(const WeightedDigraph& g, const PowerIterationOptions& options)
{
    const std::size_t n = g.node_count();
    SpectralRadius result;
    if (n == 0) {
        result.converged = true;
        return result;
    }
    const SparseRows rows = rows_of(g);
    std::vector<double> x(n, 1.0);
    std::vector<double> y(n);

    while (result.iterations < options.max_iterations) {
        ++result.iterations;
        double lo = std::numeric_limits<double>::infinity();
        double hi = 0.0;
        double peak = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double sum = x[i];
            for (std::size_t k = rows.offsets[i]; k < rows.offsets[i + 1]; ++k) {
                sum += rows.weights[k] * x[rows.columns[k]];
            }
            y[i] = sum;
            const double ratio = sum / x[i];
            lo = std::min(lo, ratio);
            hi = std::max(hi, ratio);
            peak = std::max(peak, sum);
        }
        for (std::size_t i = 0; i < n; ++i) {
            x[i] = y[i] / peak;
        }
        result.value = 0.5 * (lo + hi) - 1.0;
        if (hi - lo <= options.tolerance * hi) {
            result.converged = true;
            break;
        }
    }
    return result;
}

EntropyValue topological_entropy(const Dfa& a, const PowerIterationOptions& options)
{
    const Dfa view = entropy_view(a);
    require_language(view, "automaton");
    const SpectralRadius rho = spectral_radius(short_circuit(view), options);
    if (!rho.converged) {
        throw Error(ErrorCode::NoConvergence, "power iteration did not converge within " +
                                                  std::to_string(options.max_iterations) +
                                                  " iterations");
    }
    EntropyValue out;
    out.spectral_radius = std::max(rho.value, 1.0);
    out.value = std::log(out.spectral_radius);
    out.converged = true;
    out.iterations = rho.iterations;
    return out;
}

double growth_oracle(const Dfa& a, std::size_t horizon)
{
    if (horizon < 8) {
        throw Error(ErrorCode::InvalidArgument, "growth oracle horizon must be at least 8");
    }
    const Dfa view = trim(strip_terminal(a));
    require_language(view, "automaton");
    const auto edges = short_circuit(view).edges();

    // walks[j] = (scaled) number of walks of the current length ending at j
    std::vector<double> walks(view.state_count(), 0.0);
    std::vector<double> next(view.state_count());
    walks[view.start()] = 1.0;
    double log_count = 0.0;
    for (std::size_t step = 0; step < horizon; ++step) {
        std::fill(next.begin(), next.end(), 0.0);
        for (const auto& e : edges) {
            next[e.to] += walks[e.from] * static_cast<double>(e.multiplicity);
        }
        double total = 0.0;
        for (double v : next) {
            total += v;
        }
        log_count += std::log(total);
        for (std::size_t j = 0; j < next.size(); ++j) {
            walks[j] = next[j] / total;
        }
    }
    return log_count / static_cast<double>(horizon);
}

ModelReference::ModelReference(const Dfa& model)
    : model_(entropy_view(model))
{
    require_language(model_, "model");
    entropy_ = topological_entropy(model_);
}

MeasurePair ModelReference::measure(const Dfa& system, bool need_recall) const
{
    const Dfa view = entropy_view(system);
    require_language(view, "system");
    const Dfa common = intersect(model_, view);
    MeasurePair out;
    if (is_empty_language(common)) {
        return out;
    }
    const double shared = topological_entropy(common).spectral_radius;
    out.precision = shared / entropy_.spectral_radius;
    if (need_recall) {
        out.recall = shared / topological_entropy(view).spectral_radius;
    }
    return out;
}

double model_system_precision(const Dfa& m, const Dfa& s)
{
    return ModelReference(m).measure(s, /*need_recall=*/false).precision;
}

double model_system_recall(const Dfa& m, const Dfa& s)
{
    return ModelReference(m).measure(s).recall;
}

} // namespace genboot
