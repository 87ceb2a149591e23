#include "genboot/bootstrap.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "genboot/entropy.hpp"
#include "genboot/error.hpp"
#include "parallel.hpp"

namespace genboot {

namespace {

constexpr double z95 = 1.96;

double quantile(const std::vector<double>& sorted, double q)
{
    const double pos = q * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const auto hi = static_cast<std::size_t>(std::ceil(pos));
    const double frac = pos - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

template <class Get>
Summary summarize(const std::vector<ReplicateResult>& rows, IntervalMethod method, Get&& get)
{
    std::vector<double> values;
    values.reserve(rows.size());
    for (const auto& row : rows) {
        values.push_back(get(row));
    }
    return aggregate(values, method);
}

} // namespace

MeasureSelection parse_measure_selection(std::string_view name)
{
    if (name == "precision") {
        return MeasureSelection::precision;
    }
    if (name == "recall") {
        return MeasureSelection::recall;
    }
    if (name == "both") {
        return MeasureSelection::both;
    }
    throw Error(ErrorCode::InvalidArgument, "unknown measure '" + std::string(name) + "'");
}

Summary aggregate(std::span<const double> data, IntervalMethod method)
{
    if (data.empty()) {
        throw Error(ErrorCode::EmptyData, "cannot aggregate an empty sample");
    }
    const auto count = static_cast<double>(data.size());
    double sum = 0.0;
    for (double v : data) {
        sum += v;
    }
    Summary s;
    s.mean = sum / count;
    if (data.size() > 1) {
        double squares = 0.0;
        for (double v : data) {
            squares += (v - s.mean) * (v - s.mean);
        }
        s.variance = squares / (count - 1.0);
    }
    if (method == IntervalMethod::normal) {
        s.ci95 = z95 * std::sqrt(s.variance / count);
        s.lower = s.mean - s.ci95;
        s.upper = s.mean + s.ci95;
    } else {
        std::vector<double> sorted(data.begin(), data.end());
        std::sort(sorted.begin(), sorted.end());
        s.lower = quantile(sorted, 0.025);
        s.upper = quantile(sorted, 0.975);
        s.ci95 = 0.5 * (s.upper - s.lower);
    }
    return s;
}

void EstimatorSpec::validate() const
{
    cfg.validate();
    if (m < 1) {
        throw Error(ErrorCode::InvalidArgument, "replicate count m must be at least 1");
    }
}

GeneralizationEstimate bootstrap_generalization(const Dfa& model, const EventLog& log,
                                                const EstimatorSpec& spec, std::size_t workers)
{
    spec.validate();
    if (log.empty()) {
        throw Error(ErrorCode::EmptyLog, "input log is empty");
    }
    const ModelReference reference(model);
    const bool want_precision = spec.measure != MeasureSelection::recall;
    const bool want_recall = spec.measure != MeasureSelection::precision;

    std::vector<ReplicateResult> rows(spec.m);
    detail::parallel_for(spec.m, workers, [&](std::size_t i) {
        try {
            Rng rng(derive_seed(spec.cfg.seed, i));
            const EventLog replicate = draw_replicate(log, spec.lsm, spec.cfg, rng);
            const MeasurePair measured = reference.measure(log_to_dfa(replicate), want_recall);
            ReplicateResult& row = rows[i];
            row.distinct_traces = replicate.distinct();
            if (want_precision) {
                row.precision = measured.precision;
            }
            if (want_recall) {
                row.recall = measured.recall;
            }
        } catch (const Error& e) {
            throw Error(e.code(), "replicate " + std::to_string(i) + ": " + e.message());
        }
    });

    GeneralizationEstimate out;
    out.replicates = spec.m;
    out.distinct_traces = summarize(rows, spec.interval, [](const ReplicateResult& r) {
        return static_cast<double>(r.distinct_traces);
    });
    if (want_precision) {
        out.precision = summarize(rows, spec.interval, [](const ReplicateResult& r) { return *r.precision; });
    }
    if (want_recall) {
        out.recall = summarize(rows, spec.interval, [](const ReplicateResult& r) { return *r.recall; });
    }
    if (spec.harmonic && want_precision && want_recall) {
        out.harmonic = summarize(rows, spec.interval, [](const ReplicateResult& r) {
            const double sum = *r.precision + *r.recall;
            return sum > 0.0 ? 2.0 * *r.precision * *r.recall / sum : 0.0;
        });
    }
    out.per_replicate = std::move(rows);
    return out;
}

} // namespace genboot
