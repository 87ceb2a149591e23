#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "genboot/automata.hpp"
#include "genboot/core.hpp"
#include "genboot/sampling.hpp"

namespace genboot {

enum class MeasureSelection { precision, recall, both };
enum class IntervalMethod { normal, percentile };

[[nodiscard]] MeasureSelection parse_measure_selection(std::string_view name);

/// Mean, unbiased variance, and a 95% interval of a sample.
struct Summary {
    double mean = 0.0;
    double variance = 0.0;
    double ci95 = 0.0; ///< half-width of [lower, upper]
    double lower = 0.0;
    double upper = 0.0;
};

/// Normal method: ci95 = 1.96 * sqrt(variance / |data|), bounds mean ± ci95.
/// Percentile method: bounds are the 2.5% and 97.5% empirical quantiles
/// (linear interpolation) and ci95 is half their distance.
/// Throws Error(EmptyData).
[[nodiscard]] Summary aggregate(std::span<const double> data, IntervalMethod method = IntervalMethod::normal);

struct EstimatorSpec {
    MeasureSelection measure = MeasureSelection::both;
    SamplingMethod lsm = SamplingMethod::breeding;
    SamplerConfig cfg;        ///< cfg.seed is the master seed
    std::size_t m = 100;      ///< replicates
    IntervalMethod interval = IntervalMethod::normal;
    bool harmonic = false;    ///< also summarize 2PR/(P+R) per replicate

    void validate() const;
};

struct ReplicateResult {
    std::optional<double> precision;
    std::optional<double> recall;
    std::size_t distinct_traces = 0;
};

struct GeneralizationEstimate {
    std::optional<Summary> precision;
    std::optional<Summary> recall;
    std::optional<Summary> harmonic;
    Summary distinct_traces;
    std::size_t replicates = 0;
    std::vector<ReplicateResult> per_replicate; ///< indexed by replicate
};

/// Bootstrap estimate of a model's generalization with respect to the
/// system behind `log`: m replicates lsm(log, n), each compared against the
/// model with the entropy-based measures.
///
/// Replicate i is seeded with derive_seed(spec.cfg.seed, i), so the result
/// does not depend on `workers`. Errors carry the failing replicate index.
[[nodiscard]] GeneralizationEstimate bootstrap_generalization(const Dfa& model, const EventLog& log,
                                                              const EstimatorSpec& spec,
                                                              std::size_t workers = 1);

} // namespace genboot
