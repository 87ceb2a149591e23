#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "genboot/core.hpp"

namespace genboot {

using Rng = std::mt19937_64;

/// Seed for stream `index` of a run seeded with `master` (splitmix64 mix).
/// Pure function; lets replicates run in any order or on any worker.
[[nodiscard]] std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) noexcept;

/// Draws trace occurrences of a log uniformly: a trace of multiplicity c is
/// returned with probability c / size(log).
class TraceUrn {
public:
    /// Throws Error(EmptyLog).
    explicit TraceUrn(const EventLog& log);

    [[nodiscard]] const Trace& draw(Rng& rng) const;
    [[nodiscard]] std::uint64_t size() const noexcept { return cumulative_.back(); }

private:
    std::vector<const Trace*> traces_;
    std::vector<std::uint64_t> cumulative_;
};

[[nodiscard]] Trace rand_trace(const EventLog& l, Rng& rng);

/// n independent draws from `l`.
[[nodiscard]] EventLog sample_with_replacement(const EventLog& l, std::size_t n, Rng& rng);

/// 1-based positions of a shared length-k subtrace.
struct BreedingSite {
    std::size_t p1;
    std::size_t p2;

    friend auto operator<=>(const BreedingSite&, const BreedingSite&) = default;
};

/// All (p1, p2) with subtrace(t1, p1, k) == subtrace(t2, p2, k), ordered by
/// (p1, p2). Empty when k is 0 or exceeds either length.
[[nodiscard]] std::vector<BreedingSite> breeding_sites(const Trace& t1, const Trace& t2, std::size_t k);

/// prefix(t1, p1 + k - 1) ∘ suffix(t2, p2 + k). Throws Error(InvalidSite)
/// unless (p1, p2) is a breeding site of (t1, t2, k).
[[nodiscard]] Trace crossover(const Trace& t1, std::size_t p1, const Trace& t2, std::size_t p2, std::size_t k);

/// ⌈size(l1)/2⌉ rounds; each draws t1 from l1 and t2 from l2 and, with
/// probability p and at least one site, adds both offspring at a uniformly
/// chosen site, otherwise adds the parents. p >= 1 always breeds.
[[nodiscard]] EventLog log_breeding(const EventLog& l1, const EventLog& l2, std::size_t k, double p, Rng& rng);

struct SamplerConfig {
    std::size_t n = 1;       ///< replicate size
    std::size_t g = 0;       ///< breeding generations
    std::size_t k = 1;       ///< common subtrace length
    double p = 1.0;          ///< breeding probability
    std::uint64_t seed = 0;

    /// Throws Error(InvalidArgument) unless n >= 1, k >= 1, 0 <= p <= 1.
    void validate() const;
};

/// G[0] = l, G[i] = log_breeding(l, G[i-1], k, p) for i = 1..g; returns n
/// draws with replacement from G[0] ⊎ ... ⊎ G[g].
[[nodiscard]] EventLog sample_with_breeding(const EventLog& l, const SamplerConfig& cfg, Rng& rng);

enum class SamplingMethod { replacement, breeding };

[[nodiscard]] std::string_view to_string(SamplingMethod m) noexcept;
/// Throws Error(InvalidArgument) for unknown names.
[[nodiscard]] SamplingMethod parse_sampling_method(std::string_view name);

/// One replicate of size cfg.n drawn with the chosen method.
[[nodiscard]] EventLog draw_replicate(const EventLog& l, SamplingMethod method, const SamplerConfig& cfg, Rng& rng);

} // namespace genboot
