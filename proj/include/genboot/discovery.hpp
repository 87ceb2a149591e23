#pragma once

#include <cstddef>
#include <cstdint>

#include "genboot/automata.hpp"
#include "genboot/core.hpp"
#include "genboot/sampling.hpp"

namespace genboot {

struct DiscoveryConfig {
    /// Share of distinct traces, least frequent first, dropped before the
    /// graph is built. Must lie in [0, 1).
    double filter_fraction = 0.0;
};

/// Four-stage baseline discovery:
///   1. drop ⌊filter_fraction · |support|⌋ least frequent distinct traces,
///      ties broken by dropping the lexicographically larger trace first;
///   2. one node per action of a surviving trace;
///   3. one arc per pair of adjacent actions;
///   4. arcs i -> first action and last action -> o.
/// Node and arc frequencies count occurrences in the surviving traces with
/// multiplicity; φ(i) = φ(o) = number of surviving traces.
///
/// Throws Error(EmptyLog), Error(AllFiltered), Error(InvalidArgument).
[[nodiscard]] Dfg discover_dfg(const EventLog& l, const DiscoveryConfig& cfg = {});

enum class EdgeWeighting { uniform, frequency };

struct WalkConfig {
    std::size_t trace_count = 100;
    std::size_t max_length = 1000; ///< walks with more actions are redrawn
    EdgeWeighting weighting = EdgeWeighting::uniform;
    std::uint64_t seed = 0;
};

/// Number of consecutive failed walks after which simulation gives up.
inline constexpr std::size_t max_walk_retries = 1000;

/// Random walks from i to o. Each step picks an outgoing arc uniformly, or
/// in proportion to ψ when weighting = frequency (uniform again at nodes
/// whose outgoing arcs all have frequency 0). Walks longer than max_length
/// or stuck at a node without successors are discarded and redrawn.
///
/// Throws Error(Unreachable) if o cannot be reached from i and
/// Error(RetryExhausted) after max_walk_retries consecutive failures.
[[nodiscard]] EventLog simulate_log(const Dfg& g, const WalkConfig& cfg, Rng& rng);

/// Same, seeded from cfg.seed.
[[nodiscard]] EventLog simulate_log(const Dfg& g, const WalkConfig& cfg);

} // namespace genboot
