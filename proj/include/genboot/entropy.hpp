#pragma once

#include <cstddef>

#include "genboot/automata.hpp"

namespace genboot {

struct PowerIterationOptions {
    double tolerance = 1e-12;
    std::size_t max_iterations = 100000;
};

struct SpectralRadius {
    double value = 0.0;
    bool converged = false;
    std::size_t iterations = 0;
};

/// Perron root of the adjacency matrix of a strongly connected digraph.
///
/// Iterates x <- (A + I)x from the all-ones vector; A + I is primitive, so
/// the iteration converges even when A is periodic. Stops once the
/// Collatz-Wielandt bracket [min_i (Bx)_i/x_i, max_i (Bx)_i/x_i] is narrower
/// than `tolerance` relative to its upper end.
[[nodiscard]] SpectralRadius spectral_radius(const WeightedDigraph& g,
                                             const PowerIterationOptions& options = {});

/// Short-circuit topological entropy of a regular language.
struct EntropyValue {
    double value = 0.0;           ///< ln(ρ), nats
    double spectral_radius = 1.0; ///< ρ >= 1
    bool converged = false;
    std::size_t iterations = 0;
};

/// ln ρ of short_circuit(minimize(strip_terminal(a))). Throws
/// Error(EmptyLanguage) or Error(NoConvergence).
[[nodiscard]] EntropyValue topological_entropy(const Dfa& a, const PowerIterationOptions& options = {});

/// Brute-force estimate ln(C(h))/h, where C(h) counts the length-h walks from
/// the start in the short-circuited trimmed automaton. Independent of
/// minimization and of the power iteration. Requires horizon >= 8.
[[nodiscard]] double growth_oracle(const Dfa& a, std::size_t horizon);

/// ρ(m ∩ s) / ρ(m): the share of the model's behavior that the system has.
/// 0 when the intersection is empty. Throws Error(EmptyLanguage) if either
/// operand's language is empty.
[[nodiscard]] double model_system_precision(const Dfa& m, const Dfa& s);

/// ρ(m ∩ s) / ρ(s): the share of the system's behavior the model covers.
[[nodiscard]] double model_system_recall(const Dfa& m, const Dfa& s);

struct MeasurePair {
    double precision = 0.0;
    double recall = 0.0;
};

/// A model prepared once for repeated comparison against many systems, as in
/// bootstrap replicates.
class ModelReference {
public:
    explicit ModelReference(const Dfa& model);

    [[nodiscard]] const Dfa& model() const noexcept { return model_; }
    [[nodiscard]] const EntropyValue& entropy() const noexcept { return entropy_; }

    /// Both measures. `need_recall = false` skips the system's own entropy
    /// and leaves recall at 0.
    [[nodiscard]] MeasurePair measure(const Dfa& system, bool need_recall = true) const;

private:
    Dfa model_;
    EntropyValue entropy_;
};

} // namespace genboot
