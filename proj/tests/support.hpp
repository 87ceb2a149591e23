#pragma once

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "genboot/automata.hpp"
#include "genboot/core.hpp"
#include "genboot/io.hpp"

namespace testing {

using genboot::Action;
using genboot::Dfa;
using genboot::Dfg;
using genboot::EventLog;
using genboot::Trace;

inline std::filesystem::path data_dir()
{
    return GENBOOT_DATA_DIR;
}

inline Dfg fig1a()
{
    return genboot::read_dfg(data_dir() / "fig1a.dfg");
}

inline Dfg fig1b()
{
    return genboot::read_dfg(data_dir() / "fig1b.dfg");
}

inline EventLog running_log()
{
    return genboot::read_log(data_dir() / "running_example.log");
}

inline Trace tr(const std::string& letters)
{
    std::vector<Action> out;
    for (char c : letters) {
        out.emplace_back(std::string(1, c));
    }
    return Trace(std::move(out));
}

inline std::vector<Action> alphabet(std::size_t size)
{
    std::vector<Action> out;
    for (std::size_t j = 0; j < size; ++j) {
        out.emplace_back("s" + std::to_string(j));
    }
    return out;
}

/// DFG over up to `max_actions` actions with a guaranteed i -> ... -> o chain.
inline Dfg random_dfg(std::mt19937_64& rng, std::size_t max_actions)
{
    std::uniform_int_distribution<std::size_t> size(1, max_actions);
    const auto actions = alphabet(size(rng));
    std::bernoulli_distribution extra(0.2);
    std::bernoulli_distribution to_out(0.25);
    std::uniform_int_distribution<std::uint64_t> freq(0, 9);
    Dfg g;
    for (Action a : actions) {
        g.add_node(a, freq(rng));
    }
    auto chain = actions;
    std::shuffle(chain.begin(), chain.end(), rng);
    g.add_arc(Action::input_marker(), chain.front(), freq(rng));
    for (std::size_t j = 0; j + 1 < chain.size(); ++j) {
        g.add_arc(chain[j], chain[j + 1], freq(rng));
    }
    g.add_arc(chain.back(), Action::output_marker(), freq(rng));
    for (Action a : actions) {
        for (Action b : actions) {
            if (extra(rng)) {
                g.add_arc(a, b, freq(rng));
            }
        }
        if (extra(rng)) {
            g.add_arc(Action::input_marker(), a, freq(rng));
        }
        if (to_out(rng)) {
            g.add_arc(a, Action::output_marker(), freq(rng));
        }
    }
    return g;
}

/// Unterminated random DFA with up to `max_states` states over `sigma`.
inline Dfa random_dfa(std::mt19937_64& rng, std::size_t max_states, const std::vector<Action>& sigma,
                      double density = 0.6, double accepting = 0.3)
{
    std::uniform_int_distribution<std::size_t> size(1, max_states);
    const std::size_t states = size(rng);
    std::uniform_int_distribution<Dfa::State> target(0, static_cast<Dfa::State>(states - 1));
    std::bernoulli_distribution present(density);
    std::bernoulli_distribution final_state(accepting);
    Dfa a;
    for (std::size_t s = 1; s < states; ++s) {
        a.add_state();
    }
    for (Action x : sigma) {
        a.add_to_alphabet(x);
    }
    for (Dfa::State s = 0; s < states; ++s) {
        a.set_accepting(s, final_state(rng));
        for (Action x : sigma) {
            if (present(rng)) {
                a.add_transition(s, x, target(rng));
            }
        }
    }
    return a;
}

/// All words over `sigma` of length <= max_len, shortest first.
inline std::vector<std::vector<Action>> all_words(const std::vector<Action>& sigma, std::size_t max_len)
{
    std::vector<std::vector<Action>> out{{}};
    std::size_t begin = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
        const std::size_t end = out.size();
        for (std::size_t w = begin; w < end; ++w) {
            for (Action x : sigma) {
                auto word = out[w];
                word.push_back(x);
                out.push_back(std::move(word));
            }
        }
        begin = end;
    }
    return out;
}

/// Independent Perron root: Gelfand's formula ρ = lim ||A^(2^j)||^(1/2^j)
/// on a dense copy, rescaling after every squaring.
inline double dense_spectral_radius(const genboot::WeightedDigraph& g, int squarings = 40)
{
    const std::size_t n = g.node_count();
    std::vector<double> m(n * n, 0.0);
    for (const auto& e : g.edges()) {
        m[e.from * n + e.to] = static_cast<double>(e.multiplicity);
    }
    double log_scale = 0.0; // ln of the accumulated rescaling of A^(2^j)
    double exponent = 1.0;  // 2^j
    for (int j = 0; j < squarings; ++j) {
        std::vector<double> sq(n * n, 0.0);
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t k = 0; k < n; ++k) {
                const double v = m[r * n + k];
                if (v == 0.0) {
                    continue;
                }
                for (std::size_t c = 0; c < n; ++c) {
                    sq[r * n + c] += v * m[k * n + c];
                }
            }
        }
        double peak = 0.0;
        for (double v : sq) {
            peak = std::max(peak, v);
        }
        if (peak == 0.0) {
            return 0.0;
        }
        for (double& v : sq) {
            v /= peak;
        }
        log_scale = 2.0 * log_scale + std::log(peak);
        exponent *= 2.0;
        m = std::move(sq);
    }
    double norm = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
        double row = 0.0;
        for (std::size_t c = 0; c < n; ++c) {
            row += m[r * n + c];
        }
        norm = std::max(norm, row);
    }
    return std::exp((log_scale + std::log(norm)) / exponent);
}

} // namespace testing
