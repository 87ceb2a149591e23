#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "genboot/core.hpp"

namespace genboot {

/// Directly-follows graph (Φ, Ψ, φ, ψ, i, o).
///
/// Nodes are actions plus the two markers Action::input_marker() and
/// Action::output_marker(). Arcs are restricted to Φ×Φ, {i}×Φ and Φ×{o}.
class Dfg {
public:
    using Arc = std::pair<Action, Action>;

    Dfg() = default;

    /// Adds `a` to Φ (if absent) and sets φ(a). Markers set φ(i) / φ(o).
    void add_node(Action a, std::uint64_t freq = 0);
    /// Adds the arc and sets ψ. Missing action endpoints are added to Φ
    /// with frequency 0. Throws Error(InvalidArgument) for arcs outside
    /// (Φ×Φ) ∪ ({i}×Φ) ∪ (Φ×{o}).
    void add_arc(Action from, Action to, std::uint64_t freq = 0);

    [[nodiscard]] const std::set<Action>& actions() const noexcept { return actions_; }
    [[nodiscard]] const std::map<Arc, std::uint64_t>& arcs() const noexcept { return arcs_; }
    [[nodiscard]] bool has_arc(Action from, Action to) const;
    /// φ over Φ ∪ {i, o}; 0 for unknown nodes.
    [[nodiscard]] std::uint64_t node_freq(Action node) const;
    [[nodiscard]] std::uint64_t arc_freq(Action from, Action to) const;
    /// Outgoing arcs of `node` with their frequencies, ordered by target.
    [[nodiscard]] std::vector<std::pair<Action, std::uint64_t>> successors(Action node) const;

    /// Same nodes, arcs and frequencies; unset frequencies compare as 0.
    friend bool operator==(const Dfg& a, const Dfg& b);

private:
    std::set<Action> actions_;
    std::map<Action, std::uint64_t> node_freq_;
    std::map<Arc, std::uint64_t> arcs_;
};

/// A deterministic finite automaton with a partial transition function.
///
/// `terminated()` marks automata whose words end with the output marker, as
/// produced by dfg_to_dfa. accepts() appends that step for such automata so
/// callers always pass system-level traces.
class Dfa {
public:
    using State = std::uint32_t;

    struct Transition {
        Action label;
        State target;
    };

    /// A fresh automaton has a single non-accepting start state 0 and thus
    /// recognizes the empty language.
    explicit Dfa(bool terminated = false);

    State add_state(bool accepting = false);
    /// Throws Error(InvalidArgument) if (from, label) already leads elsewhere.
    void add_transition(State from, Action label, State to);
    void set_accepting(State s, bool accepting = true);
    void set_start(State s);
    void add_to_alphabet(Action a) { alphabet_.insert(a); }

    [[nodiscard]] State start() const noexcept { return start_; }
    [[nodiscard]] std::size_t state_count() const noexcept { return accepting_.size(); }
    [[nodiscard]] std::size_t transition_count() const noexcept;
    [[nodiscard]] bool is_accepting(State s) const { return accepting_.at(s); }
    [[nodiscard]] bool terminated() const noexcept { return terminated_; }
    [[nodiscard]] const std::set<Action>& alphabet() const noexcept { return alphabet_; }
    /// Outgoing transitions of `s`, sorted by label.
    [[nodiscard]] std::span<const Transition> transitions(State s) const { return delta_.at(s); }
    [[nodiscard]] std::optional<State> step(State s, Action label) const;

private:
    void check_state(State s) const;

    std::vector<std::vector<Transition>> delta_;
    std::vector<bool> accepting_;
    std::set<Action> alphabet_;
    State start_ = 0;
    bool terminated_ = false;
};

/// DFA (Φ ∪ {i,o}, Φ ∪ {o}, δ, i, {o}) with δ(s, t) = t for every arc (s,t).
[[nodiscard]] Dfa dfg_to_dfa(const Dfg& g);

/// Runs `word` verbatim from the start state.
[[nodiscard]] bool accepts_word(const Dfa& a, std::span<const Action> word);

/// Acceptance of a system-level trace: the output-marker step is appended
/// when `a` is terminated. Unknown actions reject.
[[nodiscard]] bool accepts(const Dfa& a, const Trace& t);

/// Every action labels transitions into exactly one target.
[[nodiscard]] bool is_stable(const Dfa& a);

/// Minimal DFA whose language is exactly support(l), optionally over
/// o-terminated words. Multiplicities are discarded.
[[nodiscard]] Dfa log_to_dfa(const EventLog& l, bool terminated = false);

/// Keeps only states reachable from the start and co-reachable to an
/// accepting state. The start state is always kept (as state 0).
[[nodiscard]] Dfa trim(const Dfa& a);

/// Partition-refinement minimization of the trimmed automaton.
[[nodiscard]] Dfa minimize(const Dfa& a);

/// Product construction over the union alphabet, trimmed. If exactly one
/// operand is terminated it is first converted with strip_terminal().
[[nodiscard]] Dfa intersect(const Dfa& a, const Dfa& b);

/// System-level view of a terminated automaton: output-marker transitions
/// are dropped and their sources become accepting when the marker step led
/// to an accepting state. Unterminated automata are returned unchanged.
[[nodiscard]] Dfa strip_terminal(const Dfa& a);

[[nodiscard]] bool is_empty_language(const Dfa& a);

/// Directed multigraph over node ids 0..n-1 with integer edge multiplicities.
class WeightedDigraph {
public:
    struct Edge {
        std::size_t from;
        std::size_t to;
        std::uint64_t multiplicity;
    };

    explicit WeightedDigraph(std::size_t nodes) : nodes_(nodes) {}

    void add_edge(std::size_t from, std::size_t to, std::uint64_t multiplicity = 1);

    [[nodiscard]] std::size_t node_count() const noexcept { return nodes_; }
    /// Total number of edges counting multiplicity.
    [[nodiscard]] std::uint64_t edge_count() const noexcept;
    [[nodiscard]] std::uint64_t multiplicity(std::size_t from, std::size_t to) const;
    /// Aggregated edges, ordered by (from, to).
    [[nodiscard]] std::vector<Edge> edges() const;

private:
    std::size_t nodes_;
    std::map<std::pair<std::size_t, std::size_t>, std::uint64_t> weights_;
};

/// All transitions of `a` plus one return edge from each accepting state to
/// the start. Node ids are state ids. Throws Error(EmptyLanguage).
[[nodiscard]] WeightedDigraph short_circuit(const Dfa& a);

} // namespace genboot
