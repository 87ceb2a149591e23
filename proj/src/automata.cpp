#include "genboot/automata.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

#include "genboot/error.hpp"

namespace genboot {

// Dfg -----------------------------------------------------------------------

void Dfg::add_node(Action a, std::uint64_t freq)
{
    if (!a.is_marker()) {
        actions_.insert(a);
    }
    node_freq_[a] = freq;
}

void Dfg::add_arc(Action from, Action to, std::uint64_t freq)
{
    const Action input = Action::input_marker();
    const Action output = Action::output_marker();
    if (from == output) {
        throw Error(ErrorCode::InvalidArgument, "arc leaves the output marker");
    }
    if (to == input) {
        throw Error(ErrorCode::InvalidArgument, "arc enters the input marker");
    }
    if (from == input && to == output) {
        throw Error(ErrorCode::InvalidArgument, "arc i -> o is not a directly-follows arc");
    }
    for (Action end : {from, to}) {
        if (!end.is_marker() && actions_.insert(end).second) {
            node_freq_.emplace(end, 0);
        }
    }
    arcs_[{from, to}] = freq;
}

bool Dfg::has_arc(Action from, Action to) const
{
    return arcs_.contains({from, to});
}

std::uint64_t Dfg::node_freq(Action node) const
{
    const auto it = node_freq_.find(node);
    return it == node_freq_.end() ? 0 : it->second;
}

std::uint64_t Dfg::arc_freq(Action from, Action to) const
{
    const auto it = arcs_.find({from, to});
    return it == arcs_.end() ? 0 : it->second;
}

std::vector<std::pair<Action, std::uint64_t>> Dfg::successors(Action node) const
{
    std::vector<std::pair<Action, std::uint64_t>> out;
    for (const auto& [arc, freq] : arcs_) {
        if (arc.first == node) {
            out.emplace_back(arc.second, freq);
        }
    }
    return out;
}

bool operator==(const Dfg& a, const Dfg& b)
{
    if (a.actions_ != b.actions_ || a.arcs_ != b.arcs_) {
        return false;
    }
    const auto same = [&](Action n) { return a.node_freq(n) == b.node_freq(n); };
    return same(Action::input_marker()) && same(Action::output_marker()) &&
           std::all_of(a.actions_.begin(), a.actions_.end(), same);
}

// Dfa -----------------------------------------------------------------------

Dfa::Dfa(bool terminated) : delta_(1), accepting_(1, false), terminated_(terminated) {}

Dfa::State Dfa::add_state(bool accepting)
{
    if (accepting_.size() >= std::numeric_limits<State>::max()) {
        throw Error(ErrorCode::InvalidArgument, "too many states");
    }
    delta_.emplace_back();
    accepting_.push_back(accepting);
    return static_cast<State>(accepting_.size() - 1);
}

void Dfa::check_state(State s) const
{
    if (s >= accepting_.size()) {
        throw Error(ErrorCode::InvalidArgument, "unknown state " + std::to_string(s));
    }
}

void Dfa::add_transition(State from, Action label, State to)
{
    check_state(from);
    check_state(to);
    auto& out = delta_[from];
    auto it = std::lower_bound(out.begin(), out.end(), label,
                               [](const Transition& t, Action l) { return t.label < l; });
    if (it != out.end() && it->label == label) {
        if (it->target != to) {
            throw Error(ErrorCode::InvalidArgument,
                        "nondeterministic transition on '" + label.name() + "' from state " +
                            std::to_string(from));
        }
        return;
    }
    out.insert(it, Transition{label, to});
    alphabet_.insert(label);
}

void Dfa::set_accepting(State s, bool accepting)
{
    check_state(s);
    accepting_[s] = accepting;
}

void Dfa::set_start(State s)
{
    check_state(s);
    start_ = s;
}

std::size_t Dfa::transition_count() const noexcept
{
    std::size_t n = 0;
    for (const auto& out : delta_) {
        n += out.size();
    }
    return n;
}

std::optional<Dfa::State> Dfa::step(State s, Action label) const
{
    const auto& out = delta_.at(s);
    auto it = std::lower_bound(out.begin(), out.end(), label,
                               [](const Transition& t, Action l) { return t.label < l; });
    if (it == out.end() || it->label != label) {
        return std::nullopt;
    }
    return it->target;
}

// Operations ----------------------------------------------------------------

Dfa dfg_to_dfa(const Dfg& g)
{
    Dfa dfa(/*terminated=*/true);
    const Action input = Action::input_marker();
    const Action output = Action::output_marker();

    std::map<Action, Dfa::State> state_of;
    state_of.emplace(input, dfa.start());
    for (Action a : g.actions()) {
        state_of.emplace(a, dfa.add_state());
        dfa.add_to_alphabet(a);
    }
    const Dfa::State final_state = dfa.add_state(/*accepting=*/true);
    state_of.emplace(output, final_state);
    dfa.add_to_alphabet(output);

    for (const auto& [arc, freq] : g.arcs()) {
        dfa.add_transition(state_of.at(arc.first), arc.second, state_of.at(arc.second));
    }
    return dfa;
}

bool accepts_word(const Dfa& a, std::span<const Action> word)
{
    Dfa::State s = a.start();
    for (Action x : word) {
        const auto next = a.step(s, x);
        if (!next) {
            return false;
        }
        s = *next;
    }
    return a.is_accepting(s);
}

bool accepts(const Dfa& a, const Trace& t)
{
    if (!a.terminated()) {
        return accepts_word(a, t.actions());
    }
    std::vector<Action> word(t.begin(), t.end());
    word.push_back(Action::output_marker());
    return accepts_word(a, word);
}

bool is_stable(const Dfa& a)
{
    std::map<Action, Dfa::State> target_of;
    for (Dfa::State s = 0; s < a.state_count(); ++s) {
        for (const auto& tr : a.transitions(s)) {
            const auto [it, inserted] = target_of.emplace(tr.label, tr.target);
            if (!inserted && it->second != tr.target) {
                return false;
            }
        }
    }
    return true;
}

Dfa log_to_dfa(const EventLog& l, bool terminated)
{
    Dfa tree(terminated);
    for (const auto& [trace, count] : l) {
        Dfa::State s = tree.start();
        auto walk = [&](Action x) {
            if (const auto next = tree.step(s, x)) {
                s = *next;
            } else {
                const Dfa::State fresh = tree.add_state();
                tree.add_transition(s, x, fresh);
                s = fresh;
            }
        };
        for (Action x : trace) {
            walk(x);
        }
        if (terminated) {
            walk(Action::output_marker());
        }
        tree.set_accepting(s);
    }
    return minimize(tree);
}

namespace {

std::vector<bool> reachable_states(const Dfa& a)
{
    std::vector<bool> seen(a.state_count(), false);
    std::deque<Dfa::State> queue{a.start()};
    seen[a.start()] = true;
    while (!queue.empty()) {
        const Dfa::State s = queue.front();
        queue.pop_front();
        for (const auto& tr : a.transitions(s)) {
            if (!seen[tr.target]) {
                seen[tr.target] = true;
                queue.push_back(tr.target);
            }
        }
    }
    return seen;
}

std::vector<bool> coreachable_states(const Dfa& a)
{
    std::vector<std::vector<Dfa::State>> reverse(a.state_count());
    std::deque<Dfa::State> queue;
    std::vector<bool> seen(a.state_count(), false);
    for (Dfa::State s = 0; s < a.state_count(); ++s) {
        for (const auto& tr : a.transitions(s)) {
            reverse[tr.target].push_back(s);
        }
        if (a.is_accepting(s)) {
            seen[s] = true;
            queue.push_back(s);
        }
    }
    while (!queue.empty()) {
        const Dfa::State s = queue.front();
        queue.pop_front();
        for (Dfa::State p : reverse[s]) {
            if (!seen[p]) {
                seen[p] = true;
                queue.push_back(p);
            }
        }
    }
    return seen;
}

} // namespace

bool is_empty_language(const Dfa& a)
{
    const auto reach = reachable_states(a);
    for (Dfa::State s = 0; s < a.state_count(); ++s) {
        if (reach[s] && a.is_accepting(s)) {
            return false;
        }
    }
    return true;
}

Dfa trim(const Dfa& a)
{
    const auto reach = reachable_states(a);
    const auto coreach = coreachable_states(a);
    constexpr Dfa::State none = std::numeric_limits<Dfa::State>::max();

    Dfa out(a.terminated());
    for (Action x : a.alphabet()) {
        out.add_to_alphabet(x);
    }
    std::vector<Dfa::State> renamed(a.state_count(), none);
    renamed[a.start()] = out.start();
    out.set_accepting(out.start(), a.is_accepting(a.start()));
    for (Dfa::State s = 0; s < a.state_count(); ++s) {
        if (s != a.start() && reach[s] && coreach[s]) {
            renamed[s] = out.add_state(a.is_accepting(s));
        }
    }
    for (Dfa::State s = 0; s < a.state_count(); ++s) {
        if (renamed[s] == none) {
            continue;
        }
        for (const auto& tr : a.transitions(s)) {
            if (renamed[tr.target] != none && coreach[tr.target]) {
                out.add_transition(renamed[s], tr.label, renamed[tr.target]);
            }
        }
    }
    return out;
}

Dfa minimize(const Dfa& a)
{
    const Dfa t = trim(a);
    const std::size_t n = t.state_count();

    // Moore refinement; missing transitions stand for the implicit dead state.
    std::vector<std::size_t> block(n);
    for (Dfa::State s = 0; s < n; ++s) {
        block[s] = t.is_accepting(s) ? 1 : 0;
    }
    std::size_t block_count = 0;
    while (true) {
        using Signature = std::pair<std::size_t, std::vector<std::pair<Action, std::size_t>>>;
        std::map<Signature, std::size_t> ids;
        std::vector<std::size_t> next(n);
        for (Dfa::State s = 0; s < n; ++s) {
            Signature sig{block[s], {}};
            for (const auto& tr : t.transitions(s)) {
                sig.second.emplace_back(tr.label, block[tr.target]);
            }
            next[s] = ids.emplace(std::move(sig), ids.size()).first->second;
        }
        block = std::move(next);
        if (ids.size() == block_count) {
            break;
        }
        block_count = ids.size();
    }

    // Renumber blocks so that the start block becomes state 0.
    constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> state_of_block(block_count, none);
    Dfa out(t.terminated());
    for (Action x : t.alphabet()) {
        out.add_to_alphabet(x);
    }
    state_of_block[block[t.start()]] = out.start();
    out.set_accepting(out.start(), t.is_accepting(t.start()));
    for (Dfa::State s = 0; s < n; ++s) {
        if (state_of_block[block[s]] == none) {
            state_of_block[block[s]] = out.add_state(t.is_accepting(s));
        }
    }
    for (Dfa::State s = 0; s < n; ++s) {
        for (const auto& tr : t.transitions(s)) {
            out.add_transition(static_cast<Dfa::State>(state_of_block[block[s]]), tr.label,
                               static_cast<Dfa::State>(state_of_block[block[tr.target]]));
        }
    }
    return out;
}

Dfa strip_terminal(const Dfa& a)
{
    if (!a.terminated()) {
        return a;
    }
    const Action output = Action::output_marker();
    Dfa out(/*terminated=*/false);
    for (Action x : a.alphabet()) {
        if (x != output) {
            out.add_to_alphabet(x);
        }
    }
    for (Dfa::State s = 1; s < a.state_count(); ++s) {
        out.add_state();
    }
    out.set_start(a.start());
    for (Dfa::State s = 0; s < a.state_count(); ++s) {
        for (const auto& tr : a.transitions(s)) {
            if (tr.label == output) {
                if (a.is_accepting(tr.target)) {
                    out.set_accepting(s);
                }
            } else {
                out.add_transition(s, tr.label, tr.target);
            }
        }
    }
    return trim(out);
}

Dfa intersect(const Dfa& a, const Dfa& b)
{
    if (a.terminated() != b.terminated()) {
        return intersect(strip_terminal(a), strip_terminal(b));
    }
    Dfa product(a.terminated());
    for (Action x : a.alphabet()) {
        product.add_to_alphabet(x);
    }
    for (Action x : b.alphabet()) {
        product.add_to_alphabet(x);
    }

    using Pair = std::pair<Dfa::State, Dfa::State>;
    std::map<Pair, Dfa::State> index;
    std::deque<Pair> queue;
    const Pair origin{a.start(), b.start()};
    index.emplace(origin, product.start());
    product.set_accepting(product.start(), a.is_accepting(origin.first) && b.is_accepting(origin.second));
    queue.push_back(origin);

    while (!queue.empty()) {
        const Pair current = queue.front();
        queue.pop_front();
        const Dfa::State from = index.at(current);
        const auto left = a.transitions(current.first);
        const auto right = b.transitions(current.second);
        auto l = left.begin();
        auto r = right.begin();
        while (l != left.end() && r != right.end()) {
            if (l->label < r->label) {
                ++l;
            } else if (r->label < l->label) {
                ++r;
            } else {
                const Pair target{l->target, r->target};
                auto it = index.find(target);
                if (it == index.end()) {
                    const Dfa::State fresh =
                        product.add_state(a.is_accepting(target.first) && b.is_accepting(target.second));
                    it = index.emplace(target, fresh).first;
                    queue.push_back(target);
                }
                product.add_transition(from, l->label, it->second);
                ++l;
                ++r;
            }
        }
    }
    return trim(product);
}

// WeightedDigraph -----------------------------------------------------------

void WeightedDigraph::add_edge(std::size_t from, std::size_t to, std::uint64_t multiplicity)
{
    if (from >= nodes_ || to >= nodes_) {
        throw Error(ErrorCode::OutOfBounds, "edge endpoint outside digraph");
    }
    if (multiplicity > 0) {
        weights_[{from, to}] += multiplicity;
    }
}

std::uint64_t WeightedDigraph::edge_count() const noexcept
{
    std::uint64_t n = 0;
    for (const auto& [ends, w] : weights_) {
        n += w;
    }
    return n;
}

std::uint64_t WeightedDigraph::multiplicity(std::size_t from, std::size_t to) const
{
    const auto it = weights_.find({from, to});
    return it == weights_.end() ? 0 : it->second;
}

std::vector<WeightedDigraph::Edge> WeightedDigraph::edges() const
{
    std::vector<Edge> out;
    out.reserve(weights_.size());
    for (const auto& [ends, w] : weights_) {
        out.push_back(Edge{ends.first, ends.second, w});
    }
    return out;
}

WeightedDigraph short_circuit(const Dfa& a)
{
    if (is_empty_language(a)) {
        throw Error(ErrorCode::EmptyLanguage, "cannot short-circuit an automaton with an empty language");
    }
    WeightedDigraph g(a.state_count());
    for (Dfa::State s = 0; s < a.state_count(); ++s) {
        for (const auto& tr : a.transitions(s)) {
            g.add_edge(s, tr.target);
        }
        if (a.is_accepting(s)) {
            g.add_edge(s, a.start());
        }
    }
    return g;
}

} // namespace genboot
