#include "genboot/discovery.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "genboot/error.hpp"

namespace genboot {

namespace {

bool lexicographically_greater(const Trace& a, const Trace& b)
{
    return b < a;
}

} // namespace

Dfg discover_dfg(const EventLog& l, const DiscoveryConfig& cfg)
{
    if (!(cfg.filter_fraction >= 0.0 && cfg.filter_fraction < 1.0)) {
        throw Error(ErrorCode::InvalidArgument, "filter fraction must lie in [0, 1)");
    }
    if (l.empty()) {
        throw Error(ErrorCode::EmptyLog, "cannot discover a model from an empty log");
    }

    // Stage 1: least frequent first; among equals, lexicographically larger first.
    std::vector<std::pair<const Trace*, std::uint64_t>> ranked;
    ranked.reserve(l.distinct());
    for (const auto& [trace, count] : l) {
        ranked.emplace_back(&trace, count);
    }
    std::stable_sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) {
            return a.second < b.second;
        }
        return lexicographically_greater(*a.first, *b.first);
    });
    const auto dropped = static_cast<std::size_t>(
        std::floor(cfg.filter_fraction * static_cast<double>(ranked.size()) + 1e-9));

    std::map<Action, std::uint64_t> node_freq;
    std::map<Dfg::Arc, std::uint64_t> arc_freq;
    std::uint64_t surviving = 0;
    const Action input = Action::input_marker();
    const Action output = Action::output_marker();
    for (std::size_t r = dropped; r < ranked.size(); ++r) {
        const Trace& trace = *ranked[r].first;
        const std::uint64_t count = ranked[r].second;
        if (trace.empty()) {
            continue;
        }
        surviving += count;
        const auto actions = trace.actions();
        for (std::size_t j = 0; j < actions.size(); ++j) {
            node_freq[actions[j]] += count; // stage 2
            if (j + 1 < actions.size()) {
                arc_freq[{actions[j], actions[j + 1]}] += count; // stage 3
            }
        }
        arc_freq[{input, actions.front()}] += count; // stage 4
        arc_freq[{actions.back(), output}] += count;
    }
    if (surviving == 0) {
        throw Error(ErrorCode::AllFiltered, "no non-empty trace survives filtering");
    }

    Dfg g;
    g.add_node(input, surviving);
    g.add_node(output, surviving);
    for (const auto& [action, freq] : node_freq) {
        g.add_node(action, freq);
    }
    for (const auto& [arc, freq] : arc_freq) {
        g.add_arc(arc.first, arc.second, freq);
    }
    return g;
}

EventLog simulate_log(const Dfg& g, const WalkConfig& cfg, Rng& rng)
{
    if (cfg.trace_count < 1 || cfg.max_length < 1) {
        throw Error(ErrorCode::InvalidArgument, "trace count and max length must be at least 1");
    }
    const Action input = Action::input_marker();
    const Action output = Action::output_marker();

    struct Step {
        std::vector<Action> targets;
        std::vector<double> weights;
        bool weighted = false;
    };
    std::map<Action, Step> steps;
    for (const auto& [arc, freq] : g.arcs()) {
        Step& step = steps[arc.first];
        step.targets.push_back(arc.second);
        step.weights.push_back(static_cast<double>(freq));
    }
    for (auto& [node, step] : steps) {
        step.weighted = cfg.weighting == EdgeWeighting::frequency &&
                        std::any_of(step.weights.begin(), step.weights.end(), [](double w) { return w > 0.0; });
    }

    // o must be reachable from i
    std::set<Action> seen{input};
    std::deque<Action> queue{input};
    while (!queue.empty()) {
        const Action node = queue.front();
        queue.pop_front();
        const auto it = steps.find(node);
        if (it == steps.end()) {
            continue;
        }
        for (Action next : it->second.targets) {
            if (seen.insert(next).second) {
                queue.push_back(next);
            }
        }
    }
    if (!seen.contains(output)) {
        throw Error(ErrorCode::Unreachable, "the output marker is not reachable from the input marker");
    }

    EventLog out;
    std::size_t failures = 0;
    std::vector<Action> walk;
    while (out.size() < cfg.trace_count) {
        walk.clear();
        Action node = input;
        bool finished = false;
        while (walk.size() <= cfg.max_length) {
            const auto it = steps.find(node);
            if (it == steps.end()) {
                break; // dead end
            }
            const Step& step = it->second;
            std::size_t choice = 0;
            if (step.weighted) {
                std::discrete_distribution<std::size_t> pick(step.weights.begin(), step.weights.end());
                choice = pick(rng);
            } else {
                std::uniform_int_distribution<std::size_t> pick(0, step.targets.size() - 1);
                choice = pick(rng);
            }
            node = step.targets[choice];
            if (node == output) {
                finished = true;
                break;
            }
            walk.push_back(node);
        }
        if (finished && walk.size() <= cfg.max_length) {
            out.add(Trace(walk));
            failures = 0;
        } else if (++failures >= max_walk_retries) {
            throw Error(ErrorCode::RetryExhausted, std::to_string(max_walk_retries) +
                                                       " consecutive walks exceeded the length cap or got stuck");
        }
    }
    return out;
}

EventLog simulate_log(const Dfg& g, const WalkConfig& cfg)
{
    Rng rng(cfg.seed);
    return simulate_log(g, cfg, rng);
}

} // namespace genboot
