#include "genboot/sampling.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "genboot/error.hpp"

namespace genboot {

namespace {

std::uint64_t splitmix64(std::uint64_t z) noexcept
{
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Positions below are 0-based.
bool same_window(std::span<const Action> a, std::size_t i, std::span<const Action> b, std::size_t j,
                 std::size_t k) noexcept
{
    for (std::size_t q = 0; q < k; ++q) {
        if (a[i + q] != b[j + q]) {
            return false;
        }
    }
    return true;
}

template <class Visit>
void for_each_site(std::span<const Action> t1, std::span<const Action> t2, std::size_t k, Visit&& visit)
{
    if (k == 0 || k > t1.size() || k > t2.size()) {
        return;
    }
    for (std::size_t i = 0; i + k <= t1.size(); ++i) {
        for (std::size_t j = 0; j + k <= t2.size(); ++j) {
            if (same_window(t1, i, t2, j, k) && !visit(i, j)) {
                return;
            }
        }
    }
}

Trace splice(std::span<const Action> head, std::size_t head_end, std::span<const Action> tail,
             std::size_t tail_begin)
{
    std::vector<Action> out;
    out.reserve(head_end + tail.size() - tail_begin);
    out.insert(out.end(), head.begin(), head.begin() + static_cast<std::ptrdiff_t>(head_end));
    out.insert(out.end(), tail.begin() + static_cast<std::ptrdiff_t>(tail_begin), tail.end());
    return Trace(std::move(out));
}

/// One round of log breeding on a drawn parent pair; emits exactly two traces.
template <class Emit>
void breed_pair(const Trace& t1, const Trace& t2, std::size_t k, double p, Rng& rng, Emit&& emit)
{
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const bool coin = unit(rng) < p || p >= 1.0;
    if (coin) {
        const auto a = t1.actions();
        const auto b = t2.actions();
        std::size_t count = 0;
        for_each_site(a, b, k, [&](std::size_t, std::size_t) {
            ++count;
            return true;
        });
        if (count > 0) {
            std::uniform_int_distribution<std::size_t> pick(0, count - 1);
            std::size_t remaining = pick(rng);
            std::size_t i1 = 0;
            std::size_t i2 = 0;
            for_each_site(a, b, k, [&](std::size_t i, std::size_t j) {
                if (remaining == 0) {
                    i1 = i;
                    i2 = j;
                    return false;
                }
                --remaining;
                return true;
            });
            emit(splice(a, i1 + k, b, i2 + k));
            emit(splice(b, i2 + k, a, i1 + k));
            return;
        }
    }
    emit(Trace(t1));
    emit(Trace(t2));
}

void require_nonempty(const EventLog& l, const char* what)
{
    if (l.empty()) {
        throw Error(ErrorCode::EmptyLog, std::string(what) + " is empty");
    }
}

} // namespace

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) noexcept
{
    return splitmix64(splitmix64(master) ^ (index * 0xd1b54a32d192ed03ULL + 1));
}

TraceUrn::TraceUrn(const EventLog& log)
{
    require_nonempty(log, "log");
    traces_.reserve(log.distinct());
    cumulative_.reserve(log.distinct());
    std::uint64_t total = 0;
    for (const auto& [trace, count] : log) {
        total += count;
        traces_.push_back(&trace);
        cumulative_.push_back(total);
    }
}

const Trace& TraceUrn::draw(Rng& rng) const
{
    std::uniform_int_distribution<std::uint64_t> pick(0, size() - 1);
    const std::uint64_t r = pick(rng);
    const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), r);
    return *traces_[static_cast<std::size_t>(it - cumulative_.begin())];
}

Trace rand_trace(const EventLog& l, Rng& rng)
{
    return TraceUrn(l).draw(rng);
}

EventLog sample_with_replacement(const EventLog& l, std::size_t n, Rng& rng)
{
    const TraceUrn urn(l);
    EventLog out;
    for (std::size_t i = 0; i < n; ++i) {
        out.add(urn.draw(rng));
    }
    return out;
}

std::vector<BreedingSite> breeding_sites(const Trace& t1, const Trace& t2, std::size_t k)
{
    std::vector<BreedingSite> sites;
    for_each_site(t1.actions(), t2.actions(), k, [&](std::size_t i, std::size_t j) {
        sites.push_back(BreedingSite{i + 1, j + 1});
        return true;
    });
    return sites;
}

Trace crossover(const Trace& t1, std::size_t p1, const Trace& t2, std::size_t p2, std::size_t k)
{
    const bool in_range = k >= 1 && p1 >= 1 && p2 >= 1 && p1 + k - 1 <= t1.length() &&
                          p2 + k - 1 <= t2.length();
    if (!in_range || !same_window(t1.actions(), p1 - 1, t2.actions(), p2 - 1, k)) {
        throw Error(ErrorCode::InvalidSite, "(" + std::to_string(p1) + ", " + std::to_string(p2) +
                                                ") is not a breeding site for k = " + std::to_string(k));
    }
    return splice(t1.actions(), p1 + k - 1, t2.actions(), p2 + k - 1);
}

EventLog log_breeding(const EventLog& l1, const EventLog& l2, std::size_t k, double p, Rng& rng)
{
    const TraceUrn first(l1);
    const TraceUrn second(l2);
    EventLog out;
    const std::uint64_t rounds = (l1.size() + 1) / 2;
    for (std::uint64_t r = 0; r < rounds; ++r) {
        const Trace& t1 = first.draw(rng);
        const Trace& t2 = second.draw(rng);
        breed_pair(t1, t2, k, p, rng, [&](Trace&& t) { out.add(std::move(t)); });
    }
    return out;
}

void SamplerConfig::validate() const
{
    if (n < 1) {
        throw Error(ErrorCode::InvalidArgument, "sample size n must be at least 1");
    }
    if (k < 1) {
        throw Error(ErrorCode::InvalidArgument, "common subtrace length k must be at least 1");
    }
    if (!(p >= 0.0 && p <= 1.0)) {
        throw Error(ErrorCode::InvalidArgument, "breeding probability p must lie in [0, 1]");
    }
}

EventLog sample_with_breeding(const EventLog& l, const SamplerConfig& cfg, Rng& rng)
{
    cfg.validate();
    const TraceUrn urn(l);

    const std::uint64_t generation_size = 2 * ((l.size() + 1) / 2);
    if (cfg.g > 0 && generation_size > (std::numeric_limits<std::uint64_t>::max() - l.size()) / cfg.g) {
        throw Error(ErrorCode::InvalidArgument, "breeding population size overflows");
    }
    const std::uint64_t population = l.size() + cfg.g * generation_size;

    // The with-replacement draw over G[0] ⊎ ... ⊎ G[g] picks population
    // indices up front; generations are then streamed and only the picked
    // positions are kept.
    std::vector<std::uint64_t> picks(cfg.n);
    std::uniform_int_distribution<std::uint64_t> pick(0, population - 1);
    for (auto& index : picks) {
        index = pick(rng);
    }
    std::sort(picks.begin(), picks.end());

    EventLog out;
    std::size_t next_pick = 0;
    std::uint64_t position = 0;
    auto collect = [&](const Trace& t) {
        std::uint64_t hits = 0;
        while (next_pick < picks.size() && picks[next_pick] == position) {
            ++hits;
            ++next_pick;
        }
        if (hits > 0) {
            out.add(t, hits);
        }
        ++position;
    };

    std::vector<Trace> previous;
    previous.reserve(generation_size);
    for (const auto& [trace, count] : l) {
        for (std::uint64_t c = 0; c < count; ++c) {
            previous.push_back(trace);
            collect(trace);
        }
    }

    std::vector<Trace> current;
    current.reserve(generation_size);
    for (std::size_t gen = 1; gen <= cfg.g && next_pick < picks.size(); ++gen) {
        current.clear();
        std::uniform_int_distribution<std::size_t> from_previous(0, previous.size() - 1);
        for (std::uint64_t r = 0; r < generation_size / 2; ++r) {
            const Trace& t1 = urn.draw(rng);
            const Trace& t2 = previous[from_previous(rng)];
            breed_pair(t1, t2, cfg.k, cfg.p, rng, [&](Trace&& t) {
                collect(t);
                current.push_back(std::move(t));
            });
        }
        previous.swap(current);
    }
    return out;
}

std::string_view to_string(SamplingMethod m) noexcept
{
    return m == SamplingMethod::replacement ? "replacement" : "breeding";
}

SamplingMethod parse_sampling_method(std::string_view name)
{
    if (name == "replacement") {
        return SamplingMethod::replacement;
    }
    if (name == "breeding") {
        return SamplingMethod::breeding;
    }
    throw Error(ErrorCode::InvalidArgument, "unknown sampling method '" + std::string(name) + "'");
}

EventLog draw_replicate(const EventLog& l, SamplingMethod method, const SamplerConfig& cfg, Rng& rng)
{
    cfg.validate();
    if (method == SamplingMethod::replacement) {
        return sample_with_replacement(l, cfg.n, rng);
    }
    return sample_with_breeding(l, cfg, rng);
}

} // namespace genboot
