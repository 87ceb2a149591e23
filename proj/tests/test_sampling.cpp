#include <catch_amalgamated.hpp>

#include <map>
#include <random>

#include "genboot/discovery.hpp"
#include "genboot/error.hpp"
#include "genboot/sampling.hpp"
#include "support.hpp"

using namespace genboot;
using testing::tr;

TEST_CASE("breeding sites of the worked example")
{
    const auto sites = breeding_sites(tr("adeef"), tr("adefabcfadef"), 2);
    const std::vector<BreedingSite> expected{{1, 1}, {1, 9}, {2, 2}, {2, 10}, {4, 3}, {4, 11}};
    CHECK(sites == expected);
}

TEST_CASE("self breeding sites of a trace")
{
    // every window of length 1 matches each equal action
    const auto sites = breeding_sites(tr("abbbcf"), tr("abbbcf"), 1);
    std::vector<BreedingSite> expected;
    const Trace t = tr("abbbcf");
    for (std::size_t p1 = 1; p1 <= 6; ++p1) {
        for (std::size_t p2 = 1; p2 <= 6; ++p2) {
            if (t.at(p1) == t.at(p2)) {
                expected.push_back({p1, p2});
            }
        }
    }
    CHECK(sites == expected);
    CHECK(sites.size() == 12);
    CHECK(breeding_sites(tr("abbbcf"), tr("abbbcf"), 2).size() == 7);
    CHECK(breeding_sites(tr("ab"), tr("abc"), 3).empty());
}

TEST_CASE("crossover offspring of the worked example")
{
    const Trace t = tr("abbbcf");
    CHECK(crossover(t, 2, t, 3, 2) == tr("abbcf"));
    CHECK(crossover(t, 3, t, 2, 2) == tr("abbbbcf"));
    CHECK(crossover(tr("adeef"), 2, tr("adefabcfadef"), 10, 2) == tr("adef"));
    CHECK_THROWS_AS(crossover(t, 1, t, 2, 1), Error);
    CHECK_THROWS_AS(crossover(t, 6, t, 6, 2), Error);
}

TEST_CASE("rand_trace follows multiplicities")
{
    const EventLog l = testing::running_log();
    Rng rng(99);
    std::map<Trace, int> seen;
    const int draws = 66000;
    for (int j = 0; j < draws; ++j) {
        ++seen[rand_trace(l, rng)];
    }
    for (const auto& [t, count] : l) {
        const double expected = static_cast<double>(count) / 66.0;
        CHECK(std::abs(seen[t] / static_cast<double>(draws) - expected) < 0.01);
    }
}

TEST_CASE("sampling with replacement keeps size and support")
{
    const EventLog l = testing::running_log();
    Rng rng(1);
    const EventLog s = sample_with_replacement(l, 500, rng);
    CHECK(s.size() == 500);
    for (const auto& [t, count] : s) {
        CHECK(l.multiplicity(t) > 0);
    }
    CHECK_THROWS_AS(sample_with_replacement(EventLog{}, 5, rng), Error);
}

TEST_CASE("log breeding emits two traces per round")
{
    const EventLog l = testing::running_log();
    Rng rng(4);
    const EventLog bred = log_breeding(l, l, 2, 1.0, rng);
    CHECK(bred.size() == 66);
    const EventLog kept = log_breeding(l, l, 2, 0.0, rng);
    CHECK(kept.size() == 66);
    for (const auto& [t, count] : kept) {
        CHECK(l.multiplicity(t) > 0);
    }
    const EventLog odd{{tr("abc"), 3}};
    CHECK(log_breeding(odd, odd, 1, 1.0, rng).size() == 4);
}

TEST_CASE("breeding sampler invariants")
{
    const EventLog l = testing::running_log();
    SamplerConfig cfg{200, 50, 2, 1.0, 0};
    Rng rng(8);
    const EventLog s = sample_with_breeding(l, cfg, rng);
    CHECK(s.size() == 200);

    cfg.g = 0;
    const EventLog plain = sample_with_breeding(l, cfg, rng);
    for (const auto& [t, count] : plain) {
        CHECK(l.multiplicity(t) > 0);
    }

    cfg.n = 0;
    CHECK_THROWS_AS(sample_with_breeding(l, cfg, rng), Error);
    cfg = SamplerConfig{10, 1, 2, 1.5, 0};
    CHECK_THROWS_AS(sample_with_breeding(l, cfg, rng), Error);
}

TEST_CASE("breeding with k = 1 stays inside the DFG language")
{
    std::mt19937_64 gen(31);
    for (int round = 0; round < 40; ++round) {
        const Dfg g = testing::random_dfg(gen, 8);
        const Dfa a = dfg_to_dfa(g);
        Rng rng(round);
        const EventLog log = simulate_log(g, WalkConfig{20, 200, EdgeWeighting::uniform, 0}, rng);
        const EventLog s = sample_with_breeding(log, SamplerConfig{100, 20, 1, 1.0, 0}, rng);
        for (const auto& [t, count] : s) {
            REQUIRE(accepts(a, t));
        }
    }
}

TEST_CASE("empty traces pass through the samplers")
{
    const EventLog l{{Trace{}, 3}, {tr("ab"), 1}};
    Rng rng(2);
    const EventLog s = sample_with_breeding(l, SamplerConfig{50, 5, 1, 1.0, 0}, rng);
    CHECK(s.size() == 50);
    CHECK(s.multiplicity(Trace{}) > 0);
}

TEST_CASE("samplers are deterministic per seed")
{
    const EventLog l = testing::running_log();
    const SamplerConfig cfg{100, 100, 2, 0.5, 0};
    Rng a(derive_seed(42, 3));
    Rng b(derive_seed(42, 3));
    CHECK(draw_replicate(l, SamplingMethod::breeding, cfg, a) == draw_replicate(l, SamplingMethod::breeding, cfg, b));
    CHECK(derive_seed(42, 3) != derive_seed(42, 4));
    CHECK(derive_seed(42, 3) != derive_seed(43, 3));
    CHECK(parse_sampling_method("replacement") == SamplingMethod::replacement);
    CHECK_THROWS_AS(parse_sampling_method("bogus"), Error);
}
