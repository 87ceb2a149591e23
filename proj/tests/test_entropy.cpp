#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "genboot/entropy.hpp"
#include "genboot/error.hpp"
#include "support.hpp"

using namespace genboot;
using Catch::Matchers::WithinAbs;
using testing::tr;

TEST_CASE("spectral radius of small graphs")
{
    WeightedDigraph cycle(3);
    cycle.add_edge(0, 1);
    cycle.add_edge(1, 2);
    cycle.add_edge(2, 0);
    CHECK_THAT(spectral_radius(cycle).value, WithinAbs(1.0, 1e-9));

    // golden ratio: x -> {x, y}, y -> x
    WeightedDigraph fib(2);
    fib.add_edge(0, 0);
    fib.add_edge(0, 1);
    fib.add_edge(1, 0);
    CHECK_THAT(spectral_radius(fib).value, WithinAbs((1.0 + std::sqrt(5.0)) / 2.0, 1e-9));

    WeightedDigraph doubled(1);
    doubled.add_edge(0, 0, 2);
    CHECK_THAT(spectral_radius(doubled).value, WithinAbs(2.0, 1e-12));
}

TEST_CASE("entropy of the example model")
{
    const EntropyValue e = topological_entropy(dfg_to_dfa(testing::fig1a()));
    CHECK(e.converged);
    CHECK_THAT(e.spectral_radius, WithinAbs(1.5732, 1e-4));
    CHECK_THAT(e.value, WithinAbs(std::log(e.spectral_radius), 1e-12));
}

TEST_CASE("entropy of a finite language is zero")
{
    const EntropyValue e = topological_entropy(log_to_dfa(EventLog{{tr("abc"), 1}}));
    CHECK_THAT(e.value, WithinAbs(0.0, 1e-9));
    CHECK_THROWS_AS(topological_entropy(Dfa{}), Error);
}

TEST_CASE("power iteration agrees with Gelfand's formula")
{
    std::mt19937_64 rng(3);
    const auto sigma = testing::alphabet(3);
    int checked = 0;
    while (checked < 60) {
        const Dfa a = testing::random_dfa(rng, 15, sigma);
        if (is_empty_language(a)) {
            continue;
        }
        const WeightedDigraph g = short_circuit(minimize(a));
        const double oracle = testing::dense_spectral_radius(g);
        CHECK_THAT(spectral_radius(g).value, WithinAbs(oracle, 1e-6 * oracle));
        ++checked;
    }
}

TEST_CASE("entropy agrees with the walk-count growth rate")
{
    std::mt19937_64 rng(17);
    const auto sigma = testing::alphabet(3);
    int checked = 0;
    while (checked < 40) {
        const Dfa a = testing::random_dfa(rng, 20, sigma);
        if (is_empty_language(a)) {
            continue;
        }
        CHECK_THAT(topological_entropy(a).value, WithinAbs(growth_oracle(a, 200), 0.05));
        ++checked;
    }
}

TEST_CASE("measures for the example pair")
{
    const Dfa m = dfg_to_dfa(testing::fig1a());
    const Dfa s = dfg_to_dfa(testing::fig1b());
    CHECK_THAT(model_system_precision(m, s), WithinAbs(0.867, 0.002));
    CHECK_THAT(model_system_recall(m, s), WithinAbs(0.867, 0.002));

    const Dfa l = log_to_dfa(testing::running_log());
    CHECK_THAT(model_system_precision(m, l), WithinAbs(0.791, 0.002));
    CHECK_THAT(model_system_recall(m, l), WithinAbs(0.935, 0.002));

    const MeasurePair pair = ModelReference(m).measure(l);
    CHECK(pair.precision == model_system_precision(m, l));
    CHECK(pair.recall == model_system_recall(m, l));
}

TEST_CASE("a model measured against itself is perfect")
{
    const Dfa m = dfg_to_dfa(testing::fig1a());
    CHECK_THAT(model_system_precision(m, m), WithinAbs(1.0, 1e-9));
    CHECK_THAT(model_system_recall(m, m), WithinAbs(1.0, 1e-9));
}

TEST_CASE("disjoint languages measure zero")
{
    const Dfa m = log_to_dfa(EventLog{{tr("ab"), 1}});
    const Dfa s = log_to_dfa(EventLog{{tr("ba"), 1}});
    const MeasurePair pair = ModelReference(m).measure(s);
    CHECK(pair.precision == 0.0);
    CHECK(pair.recall == 0.0);
    CHECK_THROWS_AS(model_system_recall(m, Dfa{}), Error);
}

TEST_CASE("measures stay within [0, 1]")
{
    std::mt19937_64 rng(23);
    const auto sigma = testing::alphabet(2);
    int checked = 0;
    while (checked < 50) {
        const Dfa a = testing::random_dfa(rng, 8, sigma);
        const Dfa b = testing::random_dfa(rng, 8, sigma);
        if (is_empty_language(a) || is_empty_language(b)) {
            continue;
        }
        const MeasurePair pair = ModelReference(a).measure(b);
        CHECK(pair.precision >= 0.0);
        CHECK(pair.precision <= 1.0 + 1e-9);
        CHECK(pair.recall >= 0.0);
        CHECK(pair.recall <= 1.0 + 1e-9);
        ++checked;
    }
}
