#include <catch_amalgamated.hpp>

#include <random>
#include <set>

#include "genboot/automata.hpp"
#include "genboot/error.hpp"
#include "support.hpp"

using namespace genboot;
using testing::tr;

TEST_CASE("DFG arcs are restricted to the directly-follows shape")
{
    Dfg g;
    const Action a("a");
    CHECK_THROWS_AS(g.add_arc(Action::output_marker(), a), Error);
    CHECK_THROWS_AS(g.add_arc(a, Action::input_marker()), Error);
    CHECK_THROWS_AS(g.add_arc(Action::input_marker(), Action::output_marker()), Error);
    g.add_arc(Action::input_marker(), a, 3);
    CHECK(g.actions().contains(a));
    CHECK(g.arc_freq(Action::input_marker(), a) == 3);
    CHECK(g.node_freq(a) == 0);
}

TEST_CASE("the example model accepts and rejects as described")
{
    const Dfa m = dfg_to_dfa(testing::fig1a());
    CHECK(accepts(m, tr("abcf")));
    CHECK(accepts(m, tr("adeef")));
    CHECK(accepts(m, tr("adefabcf")));
    CHECK_FALSE(accepts(m, tr("abbcf")));
    CHECK_FALSE(accepts(m, tr("abc")));
    CHECK_FALSE(accepts(m, Trace{}));
    CHECK_FALSE(accepts(m, tr("abxf")));
    CHECK(is_stable(m));
}

TEST_CASE("DFG automata are stable")
{
    std::mt19937_64 rng(7);
    for (int round = 0; round < 30; ++round) {
        CHECK(is_stable(dfg_to_dfa(testing::random_dfg(rng, 8))));
    }
}

TEST_CASE("short circuit of the example model")
{
    const WeightedDigraph g = short_circuit(dfg_to_dfa(testing::fig1a()));
    CHECK(g.node_count() == 8);
    CHECK(g.edge_count() == 11);
    // return edge from the output marker back to the start
    CHECK(g.multiplicity(7, 0) == 1);
}

TEST_CASE("short circuit of an empty language fails")
{
    Dfa empty;
    CHECK(is_empty_language(empty));
    CHECK_THROWS_AS(short_circuit(empty), Error);
}

TEST_CASE("log automata accept exactly the support")
{
    const EventLog l = testing::running_log();
    const Dfa a = log_to_dfa(l);
    for (const auto& t : l.support()) {
        CHECK(accepts(a, t));
        if (t.length() > 1) {
            CHECK_FALSE(accepts(a, prefix(t, t.length() - 1)));
        }
    }
    CHECK_FALSE(accepts(a, tr("abbcf")));
    const Dfa terminated = log_to_dfa(l, true);
    CHECK(terminated.terminated());
    for (const auto& t : l.support()) {
        CHECK(accepts(terminated, t));
    }
}

TEST_CASE("the example model fits 60 of the 66 log traces")
{
    const Dfa m = dfg_to_dfa(testing::fig1a());
    std::uint64_t fitting = 0;
    for (const auto& [t, count] : testing::running_log()) {
        if (accepts(m, t)) {
            fitting += count;
        }
    }
    CHECK(fitting == 60);
}

TEST_CASE("trim and minimize preserve the language")
{
    std::mt19937_64 rng(11);
    const auto sigma = testing::alphabet(2);
    const auto words = testing::all_words(sigma, 8);
    for (int round = 0; round < 40; ++round) {
        const Dfa a = testing::random_dfa(rng, 10, sigma);
        const Dfa t = trim(a);
        const Dfa m = minimize(a);
        CHECK(m.state_count() <= std::max<std::size_t>(t.state_count(), 1));
        for (const auto& w : words) {
            const bool expected = accepts_word(a, w);
            REQUIRE(accepts_word(t, w) == expected);
            REQUIRE(accepts_word(m, w) == expected);
        }
    }
}

TEST_CASE("minimization is canonical in size")
{
    const Dfa a = minimize(dfg_to_dfa(testing::fig1a()));
    CHECK(minimize(a).state_count() == a.state_count());
    // {abcf, adef}+ style log collapses shared suffixes
    const Dfa l = log_to_dfa(EventLog{{tr("abcf"), 1}, {tr("adcf"), 1}});
    CHECK(l.state_count() == 5);
}

TEST_CASE("intersection matches member acceptance")
{
    std::mt19937_64 rng(5);
    const auto sigma = testing::alphabet(3);
    const auto words = testing::all_words(sigma, 6);
    for (int round = 0; round < 20; ++round) {
        const Dfa a = testing::random_dfa(rng, 8, sigma);
        const Dfa b = testing::random_dfa(rng, 8, sigma);
        const Dfa ab = intersect(a, b);
        for (const auto& w : words) {
            REQUIRE(accepts_word(ab, w) == (accepts_word(a, w) && accepts_word(b, w)));
        }
    }
}

TEST_CASE("intersection aligns terminated and plain operands")
{
    const Dfa m = dfg_to_dfa(testing::fig1a());
    const Dfa l = log_to_dfa(testing::running_log());
    const Dfa both = intersect(m, l);
    CHECK_FALSE(both.terminated());
    CHECK(accepts(both, tr("abcf")));
    CHECK(accepts(both, tr("adefabcfadef")));
    CHECK_FALSE(accepts(both, tr("abbbcf")));
    CHECK_FALSE(accepts(both, tr("addef")));
}

TEST_CASE("strip_terminal keeps the system-level language")
{
    const Dfa m = dfg_to_dfa(testing::fig1a());
    const Dfa s = strip_terminal(m);
    CHECK_FALSE(s.terminated());
    for (const char* w : {"abcf", "adeeef", "adefabcf", "abc", "abbcf", "f"}) {
        CHECK(accepts(s, tr(w)) == accepts(m, tr(w)));
    }
}

TEST_CASE("nondeterministic transitions are rejected")
{
    Dfa a;
    const auto s1 = a.add_state();
    const auto s2 = a.add_state();
    a.add_transition(0, Action("x"), s1);
    a.add_transition(0, Action("x"), s1);
    CHECK_THROWS_AS(a.add_transition(0, Action("x"), s2), Error);
}
