#include <doctest.h>

#include <random>

#include "abcnet/inet.hpp"
#include "testutil.hpp"

using namespace abcnet;

namespace {

/// Direct tally over the raw event list; the oracle for windowed sums.
std::array<CountMatrix, 3> tally_window(const std::vector<InfluenceEvent>& events,
                                        std::size_t t, std::size_t t_w, std::size_t n) {
    std::array<CountMatrix, 3> out{CountMatrix::Zero(n, n), CountMatrix::Zero(n, n),
                                   CountMatrix::Zero(n, n)};
    for (const InfluenceEvent& e : events) {
        if (e.iteration + t_w <= t || e.iteration > t) continue;
        out[static_cast<std::size_t>(e.layer)](e.influenced, e.influencer) += 1;
    }
    return out;
}

}  // namespace

TEST_CASE("iteration matrix tallies one iteration of one layer") {
    SUBCASE("no events at t gives the zero matrix") {
        std::vector<InfluenceEvent> events{{2, 0, 1, Layer::Employed}};
        CHECK(iteration_matrix(events, 5, Layer::Employed, 4).isZero());
    }
    SUBCASE("single scout event sits on the diagonal") {
        std::vector<InfluenceEvent> events{{3, 5, 5, Layer::Scout}};
        const CountMatrix m = iteration_matrix(events, 3, Layer::Scout, 8);
        CHECK(m(5, 5) == 1);
        CHECK(m.sum() == 1);
    }
    SUBCASE("hand-tallied synthetic log") {
        std::vector<InfluenceEvent> events{
            {1, 0, 1, Layer::Employed},
            {1, 0, 1, Layer::Employed},  // repeated pair accumulates
            {1, 2, 0, Layer::Employed},
            {1, 1, 0, Layer::Onlooker},  // different layer
            {2, 0, 1, Layer::Employed},  // different iteration
        };
        const CountMatrix m = iteration_matrix(events, 1, Layer::Employed, 3);
        CHECK(m(0, 1) == 2);
        CHECK(m(2, 0) == 1);
        CHECK(m.sum() == 3);
    }
    SUBCASE("out-of-range index is data corruption") {
        std::vector<InfluenceEvent> events{{1, 7, 1, Layer::Employed}};
        CHECK_THROWS_AS(iteration_matrix(events, 1, Layer::Employed, 4), std::out_of_range);
    }
}

TEST_CASE("window network preconditions") {
    std::vector<InfluenceEvent> events{{1, 0, 1, Layer::Employed}};
    CHECK_THROWS_AS(window_network(events, 0, 1, 3), std::invalid_argument);
    CHECK_THROWS_AS(window_network(events, 3, 4, 3), std::invalid_argument);
    CHECK_THROWS_AS(window_network(events, 3, 0, 3), std::invalid_argument);
}

TEST_CASE("window network matches the direct tally oracle") {
    std::mt19937_64 gen(314);
    for (int rep = 0; rep < 30; ++rep) {
        const std::size_t n = 3 + gen() % 8;
        const std::size_t t_max = 1 + gen() % 25;
        const auto events = testutil::random_event_log(gen, n, t_max);
        const std::size_t t = 1 + gen() % t_max;
        const std::size_t t_w = 1 + gen() % t;
        const LayeredWindowNetwork net = window_network(events, t, t_w, n);
        const auto oracle = tally_window(events, t, t_w, n);
        CHECK(net.employed == oracle[0]);
        CHECK(net.onlooker == oracle[1]);
        CHECK(net.scout == oracle[2]);
        CHECK(net.aggregated == CountMatrix(oracle[0] + oracle[1] + oracle[2]));
        CHECK(net.scout.isDiagonal());
        CHECK(net.employed.diagonal().isZero());
    }
}

TEST_CASE("window trivia: t_w = 1 equals the iteration matrix, t_w = t the lifetime count") {
    std::mt19937_64 gen(1001);
    const auto events = testutil::random_event_log(gen, 6, 12);
    const auto net1 = window_network(events, 7, 1, 6);
    CHECK(net1.employed == iteration_matrix(events, 7, Layer::Employed, 6));
    CHECK(net1.onlooker == iteration_matrix(events, 7, Layer::Onlooker, 6));
    CHECK(net1.scout == iteration_matrix(events, 7, Layer::Scout, 6));

    const auto full = window_network(events, 12, 12, 6);
    const auto oracle = tally_window(events, 12, 12, 6);
    CHECK(full.aggregated == CountMatrix(oracle[0] + oracle[1] + oracle[2]));
    CHECK(full.aggregated.sum() == static_cast<std::int64_t>(events.size()));
}

TEST_CASE("per-layer event conservation and window monotonicity") {
    std::mt19937_64 gen(271828);
    const std::size_t n = 7;
    const auto events = testutil::random_event_log(gen, n, 30);
    const std::size_t t = 30;
    std::int64_t employed_in_window = 0;
    for (const auto& e : events) {
        if (e.layer == Layer::Employed && e.iteration > t - 10 && e.iteration <= t) {
            ++employed_in_window;
        }
    }
    CHECK(window_network(events, t, 10, n).employed.sum() == employed_in_window);

    for (std::size_t smaller : {1u, 2u, 5u, 10u}) {
        const auto a = window_network(events, t, smaller, n);
        const auto b = window_network(events, t, smaller * 2, n);
        CHECK((b.aggregated - a.aggregated).minCoeff() >= 0);
    }
}

TEST_CASE("undirected view symmetrizes and keeps the diagonal once") {
    SUBCASE("single directed edge") {
        CountMatrix m = CountMatrix::Zero(8, 8);
        m(2, 7) = 3;
        const CountMatrix u = undirected_view(m);
        CHECK(u(2, 7) == 3);
        CHECK(u(7, 2) == 3);
        CHECK(u.sum() == 6);
    }
    SUBCASE("symmetric input doubles off-diagonal entries") {
        CountMatrix m = CountMatrix::Zero(3, 3);
        m(0, 1) = m(1, 0) = 2;
        const CountMatrix u = undirected_view(m);
        CHECK(u(0, 1) == 4);
        CHECK(u(1, 0) == 4);
    }
    SUBCASE("diagonal preserved, result symmetric") {
        std::mt19937_64 gen(55);
        for (int rep = 0; rep < 20; ++rep) {
            CountMatrix m(5, 5);
            for (auto& v : m.reshaped()) v = static_cast<std::int64_t>(gen() % 5);
            const CountMatrix u = undirected_view(m);
            CHECK(u == CountMatrix(u.transpose()));
            CHECK(u.diagonal() == m.diagonal());
        }
    }
}

TEST_CASE("sliding accumulator tracks the brute-force window") {
    std::mt19937_64 gen(909);
    for (int rep = 0; rep < 15; ++rep) {
        const std::size_t n = 4 + gen() % 6;
        const std::size_t t_max = 5 + gen() % 30;
        const std::size_t t_w = 1 + gen() % 8;
        const auto events = testutil::random_event_log(gen, n, t_max);
        std::vector<std::vector<InfluenceEvent>> buckets(t_max + 1);
        for (const auto& e : events) buckets[e.iteration].push_back(e);

        SlidingWindowAccumulator acc(n, t_w);
        for (std::size_t t = 1; t <= t_max; ++t) {
            acc.push_iteration(buckets[t], t);
            if (t < t_w) continue;
            CHECK(acc.window_filled());
            const auto expect = window_network(events, t, t_w, n);
            CHECK(acc.network().employed == expect.employed);
            CHECK(acc.network().onlooker == expect.onlooker);
            CHECK(acc.network().scout == expect.scout);
            CHECK(acc.network().aggregated == expect.aggregated);
        }
    }
}

TEST_CASE("cumulative accumulator sums the whole history") {
    std::mt19937_64 gen(27);
    const std::size_t n = 6;
    const auto events = testutil::random_event_log(gen, n, 14);
    std::vector<std::vector<InfluenceEvent>> buckets(15);
    for (const auto& e : events) buckets[e.iteration].push_back(e);
    SlidingWindowAccumulator acc(n, SlidingWindowAccumulator::kCumulative);
    for (std::size_t t = 1; t <= 14; ++t) {
        acc.push_iteration(buckets[t], t);
    }
    CHECK(acc.network().window == 14);
    const auto full = window_network(events, 14, 14, n);
    CHECK(acc.network().aggregated == full.aggregated);
}

TEST_CASE("accumulator rejects gaps and mistagged events") {
    SlidingWindowAccumulator acc(4, 2);
    std::vector<InfluenceEvent> one{{1, 0, 1, Layer::Employed}};
    acc.push_iteration(one, 1);
    CHECK_THROWS_AS(acc.push_iteration(one, 3), std::invalid_argument);
    std::vector<InfluenceEvent> wrong_tag{{9, 0, 1, Layer::Employed}};
    CHECK_THROWS_AS(acc.push_iteration(wrong_tag, 2), std::invalid_argument);
}
