#include "abcnet/inet.hpp"

#include <stdexcept>
#include <string>

namespace abcnet {

namespace {

void check_index(const InfluenceEvent& event, std::size_t n) {
    if (event.influenced >= n || event.influencer >= n) {
        throw std::out_of_range("influence event indexes a bee outside [0, " +
                                std::to_string(n) + ")");
    }
}

CountMatrix& layer_matrix(LayeredWindowNetwork& net, Layer layer) {
    switch (layer) {
        case Layer::Employed: return net.employed;
        case Layer::Onlooker: return net.onlooker;
        case Layer::Scout: return net.scout;
    }
    throw std::invalid_argument("bad layer value");
}

LayeredWindowNetwork make_empty(std::size_t n, std::size_t window, std::size_t end) {
    LayeredWindowNetwork net;
    net.n = n;
    net.window = window;
    net.end_iteration = end;
    net.employed = CountMatrix::Zero(n, n);
    net.onlooker = CountMatrix::Zero(n, n);
    net.scout = CountMatrix::Zero(n, n);
    net.aggregated = CountMatrix::Zero(n, n);
    return net;
}

}  // namespace

CountMatrix iteration_matrix(std::span<const InfluenceEvent> events,
                             std::size_t t, Layer layer, std::size_t n) {
    CountMatrix m = CountMatrix::Zero(n, n);
    for (const InfluenceEvent& event : events) {
        if (event.iteration != t || event.layer != layer) {
            continue;
        }
        check_index(event, n);
        m(event.influenced, event.influencer) += 1;
    }
    return m;
}

LayeredWindowNetwork window_network(std::span<const InfluenceEvent> events,
                                    std::size_t t, std::size_t t_w, std::size_t n) {
    if (t_w < 1 || t < t_w) {
        throw std::invalid_argument("window_network requires t >= t_w >= 1");
    }
    LayeredWindowNetwork net = make_empty(n, t_w, t);
    const std::size_t first = t - t_w + 1;
    for (const InfluenceEvent& event : events) {
        if (event.iteration < first || event.iteration > t) {
            continue;
        }
        check_index(event, n);
        layer_matrix(net, event.layer)(event.influenced, event.influencer) += 1;
        net.aggregated(event.influenced, event.influencer) += 1;
    }
    return net;
}

SlidingWindowAccumulator::SlidingWindowAccumulator(std::size_t n, std::size_t window)
    : cumulative_(window == kCumulative), net_(make_empty(n, window, 0)) {}

void SlidingWindowAccumulator::apply(const InfluenceEvent& event, std::int64_t delta) {
    check_index(event, net_.n);
    layer_matrix(net_, event.layer)(event.influenced, event.influencer) += delta;
    net_.aggregated(event.influenced, event.influencer) += delta;
}

void SlidingWindowAccumulator::push_iteration(std::span<const InfluenceEvent> events,
                                              std::size_t iteration) {
    if (iteration != net_.end_iteration + 1) {
        throw std::invalid_argument("iterations must be pushed consecutively");
    }
    for (const InfluenceEvent& event : events) {
        if (event.iteration != iteration) {
            throw std::invalid_argument("event tagged with a different iteration");
        }
        apply(event, +1);
    }
    net_.end_iteration = iteration;
    if (cumulative_) {
        net_.window = iteration;  // cumulative: window spans the full history
        return;
    }
    ring_.emplace_back(events.begin(), events.end());
    if (ring_.size() > net_.window) {
        for (const InfluenceEvent& event : ring_.front()) {
            apply(event, -1);
        }
        ring_.pop_front();
    }
}

bool SlidingWindowAccumulator::window_filled() const {
    return cumulative_ ? net_.end_iteration >= 1 : net_.end_iteration >= net_.window;
}

}  // namespace abcnet
