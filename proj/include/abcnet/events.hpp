#pragma once

#include <cstdint>
#include <stdexcept>

namespace abcnet {

/// Bee role that produced an influence event.
enum class Layer : std::uint8_t { Employed, Onlooker, Scout };

/// One directed influence: `influenced` moved using information from
/// `influencer` at `iteration` (1-based). Scout events are self-loops;
/// employed events never are.
struct InfluenceEvent {
    std::uint32_t iteration = 0;
    std::uint32_t influenced = 0;
    std::uint32_t influencer = 0;
    Layer layer = Layer::Employed;

    friend bool operator==(const InfluenceEvent&, const InfluenceEvent&) = default;
};

inline char layer_char(Layer layer) {
    switch (layer) {
        case Layer::Employed: return 'E';
        case Layer::Onlooker: return 'O';
        case Layer::Scout: return 'S';
    }
    throw std::invalid_argument("layer_char: bad layer value");
}

inline Layer layer_from_char(char c) {
    switch (c) {
        case 'E': return Layer::Employed;
        case 'O': return Layer::Onlooker;
        case 'S': return Layer::Scout;
        default: throw std::invalid_argument(std::string("unknown layer tag: ") + c);
    }
}

}  // namespace abcnet
