#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "brauer/covering.hpp"
#include "brauer/ribbon.hpp"
#include "brauer/weighting.hpp"

namespace brauer {

struct Rng {
    std::mt19937_64 engine;
    explicit Rng(uint64_t seed) : engine(seed) {}
    uint64_t next(uint64_t n) { return n ? engine() % n : 0; }
};

struct GraphGenOptions {
    int max_edges = 6;
    int max_multiplicity = 4;
    bool allow_loops = true;
    bool quantized = false;
};

/// Random connected Brauer graph: a random spanning tree plus random extra
/// edges, shuffled rotations, random multiplicities, and (optionally) random
/// nonzero quantizer values.
RibbonBrauerGraph random_graph(Rng& rng, const GraphGenOptions& opts);

/// Random Brauer weighting: free values with one dart per vertex adjusted so
/// the rotation product has order dividing the multiplicity. When
/// `need_connected_cover` is set, draws are rejected until the voltage lift
/// is connected; returns std::nullopt if no draw within `attempts` works.
std::optional<BrauerWeighting> random_brauer_weighting(Rng& rng, const RibbonBrauerGraph& g,
                                                       const AbelianGroup& group, int attempts,
                                                       bool need_connected_cover);

} // namespace brauer
