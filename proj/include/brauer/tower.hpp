#pragma once

#include <optional>
#include <string>
#include <vector>

#include "brauer/covering.hpp"
#include "brauer/ribbon.hpp"
#include "brauer/weighting.hpp"

namespace brauer {

/// lcm of the vertex multiplicities; 1 means the multiplicity stage is vacuous.
long long multiplicity_lcm(const RibbonBrauerGraph& g);

bool has_loops(const RibbonBrauerGraph& g);
bool has_multiple_edges(const RibbonBrauerGraph& g);

/// Weighting into Z_lcm(m) whose cover has multiplicity one everywhere.
/// Returns std::nullopt when m is already identically one.
std::optional<BrauerWeighting> multiplicity_removal_weighting(const RibbonBrauerGraph& g);

/// Weighting into a product of Z_p, one factor per loop, whose cover has no
/// loops. Every rotation product is the identity, so multiplicities are
/// preserved. Returns std::nullopt when the graph has no loops.
std::optional<BrauerWeighting> loop_removal_weighting(const RibbonBrauerGraph& g, int p = 2);

/// Weighting into the product of Z_alpha over alpha-marked endpoint pairs,
/// with z_k carried by darts of marked edges at the pair's distinguished
/// vertex. Throws std::invalid_argument if the graph has loops; std::nullopt
/// when there are no multiple edges. `flip_mask` flips the default
/// (lexicographically smaller) distinguished vertex of the chosen pairs.
std::optional<BrauerWeighting> multi_edge_removal_weighting(const RibbonBrauerGraph& g,
                                                            unsigned long long flip_mask = 0);

struct TowerOptions {
    int loop_p = 2;                  // first prime tried for loop removal
    long long max_edges = 100000;    // per-stage output budget
    bool auto_adjust = true;         // retry choices that disconnect the lift
};

struct TowerBudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TowerStage {
    std::string tag;  // "multiplicity" | "loops" | "multiedges"
    BrauerWeighting weighting;
    CoveringOutput output;
};

struct Tower {
    RibbonBrauerGraph initial;
    std::vector<TowerStage> stages;

    const RibbonBrauerGraph& result() const {
        return stages.empty() ? initial : stages.back().output.cover;
    }
};

/// Runs the multiplicity, loop and multi-edge stages in order, skipping
/// vacuous ones, and asserts each stage guarantee on its output. The final
/// graph has m == 1, no loops and no multiple edges.
Tower build_tower(const RibbonBrauerGraph& g, const TowerOptions& opts = {});

} // namespace brauer
