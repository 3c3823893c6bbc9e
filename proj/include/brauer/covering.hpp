#pragma once

#include <optional>
#include <string>
#include <vector>

#include "brauer/action.hpp"
#include "brauer/presentation.hpp"
#include "brauer/quiver_cover.hpp"
#include "brauer/ribbon.hpp"
#include "brauer/weighting.hpp"

namespace brauer {

struct CoveringOutput {
    RibbonBrauerGraph cover;
    FreeBrauerAction action;              // canonical: (d, g) -> (d, gh)
    std::vector<int> base_dart;           // lifted dart -> base dart
    std::vector<GroupElement> fiber;      // lifted dart -> fiber element
    std::vector<int> base_vertex;         // lifted vertex -> base vertex
};

/// Raised when a weighting's voltages fail to generate a connected lift; a
/// disconnected cover is |H|-many copies of the lift for the generated
/// subgroup H and is not a Brauer graph.
struct CoverDisconnected : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Voltage lift of a Brauer weighting: darts (d, g) with rotation
/// (d, g) -> (sigma d, g W(d)) and pairing (d, g) -> (alpha d, g).
/// Asserts the counting identities val(mu_d) = ord(mu) val(mu),
/// m_W = m / ord, and the coset description of the lifted vertices.
CoveringOutput covering_graph(const RibbonBrauerGraph& g, const BrauerWeighting& W);

struct RoundtripWitness {
    CoveringOutput covering;
    OrbitData orbit;
    DartBijection graph_iso;  // orbit graph -> original
    PresIso pres_iso;         // presentation of original -> orbit presentation
};

/// Full orbit-of-cover round trip. Failure to find either witness is a hard
/// error: the isomorphisms are guaranteed, so a miss means a bug.
RoundtripWitness roundtrip_orbit(const RibbonBrauerGraph& g, const BrauerWeighting& W);

/// Covering quiver and lifted ideal obtained from the induced arrow weights,
/// built without constructing the covering graph. Must agree with
/// build_presentation(covering_graph(...).cover) up to presentation_iso.
Presentation covering_presentation(const RibbonBrauerGraph& g, const BrauerWeighting& W);

enum class WeightClass { Brauer, NotBrauer, NotHomogeneous };

struct ClassifyResult {
    WeightClass verdict = WeightClass::Brauer;
    std::optional<BrauerWeighting> recovered;  // total on darts, identity at truncated ends
    int witness_relation = -1;  // inhomogeneous relation (NotHomogeneous)
    int witness_vertex = -1;    // quiver vertex whose cycle power has nonzero degree (NotBrauer)
    std::string detail;
};

/// Classification of weight functions on the quiver of a Brauer graph
/// algebra: Brauer exactly when every relation is homogeneous and every
/// cycle power occurring in a relation has degree identity.
ClassifyResult classify_weight_function(const Presentation& pres, const AbelianGroup& group,
                                        const std::vector<GroupElement>& arrow_weight);

} // namespace brauer
