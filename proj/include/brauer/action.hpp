#pragma once

#include <string>
#include <utility>
#include <vector>

#include "brauer/abelian_group.hpp"
#include "brauer/presentation.hpp"
#include "brauer/ribbon.hpp"
#include "brauer/weighting.hpp"

namespace brauer {

// Group action on a Brauer graph, given as one dart permutation per cyclic
// factor generator. Validation checks that this extends to a homomorphism
// commuting with rotation and pairing, preserving multiplicities, and acting
// freely on edges.
struct FreeBrauerAction {
    AbelianGroup group;
    std::vector<std::vector<DartId>> generator_perm;
};

std::vector<std::string> validate_action(const RibbonBrauerGraph& g, const FreeBrauerAction& act);
void require_valid_action(const RibbonBrauerGraph& g, const FreeBrauerAction& act);

/// Dart permutation of an arbitrary group element (generator powers composed).
std::vector<DartId> action_permutation(const RibbonBrauerGraph& g, const FreeBrauerAction& act,
                                       const GroupElement& e);

// Successor-sequence decomposition at a vertex: the sequence splits into
// s+1 blocks of length k translated by powers of g.
struct VertexDecomposition {
    int k = 0;
    int s = 0;
    GroupElement g;
};

struct OrbitData {
    RibbonBrauerGraph orbit;
    std::vector<int> dart_orbit;    // base dart -> orbit dart
    std::vector<int> vertex_orbit;  // base vertex -> orbit vertex
    std::vector<VertexDecomposition> decomposition;  // per base vertex
};

/// Quotient by a validated free Brauer action; carries the induced rotation,
/// multiplicity val(mu) m(mu) / val(orbit mu), and the transported quantizer.
OrbitData orbit_graph(const RibbonBrauerGraph& g, const FreeBrauerAction& act);

/// Orbit of the quiver presentation under the induced quiver action. By
/// construction independent of orbit_graph; the two routes must agree up to
/// presentation_iso.
Presentation orbit_presentation(const RibbonBrauerGraph& g, const FreeBrauerAction& act);

/// The successor weighting on the orbit graph associated to the action,
/// built from lexicographically minimal representatives. Always a Brauer
/// weighting (asserted).
std::pair<OrbitData, BrauerWeighting> associated_weighting(const RibbonBrauerGraph& g,
                                                           const FreeBrauerAction& act);

} // namespace brauer
