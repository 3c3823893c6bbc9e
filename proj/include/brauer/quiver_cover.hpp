#pragma once

#include <string>
#include <vector>

#include "brauer/abelian_group.hpp"
#include "brauer/presentation.hpp"

namespace brauer {

// Free group action on a quiver with relations, one vertex/arrow permutation
// per cyclic factor generator.
struct QuiverAction {
    AbelianGroup group;
    std::vector<std::vector<int>> vertex_perm;
    std::vector<std::vector<int>> arrow_perm;
};

std::vector<std::string> validate_quiver_action(const Presentation& p, const QuiverAction& act);
void require_valid_quiver_action(const Presentation& p, const QuiverAction& act);

struct QuiverOrbitResult {
    Presentation orbit;
    std::vector<int> vertex_orbit;  // base vertex -> orbit vertex
    std::vector<int> arrow_orbit;   // base arrow -> orbit arrow
    // weight function on the orbit quiver induced by the action and the
    // minimal-representative choices; grades the orbit ideal homogeneously
    std::vector<GroupElement> induced_weight;
};

/// Orbit quiver and orbit ideal of a free quiver action. The relation set
/// must be stable under the action up to scalars.
QuiverOrbitResult orbit_quiver(const Presentation& p, const QuiverAction& act);

struct QuiverCoverResult {
    Presentation cover;
    QuiverAction canonical_action;  // x_g -> x_{gh}
    std::vector<int> base_vertex;   // lifted vertex -> base vertex
    std::vector<int> base_arrow;    // lifted arrow -> base arrow
    std::vector<GroupElement> vertex_fiber;  // lifted vertex -> g
};

/// Covering quiver of a weight function: vertices and arrows are multiplied
/// by G and every relation lifts once per fiber element. Throws
/// std::invalid_argument if some relation is not weight homogeneous.
QuiverCoverResult covering_quiver(const Presentation& p, const AbelianGroup& group,
                                  const std::vector<GroupElement>& arrow_weight);

} // namespace brauer
