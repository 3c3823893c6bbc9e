#pragma once

#include <string>
#include <vector>

#include "brauer/abelian_group.hpp"
#include "brauer/ribbon.hpp"

namespace brauer {

// Successor weighting: one group element per dart (= per successor pair).
// It is a Brauer weighting when ord(omega_mu) divides m(mu) at every vertex.
struct BrauerWeighting {
    AbelianGroup group;
    std::vector<GroupElement> w;  // indexed by dart

    const GroupElement& at(DartId d) const { return w.at(static_cast<size_t>(d)); }
};

struct VertexWeightData {
    DartId base = -1;               // minimal dart at the vertex (by label)
    GroupElement omega;             // full rotation product of W at the vertex
    long long ord = 1;              // order of omega
    CosetPartition cosets;          // cosets of <omega> in G
    std::vector<DartId> darts;      // rotation order starting at base
    std::vector<GroupElement> partial;  // partial[r] = product W(darts[0..r-1])
};

/// Rotation products, order, cosets and partial products at one vertex.
VertexWeightData vertex_data(const RibbonBrauerGraph& g, const BrauerWeighting& W, int vertex);

/// Checks totality and the divisibility ord(mu) | m(mu) per vertex.
/// Returns diagnostics; empty means W is a Brauer weighting for g.
std::vector<std::string> validate_weighting(const RibbonBrauerGraph& g, const BrauerWeighting& W);

void require_valid_weighting(const RibbonBrauerGraph& g, const BrauerWeighting& W);

} // namespace brauer
