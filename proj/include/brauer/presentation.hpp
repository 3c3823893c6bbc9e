#pragma once

#include <optional>
#include <string>
#include <vector>

#include "brauer/abelian_group.hpp"
#include "brauer/rational.hpp"
#include "brauer/ribbon.hpp"

namespace brauer {

struct Arrow {
    std::string name;
    int source = -1;
    int target = -1;
    DartId dart = -1;  // originating dart; -1 for the degenerate loop arrow
};

struct Quiver {
    std::vector<std::string> vertex_names;
    std::vector<Arrow> arrows;
};

enum class RelationType { One, Two, Three };

struct PathTerm {
    Rational coeff;
    std::vector<int> arrows;  // arrow indices, composed left to right
};

// A uniform relation: every term shares source and target. Type one has two
// terms (difference of cycle powers), types two and three a single path.
struct Relation {
    RelationType type = RelationType::Three;
    std::vector<PathTerm> terms;
};

struct Presentation {
    Quiver quiver;
    std::vector<Relation> relations;
};

std::string relation_type_name(RelationType t);

/// Arrow path of the rotation cycle based at d: darts d, sigma(d), ...
/// around vertex(d). Throws std::domain_error if d is truncated.
std::vector<DartId> cycle(const RibbonBrauerGraph& g, DartId d);

/// Quiver and relations of the Brauer graph algebra. A missing quantizer is
/// read as q == 1 everywhere.
Presentation build_presentation(const RibbonBrauerGraph& g);

struct PresIso {
    std::vector<int> vertex_map;
    std::vector<int> arrow_map;
};

struct PresIsoOptions {
    int max_vertices = 600;  // the search is exponential in the worst case
};

/// Backtracking search for a quiver isomorphism carrying the relation set of
/// p1 onto that of p2 (two-term relations match up to one nonzero scalar).
/// Returns std::nullopt if none exists; throws std::length_error above the
/// size bound.
std::optional<PresIso> presentation_iso(const Presentation& p1, const Presentation& p2,
                                        const PresIsoOptions& opts = {});

struct RelationWeightInfo {
    bool homogeneous = false;
    GroupElement degree;  // degree of the first term when homogeneous
};

struct ArrowWeighting {
    AbelianGroup group;
    std::vector<GroupElement> arrow_weight;     // per arrow
    std::vector<RelationWeightInfo> relations;  // per relation of the presentation
};

class BrauerWeightingRef;  // see weighting.hpp

/// Transports a dart weighting to the arrows of a presentation built from the
/// same graph and reports per-relation homogeneity.
ArrowWeighting arrow_weights(const Presentation& pres, const AbelianGroup& group,
                             const std::vector<GroupElement>& dart_weights);

std::string render_relation(const Presentation& pres, const Relation& rel);
std::string render_presentation(const Presentation& pres);

} // namespace brauer
