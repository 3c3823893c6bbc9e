#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "brauer/rational.hpp"

namespace brauer {

using DartId = int;

// A Brauer graph as a decorated combinatorial map. Edge e owns the two darts
// 2e and 2e+1 (its half-edges); a loop's darts share a vertex and realize the
// loop's two occurrences in the rotation. The pairing alpha is d ^ 1 and is
// fixed-point-free by construction.
//
// Instances are built by make_graph (or the JSON reader) and are expected to
// be treated as immutable afterwards; all queries are pure.
struct RibbonBrauerGraph {
    std::vector<std::string> vertex_labels;
    std::vector<int> multiplicity;       // per vertex, >= 1
    std::vector<std::string> edge_labels;
    std::vector<int> dart_vertex;        // dart -> vertex index, size 2*edges
    std::vector<DartId> sigma;           // rotation permutation of darts
    bool quantized = false;
    std::map<DartId, Rational> quantizer;  // keys are exactly the darts of Y-edges

    int num_vertices() const { return static_cast<int>(vertex_labels.size()); }
    int num_edges() const { return static_cast<int>(edge_labels.size()); }
    int num_darts() const { return static_cast<int>(dart_vertex.size()); }

    DartId alpha(DartId d) const { return d ^ 1; }
    int edge_of(DartId d) const { return d >> 1; }
    int vertex_of(DartId d) const { return dart_vertex[d]; }

    // Cached after the first call; factories warm it before handing the
    // graph out, so concurrent readers only ever see the filled cache.
    int valency(int vertex) const;
    std::string dart_name(DartId d) const;
    DartId dart_by_name(const std::string& name) const;

    // Orders darts by (edge label, half-edge bit); used wherever a
    // deterministic representative is needed.
    bool dart_label_less(DartId a, DartId b) const;

private:
    mutable std::vector<int> valency_cache_;
};

struct GraphVertexSpec {
    std::string id;
    int m = 1;
};

struct GraphEdgeSpec {
    std::string id;
    std::string end0;
    std::string end1;
};

/// Assembles and fully validates a graph. The rotation gives, per vertex id,
/// the clockwise list of dart names ("<edge>.<0|1>"). Throws
/// std::invalid_argument with a diagnostic on any violated invariant.
RibbonBrauerGraph make_graph(const std::vector<GraphVertexSpec>& vertices,
                             const std::vector<GraphEdgeSpec>& edges,
                             const std::map<std::string, std::vector<std::string>>& rotation,
                             const std::map<std::string, std::string>& quantizer = {});

/// Re-checks every structural invariant. Returns one message per violation;
/// empty means valid.
std::vector<std::string> validate(const RibbonBrauerGraph& g);

/// Throws std::invalid_argument listing all diagnostics if the graph is invalid.
void require_valid(const RibbonBrauerGraph& g);

/// The sigma-orbit of d in rotation order: d, sigma(d), ..., length val(vertex(d)).
std::vector<DartId> successor_sequence(const RibbonBrauerGraph& g, DartId d);

/// True iff the dart's vertex has valency 1 and multiplicity 1.
bool is_truncated(const RibbonBrauerGraph& g, DartId d);

struct IndexSets {
    std::vector<DartId> x_darts;  // darts of edges not truncated at either end
    std::vector<int> y_edges;     // those edges
    std::vector<DartId> z_darts;  // all darts (successor pairs)
};

IndexSets index_sets(const RibbonBrauerGraph& g);

/// Dart bijection witnessing an isomorphism; image[d] is the dart of the
/// second graph corresponding to dart d of the first.
using DartBijection = std::vector<DartId>;

/// Searches for an isomorphism of Brauer graphs (commuting with rotation and
/// pairing, preserving multiplicities). With quantized set, additionally
/// requires the per-edge quantizer ratios to transport. Returns std::nullopt
/// when no isomorphism exists.
std::optional<DartBijection> brauer_iso(const RibbonBrauerGraph& g1,
                                        const RibbonBrauerGraph& g2,
                                        bool quantized = false);

/// Label-independent encoding of the map (sigma, alpha, multiplicities):
/// two graphs have equal keys iff brauer_iso succeeds without quantizers.
std::vector<long long> canonical_key(const RibbonBrauerGraph& g);

} // namespace brauer
