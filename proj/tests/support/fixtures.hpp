#pragma once

#include "brauer/action.hpp"
#include "brauer/ribbon.hpp"
#include "brauer/weighting.hpp"

namespace fixtures {

using namespace brauer;

/// Three edges 1,2,3 meeting at lambda; 1 truncated at mu, 2 truncated at nu,
/// m(xi) = 2. Quantized on {3.0, 3.1}.
RibbonBrauerGraph three_edges(const std::string& q30 = "1", const std::string& q31 = "1");

/// Triangle with m(mu) = 3; every dart quantized.
RibbonBrauerGraph triangle_m3();

/// A single edge with multiplicity one at both ends (the K[x]/(x^2) case).
RibbonBrauerGraph single_edge();

/// Six-edge star with trivial multiplicities and its order-two rotation by
/// three steps; a free Brauer action.
RibbonBrauerGraph star6();
FreeBrauerAction star6_action();

/// Three-edge star with m(center) = 2: the orbit graph of the star above.
RibbonBrauerGraph star3_m2();

/// Triangle with m(top) = 3 and its weighting into Z_3 carrying g on the
/// (b, a) successor pair at the top vertex.
RibbonBrauerGraph triangle39();
BrauerWeighting triangle39_weighting();

/// The nine-edge cover of the triangle above, encoded from its drawing.
RibbonBrauerGraph triangle39_cover();

/// A weighting with every value the identity.
BrauerWeighting trivial_weighting(const RibbonBrauerGraph& g, const AbelianGroup& group);

/// The identity action of the trivial group.
FreeBrauerAction trivial_action(const RibbonBrauerGraph& g);

} // namespace fixtures
