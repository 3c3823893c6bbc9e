#pragma once

#include <string>

#include <json.hpp>

#include "brauer/action.hpp"
#include "brauer/covering.hpp"
#include "brauer/presentation.hpp"
#include "brauer/ribbon.hpp"
#include "brauer/tower.hpp"
#include "brauer/weighting.hpp"

namespace brauer {

using nlohmann::json;

json group_to_json(const AbelianGroup& g);
AbelianGroup group_from_json(const json& j);

json element_to_json(const GroupElement& e);
GroupElement element_from_json(const json& j);

json graph_to_json(const RibbonBrauerGraph& g);
RibbonBrauerGraph graph_from_json(const json& j);

json weighting_to_json(const RibbonBrauerGraph& g, const BrauerWeighting& w);
BrauerWeighting weighting_from_json(const RibbonBrauerGraph& g, const json& j);

json action_to_json(const RibbonBrauerGraph& g, const FreeBrauerAction& a);
FreeBrauerAction action_from_json(const RibbonBrauerGraph& g, const json& j);

json presentation_to_json(const Presentation& p);
Presentation presentation_from_json(const json& j);

/// Arrow-indexed weight function ({"group": ..., "W": {"<arrow name>": [..]}}).
std::pair<AbelianGroup, std::vector<GroupElement>> arrow_weights_from_json(const Presentation& p,
                                                                           const json& j);

json tower_to_json(const Tower& t);

json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const json& j);

} // namespace brauer
