#pragma once

#include <json.hpp>
#include <string>

#include "nonloose/decorated.hpp"
#include "nonloose/unknots.hpp"

namespace nonloose {

using json = nlohmann::ordered_json;

json to_json(const Slope& s);
json to_json(const ShuffleClass& c);  // {"path": [...], "minus": [...]}
json to_json(const NonLooseClass& c);
json to_json(const MountainRange& r);
json to_json(const Classification& c);

ShuffleClass shuffle_class_from_json(const json& j, const Context& ctx);
Classification classification_from_json(const json& j);

std::string to_csv(const Classification& c);
std::string to_table(const Classification& c);
// Static mountain-range plot: one panel per range, rot across, tb up.
std::string to_svg(const Classification& c);

}  // namespace nonloose
