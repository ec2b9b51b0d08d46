// SPDX-License-Identifier: Apache-2.0
//
// JSON encoding of regions:
//
//   {"type": "annulus", "r_in": 0, "r_out": 2}
//   {"type": "polygon", "L": 3, "r_out": 3.11, "r_in": 0}
//   {"type": "multipolygon", "rings": [[[x, y], ...], ...]}
//
// Multi-polygon rings are filled with the even-odd rule. "r_in" defaults to 0.
#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "spout/geometry.hpp"

namespace spout {

Region region_from_json(const nlohmann::json& j);
nlohmann::json region_to_json(const Region& region);

Region load_region(const std::filesystem::path& path);
void save_region(const Region& region, const std::filesystem::path& path);

}  // namespace spout
