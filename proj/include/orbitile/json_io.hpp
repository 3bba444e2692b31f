#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>
#include <vector>

#include "orbitile/classification.hpp"
#include "orbitile/geodesics.hpp"
#include "orbitile/morse_bounds.hpp"
#include "orbitile/planar_tiling.hpp"
#include "orbitile/spherical_tiling.hpp"

namespace orbitile {

nlohmann::json to_json(const OrbitSpaceCase& c);
nlohmann::json to_json(const std::vector<OrbitSpaceCase>& cases);
nlohmann::json to_json(const SphericalTiling& tiling);
nlohmann::json to_json(const PlanarRingTiling& tiling);
nlohmann::json to_json(const PointOrbit& orbit);
nlohmann::json to_json(const GeodesicRecord& rec);
nlohmann::json to_json(const GeodesicCensus& census);
nlohmann::json to_json(const BettiBoundReport& report);

// CSV mirroring the classification table columns:
//   #, Ext Angles, Int Angles, Tiling?, Tile, No. Tiles
std::string classification_csv(const std::vector<OrbitSpaceCase>& cases);

// CSV of a bound report: n, cumulative, bound, satisfied.
std::string report_csv(const BettiBoundReport& report);

// Plain x-y series (n, cumulative) for external plotting.
std::string report_plot_data(const BettiBoundReport& report);

}  // namespace orbitile
