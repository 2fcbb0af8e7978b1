#pragma once

#include "isowirt/chernoff.hpp"
#include "isowirt/polygon.hpp"
#include "isowirt/smooth_curve.hpp"

#include <filesystem>

#include <nlohmann/json_fwd.hpp>

namespace isowirt {

// File formats (all JSON):
//   polygon  - array of [re, im] vertex pairs, ordered, k >= 3
//   curve    - object mapping the signed mode index to [re, im]
//   support  - same map layout; the reality constraint is validated on load

nlohmann::json polygon_to_json(const Polygon& p);
Polygon polygon_from_json(const nlohmann::json& j);

nlohmann::json curve_to_json(const FourierCurve& c);
FourierCurve curve_from_json(const nlohmann::json& j);

nlohmann::json support_to_json(const SupportFunction& h);
SupportFunction support_from_json(const nlohmann::json& j);

Polygon load_polygon(const std::filesystem::path& path);
FourierCurve load_curve(const std::filesystem::path& path);
SupportFunction load_support(const std::filesystem::path& path);

void save_json(const nlohmann::json& j, const std::filesystem::path& path);

}  // namespace isowirt
