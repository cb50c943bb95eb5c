#pragma once

#include <json.hpp>

#include "algser/series.hpp"

namespace algser {

// SeriesJson: {"vars": [...], "truncation": N, "terms": [{"exp": [...],
// "num": "...", "den": "..."}]} with terms in grlex order and every
// coefficient in lowest terms with positive denominator. All numbers are
// decimal strings so arbitrary precision survives serialization.
nlohmann::json series_to_json(const TruncSeries& s);
TruncSeries series_from_json(const nlohmann::json& j);

}  // namespace algser
