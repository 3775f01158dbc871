#pragma once

#include "hahn/explog.hpp"
#include "hahn/series.hpp"
#include "hahn/towers.hpp"

#include <json.hpp>

namespace hahn {

/// JSON shapes are described in docs/series.schema.json.
nlohmann::json monomial_to_json(const Monomial& m);
nlohmann::json series_to_json(const Series& s);
nlohmann::json growth_report_to_json(const GrowthReport& r);
nlohmann::json no_omega_to_json(const NoOmegaReport& r);

}  // namespace hahn
