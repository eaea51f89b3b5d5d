#pragma once

#include <json.hpp>

#include "butterfly/coexistence.hpp"
#include "butterfly/labels.hpp"
#include "butterfly/raster.hpp"
#include "butterfly/spectrum.hpp"

namespace butterfly {

using Json = nlohmann::ordered_json;

/// {"p","q","j","k","central_closed","rho":"j/q","e_lo","e_hi"}; infinite
/// gap ends are written as null.
Json to_json(const GapRecord& record);
GapRecord gap_record_from_json(const Json& j);

/// {"p","q","bands":[[lo,hi],...],"gaps":[GapRecord...]}. Doubles are
/// written in shortest round-trip form.
Json to_json(const Spectrum& spectrum);
Spectrum spectrum_from_json(const Json& j);

/// {"columns":[{"x","p","q","gaps":[...]}]} for every resolved column.
Json sidecar_json(const Render& render);

/// {"point","k","q","entries":[{"n","l","p_n","q_n","label","dist","bound","pass"}],...}
Json to_json(const CoexistenceReport& report);

Json to_json(const NonCoexistenceReport& report);

}  // namespace butterfly
