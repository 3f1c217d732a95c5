#pragma once

#include <json.hpp>

#include "domino/bijection.hpp"
#include "domino/sieving.hpp"
#include "domino/tableaux.hpp"

namespace domino {

// Interchange formats. Counts are serialized as decimal strings; domino lists
// are sorted by label.
//
//   DominoTableau:     {"shape":[...], "dominoes":[{"label":..,"row":..,"col":..,"orient":"H"|"V"},...]}
//   IncreasingTableau: {"shape":[...], "rows":[[...],...]}
//   SubsetState:       {"n":..,"S":[...],"H":[...],"V":[...]}
//   CspReport:         {"n":..,"rows":[{"k":..,"fixed":"..","poly":"..","closed":"..","match":..}],
//                       "verdict":"pass"|"fail"}

nlohmann::json to_json(const DominoTableau& tableau);
DominoTableau tableau_from_json(const nlohmann::json& j);

nlohmann::json to_json(const IncreasingTableau& tableau);
nlohmann::json to_json(const SubsetState& state);
nlohmann::json to_json(const CspReport& report);
nlohmann::json to_json(const OrbitReport& report);
nlohmann::json to_json(const RealizabilityReport& report);
nlohmann::json to_json(const ConjectureProbe& probe);

}  // namespace domino
