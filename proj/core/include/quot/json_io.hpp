#pragma once

#include "json.hpp"

#include "quot/jet.hpp"
#include "quot/rationality.hpp"
#include "quot/series.hpp"

namespace quot {

// {"var":"q","valuation":v,"trunc":T,"coeffs":["p/q",...]}
nlohmann::json series_to_json(const Series<Rat>& s);
Series<Rat> series_from_json(const nlohmann::json& j);

// Jet coefficients serialize as lists of {"exponents":[...],"value":"p/q"};
// the context travels alongside as {"jetvars":[...],"jetcaps":[...]}.
nlohmann::json series_to_json(const Series<Jet>& s);
Series<Jet> jet_series_from_json(const nlohmann::json& j);

// {"num":[...],"den":[...],"shift":k,"poleAtOne":k,"allPolesAtOne":bool}
// or {"noFit":true,"bounds":[degNum,degDen]}.
nlohmann::json fit_to_json(const FitResult& res);

} // namespace quot
