#ifndef QSERIES_JSON_HPP
#define QSERIES_JSON_HPP

#include <nlohmann/json.hpp>

#include "qseries/dissection.hpp"
#include "qseries/prodmake.hpp"
#include "qseries/qproducts.hpp"
#include "qseries/series.hpp"

namespace qseries {

/// Coefficients are decimal strings so bignums survive any JSON reader.
nlohmann::json to_json(const Series& s);
nlohmann::json to_json(const Dissection& d);
nlohmann::json to_json(const SupportReport& r);
nlohmann::json to_json(const PeriodView& v);
nlohmann::json to_json(const EtaExponents& e);
nlohmann::json to_json(const QProduct& p);

}  // namespace qseries

#endif  // QSERIES_JSON_HPP
