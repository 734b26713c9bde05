#pragma once

#include <json.hpp>

#include "specbounds/bounds.hpp"
#include "specbounds/invariants.hpp"
#include "specbounds/spectral.hpp"

namespace specbounds {

/// Big integers serialize as JSON numbers when they fit in 64 bits and as
/// decimal strings beyond that.
nlohmann::json json_int(const BigInt& value);

/// {"num": ..., "den": ...}
nlohmann::json json_rational(const BigRat& q);

/// {"num": ..., "den": ..., "value": double}
nlohmann::json json_rational_value(const BigRat& q);

/// {"e": ..., "p": ..., "value": double}; e carries the magnitude, the sign
/// lives in value.
nlohmann::json json_root_ratio(const RootRatio& r);

nlohmann::json json_witness(const BipartiteWitness& w);

nlohmann::json to_json(const Spectrum& s);
nlohmann::json to_json(const InvariantReport& report);
nlohmann::json to_json(const BoundReport& report);

}  // namespace specbounds
