#pragma once

#include <json.hpp>

#include "fibkit/aniso.hpp"
#include "fibkit/cyclo.hpp"
#include "fibkit/fibcat.hpp"
#include "fibkit/fusion.hpp"
#include "fibkit/nim.hpp"
#include "fibkit/voa.hpp"

namespace fibkit {

using Json = nlohmann::ordered_json;

// Rationals are written as exact strings "p/q"; parsing rejects anything
// else with std::invalid_argument.
Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

/// {order, coeffs: ["p/q", ...]}
Json to_json(const Cyclotomic& x);
Cyclotomic cyclotomic_from_json(const Json& j);

Json to_json(const Mat2& m);
Mat2 mat2_from_json(const Json& j);

/// {labels, unit, dual, N}
Json to_json(const FusionRing& r);
FusionRing fusion_ring_from_json(const Json& j);

/// {ring_name, ring, basis, action}
Json to_json(const NimRep& rep);
NimRep nim_rep_from_json(const Json& j);

Json to_json(const SetPartition& p);
SetPartition set_partition_from_json(const Json& j);

Json to_json(const FibAssociator& a);
FibAssociator associator_from_json(const Json& j);

Json to_json(const FibBraiding& b);
FibBraiding braiding_from_json(const Json& j);

Json to_json(const FibModularData& d);
FibModularData modular_data_from_json(const Json& j);

Json to_json(const Sl2Report& r);

Json to_json(const AlgebraClass& c);
AlgebraClass algebra_class_from_json(const Json& j);

Json to_json(const ScanReport& r);
ScanReport scan_report_from_json(const Json& j);

/// {name, c, labels, weights, fusion}
Json to_json(const VoaModel& m);
VoaModel voa_model_from_json(const Json& j);

Json to_json(const ExtensionReport& r, const VoaModel& model);
ExtensionReport extension_report_from_json(const Json& j);

Json to_json(const PointedData& p);
Json to_json(const M35Report& r);
Json to_json(const CatalogCheck& c);

}  // namespace fibkit
