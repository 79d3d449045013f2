#pragma once

#include <json.hpp>

#include "qpc/generation.hpp"
#include "qpc/partition_vector.hpp"

namespace qpc {

// Polynomials serialize as coefficient lists low-to-high degree; rationals as
// decimal strings ("-2", "3/2") so nothing overflows JSON numbers.
nlohmann::json to_json(const PolyN& p);
PolyN poly_from_json(const nlohmann::json& j);

nlohmann::json to_json(const RatFuncN& f);   // {"num":[...],"den":[...]}
RatFuncN ratfunc_from_json(const nlohmann::json& j);

nlohmann::json to_json(const PartitionVector& v);
PartitionVector partition_vector_from_json(const nlohmann::json& j);

nlohmann::json to_json(const GenerationCertificate& cert);
GenerationCertificate certificate_from_json(const nlohmann::json& j);

}  // namespace qpc
