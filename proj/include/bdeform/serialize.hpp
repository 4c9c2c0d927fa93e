#pragma once

#include <json.hpp>

#include "bdeform/constraints.hpp"
#include "bdeform/jack.hpp"
#include "bdeform/tau.hpp"

namespace bdeform {

inline constexpr const char* kSchema = "bdeform/1";

// Scalars are written as their canonical text, which Coeff::parse reads back.
nlohmann::json to_json(const Coeff& c);
nlohmann::json to_json(const PMonomial& m);
nlohmann::json to_json(const PPoly& p);
nlohmann::json to_json(const WeylOp& op);
nlohmann::json to_json(const TGradedOp& op);
nlohmann::json to_json(const Series& s);
nlohmann::json to_json(const JackPoly& j);
nlohmann::json to_json(const CheckResult& r);
/// Full report document, including the "schema" field.
nlohmann::json to_json(const Report& r);

PMonomial pmonomial_from_json(const nlohmann::json& j);
PPoly ppoly_from_json(const nlohmann::json& j);
WeylOp weylop_from_json(const nlohmann::json& j);

}  // namespace bdeform
