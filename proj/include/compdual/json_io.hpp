#pragma once

#include "compdual/composition.hpp"
#include "compdual/formal_sum.hpp"
#include "compdual/operators.hpp"

#include <json.hpp>

namespace compdual {

using Json = nlohmann::json;

Json to_json(const Composition& c);
Json to_json(const WeakComposition& w);
Json to_json(const OpResult& r);  ///< null for Zero
Json to_json(const OperatorWord& word);
Json to_json(const FormalSum& s);

Composition composition_from_json(const Json& j);
OperatorWord word_from_json(const Json& j);
FormalSum formal_sum_from_json(const Json& j);

}  // namespace compdual
