#pragma once

#include <json.hpp>

#include "tvx/multiform.hpp"

namespace tvx {

// {"orders": {"x": m, ...}, "terms": [{"exps": {"x": [e1, e2], ...}, "coeff": "p/q"}, ...]}
// Terms are emitted in canonical order; exps list only pairs of nonzero order.
nlohmann::json to_json(const MultiForm& form);
MultiForm multiform_from_json(const nlohmann::json& j);

}  // namespace tvx
