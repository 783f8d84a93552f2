#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "chebmat/int_matrix.hpp"

namespace chebmat {

// Matrix file schema: {"n": <int>, "rows": [[...], ...]} with entries encoded
// as JSON numbers when they fit a 64-bit integer and as decimal strings
// otherwise; the parser accepts both. Parsing is strict: exactly n rows of n
// integer entries.
nlohmann::json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const nlohmann::json& j);
IntMatrix parse_matrix_text(const std::string& text);

// A single Int under the same number-or-decimal-string rule.
nlohmann::json int_to_json(const Int& v);
Int int_from_json(const nlohmann::json& j);

}  // namespace chebmat
