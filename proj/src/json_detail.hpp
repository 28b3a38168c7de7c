#pragma once

#include <string>

#include <json.hpp>

#include "divmod/matrix.hpp"

namespace divmod::detail {

// {"characteristic": p, "vars": [...], "order": "grevlex"|"lex"}; a non-empty
// override replaces the declared order.
RingPtr ring_from_json(const nlohmann::json& j, const std::string& order_override = "");

// {"ambient_rank": e, "columns": [[entries of column 0], ...]}
PolyMatrix embedded_matrix_from_json(const nlohmann::json& j, const RingPtr& ring);

// array of rows of polynomial strings; every row must have the same length
// and the row count must match `expected_rows`
PolyMatrix rows_from_json(const nlohmann::json& j, const RingPtr& ring,
                          std::size_t expected_rows);

std::string order_name(const OrderSpec& order);
std::string field_name(const Field& field);

}  // namespace divmod::detail
