#include "json_detail.hpp"

#include "divmod/errors.hpp"
#include "divmod/parser.hpp"

namespace divmod::detail {

using nlohmann::json;

RingPtr ring_from_json(const json& j, const std::string& order_override) {
    Field field;
    field.p = j.value("characteristic", std::uint64_t{0});
    std::vector<std::string> vars = j.at("vars").get<std::vector<std::string>>();
    std::string name =
        order_override.empty() ? j.value("order", "grevlex") : order_override;
    OrderSpec order;
    if (name == "lex")
        order.kind = OrderKind::lex;
    else if (name != "grevlex")
        throw ParseError("unknown monomial order '" + name + "'", 0);
    return Ring::make(field, std::move(vars), order);
}

PolyMatrix embedded_matrix_from_json(const json& j, const RingPtr& ring) {
    std::size_t ambient = j.at("ambient_rank").get<std::size_t>();
    const json& cols = j.at("columns");
    PolyMatrix m(ring, ambient, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != ambient)
            throw ParseError("column " + std::to_string(c) +
                                 " does not match the ambient rank",
                             0);
        for (std::size_t r = 0; r < ambient; ++r)
            m.set(r, c, parse_polynomial(cols[c][r].get<std::string>(), ring));
    }
    return m;
}

PolyMatrix rows_from_json(const json& j, const RingPtr& ring,
                          std::size_t expected_rows) {
    if (j.size() != expected_rows)
        throw ParseError("matrix has " + std::to_string(j.size()) +
                             " rows where " + std::to_string(expected_rows) +
                             " were declared",
                         0);
    std::size_t cols = expected_rows ? j[0].size() : 0;
    PolyMatrix m(ring, expected_rows, cols);
    for (std::size_t r = 0; r < expected_rows; ++r) {
        if (j[r].size() != cols)
            throw ParseError("matrix row " + std::to_string(r) +
                                 " has a different length",
                             0);
        for (std::size_t c = 0; c < cols; ++c)
            m.set(r, c, parse_polynomial(j[r][c].get<std::string>(), ring));
    }
    return m;
}

std::string order_name(const OrderSpec& order) {
    switch (order.kind) {
        case OrderKind::grevlex: return "grevlex";
        case OrderKind::lex: return "lex";
        default: return "block(" + std::to_string(order.block_size) + ")";
    }
}

std::string field_name(const Field& field) {
    return field.is_rational() ? "Q" : "F" + std::to_string(field.p);
}

}  // namespace divmod::detail
