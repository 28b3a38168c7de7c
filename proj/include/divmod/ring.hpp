#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "divmod/monomial.hpp"
#include "divmod/scalar.hpp"

namespace divmod {

enum class OrderKind { grevlex, lex, block };

// Monomial order: total-degree reverse lex, pure lex, or a two-block
// elimination order (first `block_size` variables eliminated, grevlex
// within each block).
struct OrderSpec {
    OrderKind kind = OrderKind::grevlex;
    std::size_t block_size = 0;

    bool operator==(const OrderSpec&) const = default;
};

class Ring {
public:
    Ring(Field field, std::vector<std::string> vars, OrderSpec order);

    static std::shared_ptr<const Ring> make(Field field, std::vector<std::string> vars,
                                            OrderSpec order = {});

    const Field& field() const { return field_; }
    std::size_t nvars() const { return vars_.size(); }
    const std::vector<std::string>& vars() const { return vars_; }
    const std::string& var(std::size_t i) const { return vars_[i]; }
    std::optional<std::size_t> var_index(const std::string& name) const;
    const OrderSpec& order() const { return order_; }

    // +1 if a > b, -1 if a < b, 0 if equal.
    int compare(const Monomial& a, const Monomial& b) const;

    bool same_vars(const Ring& o) const { return vars_ == o.vars_ && field_ == o.field_; }

private:
    Field field_;
    std::vector<std::string> vars_;
    OrderSpec order_;
};

using RingPtr = std::shared_ptr<const Ring>;

bool valid_identifier(const std::string& s);

}  // namespace divmod
