#include "divmod/ring.hpp"

#include <cctype>
#include <set>

namespace divmod {

bool valid_identifier(const std::string& s) {
    if (s.empty()) return false;
    if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    return true;
}

Ring::Ring(Field field, std::vector<std::string> vars, OrderSpec order)
    : field_(field), vars_(std::move(vars)), order_(order) {
    if (!field_.is_rational() && !is_prime(field_.p))
        throw MathError("coefficient field modulus must be prime");
    if (vars_.empty()) throw MathError("ring needs at least one variable");
    std::set<std::string> seen;
    for (const auto& v : vars_) {
        if (!valid_identifier(v)) throw MathError("invalid variable name: " + v);
        if (!seen.insert(v).second) throw MathError("duplicate variable name: " + v);
    }
    if (order_.kind == OrderKind::block &&
        (order_.block_size == 0 || order_.block_size >= vars_.size()))
        throw MathError("block order needs 0 < block_size < number of variables");
}

std::shared_ptr<const Ring> Ring::make(Field field, std::vector<std::string> vars,
                                       OrderSpec order) {
    return std::make_shared<const Ring>(field, std::move(vars), order);
}

std::optional<std::size_t> Ring::var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return i;
    return std::nullopt;
}

namespace {

// grevlex on the index range [lo, hi): higher degree wins; on ties the
// monomial with the smaller exponent at the last differing index wins.
int grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
    std::uint64_t da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
        da += a.exp(i);
        db += b.exp(i);
    }
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = hi; i-- > lo;) {
        if (a.exp(i) != b.exp(i)) return a.exp(i) < b.exp(i) ? 1 : -1;
    }
    return 0;
}

int lex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i)
        if (a.exp(i) != b.exp(i)) return a.exp(i) > b.exp(i) ? 1 : -1;
    return 0;
}

}  // namespace

int Ring::compare(const Monomial& a, const Monomial& b) const {
    if (a.nvars() != nvars() || b.nvars() != nvars())
        throw InternalError("monomial arity does not match ring");
    switch (order_.kind) {
        case OrderKind::grevlex:
            return grevlex_range(a, b, 0, nvars());
        case OrderKind::lex:
            return lex_range(a, b, 0, nvars());
        case OrderKind::block: {
            int c = grevlex_range(a, b, 0, order_.block_size);
            if (c != 0) return c;
            return grevlex_range(a, b, order_.block_size, nvars());
        }
    }
    throw InternalError("unknown monomial order");
}

}  // namespace divmod
