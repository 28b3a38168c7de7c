#include "divmod/parser.hpp"

#include <cctype>

namespace divmod {

namespace {

class Parser {
public:
    Parser(const std::string& text, RingPtr ring) : text_(text), ring_(std::move(ring)) {}

    Polynomial run() {
        Polynomial p = expr();
        skip_ws();
        if (pos_ < text_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool consume(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Polynomial expr() {
        bool neg = false;
        if (consume('-'))
            neg = true;
        else
            consume('+');
        Polynomial acc = term();
        if (neg) acc = -acc;
        while (true) {
            if (consume('+'))
                acc = acc + term();
            else if (consume('-'))
                acc = acc - term();
            else
                break;
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (consume('*')) acc = acc * factor();
        return acc;
    }

    Polynomial factor() {
        Polynomial b = base();
        if (consume('^')) {
            std::uint64_t e = number();
            if (e > 100000) fail("exponent too large");
            Polynomial acc = Polynomial::from_integer(1, ring_);
            for (std::uint64_t i = 0; i < e; ++i) acc = acc * b;
            return acc;
        }
        return b;
    }

    Polynomial base() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Polynomial p = expr();
            if (!consume(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = digits();
            if (consume('/')) {
                skip_ws();
                if (!std::isdigit(static_cast<unsigned char>(
                        pos_ < text_.size() ? text_[pos_] : '\0')))
                    fail("expected denominator");
                std::string den = digits();
                return fraction(num, den);
            }
            return fraction(num, "1");
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            std::string name;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                name += text_[pos_++];
            auto idx = ring_->var_index(name);
            if (!idx) throw ParseError("unknown variable: " + name, start);
            return Polynomial::variable(*idx, ring_);
        }
        if (c == '\0') fail("unexpected end of input");
        fail(std::string("unexpected character '") + c + "'");
    }

    std::uint64_t number() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected number");
        std::string d = digits();
        if (d.size() > 9) fail("number too large");
        return std::stoull(d);
    }

    std::string digits() {
        std::string d;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            d += text_[pos_++];
        return d;
    }

    Polynomial fraction(const std::string& num, const std::string& den) {
        const Field& f = ring_->field();
        if (f.is_rational()) {
            mpz_class d(den);
            if (d == 0) fail("zero denominator");
            mpq_class q(mpz_class(num), d);
            return Polynomial::constant(Scalar::rational(q), ring_);
        }
        auto to_residue = [&](const std::string& s) {
            std::uint64_t r = 0;
            for (char ch : s) r = (r * 10 + static_cast<std::uint64_t>(ch - '0')) % f.p;
            return Scalar::residue(r, f.p);
        };
        Scalar n = to_residue(num);
        Scalar d = to_residue(den);
        if (d.is_zero()) fail("zero denominator");
        return Polynomial::constant(n / d, ring_);
    }

    const std::string& text_;
    RingPtr ring_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, RingPtr ring) {
    return Parser(text, std::move(ring)).run();
}

}  // namespace divmod
