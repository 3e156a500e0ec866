#include "appell_expr.hpp"

#include <cctype>
#include <optional>
#include <variant>

#include "pqappell/families.hpp"

namespace pqa::cli {

namespace {

using Value = std::variant<Rational, AppellSequence>;

class Parser {
public:
    Parser(std::string_view src, const ContextPtr& ctx, std::size_t order) : src_(src), ctx_(ctx), order_(order) {}

    AppellSequence run() {
        Value v = expr();
        skip_ws();
        if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
        if (auto* seq = std::get_if<AppellSequence>(&v)) return *seq;
        fail("expression evaluates to a scalar, not a sequence");
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ExprError("appell expression, column " + std::to_string(pos_ + 1) + ": " + what);
    }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::string word() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
            ++pos_;
        }
        return std::string(src_.substr(start, pos_ - start));
    }

    std::string digits() {
        std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        return std::string(src_.substr(start, pos_ - start));
    }

    Value expr() {
        Value acc = term();
        while (accept('+')) {
            Value rhs = term();
            auto* a = std::get_if<AppellSequence>(&acc);
            auto* b = std::get_if<AppellSequence>(&rhs);
            if (a && b) {
                acc = add(*a, *b);
            } else if (!a && !b) {
                acc = std::get<Rational>(acc) + std::get<Rational>(rhs);
            } else {
                fail("cannot add a scalar and a sequence");
            }
        }
        return acc;
    }

    Value term() {
        Value acc = power_expr();
        while (accept('*')) {
            Value rhs = power_expr();
            auto* a = std::get_if<AppellSequence>(&acc);
            auto* b = std::get_if<AppellSequence>(&rhs);
            if (a && b) {
                acc = convolve(*a, *b);
            } else if (a) {
                acc = scalar_mul(std::get<Rational>(rhs), *a);
            } else if (b) {
                acc = scalar_mul(std::get<Rational>(acc), *b);
            } else {
                acc = std::get<Rational>(acc) * std::get<Rational>(rhs);
            }
        }
        return acc;
    }

    Value power_expr() {
        Value base = unary();
        if (!accept('^')) return base;
        skip_ws();
        bool negative = accept('-');
        skip_ws();
        std::string d = digits();
        if (d.empty()) fail("expected an integer exponent after '^'");
        long k = std::stol(d);
        if (negative) k = -k;
        if (auto* seq = std::get_if<AppellSequence>(&base)) return power(*seq, k);
        return std::get<Rational>(base).pow(k);
    }

    Value unary() {
        skip_ws();
        if (pos_ >= src_.size()) fail("unexpected end of expression");
        const char c = src_[pos_];
        if (c == '(') {
            ++pos_;
            Value v = expr();
            if (!accept(')')) fail("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') return scalar();
        const std::size_t mark = pos_;
        const std::string name = word();
        if (name.empty()) fail("unexpected '" + std::string(1, c) + "'");
        if (name == "inv") {
            Value v = unary();
            if (auto* seq = std::get_if<AppellSequence>(&v)) return inverse(*seq);
            return std::get<Rational>(v).inverse();
        }
        if (name == "identity" || name == "I") return identity_sequence(ctx_, order_);
        if (auto kind = parse_family(name)) return family_sequence(*kind, ctx_, order_);
        pos_ = mark;
        fail("unknown name '" + name + "'");
    }

    Value scalar() {
        const std::size_t start = pos_;
        std::string text;
        if (src_[pos_] == '-') {
            text = "-";
            ++pos_;
        }
        text += digits();
        if (pos_ < src_.size() && src_[pos_] == '/') {
            ++pos_;
            text += "/" + digits();
        }
        try {
            return Rational::parse(text);
        } catch (const std::exception&) {
            pos_ = start;
            fail("malformed rational '" + text + "'");
        }
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    const ContextPtr& ctx_;
    std::size_t order_;
};

}  // namespace

AppellSequence evaluate_appell_expr(std::string_view expr, const ContextPtr& ctx, std::size_t order) {
    return Parser(expr, ctx, order).run();
}

}  // namespace pqa::cli
