#include <cctype>

#include "conjucode/binpoly.hpp"
#include "conjucode/errors.hpp"

namespace conjucode {

std::string to_binary_string(const BinPoly& p) {
    if (p.is_zero()) return "0";
    std::string s(static_cast<std::size_t>(p.degree()) + 1, '0');
    for (std::size_t i = 0; i < s.size(); ++i)
        if (p.coeff(i)) s[i] = '1';
    return s;
}

std::string to_expanded_string(const BinPoly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (int i = 0; i <= p.degree(); ++i) {
        if (!p.coeff(static_cast<std::size_t>(i))) continue;
        if (!s.empty()) s += '+';
        if (i == 0)
            s += '1';
        else if (i == 1)
            s += 'x';
        else
            s += "x^" + std::to_string(i);
    }
    return s;
}

std::string to_factored_string(const Factorization& f) {
    if (f.empty()) return "1";
    std::string s;
    for (const auto& factor : f) {
        if (!s.empty()) s += '*';
        s += '(' + to_expanded_string(factor.poly) + ')';
        if (factor.multiplicity != 1) s += '^' + std::to_string(factor.multiplicity);
    }
    return s;
}

std::string to_factored_string(const BinPoly& p) {
    if (p.is_zero()) return "0";
    return to_factored_string(factor(p));
}

namespace {

class PolyParser {
   public:
    explicit PolyParser(std::string_view text) : text_(text) {}

    BinPoly parse() {
        skip_space();
        if (at_end()) fail("empty polynomial");
        BinPoly p = sum();
        skip_space();
        if (!at_end()) fail(std::string("unexpected character '") + text_[pos_] + "'");
        return p;
    }

   private:
    BinPoly sum() {
        BinPoly acc = product();
        for (skip_space(); peek() == '+'; skip_space()) {
            ++pos_;
            acc += product();
        }
        return acc;
    }

    BinPoly product() {
        BinPoly acc = power();
        for (;;) {
            skip_space();
            const char c = peek();
            if (c == '*') {
                ++pos_;
                acc *= power();
            } else if (c == '(' || c == 'x') {
                acc *= power();
            } else {
                return acc;
            }
        }
    }

    BinPoly power() {
        BinPoly base = atom();
        skip_space();
        if (peek() != '^') return base;
        ++pos_;
        skip_space();
        return poly_pow(base, integer());
    }

    BinPoly atom() {
        skip_space();
        const char c = peek();
        if (c == '(') {
            ++pos_;
            BinPoly inner = sum();
            skip_space();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (c == 'x') {
            ++pos_;
            return BinPoly::x();
        }
        if (c == '0' || c == '1') {
            ++pos_;
            return c == '1' ? BinPoly::one() : BinPoly{};
        }
        if (at_end()) fail("unexpected end of polynomial");
        fail(std::string("unexpected character '") + c + "'");
    }

    std::size_t integer() {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
        std::size_t value = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            value = value * 10 + static_cast<std::size_t>(text_[pos_++] - '0');
            if (value > 100000) fail("exponent too large");
        }
        return value;
    }

    char peek() const { return at_end() ? '\0' : text_[pos_]; }
    bool at_end() const { return pos_ >= text_.size(); }
    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

BinPoly parse_poly(std::string_view text) {
    const bool coefficient_string =
        !text.empty() && text.find_first_not_of("01") == std::string_view::npos;
    if (coefficient_string) return BinPoly::from_bits(BitVector::from_string(text));
    return PolyParser(text).parse();
}

}  // namespace conjucode
