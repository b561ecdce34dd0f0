#ifndef CONJUCODE_F4_HPP
#define CONJUCODE_F4_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace conjucode {

/// Element a + b*w of GF(4), w^2 = w + 1. Stored as bits: bit 0 = a, bit 1 = b,
/// so 0, 1, w, w^2 have codes 0, 1, 2, 3.
class F4 {
   public:
    constexpr F4() = default;
    constexpr F4(bool a, bool b) : code_(static_cast<std::uint8_t>((a ? 1 : 0) | (b ? 2 : 0))) {}

    static constexpr F4 from_code(unsigned code) { return F4((code & 1U) != 0, (code & 2U) != 0); }
    static constexpr F4 zero() { return F4(); }
    static constexpr F4 one() { return F4(true, false); }
    static constexpr F4 w() { return F4(false, true); }
    static constexpr F4 w2() { return F4(true, true); }

    constexpr bool a() const { return code_ & 1U; }
    constexpr bool b() const { return (code_ >> 1) & 1U; }
    constexpr unsigned code() const { return code_; }
    constexpr bool is_zero() const { return code_ == 0; }

    constexpr F4& operator+=(F4 rhs) {
        code_ ^= rhs.code_;
        return *this;
    }
    friend constexpr F4 operator+(F4 x, F4 y) { return x += y; }
    friend constexpr F4 operator*(F4 x, F4 y) {
        // (a + bw)(c + dw) = (ac + bd) + (ad + bc + bd)w
        const bool a = x.a(), b = x.b(), c = y.a(), d = y.b();
        return F4((a && c) != (b && d), ((a && d) != (b && c)) != (b && d));
    }
    F4& operator*=(F4 rhs) { return *this = *this * rhs; }
    constexpr bool operator==(const F4&) const = default;

   private:
    std::uint8_t code_ = 0;
};

constexpr F4 f4_mul(F4 x, F4 y) { return x * y; }
/// x^2: fixes 0 and 1, swaps w and w^2.
constexpr F4 f4_conj(F4 x) { return F4(x.a() != x.b(), x.b()); }
/// x + conj(x), which is the w-coordinate.
constexpr bool f2_trace(F4 x) { return x.b(); }

/// Symbols 0, 1, w, W (W = w^2 = 1 + w).
char f4_symbol(F4 x);
/// Throws ParseError with the given position on an unknown symbol.
F4 f4_from_symbol(char c, std::size_t position = 0);

using F4Vector = std::vector<F4>;

/// Comma-separated symbols, e.g. "W,w,0". Whitespace around entries is ignored.
F4Vector parse_f4_vector(std::string_view text);
std::string format_f4_vector(const F4Vector& v);

}  // namespace conjucode

#endif  // CONJUCODE_F4_HPP
