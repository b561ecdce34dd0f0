#include "conjucode/binpoly.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace conjucode {

namespace {

constexpr std::size_t kBits = 64;

// words ^= other << shift, growing words as needed.
void xor_shifted(std::vector<std::uint64_t>& words, std::span<const std::uint64_t> other, std::size_t shift) {
    if (other.empty()) return;
    const std::size_t word_shift = shift / kBits;
    const std::size_t bit_shift = shift % kBits;
    const std::size_t needed = other.size() + word_shift + (bit_shift ? 1 : 0);
    if (words.size() < needed) words.resize(needed, 0);
    for (std::size_t i = 0; i < other.size(); ++i) {
        words[i + word_shift] ^= other[i] << bit_shift;
        if (bit_shift) words[i + word_shift + 1] ^= other[i] >> (kBits - bit_shift);
    }
}

int degree_of(std::span<const std::uint64_t> words) {
    for (std::size_t i = words.size(); i-- > 0;)
        if (words[i]) return static_cast<int>(i * kBits + (kBits - 1 - std::countl_zero(words[i])));
    return BinPoly::kZeroDegree;
}

}  // namespace

BinPoly BinPoly::monomial(std::size_t exponent) {
    BinPoly p;
    p.set_coeff(exponent, true);
    return p;
}

BinPoly BinPoly::x_n_plus_1(std::size_t n) {
    BinPoly p = monomial(n);
    p += one();
    return p;
}

BinPoly BinPoly::from_exponents(std::initializer_list<std::size_t> exponents) {
    return from_exponents(std::span<const std::size_t>(exponents.begin(), exponents.size()));
}

BinPoly BinPoly::from_exponents(std::span<const std::size_t> exponents) {
    BinPoly p;
    for (auto e : exponents) p.set_coeff(e, !p.coeff(e));
    return p;
}

BinPoly BinPoly::from_bits(const BitVector& bits) {
    BinPoly p;
    auto w = bits.words();
    p.words_.assign(w.begin(), w.end());
    p.normalize();
    return p;
}

BinPoly BinPoly::from_words(std::span<const std::uint64_t> words) {
    BinPoly p;
    p.words_.assign(words.begin(), words.end());
    p.normalize();
    return p;
}

BinPoly BinPoly::from_uint(std::uint64_t bits) {
    BinPoly p;
    p.words_.push_back(bits);
    p.normalize();
    return p;
}

int BinPoly::degree() const noexcept { return degree_of(words_); }

bool BinPoly::coeff(std::size_t i) const noexcept {
    const std::size_t w = i / kBits;
    return w < words_.size() && ((words_[w] >> (i % kBits)) & 1U);
}

void BinPoly::set_coeff(std::size_t i, bool value) {
    const std::size_t w = i / kBits;
    if (value) {
        if (words_.size() <= w) words_.resize(w + 1, 0);
        words_[w] |= std::uint64_t{1} << (i % kBits);
    } else if (w < words_.size()) {
        words_[w] &= ~(std::uint64_t{1} << (i % kBits));
        normalize();
    }
}

std::size_t BinPoly::weight() const noexcept {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

BitVector BinPoly::to_bits(std::size_t length) const {
    if (degree() >= static_cast<int>(length))
        throw std::invalid_argument("BinPoly::to_bits: degree " + std::to_string(degree()) +
                                    " does not fit length " + std::to_string(length));
    BitVector v(length);
    auto out = v.words();
    std::copy(words_.begin(), words_.end(), out.begin());
    return v;
}

BinPoly& BinPoly::operator+=(const BinPoly& rhs) {
    if (words_.size() < rhs.words_.size()) words_.resize(rhs.words_.size(), 0);
    for (std::size_t i = 0; i < rhs.words_.size(); ++i) words_[i] ^= rhs.words_[i];
    normalize();
    return *this;
}

BinPoly operator*(const BinPoly& lhs, const BinPoly& rhs) {
    BinPoly out;
    if (lhs.is_zero() || rhs.is_zero()) return out;
    const int d = rhs.degree();
    for (int i = 0; i <= d; ++i)
        if (rhs.coeff(static_cast<std::size_t>(i))) xor_shifted(out.words_, lhs.words_, static_cast<std::size_t>(i));
    out.normalize();
    return out;
}

BinPoly BinPoly::shifted(std::size_t k) const {
    BinPoly out;
    xor_shifted(out.words_, words_, k);
    out.normalize();
    return out;
}

std::strong_ordering BinPoly::operator<=>(const BinPoly& rhs) const noexcept {
    if (auto c = degree() <=> rhs.degree(); c != 0) return c;
    for (std::size_t i = words_.size(); i-- > 0;)
        if (auto c = words_[i] <=> rhs.words_[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

void BinPoly::normalize() noexcept {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

DivMod poly_divmod(const BinPoly& num, const BinPoly& den) {
    if (den.is_zero()) throw std::domain_error("polynomial division by zero");
    const int dd = den.degree();
    std::vector<std::uint64_t> rem(num.words().begin(), num.words().end());
    BinPoly quotient;
    for (int dr = degree_of(rem); dr >= dd; dr = degree_of(rem)) {
        const auto shift = static_cast<std::size_t>(dr - dd);
        quotient.set_coeff(shift, true);
        xor_shifted(rem, den.words(), shift);
    }
    return {std::move(quotient), BinPoly::from_words(rem)};
}

BinPoly operator/(const BinPoly& num, const BinPoly& den) { return poly_divmod(num, den).quotient; }

BinPoly operator%(const BinPoly& num, const BinPoly& den) { return poly_divmod(num, den).remainder; }

bool divides(const BinPoly& divisor, const BinPoly& p) { return (p % divisor).is_zero(); }

BinPoly poly_gcd(const BinPoly& p, const BinPoly& q) {
    if (p.is_zero() && q.is_zero()) throw std::invalid_argument("gcd(0, 0) is undefined");
    BinPoly a = p, b = q;
    while (!b.is_zero()) {
        BinPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

BinPoly poly_lcm(const BinPoly& p, const BinPoly& q) {
    if (p.is_zero() || q.is_zero()) throw std::invalid_argument("lcm with the zero polynomial");
    return (p / poly_gcd(p, q)) * q;
}

BinPoly poly_reciprocal(const BinPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("reciprocal of the zero polynomial");
    const auto d = static_cast<std::size_t>(p.degree());
    BinPoly out;
    for (std::size_t i = 0; i <= d; ++i)
        if (p.coeff(i)) out.set_coeff(d - i, true);
    return out;
}

BinPoly poly_derivative(const BinPoly& p) {
    BinPoly out;
    for (int i = 1; i <= p.degree(); i += 2)
        if (p.coeff(static_cast<std::size_t>(i))) out.set_coeff(static_cast<std::size_t>(i - 1), true);
    return out;
}

BinPoly poly_pow(const BinPoly& p, std::size_t e) {
    BinPoly result = BinPoly::one();
    BinPoly base = p;
    while (e) {
        if (e & 1U) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

BinPoly poly_mulmod(const BinPoly& a, const BinPoly& b, const BinPoly& m) { return (a * b) % m; }

}  // namespace conjucode
