#ifndef CONJUCODE_BINPOLY_HPP
#define CONJUCODE_BINPOLY_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "conjucode/bitvector.hpp"

namespace conjucode {

/// Polynomial over GF(2), ascending coefficients packed 64 per word.
///
/// The representation is canonical: the highest stored word is nonzero, and
/// the zero polynomial holds no words at all. Every nonzero polynomial over
/// GF(2) is monic, so gcd and lcm need no normalisation.
class BinPoly {
   public:
    /// deg(0); compares below every real degree.
    static constexpr int kZeroDegree = -1;

    BinPoly() = default;

    static BinPoly one() { return monomial(0); }
    static BinPoly x() { return monomial(1); }
    static BinPoly monomial(std::size_t exponent);
    /// x^n + 1.
    static BinPoly x_n_plus_1(std::size_t n);
    /// Sum of x^e for each listed exponent (repeats cancel).
    static BinPoly from_exponents(std::initializer_list<std::size_t> exponents);
    static BinPoly from_exponents(std::span<const std::size_t> exponents);
    /// Coefficient i is bit i of the vector.
    static BinPoly from_bits(const BitVector& bits);
    /// Low 64 coefficients from an integer, bit i = coefficient of x^i.
    static BinPoly from_uint(std::uint64_t bits);
    static BinPoly from_words(std::span<const std::uint64_t> words);

    int degree() const noexcept;
    bool is_zero() const noexcept { return words_.empty(); }
    bool is_one() const noexcept { return words_.size() == 1 && words_[0] == 1; }
    bool coeff(std::size_t i) const noexcept;
    void set_coeff(std::size_t i, bool value);
    std::size_t weight() const noexcept;

    /// Coefficient vector padded to `length`; throws if degree >= length.
    BitVector to_bits(std::size_t length) const;

    BinPoly& operator+=(const BinPoly& rhs);
    BinPoly& operator*=(const BinPoly& rhs) { return *this = *this * rhs; }
    friend BinPoly operator+(BinPoly lhs, const BinPoly& rhs) {
        lhs += rhs;
        return lhs;
    }
    friend BinPoly operator*(const BinPoly& lhs, const BinPoly& rhs);
    /// Multiplication by x^k.
    BinPoly shifted(std::size_t k) const;

    bool operator==(const BinPoly& rhs) const = default;
    /// Total order: by degree, then by coefficients from the top down.
    std::strong_ordering operator<=>(const BinPoly& rhs) const noexcept;

    std::span<const std::uint64_t> words() const noexcept { return words_; }

   private:
    void normalize() noexcept;
    std::vector<std::uint64_t> words_;
};

struct DivMod {
    BinPoly quotient;
    BinPoly remainder;
};

/// num = q * den + r with deg r < deg den. Throws std::domain_error if den = 0.
DivMod poly_divmod(const BinPoly& num, const BinPoly& den);
BinPoly operator/(const BinPoly& num, const BinPoly& den);
BinPoly operator%(const BinPoly& num, const BinPoly& den);
bool divides(const BinPoly& divisor, const BinPoly& p);

/// Throws std::invalid_argument when both arguments are zero.
BinPoly poly_gcd(const BinPoly& p, const BinPoly& q);
/// Throws std::invalid_argument on a zero argument.
BinPoly poly_lcm(const BinPoly& p, const BinPoly& q);
/// x^{deg p} p(1/x). Throws std::invalid_argument on zero.
BinPoly poly_reciprocal(const BinPoly& p);
BinPoly poly_derivative(const BinPoly& p);
BinPoly poly_pow(const BinPoly& p, std::size_t e);
BinPoly poly_mulmod(const BinPoly& a, const BinPoly& b, const BinPoly& m);

// ---------------------------------------------------------------------------
// Factorisation

struct Factor {
    BinPoly poly;
    unsigned multiplicity = 1;

    bool operator==(const Factor&) const = default;
};

/// Irreducible factors, sorted by the BinPoly order.
using Factorization = std::vector<Factor>;

/// Complete factorisation of a nonzero polynomial into irreducibles.
Factorization factor(const BinPoly& p);
bool is_irreducible(const BinPoly& p);
BinPoly expand(const Factorization& f);

/// Factorisation of x^n + 1, n >= 1. Results are cached per n.
const Factorization& factor_xn_plus_1(std::size_t n);

/// Upper bound on the number of divisors any enumeration may produce.
inline constexpr std::size_t kMaxDivisors = 1'000'000;

/// prod (e_i + 1).
std::size_t divisor_count(const Factorization& f);

/// Calls `visit` once for every monic divisor of expand(f), in a fixed order.
void for_each_divisor(const Factorization& f, const std::function<void(const BinPoly&)>& visit);

/// Every divisor of x^n + 1 exactly once. Throws BoundExceeded beyond kMaxDivisors.
std::vector<BinPoly> divisors_of_xn_plus_1(std::size_t n);

// ---------------------------------------------------------------------------
// Text forms

/// Ascending coefficient string, e.g. "111001" for 1+x+x^2+x^5; "0" for zero.
std::string to_binary_string(const BinPoly& p);
/// "1+x+x^3"; "0" for zero.
std::string to_expanded_string(const BinPoly& p);
/// "(1+x)^2*(1+x+x^3)"; "1" for the empty product.
std::string to_factored_string(const Factorization& f);
std::string to_factored_string(const BinPoly& p);

/// Accepts a coefficient string of 0/1 digits, or an expression built from
/// sums of monomials, parenthesised factors, '^' powers and '*' products.
/// Throws ParseError.
BinPoly parse_poly(std::string_view text);

}  // namespace conjucode

#endif  // CONJUCODE_BINPOLY_HPP
