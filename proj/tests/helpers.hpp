#ifndef CONJUCODE_TESTS_HELPERS_HPP
#define CONJUCODE_TESTS_HELPERS_HPP

#include <cstdint>
#include <ostream>
#include <random>

#include "conjucode/acc.hpp"
#include "conjucode/binmatrix.hpp"
#include "conjucode/binpoly.hpp"
#include "conjucode/f4.hpp"
#include "oracles.hpp"

// Readable gtest failure output.
namespace conjucode {
inline void PrintTo(const BinPoly& p, std::ostream* os) { *os << to_expanded_string(p); }
inline void PrintTo(const BitVector& v, std::ostream* os) { *os << v.to_string(); }
inline void PrintTo(const BinMatrix& m, std::ostream* os) { *os << "\n" << m.to_string(); }
inline void PrintTo(const F4& x, std::ostream* os) { *os << f4_symbol(x); }
}  // namespace conjucode

namespace testutil {

using namespace conjucode;

inline BinPoly P(std::string_view s) { return parse_poly(s); }

inline oracle::Poly mask(const BinPoly& p) { return p.is_zero() ? 0 : p.words()[0]; }

inline BitVector random_bits(std::size_t n, std::mt19937_64& rng) {
    BitVector v(n);
    for (std::size_t i = 0; i < n; ++i) v.set(i, rng() & 1U);
    return v;
}

inline F4Vector random_f4(std::size_t n, std::mt19937_64& rng) {
    F4Vector v(n);
    for (auto& x : v) x = F4::from_code(static_cast<unsigned>(rng() & 3U));
    return v;
}

inline BinMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    BinMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) m.row(r) = random_bits(cols, rng);
    return m;
}

inline std::uint64_t row_mask(const BitVector& v) { return v.words().empty() ? 0 : v.words()[0]; }

/// F4 vector of length <= 16 packed for the oracle.
inline oracle::Vec4 pack(const F4Vector& v) {
    oracle::Vec4 out = 0;
    for (std::size_t i = 0; i < v.size(); ++i) out |= static_cast<oracle::Vec4>(v[i].code()) << (2 * i);
    return out;
}

inline F4Vector unpack(oracle::Vec4 x, std::size_t n) {
    F4Vector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = F4::from_code(oracle::entry(x, static_cast<int>(i)));
    return v;
}

}  // namespace testutil

#endif  // CONJUCODE_TESTS_HELPERS_HPP
