#ifndef CONJUCODE_BITVECTOR_HPP
#define CONJUCODE_BITVECTOR_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace conjucode {

/// Fixed-length vector over GF(2), packed 64 bits per word.
/// Bits past size() are always zero.
class BitVector {
   public:
    static constexpr std::size_t kWordBits = 64;

    BitVector() = default;
    explicit BitVector(std::size_t size) : size_(size), words_(word_count(size), 0) {}

    /// Parses a string of '0'/'1' characters, index 0 first.
    static BitVector from_string(std::string_view bits);

    std::size_t size() const noexcept { return size_; }
    bool empty() const noexcept { return size_ == 0; }

    bool get(std::size_t i) const noexcept { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
    void set(std::size_t i, bool value = true) noexcept {
        const std::uint64_t mask = std::uint64_t{1} << (i % kWordBits);
        if (value)
            words_[i / kWordBits] |= mask;
        else
            words_[i / kWordBits] &= ~mask;
    }
    void flip(std::size_t i) noexcept { words_[i / kWordBits] ^= std::uint64_t{1} << (i % kWordBits); }

    std::size_t weight() const noexcept;
    bool is_zero() const noexcept;

    /// Standard dot product over GF(2).
    bool dot(const BitVector& other) const;

    BitVector& operator^=(const BitVector& other);
    friend BitVector operator^(BitVector lhs, const BitVector& rhs) {
        lhs ^= rhs;
        return lhs;
    }
    bool operator==(const BitVector& other) const = default;

    /// Cyclic right shift by k: (v_{n-1}, v_0, ..., v_{n-2}) for k = 1.
    BitVector cyclic_shift(std::size_t k = 1) const;

    /// Bits [first, first + count) as a new vector.
    BitVector slice(std::size_t first, std::size_t count) const;

    std::span<const std::uint64_t> words() const noexcept { return words_; }
    std::span<std::uint64_t> words() noexcept { return words_; }

    std::string to_string() const;

    static std::size_t word_count(std::size_t bits) noexcept { return (bits + kWordBits - 1) / kWordBits; }

   private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace conjucode

#endif  // CONJUCODE_BITVECTOR_HPP
