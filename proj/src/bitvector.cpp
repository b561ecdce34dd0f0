#include "conjucode/bitvector.hpp"

#include <bit>
#include <stdexcept>

#include "conjucode/errors.hpp"

namespace conjucode {

BitVector BitVector::from_string(std::string_view bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1')
            v.set(i);
        else if (bits[i] != '0')
            throw ParseError("expected '0' or '1'", i);
    }
    return v;
}

std::size_t BitVector::weight() const noexcept {
    std::size_t w = 0;
    for (auto word : words_) w += static_cast<std::size_t>(std::popcount(word));
    return w;
}

bool BitVector::is_zero() const noexcept {
    for (auto word : words_)
        if (word != 0) return false;
    return true;
}

bool BitVector::dot(const BitVector& other) const {
    if (other.size_ != size_) throw std::invalid_argument("BitVector::dot: length mismatch");
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & other.words_[i];
    return std::popcount(acc) & 1;
}

BitVector& BitVector::operator^=(const BitVector& other) {
    if (other.size_ != size_) throw std::invalid_argument("BitVector xor: length mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
    return *this;
}

BitVector BitVector::cyclic_shift(std::size_t k) const {
    BitVector out(size_);
    if (size_ == 0) return out;
    k %= size_;
    for (std::size_t i = 0; i < size_; ++i)
        if (get(i)) out.set((i + k) % size_);
    return out;
}

BitVector BitVector::slice(std::size_t first, std::size_t count) const {
    if (first + count > size_) throw std::out_of_range("BitVector::slice out of range");
    BitVector out(count);
    for (std::size_t i = 0; i < count; ++i)
        if (get(first + i)) out.set(i);
    return out;
}

std::string BitVector::to_string() const {
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

}  // namespace conjucode
