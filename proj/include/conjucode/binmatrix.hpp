#ifndef CONJUCODE_BINMATRIX_HPP
#define CONJUCODE_BINMATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "conjucode/bitvector.hpp"

namespace conjucode {

/// Dense matrix over GF(2), stored as bit-packed rows.
class BinMatrix {
   public:
    BinMatrix() = default;
    BinMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

    static BinMatrix identity(std::size_t n);
    /// All rows must share one length; `cols` fixes the width for an empty list.
    static BinMatrix from_rows(std::vector<BitVector> rows, std::size_t cols);
    static BinMatrix from_rows(std::vector<BitVector> rows);
    /// {"110", "011"}.
    static BinMatrix from_strings(std::initializer_list<std::string_view> rows);

    std::size_t rows() const noexcept { return rows_.size(); }
    std::size_t cols() const noexcept { return cols_; }
    bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool value = true) { rows_[r].set(c, value); }

    const BitVector& row(std::size_t r) const { return rows_[r]; }
    BitVector& row(std::size_t r) { return rows_[r]; }
    const std::vector<BitVector>& row_vectors() const& noexcept { return rows_; }
    /// By value on temporaries, so range-for over make_matrix().row_vectors() is safe.
    std::vector<BitVector> row_vectors() && noexcept { return std::move(rows_); }
    void append_row(BitVector row);

    BinMatrix transpose() const;
    bool is_zero() const noexcept;

    bool operator==(const BinMatrix&) const = default;

    /// One string per row, '\n'-separated.
    std::string to_string() const;

   private:
    std::size_t cols_ = 0;
    std::vector<BitVector> rows_;
};

/// A * B. Throws std::invalid_argument on a shape mismatch.
BinMatrix multiply(const BinMatrix& a, const BinMatrix& b);
/// A * B^T, computed from row dot products.
BinMatrix multiply_transposed(const BinMatrix& a, const BinMatrix& b);

struct RowEchelon {
    BinMatrix reduced;               ///< reduced row echelon form, zero rows kept at the bottom
    std::vector<std::size_t> pivots; ///< pivot column of each nonzero row
};

RowEchelon rref(const BinMatrix& m);
std::size_t mat_rank(const BinMatrix& m);
/// Basis of {v : M v^T = 0}, one vector per row; cols(M) - rank(M) rows.
BinMatrix mat_nullspace(const BinMatrix& m);
/// Throws std::invalid_argument unless square. det of the 0x0 matrix is 1.
bool mat_det(const BinMatrix& m);
/// The nonzero rows of rref(m).
BinMatrix row_basis(const BinMatrix& m);
bool same_row_space(const BinMatrix& a, const BinMatrix& b);
bool in_row_space(const BinMatrix& m, const BitVector& v);

}  // namespace conjucode

#endif  // CONJUCODE_BINMATRIX_HPP
