#include "conjucode/binmatrix.hpp"

#include <stdexcept>
#include <utility>

namespace conjucode {

BinMatrix BinMatrix::identity(std::size_t n) {
    BinMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
}

BinMatrix BinMatrix::from_rows(std::vector<BitVector> rows, std::size_t cols) {
    for (const auto& r : rows)
        if (r.size() != cols) throw std::invalid_argument("BinMatrix::from_rows: ragged rows");
    BinMatrix m;
    m.cols_ = cols;
    m.rows_ = std::move(rows);
    return m;
}

BinMatrix BinMatrix::from_rows(std::vector<BitVector> rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    return from_rows(std::move(rows), cols);
}

BinMatrix BinMatrix::from_strings(std::initializer_list<std::string_view> rows) {
    std::vector<BitVector> v;
    for (auto s : rows) v.push_back(BitVector::from_string(s));
    return from_rows(std::move(v));
}

void BinMatrix::append_row(BitVector row) {
    if (rows_.empty() && cols_ == 0) cols_ = row.size();
    if (row.size() != cols_) throw std::invalid_argument("BinMatrix::append_row: width mismatch");
    rows_.push_back(std::move(row));
}

BinMatrix BinMatrix::transpose() const {
    BinMatrix t(cols_, rows());
    for (std::size_t r = 0; r < rows(); ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (get(r, c)) t.set(c, r);
    return t;
}

bool BinMatrix::is_zero() const noexcept {
    for (const auto& r : rows_)
        if (!r.is_zero()) return false;
    return true;
}

std::string BinMatrix::to_string() const {
    std::string s;
    for (std::size_t r = 0; r < rows(); ++r) {
        if (r) s += '\n';
        s += rows_[r].to_string();
    }
    return s;
}

BinMatrix multiply(const BinMatrix& a, const BinMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("multiply: inner dimensions differ");
    BinMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            if (a.get(i, k)) out.row(i) ^= b.row(k);
    return out;
}

BinMatrix multiply_transposed(const BinMatrix& a, const BinMatrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("multiply_transposed: column counts differ");
    BinMatrix out(a.rows(), b.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.rows(); ++j)
            if (a.row(i).dot(b.row(j))) out.set(i, j);
    return out;
}

RowEchelon rref(const BinMatrix& m) {
    RowEchelon e{m, {}};
    BinMatrix& a = e.reduced;
    std::size_t lead = 0;
    for (std::size_t c = 0; c < a.cols() && lead < a.rows(); ++c) {
        std::size_t p = lead;
        while (p < a.rows() && !a.get(p, c)) ++p;
        if (p == a.rows()) continue;
        std::swap(a.row(p), a.row(lead));
        for (std::size_t r = 0; r < a.rows(); ++r)
            if (r != lead && a.get(r, c)) a.row(r) ^= a.row(lead);
        e.pivots.push_back(c);
        ++lead;
    }
    return e;
}

std::size_t mat_rank(const BinMatrix& m) { return rref(m).pivots.size(); }

BinMatrix mat_nullspace(const BinMatrix& m) {
    const auto e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : e.pivots) is_pivot[c] = true;
    BinMatrix out(0, m.cols());
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        BitVector v(m.cols());
        v.set(free);
        for (std::size_t r = 0; r < e.pivots.size(); ++r)
            if (e.reduced.get(r, free)) v.set(e.pivots[r]);
        out.append_row(std::move(v));
    }
    return out;
}

bool mat_det(const BinMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("mat_det: matrix is not square");
    return mat_rank(m) == m.rows();
}

BinMatrix row_basis(const BinMatrix& m) {
    auto e = rref(m);
    std::vector<BitVector> rows(e.reduced.row_vectors().begin(),
                                e.reduced.row_vectors().begin() + static_cast<std::ptrdiff_t>(e.pivots.size()));
    return BinMatrix::from_rows(std::move(rows), m.cols());
}

bool same_row_space(const BinMatrix& a, const BinMatrix& b) {
    if (a.cols() != b.cols()) return false;
    return row_basis(a) == row_basis(b);
}

bool in_row_space(const BinMatrix& m, const BitVector& v) {
    BinMatrix stacked = m;
    stacked.append_row(v);
    return mat_rank(stacked) == mat_rank(m);
}

}  // namespace conjucode
