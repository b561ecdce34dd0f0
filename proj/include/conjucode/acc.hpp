#ifndef CONJUCODE_ACC_HPP
#define CONJUCODE_ACC_HPP

#include <cstddef>
#include <vector>

#include "conjucode/binmatrix.hpp"
#include "conjucode/binpoly.hpp"
#include "conjucode/bitvector.hpp"
#include "conjucode/enumerate.hpp"
#include "conjucode/f4.hpp"

namespace conjucode {

// ---------------------------------------------------------------------------
// Vector maps between F2^{2n} and F4^n

/// Component i is u_i + (u_i + u_{n+i})w. Throws std::invalid_argument on odd length.
F4Vector psi(const BitVector& u);
/// Inverse of psi: c_i = a_i + b_i w maps to (a_0..a_{n-1}, a_0+b_0, ..., a_{n-1}+b_{n-1}).
BitVector phi_inv(const F4Vector& c);
/// T(c) = (conj(c_{n-1}), c_0, ..., c_{n-2}).
F4Vector conj_shift(const F4Vector& c, std::size_t times = 1);
/// Componentwise trace.
BitVector trace_vector(const F4Vector& c);
/// Tr(sum a_i b_i). Throws std::invalid_argument on a length mismatch.
bool trace_inner(const F4Vector& a, const F4Vector& b);
/// Symbol weights 0, 2, 1, 1 for 0, 1, w, w^2.
std::size_t gray_weight(const F4Vector& c);

// ---------------------------------------------------------------------------
// Matrices over F4

using F4Matrix = std::vector<F4Vector>;

F4Matrix f4_transpose(const F4Matrix& m, std::size_t cols);
/// Binary matrix Tr(A * B). A is m x p, B is p x q (`b_cols` = q fixes the
/// width when B has no rows). Throws std::invalid_argument on a shape mismatch.
BinMatrix trace_mat_mul(const F4Matrix& a, const F4Matrix& b, std::size_t b_cols);
BinMatrix trace_mat_mul(const F4Matrix& a, const F4Matrix& b);
/// A * E for a binary E.
F4Matrix f4_times_binary(const F4Matrix& a, const BinMatrix& e);
/// Entry (i, j) = <a_i, b_j>, i.e. A (.)Tr B^T.
BinMatrix trace_gram(const F4Matrix& a, const F4Matrix& b);

// ---------------------------------------------------------------------------
// Additive conjucyclic codes

/// F2-linear, T-invariant subspace of F4^n, stored as an independent set of
/// generator rows plus the generator g of its binary image D = phi_inv(C),
/// a cyclic code of length 2n. Every constructor recovers g, so it is always
/// available.
class AccCode {
   public:
    std::size_t n() const noexcept { return n_; }
    std::size_t dim() const noexcept { return rows_.size(); }
    const F4Matrix& rows() const noexcept { return rows_; }
    /// Generator of the binary image, a divisor of x^{2n}+1.
    const BinPoly& g() const noexcept { return g_; }
    /// h = (x^{2n}+1)/g.
    BinPoly h() const;
    /// Generator of the image of the trace dual.
    BinPoly h_star() const;
    /// psi of the coefficient vector of g (the first generator row).
    F4Vector generator_vector() const;
    /// phi_inv of the rows: a dim x 2n binary matrix spanning D.
    BinMatrix binary_image() const;
    bool contains(const F4Vector& c) const;

   private:
    friend AccCode make_acc(std::size_t n, F4Matrix rows, BinPoly g);
    std::size_t n_ = 0;
    F4Matrix rows_;
    BinPoly g_;
};

/// Rows T^i(psi(xi_g)) for i < 2n - deg g. Throws DivisibilityError unless
/// g divides x^{2n}+1, std::invalid_argument for n = 0.
AccCode acc_from_gen_poly(const BinPoly& g, std::size_t n);
/// Span of the T-orbit of v; g = gcd(phi_inv(v), x^{2n}+1).
AccCode acc_from_vector(const F4Vector& v);
/// Span of the given rows of length n. Throws std::invalid_argument unless the
/// span is T-invariant.
AccCode acc_from_rows(const F4Matrix& rows, std::size_t n);

/// C^{perp_Tr}, built from h* = ((x^{2n}+1)/g)*.
AccCode trace_dual(const AccCode& c);
/// Same code computed as psi of the nullspace of the binary image.
AccCode trace_dual_by_nullspace(const AccCode& c);
/// Generator lcm(g, h*) of the image of C intersect C^{perp_Tr}.
BinPoly hull_generator(const AccCode& c);
AccCode hull(const AccCode& c);
/// G (.)Tr G^T.
BinMatrix gram(const AccCode& c);
/// k - rank(G (.)Tr G^T).
std::size_t hull_dim_via_rank(const AccCode& c);
/// det(G (.)Tr G^T) = 1; true for the zero code.
bool is_acd(const AccCode& c);
/// Row spaces compared through the binary images.
bool same_code(const AccCode& a, const AccCode& b);

struct DualityClass {
    bool self_orthogonal = false;  ///< C within its trace dual: G (.)Tr G^T = 0
    bool dual_containing = false;  ///< trace dual within C: H (.)Tr H^T = 0
    bool self_dual = false;
};
DualityClass duality_class(const AccCode& c);

struct AcpRankCheck {
    std::size_t rank1 = 0;
    std::size_t rank2 = 0;
    std::size_t k1 = 0;  ///< dim C1 = deg g2
    std::size_t k2 = 0;  ///< dim C2 = 2n - k1
    bool necessary_condition_met = false;
};
/// Ranks of G_{g1} (.)Tr G_{g1*}^T and G_{g2} (.)Tr G_{g2*}^T with g2 = (x^{2n}+1)/g1.
/// A necessary condition for (C1, C2) to be a complementary pair, not a test.
AcpRankCheck acp_rank_check(const BinPoly& g1, std::size_t n);

/// Minimum Gray weight, i.e. minimum Hamming weight of the binary image.
DistanceResult min_gray_distance(const AccCode& c, std::size_t max_dim = kDefaultMaxDim,
                                 std::uint64_t samples = 0);

}  // namespace conjucode

#endif  // CONJUCODE_ACC_HPP
