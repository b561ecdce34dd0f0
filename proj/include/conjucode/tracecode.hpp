#ifndef CONJUCODE_TRACECODE_HPP
#define CONJUCODE_TRACECODE_HPP

#include <cstddef>
#include <cstdint>

#include "conjucode/acc.hpp"
#include "conjucode/binmatrix.hpp"
#include "conjucode/binpoly.hpp"
#include "conjucode/enumerate.hpp"

namespace conjucode {

/// Binary cyclic code <r> of length n, r a divisor of x^n+1. r = x^n+1 is
/// the zero code and r = 1 the full space.
class CyclicCode {
   public:
    /// Throws DivisibilityError unless r divides x^n+1, std::invalid_argument for n = 0.
    CyclicCode(std::size_t n, BinPoly r);

    static CyclicCode zero(std::size_t n) { return CyclicCode(n, BinPoly::x_n_plus_1(n)); }
    static CyclicCode full(std::size_t n) { return CyclicCode(n, BinPoly::one()); }

    std::size_t n() const noexcept { return n_; }
    const BinPoly& generator() const noexcept { return r_; }
    std::size_t dim() const noexcept { return n_ - static_cast<std::size_t>(r_.degree()); }
    bool is_zero() const noexcept { return dim() == 0; }
    bool is_full() const noexcept { return r_.is_one(); }

    /// h = (x^n+1)/r.
    BinPoly check_poly() const;
    /// h*, generator of the Euclidean dual.
    BinPoly dual_generator() const;
    CyclicCode dual() const;
    /// Rows x^i r for i < dim.
    BinMatrix generator_matrix() const;
    bool contains(const BitVector& v) const;

    bool operator==(const CyclicCode&) const = default;

   private:
    std::size_t n_;
    BinPoly r_;
};

/// Phi = Tr o Psi: component i is u_i + u_{n+i}. Throws std::invalid_argument on odd length.
BitVector phi_vec(const BitVector& u);
/// g folded modulo x^n+1. Throws std::invalid_argument when deg g >= 2n.
BinPoly phi_poly(const BinPoly& g, std::size_t n);

/// Tr(C) = <gcd(Phi_p(g), x^n+1)>.
CyclicCode trace_code_of(const AccCode& c);
/// Tr(C^{perp_Tr}) = <gcd(Phi_p(h*), x^n+1)>.
CyclicCode trace_of_dual(const AccCode& c);

struct TraceAnalysis {
    BinPoly r;
    BinPoly t;
    BinPoly dual_gen;            ///< (x^n+1)/r*, generator of Tr(C)^perp
    bool dual_gen_divides_t = false;  ///< Tr(C^{perp_Tr}) within Tr(C)^perp; always true
    bool equality_condition = false;  ///< t = dual_gen
    bool inclusion_strict = false;    ///< t != dual_gen
    bool acd = false;                 ///< C meets its trace dual trivially
    bool lcd = false;                 ///< Tr(C) meets its dual trivially
};
TraceAnalysis duality_report(const AccCode& c);

/// lcm(r, h*), generator of C intersect C^perp.
BinPoly cyclic_hull_generator(const CyclicCode& code);
std::size_t cyclic_hull_dim(const CyclicCode& code);
bool is_lcd(const CyclicCode& code);

/// Tr(c), embedded in F4^n, lies in C for every codeword c. Checked on the
/// generator rows, which suffices by linearity.
bool tr_subset_check(const AccCode& c);

DistanceResult min_distance(const CyclicCode& code, std::size_t max_dim = kDefaultMaxDim,
                            std::uint64_t samples = 0);

/// Phi(a) . Phi(b) = 0 for all a in D, b in its dual, D of even length 2n.
/// Checked on every pair of basis vectors, which suffices by bilinearity.
/// Throws std::invalid_argument on odd length.
bool phi_orthogonality_check(const CyclicCode& d);

}  // namespace conjucode

#endif  // CONJUCODE_TRACECODE_HPP
