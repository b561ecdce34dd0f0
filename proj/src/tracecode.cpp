#include "conjucode/tracecode.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "conjucode/errors.hpp"

namespace conjucode {

CyclicCode::CyclicCode(std::size_t n, BinPoly r) : n_(n), r_(std::move(r)) {
    if (n == 0) throw std::invalid_argument("CyclicCode: n must be positive");
    if (r_.is_zero() || !divides(r_, BinPoly::x_n_plus_1(n)))
        throw DivisibilityError(to_expanded_string(r_) + " does not divide x^" + std::to_string(n) + "+1");
}

BinPoly CyclicCode::check_poly() const { return BinPoly::x_n_plus_1(n_) / r_; }

BinPoly CyclicCode::dual_generator() const { return poly_reciprocal(check_poly()); }

CyclicCode CyclicCode::dual() const { return CyclicCode(n_, dual_generator()); }

BinMatrix CyclicCode::generator_matrix() const {
    BinMatrix g(0, n_);
    for (std::size_t i = 0; i < dim(); ++i) g.append_row(r_.shifted(i).to_bits(n_));
    return g;
}

bool CyclicCode::contains(const BitVector& v) const {
    return v.size() == n_ && divides(r_, BinPoly::from_bits(v));
}

BitVector phi_vec(const BitVector& u) {
    if (u.size() % 2 != 0) throw std::invalid_argument("phi_vec: odd length " + std::to_string(u.size()));
    const std::size_t n = u.size() / 2;
    BitVector out(n);
    for (std::size_t i = 0; i < n; ++i) out.set(i, u.get(i) != u.get(n + i));
    return out;
}

BinPoly phi_poly(const BinPoly& g, std::size_t n) {
    if (g.degree() >= static_cast<int>(2 * n))
        throw std::invalid_argument("phi_poly: degree " + std::to_string(g.degree()) + " >= " +
                                    std::to_string(2 * n));
    BinPoly out;
    for (int i = 0; i <= g.degree(); ++i)
        if (g.coeff(static_cast<std::size_t>(i))) {
            const auto j = static_cast<std::size_t>(i) % n;
            out.set_coeff(j, !out.coeff(j));
        }
    return out;
}

namespace {

BinPoly fold_gcd(const BinPoly& p, std::size_t n) {
    const BinPoly reduced = p % BinPoly::x_n_plus_1(2 * n);
    return poly_gcd(phi_poly(reduced, n), BinPoly::x_n_plus_1(n));
}

}  // namespace

CyclicCode trace_code_of(const AccCode& c) { return CyclicCode(c.n(), fold_gcd(c.g(), c.n())); }

CyclicCode trace_of_dual(const AccCode& c) { return CyclicCode(c.n(), fold_gcd(c.h_star(), c.n())); }

TraceAnalysis duality_report(const AccCode& c) {
    const CyclicCode tr = trace_code_of(c);
    TraceAnalysis a;
    a.r = tr.generator();
    a.t = trace_of_dual(c).generator();
    a.dual_gen = BinPoly::x_n_plus_1(c.n()) / poly_reciprocal(a.r);
    a.dual_gen_divides_t = divides(a.dual_gen, a.t);
    a.equality_condition = a.t == a.dual_gen;
    a.inclusion_strict = !a.equality_condition;
    a.acd = is_acd(c);
    a.lcd = is_lcd(tr);
    return a;
}

BinPoly cyclic_hull_generator(const CyclicCode& code) {
    return poly_lcm(code.generator(), code.dual_generator());
}

std::size_t cyclic_hull_dim(const CyclicCode& code) {
    return code.n() - static_cast<std::size_t>(cyclic_hull_generator(code).degree());
}

bool is_lcd(const CyclicCode& code) { return cyclic_hull_dim(code) == 0; }

bool tr_subset_check(const AccCode& c) {
    for (const auto& row : c.rows()) {
        const BitVector t = trace_vector(row);
        F4Vector embedded(c.n());
        for (std::size_t i = 0; i < c.n(); ++i) embedded[i] = t.get(i) ? F4::one() : F4::zero();
        if (!c.contains(embedded)) return false;
    }
    return true;
}

DistanceResult min_distance(const CyclicCode& code, std::size_t max_dim, std::uint64_t samples) {
    return min_distance_of_span(code.generator_matrix(), max_dim, samples);
}

bool phi_orthogonality_check(const CyclicCode& d) {
    if (d.n() % 2 != 0) throw std::invalid_argument("phi_orthogonality_check: odd length");
    const BinMatrix a = d.generator_matrix();
    const BinMatrix b = d.dual().generator_matrix();
    for (const auto& u : a.row_vectors()) {
        const BitVector pu = phi_vec(u);
        for (const auto& v : b.row_vectors())
            if (pu.dot(phi_vec(v))) return false;
    }
    return true;
}

}  // namespace conjucode
