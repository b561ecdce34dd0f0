#include "conjucode/acc.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "conjucode/errors.hpp"

namespace conjucode {

F4Vector psi(const BitVector& u) {
    if (u.size() % 2 != 0) throw std::invalid_argument("psi: odd length " + std::to_string(u.size()));
    const std::size_t n = u.size() / 2;
    F4Vector c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = F4(u.get(i), u.get(i) != u.get(n + i));
    return c;
}

BitVector phi_inv(const F4Vector& c) {
    const std::size_t n = c.size();
    BitVector u(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        u.set(i, c[i].a());
        u.set(n + i, c[i].a() != c[i].b());
    }
    return u;
}

F4Vector conj_shift(const F4Vector& c, std::size_t times) {
    const std::size_t n = c.size();
    if (n == 0) return c;
    times %= 2 * n;
    // T^t moves entry i to (i + t) mod n, conjugated once for every wrap.
    F4Vector out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t target = i + times;
        const bool conjugated = (target / n) % 2 == 1;
        out[target % n] = conjugated ? f4_conj(c[i]) : c[i];
    }
    return out;
}

BitVector trace_vector(const F4Vector& c) {
    BitVector t(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) t.set(i, f2_trace(c[i]));
    return t;
}

bool trace_inner(const F4Vector& a, const F4Vector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("trace_inner: length mismatch");
    F4 sum;
    for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
    return f2_trace(sum);
}

std::size_t gray_weight(const F4Vector& c) {
    static constexpr std::size_t kWeight[] = {0, 2, 1, 1};
    std::size_t w = 0;
    for (auto x : c) w += kWeight[x.code()];
    return w;
}

F4Matrix f4_transpose(const F4Matrix& m, std::size_t cols) {
    F4Matrix t(cols, F4Vector(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i].size() != cols) throw std::invalid_argument("f4_transpose: ragged matrix");
        for (std::size_t j = 0; j < cols; ++j) t[j][i] = m[i][j];
    }
    return t;
}

BinMatrix trace_mat_mul(const F4Matrix& a, const F4Matrix& b, std::size_t b_cols) {
    for (const auto& row : b)
        if (row.size() != b_cols) throw std::invalid_argument("trace_mat_mul: ragged right factor");
    BinMatrix out(a.size(), b_cols);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != b.size()) throw std::invalid_argument("trace_mat_mul: inner dimensions differ");
        for (std::size_t j = 0; j < b_cols; ++j) {
            F4 sum;
            for (std::size_t l = 0; l < b.size(); ++l) sum += a[i][l] * b[l][j];
            out.set(i, j, f2_trace(sum));
        }
    }
    return out;
}

BinMatrix trace_mat_mul(const F4Matrix& a, const F4Matrix& b) {
    return trace_mat_mul(a, b, b.empty() ? 0 : b.front().size());
}

F4Matrix f4_times_binary(const F4Matrix& a, const BinMatrix& e) {
    F4Matrix out(a.size(), F4Vector(e.cols()));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != e.rows()) throw std::invalid_argument("f4_times_binary: inner dimensions differ");
        for (std::size_t l = 0; l < e.rows(); ++l)
            for (std::size_t j = 0; j < e.cols(); ++j)
                if (e.get(l, j)) out[i][j] += a[i][l];
    }
    return out;
}

BinMatrix trace_gram(const F4Matrix& a, const F4Matrix& b) {
    BinMatrix out(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out.set(i, j, trace_inner(a[i], b[j]));
    return out;
}

// ---------------------------------------------------------------------------

namespace {

BinPoly image_poly(const F4Vector& c) { return BinPoly::from_bits(phi_inv(c)); }

}  // namespace

AccCode make_acc(std::size_t n, F4Matrix rows, BinPoly g);

AccCode make_acc(std::size_t n, F4Matrix rows, BinPoly g) {
    AccCode c;
    c.n_ = n;
    c.rows_ = std::move(rows);
    c.g_ = std::move(g);
    return c;
}

BinPoly AccCode::h() const { return BinPoly::x_n_plus_1(2 * n_) / g_; }

BinPoly AccCode::h_star() const { return poly_reciprocal(h()); }

F4Vector AccCode::generator_vector() const {
    if (g_.degree() >= static_cast<int>(2 * n_)) return F4Vector(n_);
    return psi(g_.to_bits(2 * n_));
}

BinMatrix AccCode::binary_image() const {
    std::vector<BitVector> rows;
    rows.reserve(rows_.size());
    for (const auto& r : rows_) rows.push_back(phi_inv(r));
    return BinMatrix::from_rows(std::move(rows), 2 * n_);
}

bool AccCode::contains(const F4Vector& c) const {
    if (c.size() != n_) return false;
    return divides(g_, image_poly(c));
}

AccCode acc_from_gen_poly(const BinPoly& g, std::size_t n) {
    if (n == 0) throw std::invalid_argument("acc_from_gen_poly: n must be positive");
    const BinPoly modulus = BinPoly::x_n_plus_1(2 * n);
    if (g.is_zero() || !divides(g, modulus))
        throw DivisibilityError(to_expanded_string(g) + " does not divide x^" + std::to_string(2 * n) + "+1");
    const std::size_t dim = 2 * n - static_cast<std::size_t>(g.degree());
    F4Matrix rows;
    rows.reserve(dim);
    if (dim > 0) {
        F4Vector row = psi(g.to_bits(2 * n));
        for (std::size_t i = 0; i < dim; ++i) {
            rows.push_back(row);
            row = conj_shift(row);
        }
    }
    return make_acc(n, std::move(rows), g);
}

AccCode acc_from_vector(const F4Vector& v) {
    const std::size_t n = v.size();
    if (n == 0) throw std::invalid_argument("acc_from_vector: empty vector");
    const BinPoly g = poly_gcd(image_poly(v), BinPoly::x_n_plus_1(2 * n));
    // With f = phi_inv(v), the shifts x^i f for i < 2n - deg g are independent
    // and span <g>, so the first dim orbit elements form a basis.
    const std::size_t dim = 2 * n - static_cast<std::size_t>(g.degree());
    F4Matrix rows;
    F4Vector row = v;
    for (std::size_t i = 0; i < dim; ++i) {
        rows.push_back(row);
        row = conj_shift(row);
    }
    return make_acc(n, std::move(rows), g);
}

AccCode acc_from_rows(const F4Matrix& input, std::size_t n) {
    if (n == 0) throw std::invalid_argument("acc_from_rows: n must be positive");
    BinMatrix image(0, 2 * n);
    F4Matrix rows;
    BinPoly g = BinPoly::x_n_plus_1(2 * n);
    for (const auto& r : input) {
        if (r.size() != n) throw std::invalid_argument("acc_from_rows: row length differs from n");
        const BitVector u = phi_inv(r);
        if (in_row_space(image, u)) continue;
        image.append_row(u);
        rows.push_back(r);
        g = poly_gcd(g, BinPoly::from_bits(u));
    }
    for (const auto& r : rows)
        if (!in_row_space(image, phi_inv(conj_shift(r))))
            throw std::invalid_argument("acc_from_rows: span is not closed under the conjucyclic shift");
    return make_acc(n, std::move(rows), g);
}

AccCode trace_dual(const AccCode& c) { return acc_from_gen_poly(c.h_star(), c.n()); }

AccCode trace_dual_by_nullspace(const AccCode& c) {
    const BinMatrix null = mat_nullspace(c.binary_image());
    F4Matrix rows;
    for (const auto& u : null.row_vectors()) rows.push_back(psi(u));
    return acc_from_rows(rows, c.n());
}

BinPoly hull_generator(const AccCode& c) { return poly_lcm(c.g(), c.h_star()); }

AccCode hull(const AccCode& c) { return acc_from_gen_poly(hull_generator(c), c.n()); }

BinMatrix gram(const AccCode& c) { return trace_mat_mul(c.rows(), f4_transpose(c.rows(), c.n()), c.dim()); }

std::size_t hull_dim_via_rank(const AccCode& c) { return c.dim() - mat_rank(gram(c)); }

bool is_acd(const AccCode& c) { return mat_det(gram(c)); }

bool same_code(const AccCode& a, const AccCode& b) {
    return a.n() == b.n() && same_row_space(a.binary_image(), b.binary_image());
}

DualityClass duality_class(const AccCode& c) {
    DualityClass d;
    d.self_orthogonal = gram(c).is_zero();
    d.dual_containing = gram(trace_dual(c)).is_zero();
    d.self_dual = d.self_orthogonal && d.dual_containing;
    return d;
}

AcpRankCheck acp_rank_check(const BinPoly& g1, std::size_t n) {
    const BinPoly modulus = BinPoly::x_n_plus_1(2 * n);
    if (g1.is_zero() || !divides(g1, modulus))
        throw DivisibilityError(to_expanded_string(g1) + " does not divide x^" + std::to_string(2 * n) + "+1");
    const BinPoly g2 = modulus / g1;
    auto rank_for = [n](const BinPoly& g) {
        const AccCode c = acc_from_gen_poly(g, n);
        const AccCode cs = acc_from_gen_poly(poly_reciprocal(g), n);
        return mat_rank(trace_mat_mul(c.rows(), f4_transpose(cs.rows(), n), cs.dim()));
    };
    AcpRankCheck r;
    r.rank1 = rank_for(g1);
    r.rank2 = rank_for(g2);
    r.k1 = static_cast<std::size_t>(g2.degree());
    r.k2 = 2 * n - r.k1;
    r.necessary_condition_met = r.rank1 == r.k1 && r.rank2 == r.k2;
    return r;
}

DistanceResult min_gray_distance(const AccCode& c, std::size_t max_dim, std::uint64_t samples) {
    return min_distance_of_span(c.binary_image(), max_dim, samples);
}

}  // namespace conjucode
