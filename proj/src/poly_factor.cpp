#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <stdexcept>

#include "conjucode/binpoly.hpp"
#include "conjucode/errors.hpp"

namespace conjucode {

namespace {

// Square root of a polynomial that is a perfect square (f' = 0).
BinPoly square_root(const BinPoly& f) {
    BinPoly out;
    for (int i = 0; i <= f.degree(); i += 2)
        if (f.coeff(static_cast<std::size_t>(i))) out.set_coeff(static_cast<std::size_t>(i / 2), true);
    return out;
}

void add_factor(Factorization& out, const BinPoly& p, unsigned multiplicity) {
    for (auto& f : out)
        if (f.poly == p) {
            f.multiplicity += multiplicity;
            return;
        }
    out.push_back({p, multiplicity});
}

// Square-free decomposition: pairs (s_i, i) with f = prod s_i^i, s_i square-free.
std::vector<std::pair<BinPoly, unsigned>> square_free_parts(const BinPoly& f) {
    std::vector<std::pair<BinPoly, unsigned>> parts;
    if (f.degree() < 1) return parts;
    const BinPoly d = poly_derivative(f);
    if (d.is_zero()) {
        for (auto& [p, m] : square_free_parts(square_root(f))) parts.emplace_back(p, 2 * m);
        return parts;
    }
    BinPoly c = poly_gcd(f, d);
    BinPoly w = f / c;
    unsigned i = 1;
    while (!w.is_one()) {
        BinPoly y = poly_gcd(w, c);
        BinPoly z = w / y;
        if (!z.is_one()) parts.emplace_back(z, i);
        ++i;
        w = std::move(y);
        c = c / w;
    }
    if (!c.is_one())
        for (auto& [p, m] : square_free_parts(square_root(c))) parts.emplace_back(p, 2 * m);
    return parts;
}

// Splits a square-free f into (product of all degree-d factors, d).
std::vector<std::pair<BinPoly, int>> distinct_degree(BinPoly f) {
    std::vector<std::pair<BinPoly, int>> out;
    BinPoly h = BinPoly::x() % f;
    for (int d = 1; 2 * d <= f.degree(); ++d) {
        h = poly_mulmod(h, h, f);
        BinPoly g = poly_gcd(h + BinPoly::x(), f);
        if (!g.is_one()) {
            out.emplace_back(g, d);
            f = f / g;
            h = h % f;
        }
    }
    if (f.degree() > 0) out.emplace_back(f, f.degree());
    return out;
}

BinPoly random_below(int degree, std::mt19937_64& rng) {
    BinPoly a;
    for (int i = 0; i < degree; ++i)
        if (rng() & 1U) a.set_coeff(static_cast<std::size_t>(i), true);
    return a;
}

// f is a product of distinct irreducibles, all of degree d.
void equal_degree(const BinPoly& f, int d, std::mt19937_64& rng, std::vector<BinPoly>& out) {
    if (f.degree() == d) {
        out.push_back(f);
        return;
    }
    for (;;) {
        const BinPoly a = random_below(f.degree(), rng);
        // Absolute trace a + a^2 + ... + a^{2^{d-1}} mod f.
        BinPoly t = a;
        BinPoly power = a;
        for (int i = 1; i < d; ++i) {
            power = poly_mulmod(power, power, f);
            t += power;
        }
        if (t.is_zero()) continue;
        BinPoly g = poly_gcd(t, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree(g, d, rng, out);
            equal_degree(f / g, d, rng, out);
            return;
        }
    }
}

}  // namespace

Factorization factor(const BinPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("factor: zero polynomial");
    Factorization out;
    // Fixed seed: the split order is irrelevant after sorting, but runs stay reproducible.
    std::mt19937_64 rng(0x5eed'c0de'2026ULL);
    for (const auto& [part, multiplicity] : square_free_parts(p)) {
        for (const auto& [block, d] : distinct_degree(part)) {
            std::vector<BinPoly> irreducibles;
            equal_degree(block, d, rng, irreducibles);
            for (const auto& q : irreducibles) add_factor(out, q, multiplicity);
        }
    }
    std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) { return a.poly < b.poly; });
    return out;
}

bool is_irreducible(const BinPoly& p) {
    if (p.degree() < 1) return false;
    const auto f = factor(p);
    return f.size() == 1 && f.front().multiplicity == 1;
}

BinPoly expand(const Factorization& f) {
    BinPoly out = BinPoly::one();
    for (const auto& factor : f) out *= poly_pow(factor.poly, factor.multiplicity);
    return out;
}

const Factorization& factor_xn_plus_1(std::size_t n) {
    if (n == 0) throw std::invalid_argument("factor_xn_plus_1: n must be positive");
    static std::mutex mutex;
    static std::map<std::size_t, Factorization> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end()) {
        // x^{2m}+1 = (x^m+1)^2: factor the odd part only.
        std::size_t odd = n;
        unsigned power = 1;
        while (odd % 2 == 0) {
            odd /= 2;
            power *= 2;
        }
        Factorization f = factor(BinPoly::x_n_plus_1(odd));
        for (auto& factor : f) factor.multiplicity *= power;
        it = cache.emplace(n, std::move(f)).first;
    }
    return it->second;
}

std::size_t divisor_count(const Factorization& f) {
    std::size_t count = 1;
    for (const auto& factor : f) {
        count *= factor.multiplicity + 1;
        if (count > kMaxDivisors) return kMaxDivisors + 1;
    }
    return count;
}

void for_each_divisor(const Factorization& f, const std::function<void(const BinPoly&)>& visit) {
    // Mixed-radix counter over exponent choices; the first factor varies fastest.
    std::vector<unsigned> exponents(f.size(), 0);
    for (;;) {
        BinPoly d = BinPoly::one();
        for (std::size_t i = 0; i < f.size(); ++i)
            if (exponents[i]) d *= poly_pow(f[i].poly, exponents[i]);
        visit(d);
        std::size_t i = 0;
        while (i < f.size() && exponents[i] == f[i].multiplicity) exponents[i++] = 0;
        if (i == f.size()) return;
        ++exponents[i];
    }
}

std::vector<BinPoly> divisors_of_xn_plus_1(std::size_t n) {
    const auto& f = factor_xn_plus_1(n);
    const std::size_t count = divisor_count(f);
    if (count > kMaxDivisors)
        throw BoundExceeded("x^" + std::to_string(n) + "+1 has more than " + std::to_string(kMaxDivisors) +
                            " divisors");
    std::vector<BinPoly> out;
    out.reserve(count);
    for_each_divisor(f, [&](const BinPoly& d) { out.push_back(d); });
    return out;
}

}  // namespace conjucode
