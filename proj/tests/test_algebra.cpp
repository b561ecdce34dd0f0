#include <gtest/gtest.h>

#include <random>
#include <set>

#include "conjucode/binmatrix.hpp"
#include "conjucode/binpoly.hpp"
#include "conjucode/errors.hpp"
#include "conjucode/f4.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace conjucode;
using testutil::P;

namespace {

const F4 kAll[] = {F4::zero(), F4::one(), F4::w(), F4::w2()};

}  // namespace

// --- GF(4) ------------------------------------------------------------------

TEST(F4, MultiplicationMatchesMinimalPolynomialTable) {
    for (auto x : kAll)
        for (auto y : kAll) EXPECT_EQ(f4_mul(x, y).code(), oracle::f4_mul(x.code(), y.code()));
}

TEST(F4, Examples) {
    EXPECT_EQ(f4_mul(F4::w(), F4::w2()), F4::one());
    EXPECT_EQ(f4_mul(F4::zero(), F4::w()), F4::zero());
    EXPECT_EQ(f4_mul(F4::w(), F4::w()), F4::w2());
    EXPECT_EQ(f4_conj(F4::w()), F4::w2());
    EXPECT_EQ(f4_conj(F4::zero()), F4::zero());
    EXPECT_EQ(f4_conj(f4_conj(F4::w2())), F4::w2());
    EXPECT_FALSE(f2_trace(F4::zero()));
    EXPECT_TRUE(f2_trace(F4::w()));
    EXPECT_FALSE(f2_trace(F4::one()));
}

TEST(F4, ConjugateIsSquareAndTraceIsSumWithConjugate) {
    for (auto x : kAll) {
        EXPECT_EQ(f4_conj(x).code(), oracle::f4_square(x.code()));
        EXPECT_EQ(f2_trace(x), oracle::f4_trace(x.code()) == 1);
        EXPECT_EQ(F4(f2_trace(x), false), x + f4_conj(x));
    }
    EXPECT_EQ(f4_mul(f4_mul(F4::w(), F4::w()), F4::w()), F4::one());
}

TEST(F4, FieldLawsOverAllPairs) {
    for (auto x : kAll)
        for (auto y : kAll) {
            EXPECT_EQ(f2_trace(x + y), f2_trace(x) != f2_trace(y));
            EXPECT_EQ(f4_conj(x * y), f4_conj(x) * f4_conj(y));
            EXPECT_EQ(f4_conj(f4_conj(x)), x);
            EXPECT_EQ(x * y, y * x);
            for (auto z : kAll) EXPECT_EQ(x * (y + z), x * y + x * z);
        }
}

TEST(F4, VectorTextRoundTrip) {
    const F4Vector v = parse_f4_vector("W, w,0 ,1");
    ASSERT_EQ(v.size(), 4U);
    EXPECT_EQ(v[0], F4::w2());
    EXPECT_EQ(v[1], F4::w());
    EXPECT_EQ(format_f4_vector(v), "W,w,0,1");
    EXPECT_EQ(parse_f4_vector(format_f4_vector(v)), v);
    try {
        parse_f4_vector("W,x,0");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 2U);
    }
    EXPECT_THROW(parse_f4_vector(""), ParseError);
    EXPECT_THROW(parse_f4_vector("W,,0"), ParseError);
    EXPECT_THROW(parse_f4_vector("Ww"), ParseError);
}

// --- polynomials ------------------------------------------------------------

TEST(BinPoly, DivmodExamples) {
    const BinPoly x14 = BinPoly::x_n_plus_1(14);
    const auto [q, r] = poly_divmod(x14, P("(1+x)^2*(1+x+x^3)"));
    EXPECT_TRUE(r.is_zero());
    EXPECT_EQ(q, P("(1+x+x^3)*(1+x^2+x^3)^2"));

    const BinPoly p = P("1+x^5+x^9");
    EXPECT_EQ(poly_divmod(p, BinPoly::one()).quotient, p);
    EXPECT_TRUE(poly_divmod(p, BinPoly::one()).remainder.is_zero());

    const auto [q2, r2] = poly_divmod(P("1+x+x^3"), P("1+x^2"));
    EXPECT_EQ(q2, P("x"));
    EXPECT_EQ(r2, P("1"));
    EXPECT_EQ(q2 * P("1+x^2") + r2, P("1+x+x^3"));

    EXPECT_THROW(poly_divmod(p, BinPoly{}), std::domain_error);
}

TEST(BinPoly, GcdLcmExamples) {
    EXPECT_EQ(poly_gcd(P("1+x+x^2+x^5"), BinPoly::x_n_plus_1(7)), P("(1+x)*(1+x+x^3)"));
    EXPECT_EQ(P("(1+x)*(1+x+x^3)"), P("1+x^2+x^3+x^4"));
    const BinPoly p = P("1+x+x^4");
    EXPECT_EQ(poly_gcd(p, BinPoly{}), p);
    EXPECT_EQ(poly_gcd(P("1+x+x^2+x^3+x^4+x^5+x^6"), BinPoly::x_n_plus_1(7)), P("(1+x+x^3)*(1+x^2+x^3)"));
    EXPECT_THROW(poly_gcd(BinPoly{}, BinPoly{}), std::invalid_argument);

    const BinPoly l = poly_lcm(P("(1+x)^2*(1+x+x^3)"), P("(1+x^2+x^3)*(1+x+x^3)^2"));
    EXPECT_EQ(l, P("(1+x)^2*(1+x+x^3)^2*(1+x^2+x^3)"));
    EXPECT_EQ(l.degree(), 11);
    EXPECT_EQ(poly_lcm(p, p), p);
    EXPECT_EQ(oracle::mod(testutil::mask(P("1+x+x^3")), testutil::mask(P("1+x"))), 1U);  // coprime
    EXPECT_EQ(poly_lcm(P("1+x"), P("1+x+x^3")), P("1+x") * P("1+x+x^3"));
    EXPECT_THROW(poly_lcm(p, BinPoly{}), std::invalid_argument);
}

TEST(BinPoly, ReciprocalExamples) {
    EXPECT_EQ(poly_reciprocal(P("1+x+x^3")), P("1+x^2+x^3"));
    EXPECT_EQ(poly_reciprocal(P("1+x")), P("1+x"));
    EXPECT_EQ(poly_reciprocal(P("1+x+x^2+x^3+x^4")), P("1+x+x^2+x^3+x^4"));
    EXPECT_EQ(poly_reciprocal(P("x^2+x^3")), P("1+x"));
    EXPECT_THROW(poly_reciprocal(BinPoly{}), std::invalid_argument);
}

TEST(BinPoly, ZeroDegreeSentinel) {
    EXPECT_EQ(BinPoly{}.degree(), BinPoly::kZeroDegree);
    EXPECT_LT(BinPoly{}, BinPoly::one());
    EXPECT_EQ(BinPoly::one().degree(), 0);
}

TEST(BinPoly, RandomizedRingIdentities) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
        const BinPoly p = BinPoly::from_uint(rng() >> (rng() % 60)) + BinPoly::one();
        const BinPoly q = BinPoly::from_uint(rng() >> (rng() % 60)) + BinPoly::x();
        if (q.is_zero() || p.is_zero()) continue;
        const BinPoly g = poly_gcd(p, q);
        EXPECT_TRUE(divides(g, p));
        EXPECT_TRUE(divides(g, q));
        EXPECT_EQ(poly_lcm(p, q) * g, p * q);
        const auto [quot, rem] = poly_divmod(p * q + q.shifted(3), p);
        EXPECT_LT(rem.degree(), p.degree());
        EXPECT_EQ(quot * p + rem, p * q + q.shifted(3));
        if (p.coeff(0)) {
            EXPECT_EQ(poly_reciprocal(poly_reciprocal(p)), p);
        }
        if (p.coeff(0) && q.coeff(0)) {
            EXPECT_EQ(poly_reciprocal(p * q), poly_reciprocal(p) * poly_reciprocal(q));
        }
        // Multiplication agrees with the integer oracle when it fits.
        if (p.degree() + q.degree() < 64) {
            EXPECT_EQ(testutil::mask(p * q), oracle::mul(testutil::mask(p), testutil::mask(q)));
        }
    }
}

TEST(BinPoly, MultiWordArithmetic) {
    const BinPoly a = P("1+x^70+x^130");
    const BinPoly b = P("x+x^65");
    EXPECT_EQ((a * b) / b, a);
    EXPECT_TRUE(((a * b) % a).is_zero());
    EXPECT_EQ(poly_gcd(a * b, a * P("1+x^3")), a * poly_gcd(b, P("1+x^3")));
    EXPECT_EQ(a.shifted(64).degree(), 194);
}

// --- factorisation ----------------------------------------------------------

TEST(Factor, XnPlus1Examples) {
    const Factorization f14 = factor_xn_plus_1(14);
    ASSERT_EQ(f14.size(), 3U);
    EXPECT_EQ(f14[0], (Factor{P("1+x"), 2}));
    EXPECT_EQ(f14[1], (Factor{P("1+x+x^3"), 2}));
    EXPECT_EQ(f14[2], (Factor{P("1+x^2+x^3"), 2}));
    EXPECT_EQ(factor_xn_plus_1(1), (Factorization{{P("1+x"), 1}}));
    EXPECT_EQ(factor_xn_plus_1(7),
              (Factorization{{P("1+x"), 1}, {P("1+x+x^3"), 1}, {P("1+x^2+x^3"), 1}}));
    EXPECT_THROW(factor_xn_plus_1(0), std::invalid_argument);
}

TEST(Factor, AgreesWithTrialDivisionOracle) {
    for (std::size_t n = 1; n <= 40; ++n) {
        const auto expected = oracle::factor_by_trial(testutil::mask(BinPoly::x_n_plus_1(n)));
        const auto& got = factor_xn_plus_1(n);
        ASSERT_EQ(got.size(), expected.size()) << "n=" << n;
        for (std::size_t i = 0; i < got.size(); ++i) {
            EXPECT_EQ(testutil::mask(got[i].poly), expected[i].first) << "n=" << n;
            EXPECT_EQ(static_cast<int>(got[i].multiplicity), expected[i].second) << "n=" << n;
        }
    }
}

TEST(Factor, ProductReproducesXnPlus1AndFactorsAreIrreducible) {
    for (std::size_t n = 1; n <= 128; ++n) {
        const auto& f = factor_xn_plus_1(n);
        EXPECT_EQ(expand(f), BinPoly::x_n_plus_1(n)) << "n=" << n;
        for (const auto& factor : f) {
            if (factor.poly.degree() < 20) {
                EXPECT_TRUE(oracle::irreducible_by_trial(testutil::mask(factor.poly)));
            }
            // Every irreducible of degree d divides x^(2^d) + x.
            const auto d = static_cast<std::size_t>(factor.poly.degree());
            BinPoly h = BinPoly::x();
            for (std::size_t i = 0; i < d; ++i) h = poly_mulmod(h, h, factor.poly);
            EXPECT_EQ(h, BinPoly::x() % factor.poly) << "n=" << n;
            EXPECT_EQ(poly_gcd(factor.poly, poly_derivative(factor.poly)), BinPoly::one());
        }
    }
}

TEST(Factor, EvenLengthDoublesMultiplicities) {
    for (std::size_t m = 1; m <= 64; ++m) {
        Factorization doubled = factor_xn_plus_1(m);
        for (auto& f : doubled) f.multiplicity *= 2;
        EXPECT_EQ(factor_xn_plus_1(2 * m), doubled) << "m=" << m;
    }
}

TEST(Factor, GeneralPolynomials) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
        const BinPoly p = BinPoly::from_uint(rng() >> (rng() % 50)) * BinPoly::from_uint(rng() >> 50);
        if (p.is_zero()) continue;
        const Factorization f = factor(p);
        EXPECT_EQ(expand(f), p);
        for (const auto& factor : f) EXPECT_TRUE(is_irreducible(factor.poly));
        if (p.degree() < 30) {
            const auto expected = oracle::factor_by_trial(testutil::mask(p));
            ASSERT_EQ(f.size(), expected.size());
        }
    }
    EXPECT_TRUE(factor(BinPoly::one()).empty());
    EXPECT_FALSE(is_irreducible(BinPoly::one()));
    EXPECT_TRUE(is_irreducible(P("1+x+x^3")));
    EXPECT_FALSE(is_irreducible(P("1+x^2")));
}

TEST(Divisors, CountsAndUniqueness) {
    EXPECT_EQ(divisors_of_xn_plus_1(2), (std::vector<BinPoly>{BinPoly::one(), P("1+x"), P("(1+x)^2")}));
    EXPECT_EQ(divisors_of_xn_plus_1(7).size(), 8U);
    EXPECT_EQ(divisors_of_xn_plus_1(14).size(), 27U);
    for (std::size_t n = 1; n <= 30; ++n) {
        const auto divs = divisors_of_xn_plus_1(n);
        const std::set<BinPoly> unique(divs.begin(), divs.end());
        EXPECT_EQ(unique.size(), divs.size());
        EXPECT_EQ(divs.size(), divisor_count(factor_xn_plus_1(n)));
        for (const auto& d : divs) EXPECT_TRUE(divides(d, BinPoly::x_n_plus_1(n)));
        // Every divisor is found, checked against exhaustive search for small n.
        if (n <= 14) {
            std::size_t count = 0;
            const oracle::Poly modulus = testutil::mask(BinPoly::x_n_plus_1(n));
            for (oracle::Poly q = 1; q <= modulus; ++q)
                if (oracle::mod(modulus, q) == 0) ++count;
            EXPECT_EQ(count, divs.size()) << "n=" << n;
        }
    }
}

TEST(Divisors, BoundIsEnforced) {
    // x^127+1 has 19 distinct factors (2^19 divisors, allowed); x^126+1 has
    // multiplicity 2 on 13 factors: 3^13 > 10^6.
    EXPECT_EQ(divisor_count(factor_xn_plus_1(127)), std::size_t{1} << 19);
    EXPECT_GT(divisor_count(factor_xn_plus_1(126)), kMaxDivisors);
    EXPECT_THROW(divisors_of_xn_plus_1(126), BoundExceeded);
}

// --- text forms -------------------------------------------------------------

TEST(PolyText, PrintersAndParser) {
    const BinPoly g = P("1110010");
    EXPECT_EQ(g, P("1+x+x^2+x^5"));
    EXPECT_EQ(to_binary_string(g), "111001");
    EXPECT_EQ(to_expanded_string(g), "1+x+x^2+x^5");
    EXPECT_EQ(to_factored_string(g), "(1+x)^2*(1+x+x^3)");
    EXPECT_EQ(to_binary_string(BinPoly{}), "0");
    EXPECT_EQ(to_expanded_string(BinPoly{}), "0");
    EXPECT_EQ(to_factored_string(BinPoly::one()), "1");
    EXPECT_EQ(P("(1+x)(1+x)"), P("1+x^2"));
    EXPECT_EQ(P(" x^3 + x + 1 "), P("1101"));
    EXPECT_EQ(P("x*x*x"), P("x^3"));
    EXPECT_EQ(P("0"), BinPoly{});
}

TEST(PolyText, RoundTripIsExact) {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        const BinPoly p = BinPoly::from_uint(rng() >> (rng() % 64));
        EXPECT_EQ(parse_poly(to_binary_string(p)), p);
        EXPECT_EQ(parse_poly(to_expanded_string(p)), p);
        if (!p.is_zero()) {
            EXPECT_EQ(parse_poly(to_factored_string(p)), p);
        }
    }
}

TEST(PolyText, ErrorsCarryPositions) {
    auto position_of = [](std::string_view s) -> std::size_t {
        try {
            parse_poly(s);
        } catch (const ParseError& e) {
            return e.position();
        }
        return 999;
    };
    EXPECT_EQ(position_of("1+y"), 2U);
    EXPECT_EQ(position_of("(1+x"), 4U);
    EXPECT_EQ(position_of("x^"), 2U);
    EXPECT_EQ(position_of(""), 0U);
    EXPECT_EQ(position_of("1+x)"), 3U);
}

// --- matrices ---------------------------------------------------------------

TEST(BinMatrix, RankExamples) {
    EXPECT_EQ(mat_rank(BinMatrix::identity(9)), 9U);
    EXPECT_EQ(mat_rank(BinMatrix(3, 4)), 0U);
    EXPECT_EQ(mat_rank(BinMatrix::from_strings({"110", "011", "101"})), 2U);
}

TEST(BinMatrix, NullspaceExamples) {
    const BinMatrix even = BinMatrix::from_strings({"110", "011"});
    const BinMatrix ns = mat_nullspace(even);
    ASSERT_EQ(ns.rows(), 1U);
    EXPECT_EQ(ns.row(0).to_string(), "111");
    // exhaustive: (1,1,1) is the only nonzero triple orthogonal to both rows
    int hits = 0;
    for (unsigned m = 1; m < 8; ++m)
        if (!oracle::dot(m, 0b011) && !oracle::dot(m, 0b110)) ++hits;
    EXPECT_EQ(hits, 1);
    EXPECT_EQ(mat_nullspace(BinMatrix::identity(5)).rows(), 0U);
    EXPECT_EQ(mat_nullspace(BinMatrix::identity(5)).cols(), 5U);
}

TEST(BinMatrix, DeterminantExamples) {
    EXPECT_TRUE(mat_det(BinMatrix::identity(4)));
    EXPECT_TRUE(mat_det(BinMatrix(0, 0)));
    EXPECT_FALSE(mat_det(BinMatrix::from_strings({"11", "11"})));
    EXPECT_THROW(mat_det(BinMatrix(2, 3)), std::invalid_argument);
}

TEST(BinMatrix, RandomizedRankAndNullspace) {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 100; ++i) {
        const std::size_t rows = 1 + rng() % 32, cols = 1 + rng() % 32;
        BinMatrix m = testutil::random_matrix(rows, cols, rng);
        if (i % 3 == 0 && rows > 2) m.row(rows - 1) = m.row(0) ^ m.row(1);  // force dependence
        const std::size_t r = mat_rank(m);
        std::vector<std::uint64_t> masks;
        for (const auto& row : m.row_vectors()) masks.push_back(testutil::row_mask(row));
        EXPECT_EQ(static_cast<int>(r), oracle::rank(masks));
        EXPECT_LE(r, std::min(rows, cols));
        const auto e = rref(m);
        std::size_t zero_rows = 0;
        for (const auto& row : e.reduced.row_vectors()) zero_rows += row.is_zero();
        EXPECT_EQ(r, rows - zero_rows);
        const BinMatrix ns = mat_nullspace(m);
        EXPECT_EQ(ns.rows(), cols - r);
        EXPECT_EQ(mat_rank(ns), ns.rows());
        EXPECT_TRUE(multiply_transposed(m, ns).is_zero());
        if (rows == cols) {
            EXPECT_EQ(mat_det(m), r == rows);
        }
    }
}

TEST(BinMatrix, MultiplyAndTranspose) {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 50; ++i) {
        const BinMatrix a = testutil::random_matrix(5, 7, rng);
        const BinMatrix b = testutil::random_matrix(7, 4, rng);
        EXPECT_EQ(multiply(a, b).transpose(), multiply(b.transpose(), a.transpose()));
        EXPECT_EQ(multiply(a, b), multiply_transposed(a, b.transpose()));
        EXPECT_EQ(a.transpose().transpose(), a);
    }
    EXPECT_THROW(multiply(BinMatrix(2, 3), BinMatrix(2, 3)), std::invalid_argument);
    EXPECT_TRUE(same_row_space(BinMatrix::from_strings({"110", "011"}), BinMatrix::from_strings({"101", "110"})));
    EXPECT_FALSE(same_row_space(BinMatrix::from_strings({"110"}), BinMatrix::from_strings({"101"})));
}
