#include "fixtures.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace toric_contact;
using fixtures::iv;

namespace {

void expect_hermite(const IntMat& m, const HermiteForm& h) {
    EXPECT_EQ(h.H, m * h.U);
    EXPECT_EQ(abs(oracle::leibniz_det(h.U)), 1);
    // Pivot k sits in column k at a strictly increasing row, is positive, and
    // everything left of it in its row is reduced into [0, pivot).
    std::size_t prev_row = 0;
    for (std::size_t k = 0; k < h.rank; ++k) {
        auto [r, c] = h.pivots[k];
        EXPECT_EQ(c, k);
        if (k) {
            EXPECT_GT(r, prev_row);
        }
        prev_row = r;
        EXPECT_GT(h.H(r, c), 0);
        for (std::size_t i = 0; i < r; ++i) {
            EXPECT_EQ(h.H(i, c), 0);
        }
        for (std::size_t j = 0; j < c; ++j) {
            EXPECT_GE(h.H(r, j), 0);
            EXPECT_LT(h.H(r, j), h.H(r, c));
        }
    }
    for (std::size_t c = h.rank; c < m.cols(); ++c)
        for (std::size_t r = 0; r < m.rows(); ++r) {
            EXPECT_EQ(h.H(r, c), 0);
        }
}

void expect_smith(const IntMat& m, const SmithForm& s) {
    EXPECT_EQ(s.S, s.U * m * s.V);
    EXPECT_EQ(abs(determinant(s.U)), 1);
    EXPECT_EQ(abs(determinant(s.V)), 1);
    for (std::size_t i = 0; i < s.S.rows(); ++i)
        for (std::size_t j = 0; j < s.S.cols(); ++j)
            if (i != j) {
                EXPECT_EQ(s.S(i, j), 0);
            }
    IntVec d = s.diagonal();
    for (std::size_t i = 0; i < d.size(); ++i) {
        EXPECT_GE(d[i], 0);
        if (i + 1 < d.size() && d[i] != 0) {
            EXPECT_EQ(d[i + 1] % d[i], 0);
        }
        if (i + 1 < d.size() && d[i] == 0) {
            EXPECT_EQ(d[i + 1], 0);
        }
    }
}

}  // namespace

TEST(Hnf, IdentityIsFixed) {
    auto h = hnf(IntMat::identity(3));
    EXPECT_EQ(h.H, IntMat::identity(3));
    EXPECT_EQ(h.U, IntMat::identity(3));
}

TEST(Hnf, RowVectorReducesToGcd) {
    IntMat m{{4, 6}};
    auto h = hnf(m);
    EXPECT_EQ(h.H, (IntMat{{oracle::euclid(4, 6), 0}}));
    expect_hermite(m, h);
}

TEST(Hnf, TallMatrixMatchesBruteForceUnique) {
    IntMat m{{1, 0}, {0, 1}, {1, 1}};
    auto h = hnf(m);
    expect_hermite(m, h);
    // Search every 2x2 unimodular U with entries in [-2, 2] for products that
    // satisfy the Hermite conditions: the canonical form must be unique.
    std::vector<IntMat> hermite_products;
    for (long a = -2; a <= 2; ++a)
        for (long b = -2; b <= 2; ++b)
            for (long c = -2; c <= 2; ++c)
                for (long d = -2; d <= 2; ++d) {
                    if (std::abs(a * d - b * c) != 1)
                        continue;
                    IntMat p = m * IntMat{{a, b}, {c, d}};
                    bool ok = p(0, 0) > 0 && p(0, 1) == 0 && p(1, 1) > 0 && p(1, 0) >= 0 &&
                              p(1, 0) < p(1, 1);
                    if (ok)
                        hermite_products.push_back(p);
                }
    ASSERT_EQ(hermite_products.size(), 1u);
    EXPECT_EQ(h.H, hermite_products.front());
    EXPECT_EQ(h.H, m);
}

TEST(Hnf, RandomShapesSatisfyContract) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t r = 1 + trial % 4, c = 1 + (trial / 4) % 5;
        IntMat m = oracle::random_matrix(rng, r, c, -6, 6);
        expect_hermite(m, hnf(m));
    }
}

TEST(Snf, Examples) {
    auto s = snf(IntMat::identity(2));
    EXPECT_EQ(s.S, IntMat::identity(2));

    IntMat m{{2, 4}, {6, 8}};
    auto t = snf(m);
    expect_smith(m, t);
    EXPECT_EQ(t.diagonal(), iv({2, 4}));
    EXPECT_EQ(oracle::invariant_factors_from_minors(m), iv({2, 4}));

    EXPECT_EQ(snf(IntMat{{2}}).S, (IntMat{{2}}));
}

TEST(Snf, MatchesMinorOracleOnRandomShapes) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 150; ++trial) {
        std::size_t r = 1 + trial % 4, c = 1 + (trial / 3) % 4;
        IntMat m = oracle::random_matrix(rng, r, c, -9, 9);
        auto s = snf(m);
        expect_smith(m, s);
        EXPECT_EQ(s.diagonal(), oracle::invariant_factors_from_minors(m)) << m;
    }
}

TEST(Snf, ZeroMatrix) {
    IntMat z(2, 3);
    auto s = snf(z);
    EXPECT_TRUE(s.S.is_zero());
    expect_smith(z, s);
}

TEST(Kernel, InjectiveMapHasEmptyBasis) {
    EXPECT_EQ(kernel_lattice_basis(IntMat::identity(3)).rows(), 0u);
}

TEST(Kernel, SingleRowMatchesEnumeration) {
    IntMat m{{1, 2}};
    IntMat k = kernel_lattice_basis(m);
    ASSERT_EQ(k.rows(), 1u);
    EXPECT_EQ(k.row(0), iv({2, -1}));
    // Every small annihilated vector is an integer multiple of the basis row.
    for (long x = -6; x <= 6; ++x)
        for (long y = -6; y <= 6; ++y)
            if (x + 2 * y == 0) {
                EXPECT_EQ(x % 2, 0);
            }
}

TEST(Kernel, AllOnesRowIsSaturatedRankTwo) {
    IntMat m{{1, 1, 1}};
    IntMat k = kernel_lattice_basis(m);
    ASSERT_EQ(k.rows(), 2u);
    EXPECT_TRUE((m * k.transpose()).is_zero());
    EXPECT_EQ(snf(k).diagonal(), iv({1, 1}));
    // Brute force: each kernel vector in [-3,3]^3 is an integer combination of
    // the basis rows (coefficients searched in [-6,6]).
    for (long a = -3; a <= 3; ++a)
        for (long b = -3; b <= 3; ++b)
            for (long c = -3; c <= 3; ++c) {
                if (a + b + c != 0)
                    continue;
                bool found = false;
                for (long s = -6; s <= 6 && !found; ++s)
                    for (long t = -6; t <= 6 && !found; ++t) {
                        IntVec v(3);
                        for (std::size_t j = 0; j < 3; ++j)
                            v[j] = s * k(0, j) + t * k(1, j);
                        found = v == iv({a, b, c});
                    }
                EXPECT_TRUE(found) << a << "," << b << "," << c;
            }
}

TEST(Kernel, RandomKernelsAreSaturated) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        IntMat m = oracle::random_matrix(rng, 1 + trial % 3, 4 + trial % 2, -5, 5);
        IntMat k = kernel_lattice_basis(m);
        EXPECT_EQ(k.rows(), m.cols() - rank(m));
        if (k.rows() == 0)
            continue;
        EXPECT_TRUE((m * k.transpose()).is_zero());
        for (const auto& d : snf(k).diagonal()) {
            EXPECT_EQ(d, 1);
        }
    }
}

TEST(Saturate, Examples) {
    EXPECT_EQ(saturate(IntMat{{2, 0}}), (IntMat{{1, 0}}));
    IntMat full = saturate(IntMat{{2, 2}, {0, 4}});
    EXPECT_EQ(full.rows(), 2u);
    EXPECT_EQ(abs(determinant(full)), 1);
    EXPECT_EQ(saturate(IntMat{{1, 2, 3}}), (IntMat{{1, 2, 3}}));
}

TEST(Saturate, ContainsGeneratorsAndHasTorsionFreeQuotient) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 60; ++trial) {
        IntMat g = oracle::random_matrix(rng, 1 + trial % 3, 4, -4, 4);
        if (g.is_zero())
            continue;
        IntMat s = saturate(g);
        EXPECT_EQ(s.rows(), rank(g));
        for (std::size_t i = 0; i < g.rows(); ++i) {
            EXPECT_TRUE(lattice_coordinates(s, g.row(i)).has_value());
        }
        for (const auto& d : snf(s).diagonal()) {
            EXPECT_EQ(d, 1);
        }
    }
}

TEST(Primitive, Examples) {
    EXPECT_EQ(primitive(iv({2, 4, 6})), iv({1, 2, 3}));
    EXPECT_EQ(primitive(iv({-3, 6})), iv({-1, 2}));
    EXPECT_EQ(primitive(iv({5})), iv({1}));
    try {
        primitive(iv({0, 0}));
        FAIL() << "expected an error";
    } catch (const Error& e) {
        EXPECT_STREQ(e.what(), "zero vector has no primitive representative");
    }
}

TEST(QuotientGroup, Examples) {
    auto z2 = quotient_group(IntMat{{1}}, IntMat{{2}});
    EXPECT_EQ(z2, FiniteAbelianGroup({Integer(2)}, 0));
    EXPECT_EQ(z2.to_string(), "Z_2");

    IntMat a{{1, 0}, {0, 1}};
    EXPECT_TRUE(quotient_group(a, a).is_trivial());

    auto g = quotient_group(a, IntMat{{1, 1}, {1, -1}});
    EXPECT_EQ(g.order(), 2);
    EXPECT_EQ(g.invariant_factors(), iv({2}));
}

TEST(QuotientGroup, InfiniteQuotientReportsFreeRank) {
    auto g = quotient_group(IntMat::identity(3), IntMat{{2, 0, 0}});
    EXPECT_EQ(g.free_rank(), 2u);
    EXPECT_EQ(g.invariant_factors(), iv({2}));
    EXPECT_FALSE(g.is_finite());
    EXPECT_EQ(g.to_string(), "Z^2 x Z_2");
}

TEST(QuotientGroup, RejectsGeneratorsOutsideAmbient) {
    try {
        quotient_group(IntMat{{2, 0}}, IntMat{{1, 0}});
        FAIL() << "expected an error";
    } catch (const Error& e) {
        EXPECT_STREQ(e.what(), "subgroup not contained in ambient lattice");
    }
}

TEST(QuotientGroup, OrderIsDeterminantInAmbientCoordinates) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 80; ++trial) {
        IntMat basis = oracle::random_unimodular(rng, 3) * IntMat{{1, 0, 0}, {0, 2, 0}, {0, 0, 1}};
        IntMat coords = oracle::random_matrix(rng, 3, 3, -4, 4);
        Integer det = oracle::leibniz_det(coords);
        if (det == 0)
            continue;
        IntMat sub = coords * basis;
        EXPECT_EQ(quotient_group(basis, sub).order(), abs(det));
    }
}

TEST(FiniteAbelianGroupType, RejectsBrokenChains) {
    EXPECT_THROW(FiniteAbelianGroup({Integer(2), Integer(3)}, 0), Error);
    EXPECT_THROW(FiniteAbelianGroup({Integer(1)}, 0), Error);
    auto g = FiniteAbelianGroup::from_smith_diagonal(iv({1, 1, 3, 0}));
    EXPECT_EQ(g.invariant_factors(), iv({3}));
    EXPECT_EQ(g.free_rank(), 1u);
}

TEST(QuotientProjection, KillsTheVectorAndIsSurjective) {
    for (const auto& v : {iv({1, 2}), iv({1, 1, 2}), iv({4, 6, 9}), iv({-3, 5, 7, 2})}) {
        IntMat p = quotient_projection(v);
        EXPECT_EQ(p.rows(), v.size() - 1);
        for (const auto& x : p * v) {
            EXPECT_EQ(x, 0);
        }
        for (const auto& d : snf(p).diagonal()) {
            EXPECT_EQ(d, 1);
        }
    }
    EXPECT_THROW(quotient_projection(iv({2, 4})), Error);
}

TEST(Determinant, AgreesWithLeibniz) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        IntMat m = oracle::random_matrix(rng, 4, 4, -7, 7);
        EXPECT_EQ(determinant(m), oracle::leibniz_det(m));
    }
}

TEST(RationalParsing, NormalizesAndRejects) {
    EXPECT_EQ(parse_rational("2/4"), fixtures::q(1, 2));
    EXPECT_EQ(parse_rational("-6/3"), fixtures::q(-2));
    EXPECT_EQ(to_string(parse_rational("10")), "10");
    EXPECT_THROW(parse_rational("1/0"), Error);
    EXPECT_THROW(parse_rational("abc"), Error);
    EXPECT_THROW(parse_rational("1/-2"), Error);
    EXPECT_THROW(parse_rational(""), Error);
}
