#include "fixtures.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <functional>

using namespace toric_contact;
using fixtures::iv;
using fixtures::q;

namespace {

/// Times k/L in [0, 1) at which the flow e^{2 pi i a_j t} fixes every
/// coordinate in the support, counted with L the product of the weights.
long orbit_count(const IntVec& a, const std::vector<std::size_t>& support) {
    long L = 1;
    for (const auto& x : a)
        L *= x.get_si();
    long count = 0;
    for (long k = 0; k < L; ++k) {
        bool fixed = true;
        for (auto j : support)
            fixed = fixed && (a[j].get_si() * k) % L == 0;
        count += fixed;
    }
    return count;
}

std::vector<IntVec> weight_vectors(std::size_t max_len, long max_entry) {
    std::vector<IntVec> out;
    std::function<void(IntVec)> rec = [&](IntVec cur) {
        if (cur.size() >= 2 && gcd(cur) == 1)
            out.push_back(cur);
        if (cur.size() == max_len)
            return;
        for (long x = 1; x <= max_entry; ++x) {
            IntVec next = cur;
            next.push_back(x);
            rec(next);
        }
    };
    rec({});
    return out;
}

}  // namespace

TEST(Weights, Validation) {
    EXPECT_ERROR(WeightVector({2, 2}), "gcd 2");
    EXPECT_ERROR(WeightVector({1, 0}), "positive");
    EXPECT_ERROR(WeightVector({1, -3}), "positive");
    EXPECT_ERROR(WeightVector({1}), "at least two");
    EXPECT_EQ(WeightVector({2, 3}).size(), 2u);
}

TEST(WeightedSimplex, LabelsAreComplementaryGcds) {
    auto d = weighted_simplex({2, 4, 3});
    EXPECT_EQ(d.integral_reeb(), iv({2, 4, 3}));
    EXPECT_EQ(d.polytope().facets[0].label, 1);
    EXPECT_EQ(d.polytope().facets[1].label, 1);
    EXPECT_EQ(d.polytope().facets[2].label, 2);
    auto seg = weighted_simplex({1, 2});
    EXPECT_EQ(seg.polytope().facets[0].label, 2);
    EXPECT_EQ(seg.polytope().facets[1].label, 1);
    EXPECT_EQ(seg.vertices()[0].coords, (RatVec{0, q(1, 2)}));
    EXPECT_EQ(seg.vertices()[1].coords, (RatVec{1, 0}));
}

TEST(WeightedSimplex, StandardSimplexIsRegular) {
    auto d = standard_simplex(3);
    EXPECT_EQ(d.facet_count(), 4u);
    EXPECT_EQ(classify(d).regularity, Regularity::regular);
    SpherePresentation p = synthesize(d);
    EXPECT_EQ(p.beta, IntMat::identity(4));
    EXPECT_EQ(p.deformation, (RatVec{1, 1, 1, 1}));
}

TEST(WeightedSimplex, HolonomyMatchesReebOrbits) {
    for (const auto& a : weight_vectors(4, 4)) {
        auto d = weighted_simplex(WeightVector(a));
        for (const auto& face : face_lattice(d)) {
            std::vector<std::size_t> support;
            for (std::size_t j = 0; j < a.size(); ++j)
                if (!std::binary_search(face.begin(), face.end(), j))
                    support.push_back(j);
            auto g = holonomy(d, face);
            ASSERT_TRUE(g.is_finite());
            EXPECT_EQ(g.order(), orbit_count(a, support)) << format_vector(a);
            EXPECT_EQ(g.order(), reeb_orbit_order(WeightVector(a), support));
            // A subgroup of the circle is cyclic.
            EXPECT_LE(g.invariant_factors().size(), 1u);
        }
    }
}

TEST(WeightedSimplex, PresentationIsTheSphereItself) {
    for (const auto& a : weight_vectors(3, 5)) {
        auto d = weighted_simplex(WeightVector(a));
        SpherePresentation p = synthesize(d);
        EXPECT_TRUE(p.is_sphere_itself());
        for (std::size_t i = 0; i < a.size(); ++i)
            EXPECT_EQ(p.deformation[i], Rational(a[i]) / d.polytope().facets[i].label);
        EXPECT_TRUE(verify_presentation(p, d).holds());
    }
}

TEST(MomentMap, Examples) {
    WeightVector a{1, 2};
    std::vector<double> z{1, 0, 0, 0};
    auto mu = moment_eval(a, z);
    EXPECT_DOUBLE_EQ(mu[0], 1.0);
    EXPECT_DOUBLE_EQ(mu[1], 0.0);
    z = {0, 0, 0, 3};
    mu = moment_eval(a, z);
    EXPECT_DOUBLE_EQ(mu[1], 0.5);
    z = {1, 1, 1, 1};
    mu = moment_eval(a, z);
    EXPECT_DOUBLE_EQ(mu[0], 2.0 / 6.0);
    EXPECT_DOUBLE_EQ(mu[1], 2.0 / 6.0);
    EXPECT_NEAR(simplex_defect(a, mu), 0.0, 1e-15);
    EXPECT_ERROR(moment_eval(a, std::vector<double>{0, 0, 0, 0}), "origin");
    EXPECT_ERROR(moment_eval(a, std::vector<double>{1, 0}), "2(n+1)");
}

TEST(MomentMap, ScaleInvariant) {
    WeightVector a{1, 2, 3};
    std::mt19937_64 rng(41);
    std::normal_distribution<double> g;
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<double> z(6), w(6);
        for (std::size_t i = 0; i < 6; ++i) {
            z[i] = g(rng);
            w[i] = 3.5 * z[i];
        }
        auto m1 = moment_eval(a, z), m2 = moment_eval(a, w);
        for (std::size_t i = 0; i < 3; ++i)
            EXPECT_NEAR(m1[i], m2[i], 1e-14);
    }
}

TEST(MomentMap, DefectDetectsPointsOffTheSimplex) {
    WeightVector a{1, 1};
    EXPECT_DOUBLE_EQ(simplex_defect(a, {0.5, 0.5}), 0.0);
    EXPECT_DOUBLE_EQ(simplex_defect(a, {-0.25, 1.25}), 0.25);
    EXPECT_DOUBLE_EQ(simplex_defect(a, {0.5, 0.75}), 0.25);
}

TEST(Sampling, ImageLiesInWeightedSimplex) {
    for (const auto& a : {WeightVector{1, 1, 1}, WeightVector{1, 2, 3}, WeightVector{5, 7}}) {
        auto r = convexity_sample_check(a, 2000, 7);
        EXPECT_TRUE(r.holds());
        EXPECT_EQ(r.count, 2000u);
        EXPECT_LE(r.max_violation, 1e-9);
    }
}

TEST(Sampling, SeedDeterminesResult) {
    auto r1 = convexity_sample_check({1, 2, 3}, 500, 99);
    auto r2 = convexity_sample_check({1, 2, 3}, 500, 99);
    EXPECT_EQ(r1.max_violation, r2.max_violation);
}

TEST(Sampling, NegativeToleranceFlagsEverySample) {
    auto r = convexity_sample_check({1, 2}, 10, 1, -1.0);
    EXPECT_EQ(r.failures.size(), 10u);
    EXPECT_FALSE(r.holds());
}

TEST(ReebOrbits, Examples) {
    WeightVector a{2, 4, 3};
    EXPECT_EQ(reeb_orbit_order(a, {0, 1}), 2);
    EXPECT_EQ(reeb_orbit_order(a, {1}), 4);
    EXPECT_EQ(reeb_orbit_order(a, {0, 1, 2}), 1);
    EXPECT_ERROR(reeb_orbit_order(a, {}), "nonempty");
    EXPECT_ERROR(reeb_orbit_order(a, {3}), "out of range");
}
