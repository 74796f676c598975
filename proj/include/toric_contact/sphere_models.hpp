#ifndef TORIC_CONTACT_SPHERE_MODELS_HPP
#define TORIC_CONTACT_SPHERE_MODELS_HPP

// Weighted odd spheres S^{2n+1} with the deformed form
//     eta_a = sum(x_i dy_i - y_i dx_i) / sum a_i (x_i^2 + y_i^2),
// Reeb field xi_a = sum a_i (x_i d/dy_i - y_i d/dx_i). Their moment image is the
// weighted simplex {r_i >= 0, sum a_i r_i = 1}.

#include <toric_contact/contact.hpp>

#include <cmath>
#include <cstdint>
#include <random>
#include <span>

namespace toric_contact {

/// Positive integer weights with gcd 1.
class WeightVector {
public:
    explicit WeightVector(IntVec a) : a_(std::move(a)) {
        if (a_.size() < 2)
            throw Error("weight vector needs at least two entries");
        for (const auto& x : a_)
            if (x <= 0)
                throw Error("weights must be positive, got " + x.get_str());
        if (gcd(a_) != 1)
            throw Error("weights " + format_vector(a_) + " have gcd " + gcd(a_).get_str() +
                        "; normalize to gcd 1 first");
    }
    WeightVector(std::initializer_list<long> a)
        : WeightVector(IntVec(a.begin(), a.end())) {}

    const IntVec& values() const { return a_; }
    std::size_t size() const { return a_.size(); }
    const Integer& operator[](std::size_t i) const { return a_[i]; }

private:
    IntVec a_;
};

/// gcd of the weights off facet i: the leaf holonomy order over the open facet.
inline Integer complementary_gcd(const WeightVector& a, std::size_t i) {
    Integer g = 0;
    for (std::size_t j = 0; j < a.size(); ++j)
        if (j != i)
            g = gcd(g, a[j]);
    return g;
}

inline ToricContactDatum weighted_simplex(const WeightVector& a) {
    const std::size_t dim = a.size();
    LabeledPolytope p{dim, {}};
    for (std::size_t i = 0; i < dim; ++i)
        p.facets.push_back(make_facet(unit_vector(dim, i, -1), complementary_gcd(a, i), 0));
    return validate_datum(std::move(p), a.values());
}

inline ToricContactDatum standard_simplex(std::size_t n) {
    return weighted_simplex(WeightVector(IntVec(n + 1, Integer(1))));
}

/// mu_i = (x_i^2 + y_i^2) / sum_j a_j (x_j^2 + y_j^2); z = (x_0, y_0, ..., x_n, y_n).
inline std::vector<double> moment_eval(const WeightVector& a, std::span<const double> z) {
    if (z.size() != 2 * a.size())
        throw Error("sample point must have 2(n+1) coordinates");
    std::vector<double> r(a.size());
    double denom = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i] = z[2 * i] * z[2 * i] + z[2 * i + 1] * z[2 * i + 1];
        denom += a[i].get_d() * r[i];
    }
    if (denom == 0)
        throw Error("moment map undefined at the origin");
    for (auto& x : r)
        x /= denom;
    return r;
}

struct SampleViolation {
    std::size_t sample_index = 0;
    std::vector<double> mu;
    double violation = 0;
};

struct ConvexityReport {
    std::size_t count = 0;
    double tolerance = 0;
    double max_violation = 0;  // largest facet or hyperplane defect observed
    std::vector<SampleViolation> failures;

    bool holds() const { return failures.empty(); }
};

/// Largest defect of mu against the weighted simplex: max over facets of
/// max(0, -mu_i) and the hyperplane residual |sum a_i mu_i - 1|.
inline double simplex_defect(const WeightVector& a, const std::vector<double>& mu) {
    double worst = 0;
    double pairing = 0;
    for (std::size_t i = 0; i < mu.size(); ++i) {
        worst = std::max(worst, -mu[i]);
        pairing += a[i].get_d() * mu[i];
    }
    return std::max(worst, std::abs(pairing - 1.0));
}

inline ConvexityReport convexity_sample_check(const WeightVector& a, std::size_t count,
                                              std::uint64_t seed, double tol = 1e-9) {
    ConvexityReport rep{count, tol, 0, {}};
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<double> z(2 * a.size());
    for (std::size_t k = 0; k < count; ++k) {
        for (auto& x : z)
            x = gauss(rng);
        auto mu = moment_eval(a, z);
        double defect = simplex_defect(a, mu);
        rep.max_violation = std::max(rep.max_violation, defect);
        if (defect > tol)
            rep.failures.push_back(SampleViolation{k, std::move(mu), defect});
    }
    return rep;
}

/// Order of the Reeb-flow stabilizer at points whose nonzero coordinates are
/// exactly `support`: the orbit e^{i a_j t} z_j closes once a_j t is in 2 pi Z
/// on the support, i.e. after 1/gcd of the generic period.
inline Integer reeb_orbit_order(const WeightVector& a, const std::vector<std::size_t>& support) {
    if (support.empty())
        throw Error("support must be nonempty");
    Integer g = 0;
    for (auto j : support) {
        if (j >= a.size())
            throw Error("support index out of range");
        g = gcd(g, a[j]);
    }
    return g;
}

}  // namespace toric_contact

#endif  // TORIC_CONTACT_SPHERE_MODELS_HPP
