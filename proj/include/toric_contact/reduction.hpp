#ifndef TORIC_CONTACT_REDUCTION_HPP
#define TORIC_CONTACT_REDUCTION_HPP

// Presentation of a toric contact datum as a torus reduction of an odd sphere
// S^{2N-1} carrying the deformed form eta_a.
//
// beta : Z^N -> Z^{n+1} sends e_i to the inward cone normal of facet i, so the
// standard simplex gives beta = identity. The reduction torus T^{N-n-1} has
// weight matrix W whose rows span ker(beta) over Z. The deformation vector
// a > 0 satisfies beta * a = reeb; on the zero set, |z_i|^2 = <alpha, beta e_i>
// and sum a_i |z_i|^2 = <alpha, reeb> = 1.

#include <toric_contact/contact.hpp>

#include <optional>

namespace toric_contact {

struct SpherePresentation {
    std::size_t N = 0;  // sphere S^{2N-1}
    IntMat beta;        // (n+1) x N
    IntMat weights;     // (N-n-1) x N
    RatVec deformation; // a, length N, entries > 0

    std::size_t ambient_dim() const { return beta.rows(); }
    bool is_sphere_itself() const { return weights.rows() == 0; }

    friend bool operator==(const SpherePresentation&, const SpherePresentation&) = default;
};

inline IntMat build_beta(const ToricContactDatum& d) {
    IntVec reeb = d.integral_reeb();
    std::vector<IntVec> cols;
    for (const auto& f : d.polytope().facets) {
        IntVec nu = cone_normal(f, reeb);
        if (gcd(nu) == 0)
            throw Error("degenerate facet under coning");
        cols.push_back(std::move(nu));
    }
    IntMat beta = IntMat::from_columns(cols, d.ambient_dim());
    if (rank(beta) != d.ambient_dim())
        throw Error("beta not surjective");
    return beta;
}

inline IntMat kernel_torus_weights(const IntMat& beta) {
    if (rank(beta) != beta.rows())
        throw Error("beta not surjective");
    return kernel_lattice_basis(beta);
}

/// The solution of beta * a = reeb maximizing min_i a_i; ties go to the
/// lexicographically smallest a.
inline RatVec deformation_vector(const ToricContactDatum& d, const IntMat& beta) {
    const IntVec reeb = d.integral_reeb();
    if (beta.rows() != reeb.size())
        throw Error("beta does not match the datum's ambient dimension");
    const std::size_t n_cols = beta.cols();
    auto a0 = particular_solution(to_rational_rows(beta), to_rational(reeb), n_cols);
    if (!a0)
        throw Error("no positive solution: beta * a = reeb is inconsistent");
    IntMat w = kernel_lattice_basis(beta);
    const std::size_t k = w.rows();

    // Variables (t_1..t_k, s): s - (W^T t)_i <= a0_i, maximize s.
    Polyhedron lp;
    lp.dim = k + 1;
    for (std::size_t i = 0; i < n_cols; ++i) {
        RatVec row(k + 1, Rational(0));
        for (std::size_t r = 0; r < k; ++r)
            row[r] = -w(r, i);
        row[k] = 1;
        lp.ineq.push_back(std::move(row));
        lp.ineq_rhs.push_back((*a0)[i]);
    }
    PolyhedronStructure s = enumerate_polyhedron(lp);
    if (s.lineality_dim != 0)
        throw Error("no positive solution: deformation problem is degenerate");
    for (const auto& ray : s.rays)
        if (ray[k] > 0)
            throw Error("no positive solution: deformation problem is unbounded");

    std::optional<Rational> best_s;
    RatVec best;
    for (const auto& v : s.vertices) {
        RatVec a(*a0);
        for (std::size_t i = 0; i < n_cols; ++i)
            for (std::size_t r = 0; r < k; ++r)
                a[i] += v.point[r] * w(r, i);
        const Rational& sv = v.point[k];
        if (!best_s || sv > *best_s || (sv == *best_s && detail::lex_less(a, best))) {
            best_s = sv;
            best = std::move(a);
        }
    }
    if (!best_s || *best_s <= 0)
        throw Error("no positive solution: the datum admits no positive deformation vector");
    return best;
}

inline SpherePresentation synthesize(const ToricContactDatum& d) {
    IntMat beta = build_beta(d);
    IntMat w = kernel_torus_weights(beta);
    RatVec a = deformation_vector(d, beta);
    return SpherePresentation{beta.cols(), std::move(beta), std::move(w), std::move(a)};
}

struct ReducedPolytope {
    LabeledPolytope polytope;
    IntVec reeb;
};

namespace detail {

inline void check_presentation_shapes(const SpherePresentation& p) {
    if (p.N == 0 || p.beta.cols() != p.N)
        throw Error("presentation: beta must have N columns");
    if (p.weights.rows() > 0 && p.weights.cols() != p.N)
        throw Error("presentation: weights must have N columns");
    if (p.deformation.size() != p.N)
        throw Error("presentation: deformation vector must have length N");
    if (p.beta.rows() == 0)
        throw Error("presentation: beta has no rows");
}

}  // namespace detail

inline ReducedPolytope reduced_polytope(const SpherePresentation& pres) {
    detail::check_presentation_shapes(pres);
    ReducedPolytope out;
    out.polytope.ambient_dim = pres.beta.rows();
    for (std::size_t i = 0; i < pres.N; ++i) {
        ConeFacet cf = decompose_cone_normal(pres.beta.col(i));
        IntVec outward(cf.normal);
        for (auto& x : outward)
            x = -x;
        out.polytope.facets.push_back(LabeledFacet{std::move(outward), cf.label, 0});
    }
    RatVec reeb = pres.beta * pres.deformation;
    if (!is_integral(reeb))
        throw Error("presentation: beta * a is not integral");
    out.reeb = to_integer(reeb);
    return out;
}

struct VertexStabilizer {
    RatVec vertex;
    std::optional<Integer> order;  // nullopt: positive-dimensional stabilizer
};

struct VerificationReport {
    bool polytope_match = false;
    std::vector<std::string> vertex_diff;
    std::vector<std::string> invariant_failures;
    std::vector<VertexStabilizer> local_freeness;
    bool smooth = false;

    bool locally_free() const {
        return std::all_of(local_freeness.begin(), local_freeness.end(),
                           [](const VertexStabilizer& s) { return s.order.has_value(); });
    }
    bool holds() const {
        return polytope_match && invariant_failures.empty() && locally_free();
    }
};

/// Order of the stabilizer of the W-torus at points whose nonzero coordinates
/// are exactly `support`; nullopt when it is positive-dimensional.
inline std::optional<Integer> torus_stabilizer_order(const IntMat& weights,
                                                     const std::vector<std::size_t>& support) {
    if (weights.rows() == 0)
        return Integer(1);
    IntMat sub = weights.select_columns(support);
    if (support.empty())
        return std::nullopt;
    SmithForm s = snf(sub);
    Integer order = 1;
    IntVec diag = s.diagonal();
    if (diag.size() < weights.rows())
        return std::nullopt;
    for (const auto& x : diag) {
        if (x == 0)
            return std::nullopt;
        order *= x;
    }
    return order;
}

inline VerificationReport verify_presentation(const SpherePresentation& pres,
                                              const ToricContactDatum& d) {
    detail::check_presentation_shapes(pres);
    if (pres.beta.rows() != d.ambient_dim())
        throw Error("presentation ambient dimension " + std::to_string(pres.beta.rows()) +
                    " does not match the datum's " + std::to_string(d.ambient_dim()));
    const IntVec reeb = d.integral_reeb();
    VerificationReport rep;
    const IntMat& w = pres.weights;
    const std::size_t expected_rows = pres.N - std::min(pres.N, d.ambient_dim());

    if (w.rows() != expected_rows)
        rep.invariant_failures.push_back("weights has " + std::to_string(w.rows()) +
                                         " rows, expected N-n-1 = " +
                                         std::to_string(expected_rows));
    if (w.rows() > 0 && !(pres.beta * w.transpose()).is_zero())
        rep.invariant_failures.push_back("beta * W^T != 0");
    if (w.rows() > 0 && w.rows() == expected_rows) {
        IntVec diag = snf(w).diagonal();
        bool saturated = diag.size() == w.rows() &&
                         std::all_of(diag.begin(), diag.end(),
                                     [](const Integer& x) { return x == 1; });
        if (!saturated)
            rep.invariant_failures.push_back("weight rows do not form a saturated lattice basis");
    }
    if (rank(pres.beta) != pres.beta.rows())
        rep.invariant_failures.push_back("rank(beta) != n+1");
    for (std::size_t i = 0; i < pres.N; ++i)
        if (pres.deformation[i] <= 0)
            rep.invariant_failures.push_back("deformation entry " + std::to_string(i) +
                                             " is not positive");
    RatVec ba = pres.beta * pres.deformation;
    if (ba != to_rational(reeb))
        rep.invariant_failures.push_back("beta * a = " + format_vector(ba) +
                                         " differs from the characteristic vector " +
                                         format_vector(reeb));

    // Classifying data: the reduced polytope against the datum.
    std::optional<ReducedPolytope> red;
    try {
        red = reduced_polytope(pres);
    } catch (const Error& e) {
        rep.vertex_diff.push_back(std::string("reduced polytope unavailable: ") + e.what());
    }
    if (red) {
        std::vector<Vertex> rv;
        try {
            rv = vertices(red->polytope, red->reeb);
        } catch (const Error& e) {
            rep.vertex_diff.push_back(std::string("reduced polytope: ") + e.what());
        }
        const auto& dv = d.vertices();
        for (const auto& v : dv)
            if (std::none_of(rv.begin(), rv.end(),
                             [&](const Vertex& x) { return x.coords == v.coords; }))
                rep.vertex_diff.push_back("missing vertex " + format_vector(v.coords));
        for (const auto& v : rv)
            if (std::none_of(dv.begin(), dv.end(),
                             [&](const Vertex& x) { return x.coords == v.coords; }))
                rep.vertex_diff.push_back("extra vertex " + format_vector(v.coords));
        if (red->reeb != reeb)
            rep.vertex_diff.push_back("reduced characteristic vector " +
                                      format_vector(red->reeb) + " != " + format_vector(reeb));
        bool facets_ok = rep.vertex_diff.empty() &&
                         same_labeled_polytope(red->polytope, red->reeb, d.polytope(), reeb);
        if (rep.vertex_diff.empty() && !facets_ok)
            rep.vertex_diff.push_back("facet data differ");
        rep.polytope_match = facets_ok;
    }

    // Level-set consistency and local freeness at each vertex: s = beta^T v
    // must satisfy s >= 0, W s = 0, <a, s> = 1.
    bool smooth = true;
    for (const auto& v : d.vertices()) {
        RatVec s(pres.N, Rational(0));
        for (std::size_t i = 0; i < pres.N; ++i)
            for (std::size_t r = 0; r < pres.beta.rows(); ++r)
                s[i] += v.coords[r] * pres.beta(r, i);
        std::vector<std::size_t> support;
        for (std::size_t i = 0; i < pres.N; ++i) {
            if (s[i] < 0)
                rep.vertex_diff.push_back("vertex " + format_vector(v.coords) +
                                          " maps outside the positive orthant");
            if (s[i] != 0)
                support.push_back(i);
        }
        if (w.rows() > 0 && w.cols() == pres.N) {
            RatVec ws = w * s;
            if (std::any_of(ws.begin(), ws.end(), [](const Rational& q) { return q != 0; }))
                rep.vertex_diff.push_back("vertex " + format_vector(v.coords) +
                                          " is off the zero set of the torus moment map");
        }
        if (dot(pres.deformation, s) != 1)
            rep.vertex_diff.push_back("vertex " + format_vector(v.coords) +
                                      " is off the ellipsoid sum a_i |z_i|^2 = 1");
        auto order = torus_stabilizer_order(w, support);
        smooth = smooth && order && *order == 1;
        rep.local_freeness.push_back(VertexStabilizer{v.coords, order});
    }
    if (!rep.vertex_diff.empty())
        rep.polytope_match = false;
    rep.smooth = smooth;
    return rep;
}

}  // namespace toric_contact

#endif  // TORIC_CONTACT_REDUCTION_HPP
