#ifndef TORIC_CONTACT_POLYTOPE_HPP
#define TORIC_CONTACT_POLYTOPE_HPP

// Labeled rational polytopes in a characteristic hyperplane <x, reeb> = 1 and
// the cones over them.
//
// Conventions:
//   facet i        <x, m_i p_i> <= lambda_i   (p_i outward and primitive)
//   cone facet i   <x, mhat_i qhat_i> >= 0    (qhat_i inward and primitive)
// Coning sends facet i to the inward normal lambda_i * reeb - m_i p_i.

#include <toric_contact/lattice.hpp>
#include <toric_contact/polyhedron.hpp>

#include <set>

namespace toric_contact {

struct LabeledFacet {
    IntVec normal;       // p, primitive, outward
    Integer label = 1;   // m >= 1
    Rational offset = 0; // lambda

    IntVec scaled_normal() const {
        IntVec y(normal);
        for (auto& x : y)
            x *= label;
        return y;
    }

    friend bool operator==(const LabeledFacet&, const LabeledFacet&) = default;
};

inline LabeledFacet make_facet(IntVec normal, Integer label, Rational offset = 0) {
    if (normal.empty())
        throw Error("facet normal is empty");
    if (label < 1)
        throw Error("facet label must be a positive integer");
    if (gcd(normal) == 0)
        throw Error("facet normal is zero");
    if (!is_primitive(normal)) {
        Integer g = gcd(normal);
        std::string fixed;
        for (const auto& x : primitive(normal))
            fixed += (fixed.empty() ? "" : ",") + x.get_str();
        throw Error("normal not primitive; write label " + Integer(g * label).get_str() +
                    ", normal (" + fixed + ")");
    }
    return LabeledFacet{std::move(normal), std::move(label), std::move(offset)};
}

struct LabeledPolytope {
    std::size_t ambient_dim = 0;
    std::vector<LabeledFacet> facets;

    friend bool operator==(const LabeledPolytope&, const LabeledPolytope&) = default;
};

struct Vertex {
    RatVec coords;
    std::vector<std::size_t> facet_indices;  // active facets, ascending

    friend bool operator==(const Vertex&, const Vertex&) = default;
};

struct ConeFacet {
    IntVec normal;     // qhat, primitive, inward
    Integer label = 1; // mhat

    IntVec scaled_normal() const {
        IntVec y(normal);
        for (auto& x : y)
            x *= label;
        return y;
    }

    friend bool operator==(const ConeFacet&, const ConeFacet&) = default;
};

struct MomentCone {
    std::size_t ambient_dim = 0;
    std::vector<ConeFacet> normals;  // cone = {x : <x, mhat qhat> >= 0}

    friend bool operator==(const MomentCone&, const MomentCone&) = default;
};

namespace detail {

inline void check_shapes(const LabeledPolytope& p, std::size_t reeb_size) {
    if (p.ambient_dim == 0)
        throw Error("ambient dimension must be positive");
    if (reeb_size != p.ambient_dim)
        throw Error("characteristic vector has length " + std::to_string(reeb_size) +
                    ", expected " + std::to_string(p.ambient_dim));
    for (std::size_t i = 0; i < p.facets.size(); ++i)
        if (p.facets[i].normal.size() != p.ambient_dim)
            throw Error("facet " + std::to_string(i) + " normal has wrong length");
}

inline Polyhedron slice_system(const LabeledPolytope& p, const RatVec& reeb) {
    Polyhedron sys;
    sys.dim = p.ambient_dim;
    for (const auto& f : p.facets) {
        sys.ineq.push_back(to_rational(f.scaled_normal()));
        sys.ineq_rhs.push_back(f.offset);
    }
    sys.eq.push_back(reeb);
    sys.eq_rhs.push_back(1);
    return sys;
}

}  // namespace detail

/// Vertices of P intersected with <x, reeb> = 1, lexicographically ordered,
/// each with every facet tight at it.
inline std::vector<Vertex> vertices(const LabeledPolytope& p, const RatVec& reeb) {
    detail::check_shapes(p, reeb.size());
    if (std::all_of(reeb.begin(), reeb.end(), [](const Rational& q) { return q == 0; }))
        throw Error("characteristic vector is zero");
    if (p.facets.size() + 1 < p.ambient_dim)
        throw Error("too few facets for a polytope of dimension " +
                    std::to_string(p.ambient_dim - 1));
    PolyhedronStructure s = enumerate_polyhedron(detail::slice_system(p, reeb));
    if (!s.feasible)
        throw Error("empty polytope");
    if (!s.bounded())
        throw Error("polytope unbounded in characteristic hyperplane");
    std::vector<Vertex> out;
    for (auto& v : s.vertices)
        out.push_back(Vertex{std::move(v.point), std::move(v.active)});
    return out;
}

inline std::vector<Vertex> vertices(const LabeledPolytope& p, const IntVec& reeb) {
    return vertices(p, to_rational(reeb));
}

inline bool is_simple(const LabeledPolytope& p, const RatVec& reeb) {
    const std::size_t n = p.ambient_dim - 1;
    for (const auto& v : vertices(p, reeb))
        if (v.facet_indices.size() != n)
            return false;
    return true;
}

/// Facet data are integral by type, so rationality reduces to an integral
/// characteristic vector.
inline bool is_rational(const LabeledPolytope&, const RatVec& reeb) {
    return is_integral(reeb);
}

inline bool contains(const LabeledPolytope& p, const RatVec& reeb, const RatVec& point) {
    detail::check_shapes(p, reeb.size());
    if (point.size() != p.ambient_dim)
        throw Error("point has length " + std::to_string(point.size()) + ", expected " +
                    std::to_string(p.ambient_dim));
    if (dot(point, reeb) != 1)
        return false;
    for (const auto& f : p.facets)
        if (dot(point, f.scaled_normal()) > f.offset)
            return false;
    return true;
}

inline std::vector<std::size_t> faces_containing(const LabeledPolytope& p,
                                                 const RatVec& reeb, const RatVec& point) {
    if (!contains(p, reeb, point))
        throw Error("point not in polytope");
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < p.facets.size(); ++i)
        if (dot(point, p.facets[i].scaled_normal()) == p.facets[i].offset)
            out.push_back(i);
    return out;
}

/// Inward normal of the cone facet over facet f: lambda * reeb - m * p.
inline IntVec cone_normal(const LabeledFacet& f, const IntVec& reeb) {
    if (f.normal.size() != reeb.size())
        throw Error("facet normal and characteristic vector differ in length");
    IntVec out;
    for (std::size_t j = 0; j < reeb.size(); ++j) {
        Rational v = f.offset * reeb[j] - f.label * f.normal[j];
        if (!is_integral(v))
            throw Error("cone normal decomposition not integral: offset " +
                        to_string(f.offset) + " times the characteristic vector is not integral");
        out.push_back(v.get_num());
    }
    return out;
}

inline ConeFacet decompose_cone_normal(const IntVec& nu) {
    Integer g = gcd(nu);
    if (g == 0)
        throw Error("degenerate facet under coning");
    return ConeFacet{primitive(nu), g};
}

inline MomentCone cone_over(const LabeledPolytope& p, const IntVec& reeb) {
    detail::check_shapes(p, reeb.size());
    MomentCone c{p.ambient_dim, {}};
    for (const auto& f : p.facets)
        c.normals.push_back(decompose_cone_normal(cone_normal(f, reeb)));
    return c;
}

inline MomentCone cone_over(const LabeledPolytope& p, const RatVec& reeb) {
    if (!is_integral(reeb))
        throw Error("characteristic vector not integral; the cone needs a rational polytope");
    return cone_over(p, to_integer(reeb));
}

struct ConeStructure {
    std::size_t lineality_dim = 0;
    std::vector<IntVec> rays;  // extreme rays, primitive
};

inline ConeStructure cone_structure(const MomentCone& c) {
    Polyhedron sys;
    sys.dim = c.ambient_dim;
    for (const auto& n : c.normals) {
        RatVec row;
        for (const auto& z : n.scaled_normal())
            row.emplace_back(-z);
        sys.ineq.push_back(std::move(row));
        sys.ineq_rhs.push_back(0);
    }
    PolyhedronStructure s = enumerate_polyhedron(sys);
    return ConeStructure{s.lineality_dim, s.rays};
}

/// Contains no line.
inline bool is_strongly_convex(const MomentCone& c) {
    return cone_structure(c).lineality_dim == 0;
}

/// Labels of the cone facets carried onto the sliced polytope. The cone keeps
/// (mhat, qhat) per facet and re-slicing does not alter them.
inline Integer transport_labels(const ConeFacet& f) { return f.label; }

inline LabeledPolytope slice_cone(const MomentCone& c, const IntVec& reeb) {
    if (reeb.size() != c.ambient_dim)
        throw Error("characteristic vector has wrong length");
    ConeStructure s = cone_structure(c);
    bool positive = s.lineality_dim == 0 && !s.rays.empty();
    for (const auto& r : s.rays)
        positive = positive && dot(r, reeb) > 0;
    if (!positive)
        throw Error("characteristic vector not in interior of dual cone");
    LabeledPolytope p{c.ambient_dim, {}};
    for (const auto& n : c.normals) {
        IntVec outward(n.normal);
        for (auto& x : outward)
            x = -x;
        p.facets.push_back(LabeledFacet{std::move(outward), transport_labels(n), 0});
    }
    return p;
}

/// Equality of labeled polytopes sliced by their characteristic vectors:
/// same reeb, same vertex set, and the same facets as a multiset of cone
/// normals (offsets absorbed into the normal).
inline bool same_labeled_polytope(const LabeledPolytope& a, const IntVec& reeb_a,
                                  const LabeledPolytope& b, const IntVec& reeb_b) {
    if (a.ambient_dim != b.ambient_dim || reeb_a != reeb_b ||
        a.facets.size() != b.facets.size())
        return false;
    std::multiset<IntVec> na, nb;
    for (const auto& f : a.facets)
        na.insert(cone_normal(f, reeb_a));
    for (const auto& f : b.facets)
        nb.insert(cone_normal(f, reeb_b));
    if (na != nb)
        return false;
    auto va = vertices(a, reeb_a);
    auto vb = vertices(b, reeb_b);
    if (va.size() != vb.size())
        return false;
    for (std::size_t i = 0; i < va.size(); ++i)
        if (va[i].coords != vb[i].coords)
            return false;
    return true;
}

}  // namespace toric_contact

#endif  // TORIC_CONTACT_POLYTOPE_HPP
