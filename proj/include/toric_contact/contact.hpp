#ifndef TORIC_CONTACT_CONTACT_HPP
#define TORIC_CONTACT_CONTACT_HPP

// Toric contact data (labeled polytope + characteristic vector) and their
// combinatorial invariants: isotropy, leaf holonomy and regularity.
//
// Leaf holonomy is computed in the lattice of the torus that acts on the leaf
// space, Z^{n+1} / Z*prim(reeb). With pbar_i the image of the facet normal
// p_i there, a point on the face cut out by facets I has holonomy
//     sat(span{pbar_i : i in I}) / <m_i * prim(pbar_i) : i in I>.

#include <toric_contact/polytope.hpp>

namespace toric_contact {

enum class ReebMode { rational, irrational };

inline std::string to_string(ReebMode m) {
    return m == ReebMode::rational ? "rational" : "irrational";
}

class ToricContactDatum;
ToricContactDatum validate_datum(LabeledPolytope p, RatVec reeb,
                                 ReebMode mode = ReebMode::rational);

/// A validated compact simple polytope in the characteristic hyperplane of
/// its Reeb vector. Only `validate_datum` constructs one.
class ToricContactDatum {
public:
    const LabeledPolytope& polytope() const { return polytope_; }
    const RatVec& reeb() const { return reeb_; }
    ReebMode mode() const { return mode_; }
    const std::vector<Vertex>& vertices() const { return vertices_; }

    std::size_t ambient_dim() const { return polytope_.ambient_dim; }
    std::size_t dimension() const { return polytope_.ambient_dim - 1; }
    std::size_t facet_count() const { return polytope_.facets.size(); }
    bool is_quasi_regular_form() const { return is_integral(reeb_); }

    /// Integral Reeb vector; throws in irrational mode.
    IntVec integral_reeb() const {
        if (!is_integral(reeb_))
            throw Error("operation requires an integral characteristic vector "
                        "(irrational mode supports geometry only)");
        return to_integer(reeb_);
    }

    friend bool operator==(const ToricContactDatum& a, const ToricContactDatum& b) {
        return a.polytope_ == b.polytope_ && a.reeb_ == b.reeb_ && a.mode_ == b.mode_;
    }

private:
    friend ToricContactDatum validate_datum(LabeledPolytope, RatVec, ReebMode);
    ToricContactDatum(LabeledPolytope p, RatVec reeb, ReebMode mode, std::vector<Vertex> v)
        : polytope_(std::move(p)), reeb_(std::move(reeb)), mode_(mode),
          vertices_(std::move(v)) {}

    LabeledPolytope polytope_;
    RatVec reeb_;
    ReebMode mode_ = ReebMode::rational;
    std::vector<Vertex> vertices_;
};

inline ToricContactDatum validate_datum(LabeledPolytope p, RatVec reeb, ReebMode mode) {
    detail::check_shapes(p, reeb.size());
    for (const auto& f : p.facets) {
        if (f.label < 1)
            throw Error("facet label must be a positive integer");
        if (!is_primitive(f.normal))
            throw Error("facet normal " + format_vector(f.normal) + " is not primitive");
    }
    if (mode == ReebMode::rational && !is_integral(reeb))
        throw Error("characteristic vector not integral: a rational polytope needs the "
                    "characteristic vector in the lattice of circle subgroups");
    const std::size_t n = p.ambient_dim - 1;
    if (n == 0)
        throw Error("ambient dimension must be at least 2");

    auto verts = toric_contact::vertices(p, reeb);
    for (const auto& v : verts)
        if (dot(v.coords, reeb) != 1)
            throw Error("vertex off characteristic hyperplane");

    RatRows diffs;
    for (const auto& v : verts) {
        RatVec d(v.coords);
        for (std::size_t j = 0; j < d.size(); ++j)
            d[j] -= verts.front().coords[j];
        diffs.push_back(std::move(d));
    }
    if (rank(diffs) != n)
        throw Error("polytope not full-dimensional in the characteristic hyperplane");
    for (const auto& v : verts)
        if (v.facet_indices.size() != n)
            throw Error("polytope not simple: vertex " + format_vector(v.coords) + " lies on " +
                        std::to_string(v.facet_indices.size()) + " facets, expected " +
                        std::to_string(n));

    for (std::size_t i = 0; i < p.facets.size(); ++i) {
        RatRows on_facet;
        const RatVec* base = nullptr;
        for (const auto& v : verts) {
            if (!std::binary_search(v.facet_indices.begin(), v.facet_indices.end(), i))
                continue;
            if (!base) {
                base = &v.coords;
                continue;
            }
            RatVec d(v.coords);
            for (std::size_t j = 0; j < d.size(); ++j)
                d[j] -= (*base)[j];
            on_facet.push_back(std::move(d));
        }
        if (!base || rank(on_facet) + 1 != n)
            throw Error("facet " + std::to_string(i) + " is redundant (not a facet of the polytope)");
        for (std::size_t j = 0; j < i; ++j) {
            bool same = true;
            for (const auto& v : verts) {
                bool on_i = std::binary_search(v.facet_indices.begin(), v.facet_indices.end(), i);
                bool on_j = std::binary_search(v.facet_indices.begin(), v.facet_indices.end(), j);
                same = same && on_i == on_j;
            }
            if (same)
                throw Error("facets " + std::to_string(j) + " and " + std::to_string(i) +
                            " are duplicates");
        }
    }

    RatRows span;
    for (const auto& f : p.facets)
        span.push_back(to_rational(f.normal));
    span.push_back(reeb);
    if (rank(span) != p.ambient_dim)
        throw Error("facet normals and characteristic vector do not span the ambient space");

    return ToricContactDatum(std::move(p), std::move(reeb), mode, std::move(verts));
}

inline ToricContactDatum validate_datum(LabeledPolytope p, const IntVec& reeb,
                                        ReebMode mode = ReebMode::rational) {
    return validate_datum(std::move(p), to_rational(reeb), mode);
}

/// Primitive normals of the facets through the point.
inline std::vector<IntVec> isotropy_algebra(const ToricContactDatum& d, const RatVec& point) {
    std::vector<IntVec> out;
    for (auto i : faces_containing(d.polytope(), d.reeb(), point))
        out.push_back(d.polytope().facets[i].normal);
    return out;
}

/// Facet sets of all nonempty faces, starting with the empty set (the whole
/// polytope), then by size, lexicographic within a size.
inline std::vector<std::vector<std::size_t>> face_lattice(const ToricContactDatum& d) {
    std::set<std::vector<std::size_t>> faces;
    for (const auto& v : d.vertices()) {
        const auto& act = v.facet_indices;
        const std::size_t k = act.size();
        for (std::size_t r = 0; r <= k; ++r)
            detail::for_each_subset(k, r, [&](const std::vector<std::size_t>& s) {
                std::vector<std::size_t> face;
                for (auto i : s)
                    face.push_back(act[i]);
                faces.insert(std::move(face));
            });
    }
    std::vector<std::vector<std::size_t>> out(faces.begin(), faces.end());
    std::stable_sort(out.begin(), out.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    return out;
}

/// Vertices lying on every facet in `face`.
inline std::vector<const Vertex*> face_vertices(const ToricContactDatum& d,
                                                const std::vector<std::size_t>& face) {
    std::vector<const Vertex*> out;
    for (const auto& v : d.vertices())
        if (std::includes(v.facet_indices.begin(), v.facet_indices.end(), face.begin(),
                          face.end()))
            out.push_back(&v);
    return out;
}

inline FiniteAbelianGroup holonomy(const ToricContactDatum& d, std::vector<std::size_t> face) {
    IntVec reeb = d.integral_reeb();
    std::sort(face.begin(), face.end());
    face.erase(std::unique(face.begin(), face.end()), face.end());
    for (auto i : face)
        if (i >= d.facet_count())
            throw Error("facet index " + std::to_string(i) + " out of range");
    if (face.empty())
        return {};
    if (face_vertices(d, face).empty())
        throw Error("not a face: the facets have no common point");

    IntMat proj = quotient_projection(primitive(reeb));
    std::vector<IntVec> images, generators;
    for (auto i : face) {
        const auto& f = d.polytope().facets[i];
        IntVec img = proj * f.normal;
        if (gcd(img) == 0)
            throw Error("facet normal parallel to the characteristic vector");
        images.push_back(img);
        IntVec g = primitive(img);
        for (auto& x : g)
            x *= f.label;
        generators.push_back(std::move(g));
    }
    IntMat ambient = saturate(IntMat::from_rows(images));
    return quotient_group(ambient, IntMat::from_rows(generators));
}

enum class Regularity { regular, quasi_regular };

inline std::string to_string(Regularity r) {
    return r == Regularity::regular ? "regular" : "quasi-regular";
}

struct FaceInvariants {
    std::vector<std::size_t> face;
    std::vector<IntVec> isotropy_basis;
    FiniteAbelianGroup holonomy;
    RatVec sample_point;
};

struct ClassificationReport {
    Regularity regularity = Regularity::regular;
    std::vector<FaceInvariants> per_face;
    bool sasakian_compatible = true;
};

inline ClassificationReport classify(const ToricContactDatum& d) {
    d.integral_reeb();
    ClassificationReport rep;
    bool regular = std::all_of(d.polytope().facets.begin(), d.polytope().facets.end(),
                               [](const LabeledFacet& f) { return f.label == 1; });
    for (auto& face : face_lattice(d)) {
        auto verts = face_vertices(d, face);
        RatVec sample(d.ambient_dim(), Rational(0));
        for (const auto* v : verts)
            for (std::size_t j = 0; j < sample.size(); ++j)
                sample[j] += v->coords[j];
        for (auto& x : sample)
            x /= static_cast<long>(verts.size());
        if (faces_containing(d.polytope(), d.reeb(), sample) != face)
            throw Error("internal: face barycenter does not lie in the open face");
        FaceInvariants fi{face, isotropy_algebra(d, sample), holonomy(d, face), sample};
        regular = regular && fi.holonomy.is_trivial();
        rep.per_face.push_back(std::move(fi));
    }
    rep.regularity = regular ? Regularity::regular : Regularity::quasi_regular;
    return rep;
}

inline ToricContactDatum perturb_reeb(const ToricContactDatum& d, const IntVec& new_reeb) {
    MomentCone c = cone_over(d.polytope(), d.integral_reeb());
    return validate_datum(slice_cone(c, new_reeb), new_reeb);
}

struct RescaleResult {
    ToricContactDatum datum;
    bool irrational = false;  // reeb / c left the lattice
};

inline RescaleResult rescale(const ToricContactDatum& d, const Rational& c) {
    if (c <= 0)
        throw Error("rescaling constant must be positive");
    LabeledPolytope p = d.polytope();
    for (auto& f : p.facets)
        f.offset *= c;
    RatVec reeb = d.reeb();
    for (auto& x : reeb)
        x /= c;
    bool irr = !is_integral(reeb);
    ReebMode mode = irr ? ReebMode::irrational : ReebMode::rational;
    return RescaleResult{validate_datum(std::move(p), std::move(reeb), mode), irr};
}

}  // namespace toric_contact

#endif  // TORIC_CONTACT_CONTACT_HPP
