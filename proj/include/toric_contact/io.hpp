#ifndef TORIC_CONTACT_IO_HPP
#define TORIC_CONTACT_IO_HPP

// JSON documents for data, presentations, cones and reports. Rationals are
// strings "p/q" (or "p"); integers are JSON numbers when they fit in 64 bits
// and decimal strings otherwise. Both forms are accepted on input.

#include <toric_contact/reduction.hpp>
#include <toric_contact/sphere_models.hpp>

#include <json.hpp>

#include <limits>

namespace toric_contact::io {

using json = nlohmann::ordered_json;

inline json integer_to_json(const Integer& z) {
    if (z.fits_slong_p())
        return z.get_si();
    return z.get_str();
}

inline Integer integer_from_json(const json& j, const std::string& what) {
    if (j.is_number_unsigned())
        return Integer(std::to_string(j.get<std::uint64_t>()));
    if (j.is_number_integer())
        return Integer(j.get<long>());
    if (j.is_string()) {
        Rational q = parse_rational(j.get<std::string>());
        if (!is_integral(q))
            throw Error(what + ": expected an integer, got " + j.get<std::string>());
        return q.get_num();
    }
    throw Error(what + ": expected an integer");
}

inline Rational rational_from_json(const json& j, const std::string& what) {
    if (j.is_number_integer())
        return Rational(integer_from_json(j, what));
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const Error& e) {
            throw Error(what + ": " + e.what());
        }
    }
    throw Error(what + ": expected a rational string \"p/q\"");
}

inline json to_json(const IntVec& v) {
    json a = json::array();
    for (const auto& z : v)
        a.push_back(integer_to_json(z));
    return a;
}

inline json to_json(const RatVec& v) {
    json a = json::array();
    for (const auto& q : v)
        a.push_back(to_string(q));
    return a;
}

inline const json& require(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw Error(std::string("missing field '") + key + "'");
    return j.at(key);
}

inline IntVec int_vector_from_json(const json& j, const std::string& what) {
    if (!j.is_array())
        throw Error(what + ": expected an array");
    IntVec v;
    for (const auto& x : j)
        v.push_back(integer_from_json(x, what));
    return v;
}

inline RatVec rat_vector_from_json(const json& j, const std::string& what) {
    if (!j.is_array())
        throw Error(what + ": expected an array");
    RatVec v;
    for (const auto& x : j)
        v.push_back(rational_from_json(x, what));
    return v;
}

/// Parses JSON text, reporting syntax errors with line and column.
inline json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw Error("syntax error at line " + std::to_string(line) + ", column " +
                    std::to_string(col) + ": " + e.what());
    }
}

// -- datum ------------------------------------------------------------------

inline json datum_to_json(const LabeledPolytope& p, const RatVec& reeb, ReebMode mode) {
    json facets = json::array();
    for (const auto& f : p.facets)
        facets.push_back(json{{"normal", to_json(f.normal)},
                              {"label", integer_to_json(f.label)},
                              {"offset", to_string(f.offset)}});
    return json{{"ambient_dim", p.ambient_dim},
                {"facets", std::move(facets)},
                {"reeb", to_json(reeb)},
                {"mode", to_string(mode)}};
}

inline json to_json(const ToricContactDatum& d) {
    return datum_to_json(d.polytope(), d.reeb(), d.mode());
}

struct DatumDocument {
    LabeledPolytope polytope;
    RatVec reeb;
    ReebMode mode = ReebMode::rational;
};

inline DatumDocument datum_document_from_json(const json& j) {
    DatumDocument doc;
    const json& dim = require(j, "ambient_dim");
    if (!dim.is_number_unsigned() || dim.get<std::size_t>() == 0)
        throw Error("ambient_dim: expected a positive integer");
    doc.polytope.ambient_dim = dim.get<std::size_t>();
    const json& facets = require(j, "facets");
    if (!facets.is_array())
        throw Error("facets: expected an array");
    for (std::size_t i = 0; i < facets.size(); ++i) {
        const std::string where = "facet " + std::to_string(i);
        const json& f = facets[i];
        IntVec normal = int_vector_from_json(require(f, "normal"), where + " normal");
        if (normal.size() != doc.polytope.ambient_dim)
            throw Error(where + ": normal has length " + std::to_string(normal.size()) +
                        ", expected ambient_dim = " +
                        std::to_string(doc.polytope.ambient_dim));
        Integer label = f.contains("label") ? integer_from_json(f.at("label"), where + " label")
                                            : Integer(1);
        Rational offset = f.contains("offset")
                              ? rational_from_json(f.at("offset"), where + " offset")
                              : Rational(0);
        try {
            doc.polytope.facets.push_back(make_facet(std::move(normal), label, offset));
        } catch (const Error& e) {
            throw Error(where + ": " + e.what());
        }
    }
    doc.reeb = rat_vector_from_json(require(j, "reeb"), "reeb");
    if (doc.reeb.size() != doc.polytope.ambient_dim)
        throw Error("reeb: length " + std::to_string(doc.reeb.size()) +
                    " does not match ambient_dim = " + std::to_string(doc.polytope.ambient_dim));
    if (j.contains("mode")) {
        const json& m = j.at("mode");
        if (m == "rational")
            doc.mode = ReebMode::rational;
        else if (m == "irrational")
            doc.mode = ReebMode::irrational;
        else
            throw Error("mode: expected \"rational\" or \"irrational\"");
    }
    return doc;
}

inline ToricContactDatum datum_from_json(const json& j) {
    DatumDocument doc = datum_document_from_json(j);
    return validate_datum(std::move(doc.polytope), std::move(doc.reeb), doc.mode);
}

inline ToricContactDatum parse_datum(const std::string& text) {
    return datum_from_json(parse_json(text));
}

// -- presentation -----------------------------------------------------------

inline json matrix_entries(const IntMat& m) {
    json a = json::array();
    for (const auto& z : m.entries())
        a.push_back(integer_to_json(z));
    return a;
}

inline json to_json(const SpherePresentation& p) {
    return json{{"N", p.N},
                {"beta", matrix_entries(p.beta)},
                {"weights", matrix_entries(p.weights)},
                {"deformation", to_json(p.deformation)}};
}

inline IntMat matrix_from_json(const json& j, std::size_t cols, const std::string& what) {
    IntVec flat = int_vector_from_json(j, what);
    if (flat.size() % cols != 0)
        throw Error(what + ": " + std::to_string(flat.size()) +
                    " entries is not a multiple of N = " + std::to_string(cols));
    IntMat m(flat.size() / cols, cols);
    for (std::size_t i = 0; i < flat.size(); ++i)
        m(i / cols, i % cols) = flat[i];
    return m;
}

inline SpherePresentation presentation_from_json(const json& j) {
    const json& n = require(j, "N");
    if (!n.is_number_unsigned() || n.get<std::size_t>() == 0)
        throw Error("N: expected a positive integer");
    SpherePresentation p;
    p.N = n.get<std::size_t>();
    p.beta = matrix_from_json(require(j, "beta"), p.N, "beta");
    p.weights = matrix_from_json(require(j, "weights"), p.N, "weights");
    p.deformation = rat_vector_from_json(require(j, "deformation"), "deformation");
    if (p.deformation.size() != p.N)
        throw Error("deformation: expected N = " + std::to_string(p.N) + " entries");
    return p;
}

inline SpherePresentation parse_presentation(const std::string& text) {
    return presentation_from_json(parse_json(text));
}

// -- reports ----------------------------------------------------------------

inline json to_json(const MomentCone& c) {
    json normals = json::array();
    for (const auto& n : c.normals)
        normals.push_back(json{{"normal", to_json(n.normal)}, {"label", integer_to_json(n.label)}});
    return json{{"ambient_dim", c.ambient_dim}, {"normals", std::move(normals)}};
}

inline json to_json(const FiniteAbelianGroup& g) {
    return json{{"invariant_factors", to_json(g.invariant_factors())},
                {"free_rank", g.free_rank()},
                {"name", g.to_string()}};
}

inline json to_json(const ClassificationReport& r) {
    json faces = json::array();
    for (const auto& f : r.per_face) {
        json basis = json::array();
        for (const auto& b : f.isotropy_basis)
            basis.push_back(to_json(b));
        faces.push_back(json{{"face", f.face},
                             {"isotropy_basis", std::move(basis)},
                             {"holonomy", to_json(f.holonomy)},
                             {"sample_point", to_json(f.sample_point)}});
    }
    return json{{"regularity", to_string(r.regularity)},
                {"sasakian_compatible", r.sasakian_compatible},
                {"per_face", std::move(faces)}};
}

inline json to_json(const VerificationReport& r) {
    json freeness = json::array();
    for (const auto& s : r.local_freeness)
        freeness.push_back(json{{"vertex", to_json(s.vertex)},
                                {"finite", s.order.has_value()},
                                {"stabilizer_order",
                                 s.order ? integer_to_json(*s.order) : json(nullptr)}});
    return json{{"holds", r.holds()},
                {"polytope_match", r.polytope_match},
                {"vertex_diff", r.vertex_diff},
                {"invariant_failures", r.invariant_failures},
                {"local_freeness", std::move(freeness)},
                {"smooth", r.smooth}};
}

inline json to_json(const ConvexityReport& r) {
    json failures = json::array();
    for (const auto& f : r.failures)
        failures.push_back(json{{"sample", f.sample_index}, {"mu", f.mu}, {"violation", f.violation}});
    return json{{"count", r.count},
                {"tolerance", r.tolerance},
                {"max_violation", r.max_violation},
                {"violations", failures.size()},
                {"failures", std::move(failures)}};
}

inline json vertices_to_json(const std::vector<Vertex>& vs) {
    json a = json::array();
    for (const auto& v : vs)
        a.push_back(json{{"coords", to_json(v.coords)}, {"facets", v.facet_indices}});
    return a;
}

}  // namespace toric_contact::io

#endif  // TORIC_CONTACT_IO_HPP
