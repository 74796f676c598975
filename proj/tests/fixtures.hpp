#ifndef TORIC_CONTACT_TESTS_FIXTURES_HPP
#define TORIC_CONTACT_TESTS_FIXTURES_HPP

#include <toric_contact/toric_contact.hpp>

namespace fixtures {

using namespace toric_contact;

inline RatVec rv(std::initializer_list<long> xs) {
    RatVec v;
    for (long x : xs)
        v.emplace_back(x);
    return v;
}

inline IntVec iv(std::initializer_list<long> xs) { return IntVec(xs.begin(), xs.end()); }

inline Rational q(long num, long den = 1) { return make_rational(num, den); }

/// Facets r_i >= 0 in ambient dimension `dim`, with optional labels.
inline LabeledPolytope orthant_facets(std::size_t dim, std::vector<long> labels = {}) {
    LabeledPolytope p{dim, {}};
    for (std::size_t i = 0; i < dim; ++i)
        p.facets.push_back(
            make_facet(unit_vector(dim, i, -1), labels.empty() ? 1 : labels[i], 0));
    return p;
}

/// Unit 3-cube {0 <= x_j <= 1} in the hyperplane x_3 = 1 of R^4, written in
/// cone form (all offsets zero). The facet x_2 <= 1 carries label 2.
inline LabeledPolytope cube_polytope() {
    LabeledPolytope p{4, {}};
    for (std::size_t j = 0; j < 3; ++j)
        p.facets.push_back(make_facet(unit_vector(4, j, -1), 1, 0));  // x_j >= 0
    p.facets.push_back(make_facet(iv({1, 0, 0, -1}), 1, 0));           // x_0 <= x_3
    p.facets.push_back(make_facet(iv({0, 1, 0, -1}), 1, 0));           // x_1 <= x_3
    p.facets.push_back(make_facet(iv({0, 0, 1, -1}), 2, 0));           // x_2 <= x_3
    return p;
}

inline IntVec cube_reeb() { return iv({0, 0, 0, 1}); }

inline ToricContactDatum cube_datum() { return validate_datum(cube_polytope(), cube_reeb()); }

/// Triangle in x_2 = 1 whose facets with normals (1,0,.) and (1,2,.) meet at a
/// vertex; their images in Z^3 / Z e_2 span an index-2 sublattice.
inline ToricContactDatum nonunimodular_triangle() {
    LabeledPolytope p{3, {}};
    p.facets.push_back(make_facet(iv({1, 0, -1}), 1, 0));    // x_0 <= 1
    p.facets.push_back(make_facet(iv({1, 2, -3}), 1, 0));    // x_0 + 2 x_1 <= 3
    p.facets.push_back(make_facet(iv({-1, -1, 0}), 1, 0));   // x_0 + x_1 >= 0
    return validate_datum(std::move(p), iv({0, 0, 1}));
}

/// The same unit cube with offsets: x_j <= 1 written as <x, e_j> <= 1.
inline LabeledPolytope cube_with_offsets() {
    LabeledPolytope p{4, {}};
    for (std::size_t j = 0; j < 3; ++j)
        p.facets.push_back(make_facet(unit_vector(4, j, -1), 1, 0));
    for (std::size_t j = 0; j < 3; ++j)
        p.facets.push_back(make_facet(unit_vector(4, j, 1), 1, 1));
    return p;
}

}  // namespace fixtures

#endif  // TORIC_CONTACT_TESTS_FIXTURES_HPP
