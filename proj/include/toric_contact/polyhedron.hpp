#ifndef TORIC_CONTACT_POLYHEDRON_HPP
#define TORIC_CONTACT_POLYHEDRON_HPP

// Exact enumeration of vertices and extreme rays of {x : A x <= b, E x = f}
// by intersecting subsets of inequality hyperplanes. Exponential in general;
// meant for the modest facet counts of simple polytopes.

#include <toric_contact/rational_linalg.hpp>

#include <map>
#include <set>

namespace toric_contact {

struct Polyhedron {
    RatRows ineq;  // rows a_i: <a_i, x> <= b_i
    RatVec ineq_rhs;
    RatRows eq;  // rows e_j: <e_j, x> = f_j
    RatVec eq_rhs;
    std::size_t dim = 0;
};

struct EnumeratedVertex {
    RatVec point;
    std::vector<std::size_t> active;  // tight inequality indices, ascending
};

struct PolyhedronStructure {
    bool feasible = false;
    std::size_t lineality_dim = 0;
    std::vector<EnumeratedVertex> vertices;  // lexicographic by point
    std::vector<IntVec> rays;                // primitive integer directions
    bool bounded() const { return feasible && lineality_dim == 0 && rays.empty(); }
};

namespace detail {

// Calls f(subset) for each k-subset of {0..n-1} in lexicographic order.
template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
    if (k > n)
        return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i)
        idx[i] = i;
    while (true) {
        f(static_cast<const std::vector<std::size_t>&>(idx));
        if (k == 0)
            return;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1)
            --i;
        if (i == 0)
            return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

inline bool lex_less(const RatVec& a, const RatVec& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace detail

inline PolyhedronStructure enumerate_polyhedron(const Polyhedron& p) {
    const std::size_t d = p.dim;
    if (p.ineq.size() != p.ineq_rhs.size() || p.eq.size() != p.eq_rhs.size())
        throw Error("polyhedron: row/rhs count mismatch");
    PolyhedronStructure out;

    RatRows all_rows = p.eq;
    all_rows.insert(all_rows.end(), p.ineq.begin(), p.ineq.end());
    RatRows lineality = nullspace(all_rows, d);
    out.lineality_dim = lineality.size();

    // Equalities: the given ones plus the orthogonal complement of the
    // lineality space, reduced to an independent consistent set.
    RatRows eq_aug;
    for (std::size_t j = 0; j < p.eq.size(); ++j) {
        RatVec r = p.eq[j];
        r.push_back(p.eq_rhs[j]);
        eq_aug.push_back(std::move(r));
    }
    for (const auto& l : lineality) {
        RatVec r = l;
        r.push_back(0);
        eq_aug.push_back(std::move(r));
    }
    auto pivots = reduce_to_rref(eq_aug, d);
    for (std::size_t i = pivots.size(); i < eq_aug.size(); ++i)
        if (eq_aug[i][d] != 0)
            return out;  // inconsistent equalities
    RatRows eqs;
    RatVec eq_rhs;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        eqs.emplace_back(eq_aug[i].begin(), eq_aug[i].end() - 1);
        eq_rhs.push_back(eq_aug[i][d]);
    }
    const std::size_t k = d - eqs.size();
    const std::size_t m = p.ineq.size();

    auto satisfies = [&](const RatVec& x) {
        for (std::size_t i = 0; i < m; ++i)
            if (dot(p.ineq[i], x) > p.ineq_rhs[i])
                return false;
        return true;
    };

    std::map<RatVec, std::set<std::size_t>, decltype(&detail::lex_less)> found(
        &detail::lex_less);
    detail::for_each_subset(m, k, [&](const std::vector<std::size_t>& s) {
        RatRows a = eqs;
        RatVec b = eq_rhs;
        for (auto i : s) {
            a.push_back(p.ineq[i]);
            b.push_back(p.ineq_rhs[i]);
        }
        auto x = solve_unique(a, b);
        if (!x || !satisfies(*x))
            return;
        found.try_emplace(*x);
    });
    for (auto& [x, act] : found) {
        EnumeratedVertex v{x, {}};
        for (std::size_t i = 0; i < m; ++i)
            if (dot(p.ineq[i], x) == p.ineq_rhs[i])
                v.active.push_back(i);
        out.vertices.push_back(std::move(v));
    }
    out.feasible = !out.vertices.empty();

    // Extreme rays of the recession cone {E x = 0, A x <= 0} (pointed here).
    if (k >= 1) {
        std::set<IntVec> rays;
        detail::for_each_subset(m, k - 1, [&](const std::vector<std::size_t>& s) {
            RatRows a = eqs;
            for (auto i : s)
                a.push_back(p.ineq[i]);
            RatRows ns = nullspace(a, d);
            if (ns.size() != 1)
                return;
            IntVec dir = integral_direction(ns.front());
            for (int sign : {1, -1}) {
                RatVec r;
                for (const auto& z : dir)
                    r.emplace_back(sign * z);
                bool ok = true;
                for (std::size_t i = 0; i < m && ok; ++i)
                    ok = dot(p.ineq[i], r) <= 0;
                if (ok)
                    rays.insert(to_integer(r));
            }
        });
        out.rays.assign(rays.begin(), rays.end());
    }
    return out;
}

}  // namespace toric_contact

#endif  // TORIC_CONTACT_POLYHEDRON_HPP
