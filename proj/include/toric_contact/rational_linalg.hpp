#ifndef TORIC_CONTACT_RATIONAL_LINALG_HPP
#define TORIC_CONTACT_RATIONAL_LINALG_HPP

#include <toric_contact/arith.hpp>

#include <optional>

namespace toric_contact {

using RatRows = std::vector<RatVec>;

inline RatRows to_rational_rows(const IntMat& m) {
    RatRows out;
    for (std::size_t r = 0; r < m.rows(); ++r)
        out.push_back(to_rational(m.row(r)));
    return out;
}

/// Reduced row echelon form over Q, in place. Returns the pivot columns.
/// Only the first `ncols` columns are eligible as pivots (augmented systems).
inline std::vector<std::size_t> reduce_to_rref(RatRows& a, std::size_t ncols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < a.size(); ++col) {
        std::size_t p = row;
        while (p < a.size() && a[p][col] == 0)
            ++p;
        if (p == a.size())
            continue;
        std::swap(a[p], a[row]);
        Rational inv = 1 / a[row][col];
        for (auto& x : a[row])
            x *= inv;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == row || a[i][col] == 0)
                continue;
            Rational f = a[i][col];
            for (std::size_t j = col; j < a[i].size(); ++j)
                a[i][j] -= f * a[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline std::size_t rank(RatRows a) {
    if (a.empty())
        return 0;
    return reduce_to_rref(a, a.front().size()).size();
}

inline std::size_t rank(const IntMat& m) { return rank(to_rational_rows(m)); }

/// Some solution of A x = b (free variables set to zero), or nullopt when the
/// system is inconsistent. `ncols` is needed when A has no rows.
inline std::optional<RatVec> particular_solution(const RatRows& a, const RatVec& b,
                                                 std::size_t ncols) {
    if (a.size() != b.size())
        throw Error("dimension mismatch in linear system");
    RatRows aug;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != ncols)
            throw Error("dimension mismatch in linear system");
        RatVec r = a[i];
        r.push_back(b[i]);
        aug.push_back(std::move(r));
    }
    auto pivots = reduce_to_rref(aug, ncols);
    for (std::size_t i = pivots.size(); i < aug.size(); ++i)
        if (aug[i][ncols] != 0)
            return std::nullopt;
    RatVec x(ncols, Rational(0));
    for (std::size_t i = 0; i < pivots.size(); ++i)
        x[pivots[i]] = aug[i][ncols];
    return x;
}

/// Unique solution of a square system, nullopt when singular.
inline std::optional<RatVec> solve_unique(const RatRows& a, const RatVec& b) {
    const std::size_t n = b.size();
    if (a.size() != n)
        return std::nullopt;
    RatRows aug;
    for (std::size_t i = 0; i < n; ++i) {
        RatVec r = a[i];
        r.push_back(b[i]);
        aug.push_back(std::move(r));
    }
    if (reduce_to_rref(aug, n).size() != n)
        return std::nullopt;
    RatVec x(n);
    for (std::size_t i = 0; i < n; ++i)
        x[i] = aug[i][n];
    return x;
}

/// Basis of {x : A x = 0} over Q.
inline RatRows nullspace(RatRows a, std::size_t ncols) {
    auto pivots = reduce_to_rref(a, ncols);
    std::vector<bool> is_pivot(ncols, false);
    for (auto p : pivots)
        is_pivot[p] = true;
    RatRows basis;
    for (std::size_t f = 0; f < ncols; ++f) {
        if (is_pivot[f])
            continue;
        RatVec v(ncols, Rational(0));
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -a[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Clears denominators and divides by the content; direction preserved.
inline IntVec integral_direction(const RatVec& v) {
    Integer l = 1;
    for (const auto& q : v)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    IntVec out;
    for (const auto& q : v) {
        Rational s = q * l;
        out.push_back(s.get_num());
    }
    Integer g = gcd(out);
    if (g > 1)
        for (auto& x : out)
            x /= g;
    return out;
}

}  // namespace toric_contact

#endif  // TORIC_CONTACT_RATIONAL_LINALG_HPP
