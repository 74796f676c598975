#ifndef TORIC_CONTACT_LATTICE_HPP
#define TORIC_CONTACT_LATTICE_HPP

// Integer normal forms and lattice constructions. Every routine is exact and
// returns the transformation matrices it used, so callers can re-check
// H = M*U and S = U*M*V by plain multiplication.

#include <toric_contact/arith.hpp>
#include <toric_contact/rational_linalg.hpp>

#include <numeric>
#include <utility>

namespace toric_contact {

struct HermiteForm {
    IntMat H;  // M * U, column echelon
    IntMat U;  // unimodular, cols x cols
    std::size_t rank = 0;
    std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)
};

/// Column Hermite normal form: H = M*U is lower echelon, the k-th pivot sits
/// in column k and is positive, and entries to the left of a pivot in its row
/// lie in [0, pivot). Zero columns trail.
inline HermiteForm hnf(const IntMat& m) {
    HermiteForm out{m, IntMat::identity(m.cols()), 0, {}};
    IntMat& h = out.H;
    IntMat& u = out.U;
    std::size_t pc = 0;
    for (std::size_t r = 0; r < h.rows() && pc < h.cols(); ++r) {
        for (std::size_t c = pc + 1; c < h.cols(); ++c) {
            if (h(r, c) == 0)
                continue;
            if (h(r, pc) == 0) {
                h.swap_cols(pc, c);
                u.swap_cols(pc, c);
                continue;
            }
            Integer x = h(r, pc);
            Integer y = h(r, c);
            ExtendedGcd e = extended_gcd(x, y);
            Integer xg = x / e.g;
            Integer yg = y / e.g;
            // det [[s, -y/g], [t, x/g]] = 1
            h.combine_cols(pc, c, e.s, e.t, -yg, xg);
            u.combine_cols(pc, c, e.s, e.t, -yg, xg);
        }
        if (h(r, pc) == 0)
            continue;
        if (h(r, pc) < 0) {
            h.negate_col(pc);
            u.negate_col(pc);
        }
        const Integer piv = h(r, pc);
        for (std::size_t j = 0; j < pc; ++j) {
            Integer q = floor_div(h(r, j), piv);
            if (q != 0) {
                h.add_col_multiple(j, pc, -q);
                u.add_col_multiple(j, pc, -q);
            }
        }
        out.pivots.emplace_back(r, pc);
        ++pc;
    }
    out.rank = pc;
    return out;
}

struct SmithForm {
    IntMat S;  // U * M * V, diagonal with d_1 | d_2 | ...
    IntMat U;  // unimodular, rows x rows
    IntMat V;  // unimodular, cols x cols

    /// Diagonal entries d_1..d_min(rows, cols), including trailing zeros.
    IntVec diagonal() const {
        IntVec d;
        for (std::size_t i = 0; i < std::min(S.rows(), S.cols()); ++i)
            d.push_back(S(i, i));
        return d;
    }
};

inline SmithForm snf(const IntMat& m) {
    SmithForm out{m, IntMat::identity(m.rows()), IntMat::identity(m.cols())};
    IntMat& s = out.S;
    IntMat& u = out.U;
    IntMat& v = out.V;
    const std::size_t diag = std::min(s.rows(), s.cols());
    for (std::size_t t = 0; t < diag; ++t) {
        // Smallest nonzero entry of the trailing block becomes the pivot.
        std::size_t pr = s.rows();
        std::size_t pcol = s.cols();
        for (std::size_t i = t; i < s.rows(); ++i)
            for (std::size_t j = t; j < s.cols(); ++j)
                if (s(i, j) != 0 &&
                    (pr == s.rows() || abs(s(i, j)) < abs(s(pr, pcol)))) {
                    pr = i;
                    pcol = j;
                }
        if (pr == s.rows())
            break;
        s.swap_rows(t, pr);
        u.swap_rows(t, pr);
        s.swap_cols(t, pcol);
        v.swap_cols(t, pcol);

        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t i = t + 1; i < s.rows(); ++i) {
                if (s(i, t) == 0)
                    continue;
                Integer x = s(t, t);
                Integer y = s(i, t);
                ExtendedGcd e = extended_gcd(x, y);
                Integer xg = x / e.g;
                Integer yg = y / e.g;
                s.combine_rows(t, i, e.s, e.t, -yg, xg);
                u.combine_rows(t, i, e.s, e.t, -yg, xg);
            }
            for (std::size_t j = t + 1; j < s.cols(); ++j) {
                if (s(t, j) == 0)
                    continue;
                Integer x = s(t, t);
                Integer y = s(t, j);
                ExtendedGcd e = extended_gcd(x, y);
                Integer xg = x / e.g;
                Integer yg = y / e.g;
                s.combine_cols(t, j, e.s, e.t, -yg, xg);
                v.combine_cols(t, j, e.s, e.t, -yg, xg);
                changed = true;
            }
            if (changed)
                continue;
            // Row and column are clear; enforce divisibility of the block.
            for (std::size_t i = t + 1; i < s.rows() && !changed; ++i)
                for (std::size_t j = t + 1; j < s.cols(); ++j)
                    if (s(i, j) % s(t, t) != 0) {
                        s.add_row_multiple(t, i, 1);
                        u.add_row_multiple(t, i, 1);
                        changed = true;
                        break;
                    }
        }
        if (s(t, t) < 0) {
            s.negate_row(t);
            u.negate_row(t);
        }
    }
    return out;
}

/// Rows form a basis of {x in Z^cols : M x = 0}, returned in row Hermite form
/// (positive leading entries) so the output is canonical.
inline IntMat kernel_lattice_basis(const IntMat& m);

/// Row Hermite basis of the lattice spanned by the rows of `gens`, dropping
/// dependent rows.
inline IntMat row_lattice_basis(const IntMat& gens) {
    if (gens.rows() == 0)
        return IntMat(0, gens.cols());
    HermiteForm h = hnf(gens.transpose());
    IntMat b(h.rank, gens.cols());
    for (std::size_t k = 0; k < h.rank; ++k)
        for (std::size_t c = 0; c < gens.cols(); ++c)
            b(k, c) = h.H(c, k);
    return b;
}

inline IntMat kernel_lattice_basis(const IntMat& m) {
    if (m.rows() == 0)
        return IntMat::identity(m.cols());
    HermiteForm h = hnf(m);
    std::vector<IntVec> rows;
    for (std::size_t c = h.rank; c < m.cols(); ++c)
        rows.push_back(h.U.col(c));
    return row_lattice_basis(IntMat::from_rows(rows, m.cols()));
}

/// Basis of span_Q(rows of gens) intersected with Z^cols.
inline IntMat saturate(const IntMat& gens) {
    IntMat orth = kernel_lattice_basis(gens);
    if (orth.rows() == 0)
        return IntMat::identity(gens.cols());
    return kernel_lattice_basis(orth);
}

/// v / gcd(entries), keeping the sign pattern of v.
inline IntVec primitive(const IntVec& v) {
    Integer g = gcd(v);
    if (g == 0)
        throw Error("zero vector has no primitive representative");
    IntVec out(v);
    for (auto& x : out)
        x /= g;
    return out;
}

inline bool is_primitive(const IntVec& v) { return gcd(v) == 1; }

/// Finitely generated abelian group Z^free_rank x Z_{d_1} x ... x Z_{d_k},
/// d_i >= 2 and d_i | d_{i+1}.
class FiniteAbelianGroup {
public:
    FiniteAbelianGroup() = default;

    FiniteAbelianGroup(IntVec invariant_factors, std::size_t free_rank)
        : factors_(std::move(invariant_factors)), free_rank_(free_rank) {
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            if (factors_[i] < 2)
                throw Error("invariant factors must be at least 2");
            if (i && factors_[i] % factors_[i - 1] != 0)
                throw Error("invariant factors must form a divisibility chain");
        }
    }

    /// From a Smith diagonal: ones dropped, zeros counted as free rank.
    static FiniteAbelianGroup from_smith_diagonal(const IntVec& diag,
                                                  std::size_t extra_free = 0) {
        IntVec f;
        std::size_t free = extra_free;
        for (const auto& d : diag) {
            if (d == 0)
                ++free;
            else if (abs(d) != 1)
                f.push_back(abs(d));
        }
        return FiniteAbelianGroup(std::move(f), free);
    }

    const IntVec& invariant_factors() const { return factors_; }
    std::size_t free_rank() const { return free_rank_; }
    bool is_finite() const { return free_rank_ == 0; }
    bool is_trivial() const { return factors_.empty() && free_rank_ == 0; }

    /// Order of a finite group; throws for infinite ones.
    Integer order() const {
        if (!is_finite())
            throw Error("order of an infinite group");
        Integer o = 1;
        for (const auto& d : factors_)
            o *= d;
        return o;
    }

    std::string to_string() const {
        if (is_trivial())
            return "trivial";
        std::string s;
        if (free_rank_)
            s = free_rank_ == 1 ? "Z" : "Z^" + std::to_string(free_rank_);
        for (const auto& d : factors_)
            s += (s.empty() ? "" : " x ") + std::string("Z_") + d.get_str();
        return s;
    }

    friend bool operator==(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
        return a.factors_ == b.factors_ && a.free_rank_ == b.free_rank_;
    }

private:
    IntVec factors_;
    std::size_t free_rank_ = 0;
};

/// Integer coordinates x with x * basis = v (rows of `basis` independent), or
/// nullopt when v is outside the lattice.
inline std::optional<IntVec> lattice_coordinates(const IntMat& basis, const IntVec& v) {
    if (v.size() != basis.cols())
        throw Error("dimension mismatch in lattice membership");
    HermiteForm h = hnf(basis.transpose());  // basis^T * U = H
    if (h.rank != basis.rows())
        throw Error("ambient basis rows are not independent");
    IntVec y(h.rank, Integer(0));
    for (std::size_t k = 0; k < h.rank; ++k) {
        auto [r, c] = h.pivots[k];
        Integer rhs = v[r];
        for (std::size_t l = 0; l < k; ++l)
            rhs -= h.H(r, l) * y[l];
        if (rhs % h.H(r, c) != 0)
            return std::nullopt;
        y[k] = rhs / h.H(r, c);
    }
    for (std::size_t r = 0; r < basis.cols(); ++r) {
        Integer acc = 0;
        for (std::size_t k = 0; k < h.rank; ++k)
            acc += h.H(r, k) * y[k];
        if (acc != v[r])
            return std::nullopt;
    }
    IntVec x(basis.rows(), Integer(0));
    for (std::size_t i = 0; i < basis.rows(); ++i)
        for (std::size_t k = 0; k < h.rank; ++k)
            x[i] += h.U(i, k) * y[k];
    return x;
}

/// The group lattice(ambient_basis) / <sub_generators>.
inline FiniteAbelianGroup quotient_group(const IntMat& ambient_basis,
                                         const IntMat& sub_generators) {
    if (sub_generators.rows() > 0 && sub_generators.cols() != ambient_basis.cols())
        throw Error("dimension mismatch between ambient lattice and subgroup");
    const std::size_t r = ambient_basis.rows();
    if (r == 0)
        return {};
    std::vector<IntVec> coords;
    for (std::size_t i = 0; i < sub_generators.rows(); ++i) {
        auto x = lattice_coordinates(ambient_basis, sub_generators.row(i));
        if (!x)
            throw Error("subgroup not contained in ambient lattice");
        coords.push_back(std::move(*x));
    }
    if (coords.empty())
        return FiniteAbelianGroup({}, r);
    SmithForm s = snf(IntMat::from_rows(coords, r));
    IntVec d = s.diagonal();
    std::size_t extra = r > d.size() ? r - d.size() : 0;
    return FiniteAbelianGroup::from_smith_diagonal(d, extra);
}

/// Projection Z^n -> Z^n / Z*v for primitive v, as an (n-1) x n integer
/// matrix P with P v = 0 and P surjective onto Z^(n-1).
inline IntMat quotient_projection(const IntVec& v) {
    if (!is_primitive(v))
        throw Error("quotient by a non-primitive vector");
    IntMat row = IntMat::from_rows({v});
    HermiteForm h = hnf(row);  // v^T U = (1, 0, ..., 0), so U^T v = e_0
    IntMat g = h.U.transpose();
    IntMat p(v.size() - 1, v.size());
    for (std::size_t i = 1; i < v.size(); ++i)
        for (std::size_t c = 0; c < v.size(); ++c)
            p(i - 1, c) = g(i, c);
    return p;
}

}  // namespace toric_contact

#endif  // TORIC_CONTACT_LATTICE_HPP
