#ifndef TORIC_CONTACT_ARITH_HPP
#define TORIC_CONTACT_ARITH_HPP

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace toric_contact {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVec = std::vector<Integer>;
using RatVec = std::vector<Rational>;

/// Raised for every contract violation in the library. The message is the
/// user-facing diagnostic.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0)
        throw Error("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Parses "p", "-p" or "p/q" (optional surrounding whitespace). The result is
/// always reduced, so "2/4" reads as 1/2.
inline Rational parse_rational(std::string_view text) {
    auto first = text.find_first_not_of(" \t");
    auto last = text.find_last_not_of(" \t");
    if (first == std::string_view::npos)
        throw Error("empty rational literal");
    std::string s(text.substr(first, last - first + 1));
    auto slash = s.find('/');
    auto is_int = [](const std::string& t) {
        std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i >= t.size())
            return false;
        return std::all_of(t.begin() + static_cast<std::ptrdiff_t>(i), t.end(),
                           [](char c) { return c >= '0' && c <= '9'; });
    };
    auto to_int = [](std::string t) {
        if (!t.empty() && t[0] == '+')
            t.erase(0, 1);
        return Integer(t, 10);
    };
    if (slash == std::string::npos) {
        if (!is_int(s))
            throw Error("malformed rational literal '" + s + "'");
        return Rational(to_int(s));
    }
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!is_int(num) || !is_int(den) || den[0] == '-' || den[0] == '+')
        throw Error("malformed rational literal '" + s + "'");
    return make_rational(to_int(num), to_int(den));
}

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

inline bool is_integral(const RatVec& v) {
    return std::all_of(v.begin(), v.end(),
                       [](const Rational& q) { return is_integral(q); });
}

inline RatVec to_rational(const IntVec& v) {
    RatVec out;
    out.reserve(v.size());
    for (const auto& z : v)
        out.emplace_back(z);
    return out;
}

/// Requires every entry to be integral.
inline IntVec to_integer(const RatVec& v) {
    IntVec out;
    out.reserve(v.size());
    for (const auto& q : v) {
        if (!is_integral(q))
            throw Error("vector has non-integral entry " + to_string(q));
        out.push_back(q.get_num());
    }
    return out;
}

inline Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

/// gcd of the absolute values; 0 for an empty or all-zero range.
inline Integer gcd(const IntVec& v) {
    Integer g = 0;
    for (const auto& x : v)
        g = gcd(g, x);
    return g;
}

struct ExtendedGcd {
    Integer g;  // >= 0
    Integer s;
    Integer t;  // s*a + t*b == g
};

/// When a divides b the Bezout pair is (sign(a), 0); elimination loops rely on
/// this to keep the pivot in place instead of swapping it out.
inline ExtendedGcd extended_gcd(const Integer& a, const Integer& b) {
    ExtendedGcd r;
    if (a != 0 && b % a == 0) {
        r.g = abs(a);
        r.s = sgn(a);
        r.t = 0;
        return r;
    }
    mpz_gcdext(r.g.get_mpz_t(), r.s.get_mpz_t(), r.t.get_mpz_t(), a.get_mpz_t(),
               b.get_mpz_t());
    return r;
}

/// Floor division for GMP integers (b != 0).
inline Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

template <class T>
T dot(const std::vector<T>& a, const std::vector<T>& b) {
    if (a.size() != b.size())
        throw Error("dimension mismatch in inner product");
    T acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        acc += a[i] * b[i];
    return acc;
}

inline Rational dot(const RatVec& a, const IntVec& b) {
    if (a.size() != b.size())
        throw Error("dimension mismatch in inner product");
    Rational acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        acc += a[i] * b[i];
    return acc;
}

template <class T>
std::string format_vector(const std::vector<T>& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            os << ", ";
        os << v[i].get_str();
    }
    os << ')';
    return os.str();
}

inline IntVec unit_vector(std::size_t dim, std::size_t i, long sign = 1) {
    IntVec v(dim, Integer(0));
    v.at(i) = sign;
    return v;
}

/// Dense integer matrix, row-major, arbitrary precision entries.
class IntMat {
public:
    IntMat() = default;
    IntMat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

    IntMat(std::initializer_list<std::initializer_list<long>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_)
                throw Error("ragged matrix literal");
            for (long x : r)
                data_.emplace_back(x);
        }
    }

    static IntMat identity(std::size_t n) {
        IntMat m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    /// Rows must share one length; `cols` fixes the width of an empty list.
    static IntMat from_rows(const std::vector<IntVec>& rows, std::size_t cols = 0) {
        IntMat m(rows.size(), rows.empty() ? cols : rows.front().size());
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != m.cols_)
                throw Error("ragged matrix rows");
            for (std::size_t c = 0; c < m.cols_; ++c)
                m(r, c) = rows[r][c];
        }
        return m;
    }

    static IntMat from_columns(const std::vector<IntVec>& cols, std::size_t rows = 0) {
        return from_rows(cols, rows).transpose();
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return data_.empty(); }

    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }

    const std::vector<Integer>& entries() const { return data_; }

    IntVec row(std::size_t r) const {
        return IntVec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                      data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
    }

    IntVec col(std::size_t c) const {
        IntVec v(rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            v[r] = (*this)(r, c);
        return v;
    }

    std::vector<IntVec> row_list() const {
        std::vector<IntVec> out;
        for (std::size_t r = 0; r < rows_; ++r)
            out.push_back(row(r));
        return out;
    }

    IntMat transpose() const {
        IntMat t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                t(c, r) = (*this)(r, c);
        return t;
    }

    /// Columns listed in `keep`, in that order.
    IntMat select_columns(const std::vector<std::size_t>& keep) const {
        IntMat m(rows_, keep.size());
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t j = 0; j < keep.size(); ++j)
                m(r, j) = (*this)(r, keep[j]);
        return m;
    }

    bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(),
                           [](const Integer& x) { return x == 0; });
    }

    // Elementary operations used by the normal-form routines.
    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b)
            return;
        for (std::size_t c = 0; c < cols_; ++c)
            std::swap((*this)(a, c), (*this)(b, c));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b)
            return;
        for (std::size_t r = 0; r < rows_; ++r)
            std::swap((*this)(r, a), (*this)(r, b));
    }
    /// row[a] += k * row[b]
    void add_row_multiple(std::size_t a, std::size_t b, const Integer& k) {
        for (std::size_t c = 0; c < cols_; ++c)
            (*this)(a, c) += k * (*this)(b, c);
    }
    /// col[a] += k * col[b]
    void add_col_multiple(std::size_t a, std::size_t b, const Integer& k) {
        for (std::size_t r = 0; r < rows_; ++r)
            (*this)(r, a) += k * (*this)(r, b);
    }
    void negate_row(std::size_t a) {
        for (std::size_t c = 0; c < cols_; ++c)
            (*this)(a, c) = -(*this)(a, c);
    }
    void negate_col(std::size_t a) {
        for (std::size_t r = 0; r < rows_; ++r)
            (*this)(r, a) = -(*this)(r, a);
    }
    /// (row a, row b) <- (p*a + q*b, r*a + s*b)
    void combine_rows(std::size_t a, std::size_t b, const Integer& p, const Integer& q,
                      const Integer& r, const Integer& s) {
        for (std::size_t c = 0; c < cols_; ++c) {
            Integer x = (*this)(a, c);
            Integer y = (*this)(b, c);
            (*this)(a, c) = p * x + q * y;
            (*this)(b, c) = r * x + s * y;
        }
    }
    /// (col a, col b) <- (p*a + q*b, r*a + s*b)
    void combine_cols(std::size_t a, std::size_t b, const Integer& p, const Integer& q,
                      const Integer& r, const Integer& s) {
        for (std::size_t i = 0; i < rows_; ++i) {
            Integer x = (*this)(i, a);
            Integer y = (*this)(i, b);
            (*this)(i, a) = p * x + q * y;
            (*this)(i, b) = r * x + s * y;
        }
    }

    friend bool operator==(const IntMat& a, const IntMat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend IntMat operator*(const IntMat& a, const IntMat& b) {
        if (a.cols_ != b.rows_)
            throw Error("matrix shape mismatch in product");
        IntMat m(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Integer& aik = a(i, k);
                if (aik == 0)
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    m(i, j) += aik * b(k, j);
            }
        return m;
    }

    friend IntVec operator*(const IntMat& a, const IntVec& v) {
        if (a.cols_ != v.size())
            throw Error("matrix-vector shape mismatch");
        IntVec out(a.rows_, Integer(0));
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k)
                out[i] += a(i, k) * v[k];
        return out;
    }

    friend RatVec operator*(const IntMat& a, const RatVec& v) {
        if (a.cols_ != v.size())
            throw Error("matrix-vector shape mismatch");
        RatVec out(a.rows_, Rational(0));
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k)
                out[i] += a(i, k) * v[k];
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const IntMat& m) {
        os << '[';
        for (std::size_t r = 0; r < m.rows_; ++r) {
            os << (r ? "; " : "");
            for (std::size_t c = 0; c < m.cols_; ++c)
                os << (c ? " " : "") << m(r, c).get_str();
        }
        return os << ']';
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

/// Exact determinant by fraction-free (Bareiss) elimination.
inline Integer determinant(IntMat m) {
    if (m.rows() != m.cols())
        throw Error("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0)
        return 1;
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0)
                ++p;
            if (p == n)
                return 0;
            m.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m(i, j) = v;
            }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

}  // namespace toric_contact

#endif  // TORIC_CONTACT_ARITH_HPP
