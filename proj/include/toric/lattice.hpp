/**
 * Exact integer and rational linear algebra over arbitrary-precision scalars.
 *
 * Integer matrices get Smith and Hermite normal forms with their unimodular
 * transforms; rational matrices get elimination-based rank, solves and
 * nullspaces. Everything here is a pure function of its arguments.
 */
#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include "toric/error.hpp"

namespace toric {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using IntVec = std::vector<Integer>;
using RatVec = std::vector<Rational>;

template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    /// Builds a matrix from a list of rows; all rows must share one length.
    static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols_if_empty = 0) {
        std::size_t cols = rows.empty() ? cols_if_empty : rows.front().size();
        Matrix m(rows.size(), cols);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != cols)
                throw Error(ErrorCode::DimensionMismatch, "ragged matrix rows");
            for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
        }
        return m;
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<T> row(std::size_t r) const {
        return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                              data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
    }

    std::vector<T> col(std::size_t c) const {
        std::vector<T> out(rows_);
        for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
        return out;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
    }

    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
    }

    /// row[dst] += factor * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const T& factor) {
        for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += factor * (*this)(src, c);
    }

    /// col[dst] += factor * col[src]
    void add_col_multiple(std::size_t dst, std::size_t src, const T& factor) {
        for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += factor * (*this)(r, src);
    }

    bool is_diagonal() const {
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                if (r != c && (*this)(r, c) != 0) return false;
        return true;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product shape");
        Matrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a(i, k) == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
            }
        return out;
    }

    friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& v) {
        if (a.cols_ != v.size()) throw Error(ErrorCode::DimensionMismatch, "matrix-vector shape");
        std::vector<T> out(a.rows_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) out[i] += a(i, k) * v[k];
        return out;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMat = Matrix<Integer>;
using RatMat = Matrix<Rational>;

// ---------------------------------------------------------------------------
// scalar and vector helpers

inline Integer abs_value(const Integer& a) { return a < 0 ? Integer(-a) : a; }

inline Integer gcd(Integer a, Integer b) {
    a = abs_value(a);
    b = abs_value(b);
    while (b != 0) {
        Integer r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

/// gcd of all entries; zero for the zero vector.
inline Integer content(const IntVec& v) {
    Integer g = 0;
    for (const auto& x : v) g = gcd(g, x);
    return g;
}

inline bool is_zero(const IntVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

inline bool is_zero(const RatVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

inline bool is_primitive(const IntVec& v) {
    if (is_zero(v)) throw Error(ErrorCode::ZeroVector, "primitivity of the zero vector");
    return content(v) == 1;
}

inline Integer dot(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "dot product lengths differ");
    Integer sum = 0;
    for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
    return sum;
}

inline Rational dot(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "dot product lengths differ");
    Rational sum = 0;
    for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
    return sum;
}

inline Rational dot(const IntVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "dot product lengths differ");
    Rational sum = 0;
    for (std::size_t i = 0; i < a.size(); ++i) sum += Rational(a[i]) * b[i];
    return sum;
}

inline RatVec to_rational(const IntVec& v) { return RatVec(v.begin(), v.end()); }

inline RatMat to_rational(const IntMat& m) {
    RatMat out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = Rational(m(r, c));
    return out;
}

/// Floor of a/b for b != 0.
inline Integer floor_div(const Integer& a, const Integer& b) {
    Integer q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
    return q;
}

inline std::string to_string(const Rational& q) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

inline std::string to_string(const Integer& z) { return z.str(); }

template <typename T>
std::string to_string(const std::vector<T>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += to_string(v[i]);
    }
    return out + ")";
}

// ---------------------------------------------------------------------------
// rational elimination

/// Row-reduces `m` in place to reduced echelon form; returns pivot columns.
inline std::vector<std::size_t> rref(RatMat& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t piv = row;
        while (piv < m.rows() && m(piv, col) == 0) ++piv;
        if (piv == m.rows()) continue;
        m.swap_rows(row, piv);
        Rational inv = 1 / m(row, col);
        for (std::size_t c = 0; c < m.cols(); ++c) m(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col) == 0) continue;
            Rational f = -m(r, col);
            m.add_row_multiple(r, row, f);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline std::size_t rank(RatMat m) { return rref(m).size(); }
inline std::size_t rank(const IntMat& m) { return rank(to_rational(m)); }

/// Solution of a·x = b when it exists and is unique.
inline std::optional<RatVec> solve_unique(const RatMat& a, const RatVec& b) {
    if (a.rows() != b.size()) throw Error(ErrorCode::DimensionMismatch, "solve: rhs length");
    RatMat aug(a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
        aug(r, a.cols()) = b[r];
    }
    auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;  // inconsistent
    if (pivots.size() != a.cols()) return std::nullopt;                     // underdetermined
    RatVec x(a.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, a.cols());
    return x;
}

/// Basis of {x : a·x = 0}.
inline std::vector<RatVec> nullspace(RatMat a) {
    auto pivots = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<RatVec> basis;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        RatVec v(a.cols());
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Fraction-free (Bareiss) determinant of a square integer matrix.
inline Integer determinant(IntMat m) {
    if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t swap = k + 1;
            while (swap < n && m(swap, k) == 0) ++swap;
            if (swap == n) return 0;
            m.swap_rows(k, swap);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

inline bool is_unimodular(const IntMat& m) {
    return m.rows() == m.cols() && abs_value(determinant(m)) == 1;
}

// ---------------------------------------------------------------------------
// normal forms

struct SmithForm {
    IntMat left;      // U
    IntMat diagonal;  // D
    IntMat right;     // V

    /// d_1, ..., d_min(rows, cols), including trailing zeros.
    IntVec invariant_factors() const {
        IntVec out;
        for (std::size_t i = 0; i < std::min(diagonal.rows(), diagonal.cols()); ++i)
            out.push_back(diagonal(i, i));
        return out;
    }

    std::size_t rank() const {
        std::size_t r = 0;
        for (const auto& d : invariant_factors())
            if (d != 0) ++r;
        return r;
    }
};

/**
 * Smith normal form U·M·V = D with U, V unimodular and D diagonal with
 * nonnegative entries d_1 | d_2 | ... . Pivoting always picks the entry of
 * least absolute value, first in row-major order, so the output is a
 * deterministic function of M.
 */
inline SmithForm smith_normal_form(const IntMat& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    IntMat d = m;
    IntMat u = IntMat::identity(rows);
    IntMat v = IntMat::identity(cols);

    auto row_op = [&](std::size_t dst, std::size_t src, const Integer& f) {
        d.add_row_multiple(dst, src, f);
        u.add_row_multiple(dst, src, f);
    };
    auto col_op = [&](std::size_t dst, std::size_t src, const Integer& f) {
        d.add_col_multiple(dst, src, f);
        v.add_col_multiple(dst, src, f);
    };

    const std::size_t steps = std::min(rows, cols);
    for (std::size_t t = 0; t < steps; ++t) {
        for (;;) {
            std::size_t pr = rows, pc = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j) {
                    if (d(i, j) == 0) continue;
                    if (pr == rows || abs_value(d(i, j)) < abs_value(d(pr, pc))) {
                        pr = i;
                        pc = j;
                    }
                }
            if (pr == rows) break;  // remaining block is zero
            d.swap_rows(t, pr);
            u.swap_rows(t, pr);
            d.swap_cols(t, pc);
            v.swap_cols(t, pc);

            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (d(i, t) == 0) continue;
                Integer q = d(i, t) / d(t, t);
                row_op(i, t, -q);
                if (d(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (d(t, j) == 0) continue;
                Integer q = d(t, j) / d(t, t);
                col_op(j, t, -q);
                if (d(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            bool divisible = true;
            for (std::size_t i = t + 1; i < rows && divisible; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (d(i, j) % d(t, t) != 0) {
                        row_op(t, i, Integer(1));
                        divisible = false;
                        break;
                    }
            if (divisible) break;
        }
        if (d(t, t) < 0) {
            for (std::size_t c = 0; c < cols; ++c) d(t, c) = -d(t, c);
            for (std::size_t c = 0; c < rows; ++c) u(t, c) = -u(t, c);
        }
    }
    return {std::move(u), std::move(d), std::move(v)};
}

struct HermiteForm {
    IntMat transform;  // U, unimodular
    IntMat hermite;    // H = U·M
};

/// Row-style Hermite normal form: H = U·M is in echelon form, pivots are
/// positive and entries above each pivot lie in [0, pivot).
inline HermiteForm hermite_normal_form(const IntMat& m) {
    IntMat h = m;
    IntMat u = IntMat::identity(m.rows());
    std::size_t row = 0;
    for (std::size_t col = 0; col < h.cols() && row < h.rows(); ++col) {
        for (;;) {
            std::size_t piv = h.rows();
            for (std::size_t i = row; i < h.rows(); ++i)
                if (h(i, col) != 0 && (piv == h.rows() || abs_value(h(i, col)) < abs_value(h(piv, col))))
                    piv = i;
            if (piv == h.rows()) break;
            h.swap_rows(row, piv);
            u.swap_rows(row, piv);
            bool done = true;
            for (std::size_t i = row + 1; i < h.rows(); ++i) {
                if (h(i, col) == 0) continue;
                Integer q = h(i, col) / h(row, col);
                h.add_row_multiple(i, row, -q);
                u.add_row_multiple(i, row, -q);
                if (h(i, col) != 0) done = false;
            }
            if (done) break;
        }
        if (row >= h.rows() || h(row, col) == 0) continue;
        if (h(row, col) < 0) {
            for (std::size_t c = 0; c < h.cols(); ++c) h(row, c) = -h(row, c);
            for (std::size_t c = 0; c < u.cols(); ++c) u(row, c) = -u(row, c);
        }
        for (std::size_t i = 0; i < row; ++i) {
            Integer q = floor_div(h(i, col), h(row, col));
            if (q == 0) continue;
            h.add_row_multiple(i, row, -q);
            u.add_row_multiple(i, row, -q);
        }
        ++row;
    }
    return {std::move(u), std::move(h)};
}

/// True iff Mᵀ maps Z^rows onto Z^cols, i.e. every invariant factor of Mᵀ is 1.
inline bool is_surjective_onto_lattice(const IntMat& m) {
    if (m.rows() < m.cols()) return false;
    auto snf = smith_normal_form(m.transpose());
    for (const auto& f : snf.invariant_factors())
        if (f != 1) return false;
    return true;
}

/// Columns form a Z-basis of the integer kernel {v ∈ Z^cols : M·v = 0}.
inline IntMat integer_kernel(const IntMat& m) {
    auto snf = smith_normal_form(m);
    std::size_t r = snf.rank();
    IntMat k(m.cols(), m.cols() - r);
    for (std::size_t j = r; j < m.cols(); ++j)
        for (std::size_t i = 0; i < m.cols(); ++i) k(i, j - r) = snf.right(i, j);
    return k;
}

}  // namespace toric
