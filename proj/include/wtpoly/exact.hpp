// Exact scalar arithmetic over Gaussian rationals, fraction-free linear
// algebra, and integer-lattice normal forms (Hermite / Smith).  Everything
// here is immutable after construction and safe to share across threads.

#ifndef WTPOLY_EXACT_HPP
#define WTPOLY_EXACT_HPP

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wtpoly {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

struct DimensionError : std::invalid_argument {
    explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};
struct SingularMatrixError : std::domain_error {
    explicit SingularMatrixError(const std::string& what) : std::domain_error(what) {}
};
struct LatticeError : std::invalid_argument {
    explicit LatticeError(const std::string& what) : std::invalid_argument(what) {}
};
struct GradingError : std::invalid_argument {
    explicit GradingError(const std::string& what) : std::invalid_argument(what) {}
};

// ---------------------------------------------------------------------------
// Gaussian rationals
// ---------------------------------------------------------------------------

/// Exact scalar a + b*i with arbitrary-precision rational a, b.  The gmp
/// backend keeps both parts in lowest terms with positive denominators.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(Rational r) : re(std::move(r)), im(0) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(std::int64_t r) : re(r), im(0) {}            // NOLINT(google-explicit-constructor)
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    [[nodiscard]] bool is_zero() const { return re == 0 && im == 0; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        Rational nrm = b.re * b.re + b.im * b.im;
        if (nrm == 0) throw std::domain_error("GaussianRational: division by zero");
        return {(a.re * b.re + a.im * b.im) / nrm, (a.im * b.re - a.re * b.im) / nrm};
    }

    GaussianRational& operator+=(const GaussianRational& b) { return *this = *this + b; }
    GaussianRational& operator-=(const GaussianRational& b) { return *this = *this - b; }
    GaussianRational& operator*=(const GaussianRational& b) { return *this = *this * b; }
    GaussianRational& operator/=(const GaussianRational& b) { return *this = *this / b; }

    static GaussianRational i() { return {Rational(0), Rational(1)}; }
};

// ---------------------------------------------------------------------------
// Dense matrices
// ---------------------------------------------------------------------------

/// Row-major dense matrix of Gaussian rationals.
class Mat {
public:
    Mat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}
    Mat(std::size_t rows, std::size_t cols, std::vector<GaussianRational> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (entries_.size() != rows_ * cols_)
            throw DimensionError("Mat: entry count does not match rows*cols");
    }

    /// Convenience constructor from integer rows.
    static Mat from_int_rows(const std::vector<std::vector<std::int64_t>>& rows) {
        if (rows.empty()) return Mat(0, 0);
        std::size_t c = rows.front().size();
        std::vector<GaussianRational> e;
        e.reserve(rows.size() * c);
        for (const auto& r : rows) {
            if (r.size() != c) throw DimensionError("Mat: ragged rows");
            for (std::int64_t x : r) e.emplace_back(x);
        }
        return Mat(rows.size(), c, std::move(e));
    }

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = GaussianRational(1);
        return m;
    }

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    GaussianRational& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    [[nodiscard]] const GaussianRational& at(std::size_t i, std::size_t j) const {
        return entries_[i * cols_ + j];
    }
    [[nodiscard]] const std::vector<GaussianRational>& entries() const { return entries_; }

    [[nodiscard]] Mat submatrix(const std::vector<std::size_t>& row_idx,
                                const std::vector<std::size_t>& col_idx) const {
        Mat out(row_idx.size(), col_idx.size());
        for (std::size_t i = 0; i < row_idx.size(); ++i)
            for (std::size_t j = 0; j < col_idx.size(); ++j)
                out.at(i, j) = at(row_idx[i], col_idx[j]);
        return out;
    }

    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.cols() != b.rows()) throw DimensionError("Mat: product shape mismatch");
        Mat out(a.rows(), b.cols());
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t k = 0; k < a.cols(); ++k) {
                if (a.at(i, k).is_zero()) continue;
                for (std::size_t j = 0; j < b.cols(); ++j)
                    out.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        return out;
    }

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<GaussianRational> entries_;
};

/// Row-major dense matrix of arbitrary-precision integers (lattice generators,
/// unimodular transforms).
class IntMat {
public:
    IntMat() : rows_(0), cols_(0) {}
    IntMat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}
    IntMat(std::size_t rows, std::size_t cols, std::vector<Integer> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (entries_.size() != rows_ * cols_)
            throw DimensionError("IntMat: entry count does not match rows*cols");
    }

    static IntMat from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
        if (rows.empty()) return IntMat(0, 0);
        std::size_t c = rows.front().size();
        std::vector<Integer> e;
        e.reserve(rows.size() * c);
        for (const auto& r : rows) {
            if (r.size() != c) throw DimensionError("IntMat: ragged rows");
            for (std::int64_t x : r) e.emplace_back(x);
        }
        return IntMat(rows.size(), c, std::move(e));
    }

    static IntMat identity(std::size_t n) {
        IntMat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    Integer& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    [[nodiscard]] const Integer& at(std::size_t i, std::size_t j) const {
        return entries_[i * cols_ + j];
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
    }
    void negate_row(std::size_t r) {
        for (std::size_t j = 0; j < cols_; ++j) at(r, j) = -at(r, j);
    }
    /// row[dst] += f * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const Integer& f) {
        if (f == 0) return;
        for (std::size_t j = 0; j < cols_; ++j) at(dst, j) += f * at(src, j);
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
    }
    void negate_col(std::size_t c) {
        for (std::size_t i = 0; i < rows_; ++i) at(i, c) = -at(i, c);
    }
    void add_col_multiple(std::size_t dst, std::size_t src, const Integer& f) {
        if (f == 0) return;
        for (std::size_t i = 0; i < rows_; ++i) at(i, dst) += f * at(i, src);
    }

    [[nodiscard]] std::vector<Integer> row(std::size_t i) const {
        return {entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
    }

    friend IntMat operator*(const IntMat& a, const IntMat& b) {
        if (a.cols() != b.rows()) throw DimensionError("IntMat: product shape mismatch");
        IntMat out(a.rows(), b.cols());
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t k = 0; k < a.cols(); ++k) {
                if (a.at(i, k) == 0) continue;
                for (std::size_t j = 0; j < b.cols(); ++j)
                    out.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        return out;
    }

    friend bool operator==(const IntMat& a, const IntMat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Integer> entries_;
};

// ---------------------------------------------------------------------------
// Determinant and rank (fraction-free Bareiss elimination)
// ---------------------------------------------------------------------------

namespace detail {

// One pass of Bareiss elimination with row pivoting and column skipping.
// Returns (rank, determinant); the determinant is meaningful for square
// inputs only and is zero whenever rank < n.
inline std::pair<std::size_t, GaussianRational> bareiss(Mat m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    GaussianRational prev(1);
    GaussianRational sign(1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m.at(piv, c).is_zero()) ++piv;
        if (piv == rows) continue;  // no pivot in this column
        if (piv != r) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
            sign = -sign;
        }
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                m.at(i, j) = (m.at(r, c) * m.at(i, j) - m.at(i, c) * m.at(r, j)) / prev;
            m.at(i, c) = GaussianRational(0);
        }
        prev = m.at(r, c);
        ++r;
    }
    GaussianRational det(0);
    if (rows == cols && r == rows) det = sign * prev;
    return {r, det};
}

}  // namespace detail

/// Exact determinant; zero exactly when the matrix is singular.
inline GaussianRational det(const Mat& m) {
    if (m.rows() != m.cols()) throw DimensionError("det: matrix is not square");
    if (m.rows() == 0) return GaussianRational(1);
    return detail::bareiss(m).second;
}

/// Rank over the field of Gaussian rationals.
inline std::size_t rank(const Mat& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return detail::bareiss(m).first;
}

// ---------------------------------------------------------------------------
// Hermite normal form
// ---------------------------------------------------------------------------

struct HnfResult {
    IntMat h;  ///< canonical row HNF, zero rows dropped
    IntMat u;  ///< unimodular; u*m equals h stacked on zero rows
};

/// Row-style Hermite normal form with positive pivots and entries above each
/// pivot reduced to [0, pivot).  This is the canonical lattice representation:
/// two generator matrices span the same lattice iff their forms are identical.
inline HnfResult hnf(const IntMat& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    IntMat a = m;
    IntMat u = IntMat::identity(rows);

    // Echelon phase: gcd-reduce each column until one nonzero pivot remains.
    std::size_t r = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        while (true) {
            std::size_t best = rows;
            for (std::size_t i = r; i < rows; ++i) {
                if (a.at(i, c) == 0) continue;
                if (best == rows || abs(a.at(i, c)) < abs(a.at(best, c))) best = i;
            }
            if (best == rows) break;  // column has no pivot
            a.swap_rows(r, best);
            u.swap_rows(r, best);
            bool clean = true;
            for (std::size_t i = r + 1; i < rows; ++i) {
                if (a.at(i, c) == 0) continue;
                Integer q = a.at(i, c) / a.at(r, c);  // truncated division is fine here
                a.add_row_multiple(i, r, -q);
                u.add_row_multiple(i, r, -q);
                if (a.at(i, c) != 0) clean = false;
            }
            if (clean) break;
        }
        if (a.at(r, c) == 0) continue;
        if (a.at(r, c) < 0) {
            a.negate_row(r);
            u.negate_row(r);
        }
        pivot_col.push_back(c);
        ++r;
    }

    // Reduction phase: clear entries above each pivot into [0, pivot).
    // Later pivots are processed after earlier ones so re-introduced
    // residues are swept up.
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t t = i + 1; t < r; ++t) {
            const Integer& den = a.at(t, pivot_col[t]);
            Integer num = a.at(i, pivot_col[t]);
            Integer q = num / den;
            if (q * den > num) q -= 1;  // floor division
            a.add_row_multiple(i, t, -q);
            u.add_row_multiple(i, t, -q);
        }
    }

    // First r rows hold the form; the rest are zero.
    IntMat h(r, cols);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < cols; ++j) h.at(i, j) = a.at(i, j);
    return {std::move(h), std::move(u)};
}

// ---------------------------------------------------------------------------
// Smith normal form
// ---------------------------------------------------------------------------

struct SnfResult {
    std::vector<Integer> diag;  ///< invariant factors d_1 | d_2 | ..., all >= 0
    IntMat u;                   ///< unimodular row transform
    IntMat v;                   ///< unimodular column transform; u*m*v is diagonal
};

/// Smith normal form with both transforms.  The product of the nonzero
/// invariant factors of a nonsingular square matrix is |det|, i.e. the index
/// of the row lattice in the ambient lattice.
inline SnfResult snf(const IntMat& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    IntMat a = m;
    IntMat u = IntMat::identity(rows);
    IntMat v = IntMat::identity(cols);
    const std::size_t steps = rows < cols ? rows : cols;

    for (std::size_t t = 0; t < steps; ++t) {
        // Locate the smallest-magnitude nonzero entry in the trailing block.
        std::size_t pi = rows, pj = cols;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                if (a.at(i, j) == 0) continue;
                if (pi == rows || abs(a.at(i, j)) < abs(a.at(pi, pj))) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi == rows) break;  // trailing block is zero
        a.swap_rows(t, pi);
        u.swap_rows(t, pi);
        a.swap_cols(t, pj);
        v.swap_cols(t, pj);

        for (;;) {
            bool dirty = false;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a.at(i, t) == 0) continue;
                Integer q = a.at(i, t) / a.at(t, t);
                a.add_row_multiple(i, t, -q);
                u.add_row_multiple(i, t, -q);
                if (a.at(i, t) != 0) {
                    a.swap_rows(t, i);
                    u.swap_rows(t, i);
                    dirty = true;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a.at(t, j) == 0) continue;
                Integer q = a.at(t, j) / a.at(t, t);
                a.add_col_multiple(j, t, -q);
                v.add_col_multiple(j, t, -q);
                if (a.at(t, j) != 0) {
                    a.swap_cols(t, j);
                    v.swap_cols(t, j);
                    dirty = true;
                }
            }
            if (!dirty) break;
        }

        // Enforce divisibility of the remaining block by the pivot.
        bool restart = false;
        for (std::size_t i = t + 1; i < rows && !restart; ++i)
            for (std::size_t j = t + 1; j < cols && !restart; ++j) {
                if (a.at(i, j) % a.at(t, t) != 0) {
                    a.add_row_multiple(t, i, 1);
                    u.add_row_multiple(t, i, 1);
                    restart = true;
                }
            }
        if (restart) {
            --t;
            continue;
        }
        if (a.at(t, t) < 0) {
            a.negate_row(t);
            u.negate_row(t);
        }
    }

    std::vector<Integer> diag(steps);
    for (std::size_t t = 0; t < steps; ++t) diag[t] = a.at(t, t);
    return {std::move(diag), std::move(u), std::move(v)};
}

// ---------------------------------------------------------------------------
// Integer lattices
// ---------------------------------------------------------------------------

/// A sublattice of Z^d stored by its canonical row Hermite basis.  Zero rows
/// are dropped; the zero lattice has rank 0 and an empty basis.
class IntegerLattice {
public:
    explicit IntegerLattice(std::size_t ambient_dim)
        : ambient_(ambient_dim), basis_(0, ambient_dim) {}

    static IntegerLattice from_generators(const IntMat& gens) {
        if (gens.rows() == 0)
            throw LatticeError("IntegerLattice: ambient dimension unknown for empty generator matrix");
        IntegerLattice l(gens.cols());
        l.basis_ = hnf(gens).h;
        return l;
    }
    static IntegerLattice from_generators(std::size_t ambient_dim,
                                          const std::vector<std::vector<std::int64_t>>& gens) {
        IntegerLattice l(ambient_dim);
        if (gens.empty()) return l;
        IntMat g = IntMat::from_rows(gens);
        if (g.cols() != ambient_dim) throw DimensionError("IntegerLattice: generator dimension mismatch");
        l.basis_ = hnf(g).h;
        return l;
    }
    static IntegerLattice full(std::size_t ambient_dim) {
        IntegerLattice l(ambient_dim);
        l.basis_ = IntMat::identity(ambient_dim);
        return l;
    }

    [[nodiscard]] std::size_t ambient_dim() const { return ambient_; }
    [[nodiscard]] std::size_t rank() const { return basis_.rows(); }
    [[nodiscard]] const IntMat& hnf_basis() const { return basis_; }

    /// Pivot column of each basis row (strictly increasing).
    [[nodiscard]] std::vector<std::size_t> pivot_columns() const {
        std::vector<std::size_t> p;
        p.reserve(basis_.rows());
        for (std::size_t i = 0; i < basis_.rows(); ++i) {
            std::size_t j = 0;
            while (j < basis_.cols() && basis_.at(i, j) == 0) ++j;
            p.push_back(j);
        }
        return p;
    }

    friend bool operator==(const IntegerLattice& a, const IntegerLattice& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

private:
    std::size_t ambient_;
    IntMat basis_;
};

namespace detail {

/// Back-substitute v against the Hermite basis.  On success returns the
/// integer coordinates of v in the basis; otherwise nullopt.
inline std::optional<std::vector<Integer>> lattice_coordinates(const IntegerLattice& l,
                                                               std::vector<Integer> v) {
    if (v.size() != l.ambient_dim())
        throw DimensionError("lattice_member: vector dimension mismatch");
    const IntMat& b = l.hnf_basis();
    std::vector<Integer> coords(b.rows());
    std::size_t col = 0;
    for (std::size_t i = 0; i < b.rows(); ++i) {
        while (col < b.cols() && b.at(i, col) == 0) ++col;  // pivot column of row i
        const Integer& piv = b.at(i, col);
        if (v[col] % piv != 0) return std::nullopt;
        Integer c = v[col] / piv;
        if (c != 0)
            for (std::size_t j = col; j < b.cols(); ++j) v[j] -= c * b.at(i, j);
        coords[i] = c;
    }
    for (const Integer& x : v)
        if (x != 0) return std::nullopt;
    return coords;
}

}  // namespace detail

/// Membership of an integer vector in the lattice.
inline bool lattice_member(const IntegerLattice& l, const std::vector<Integer>& v) {
    return detail::lattice_coordinates(l, v).has_value();
}

inline bool lattice_member(const IntegerLattice& l, const std::vector<std::int64_t>& v) {
    std::vector<Integer> w(v.begin(), v.end());
    return lattice_member(l, w);
}

/// Index of `sub` in `sup`, or nullopt when the index is infinite (ranks
/// differ).  Throws LatticeError unless every generator of sub lies in sup.
inline std::optional<Integer> lattice_index(const IntegerLattice& sub, const IntegerLattice& sup) {
    if (sub.ambient_dim() != sup.ambient_dim())
        throw DimensionError("lattice_index: ambient dimension mismatch");
    const IntMat& sb = sub.hnf_basis();
    IntMat coords(sb.rows(), sup.rank());
    for (std::size_t i = 0; i < sb.rows(); ++i) {
        auto c = detail::lattice_coordinates(sup, sb.row(i));
        if (!c) throw LatticeError("lattice_index: sub is not contained in sup");
        for (std::size_t j = 0; j < sup.rank(); ++j) coords.at(i, j) = (*c)[j];
    }
    if (sub.rank() < sup.rank()) return std::nullopt;
    // Ranks are equal: the index is the product of the invariant factors of
    // the coordinate matrix.
    SnfResult s = snf(coords);
    Integer idx = 1;
    for (const Integer& d : s.diag) idx *= d;
    return abs(idx);
}

}  // namespace wtpoly

#endif  // WTPOLY_EXACT_HPP
