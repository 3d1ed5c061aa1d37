// Test-only oracles, kept independent of the library's decision paths: a
// cofactor determinant, dense rational elimination, facet enumeration for
// point sets of affine dimension <= 3, Caratheodory-style hull membership,
// small-coefficient lattice solving, and brute-force Minkowski sums.

#ifndef WTPOLY_TESTS_ORACLE_HPP
#define WTPOLY_TESTS_ORACLE_HPP

#include "wtpoly/exact.hpp"
#include "wtpoly/polytope.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using wtpoly::GaussianRational;
using wtpoly::Integer;
using wtpoly::Mat;
using wtpoly::Rational;
using wtpoly::Vec;

// ---------------------------------------------------------------------------
// Independent exact linear algebra
// ---------------------------------------------------------------------------

/// Cofactor-expansion determinant (exponential; fine for n <= 5).
inline GaussianRational det_cofactor(const Mat& m) {
    const std::size_t n = m.rows();
    if (n == 0) return GaussianRational(1);
    if (n == 1) return m.at(0, 0);
    GaussianRational acc(0);
    std::vector<std::size_t> rows(n - 1), cols(n - 1);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t t = 1; t < n; ++t) rows[t - 1] = t;
        std::size_t c = 0;
        for (std::size_t t = 0; t < n; ++t)
            if (t != j) cols[c++] = t;
        GaussianRational term = m.at(0, j) * det_cofactor(m.submatrix(rows, cols));
        if (j % 2 == 1) term = -term;
        acc += term;
    }
    return acc;
}

/// Solve A x = b over the rationals by plain Gauss-Jordan.  Returns nullopt
/// when inconsistent; free variables are set to zero.
inline std::optional<std::vector<Rational>> solve_rational(std::vector<std::vector<Rational>> a,
                                                           std::vector<Rational> b) {
    const std::size_t m = a.size();
    const std::size_t n = m == 0 ? 0 : a[0].size();
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t piv = r;
        while (piv < m && a[piv][c] == 0) ++piv;
        if (piv == m) continue;
        std::swap(a[piv], a[r]);
        std::swap(b[piv], b[r]);
        Rational d = a[r][c];
        for (auto& x : a[r]) x /= d;
        b[r] /= d;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rational f = a[i][c];
            for (std::size_t j = 0; j < n; ++j) a[i][j] -= f * a[r][j];
            b[i] -= f * b[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < m; ++i)
        if (b[i] != 0) return std::nullopt;
    std::vector<Rational> x(n, Rational(0));
    for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
    return x;
}

inline std::size_t rank_rational(std::vector<std::vector<Rational>> a) {
    const std::size_t m = a.size();
    const std::size_t n = m == 0 ? 0 : a[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t piv = r;
        while (piv < m && a[piv][c] == 0) ++piv;
        if (piv == m) continue;
        std::swap(a[piv], a[r]);
        for (std::size_t i = r + 1; i < m; ++i) {
            if (a[i][c] == 0) continue;
            Rational f = a[i][c] / a[r][c];
            for (std::size_t j = 0; j < n; ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return r;
}

// ---------------------------------------------------------------------------
// Hull membership by subset enumeration (Caratheodory)
// ---------------------------------------------------------------------------

/// q in conv(points) iff q is a convex combination of some subset of at most
/// dim+1 points; checked by solving the barycentric system exactly for every
/// subset.
inline bool hull_member_caratheodory(const std::vector<Rational>& q,
                                     const std::vector<Vec>& points) {
    const std::size_t d = q.size();
    const std::size_t n = points.size();
    std::vector<std::size_t> idx;
    std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t start,
                                                            std::size_t remaining) -> bool {
        if (!idx.empty()) {
            std::vector<std::vector<Rational>> a(d + 1, std::vector<Rational>(idx.size()));
            std::vector<Rational> b(d + 1);
            for (std::size_t j = 0; j < idx.size(); ++j)
                for (std::size_t i = 0; i < d; ++i) a[i][j] = points[idx[j]][i];
            for (std::size_t i = 0; i < d; ++i) b[i] = q[i];
            for (std::size_t j = 0; j < idx.size(); ++j) a[d][j] = 1;
            b[d] = 1;
            auto x = solve_rational(a, b);
            if (x) {
                bool feasible = true;
                // Solution must actually solve the system (solve_rational zeroes
                // free variables, which keeps it a valid candidate) and be
                // nonnegative.
                for (const Rational& w : *x)
                    if (w < 0) feasible = false;
                if (feasible) {
                    std::vector<Rational> lhs(d + 1, Rational(0));
                    for (std::size_t j = 0; j < idx.size(); ++j)
                        for (std::size_t i = 0; i < d; ++i) lhs[i] += (*x)[j] * points[idx[j]][i];
                    Rational tot(0);
                    for (const Rational& w : *x) tot += w;
                    for (std::size_t i = 0; i < d && feasible; ++i) feasible = lhs[i] == q[i];
                    if (feasible && tot == 1) return true;
                }
            }
        }
        if (remaining == 0 || start == n) return false;
        for (std::size_t t = start; t < n; ++t) {
            idx.push_back(t);
            if (rec(t + 1, remaining - 1)) {
                idx.pop_back();
                return true;
            }
            idx.pop_back();
        }
        return false;
    };
    return rec(0, d + 1);
}

// ---------------------------------------------------------------------------
// Facet enumeration for affine dimension <= 3
// ---------------------------------------------------------------------------

/// Geometry of a point set computed by brute force: exact affine coordinates,
/// facet inequalities from subset enumeration, and face ranks.
class FacetOracle {
public:
    explicit FacetOracle(const std::vector<Vec>& pts) : pts_(pts) {
        if (pts_.empty()) throw std::invalid_argument("FacetOracle: empty set");
        ambient_ = pts_[0].size();
        build_affine_coords();
        if (r_ > 0) build_facets();
    }

    [[nodiscard]] std::size_t affine_dim() const { return r_; }

    /// Membership of a rational point in the hull.
    [[nodiscard]] bool contains(const std::vector<Rational>& q) const {
        auto c = affine_coords(q);
        if (!c) return false;
        for (const auto& [normal, rhs] : facets_) {
            Rational v(0);
            for (std::size_t j = 0; j < r_; ++j) v += normal[j] * (*c)[j];
            if (v > rhs) return false;
        }
        return true;
    }

    [[nodiscard]] bool is_vertex(const Vec& p) const {
        if (r_ == 0) return p == pts_[0];
        auto c = affine_coords(to_rational(p));
        if (!c) return false;
        std::vector<std::vector<Rational>> tight;
        for (const auto& [normal, rhs] : facets_) {
            Rational v(0);
            for (std::size_t j = 0; j < r_; ++j) v += normal[j] * (*c)[j];
            if (v == rhs) tight.push_back(normal);
        }
        return rank_rational(tight) == r_;
    }

    /// Edge test: the facets tight at both endpoints must cut out a line.
    [[nodiscard]] bool is_edge(const Vec& u, const Vec& v) const {
        if (u == v || !is_vertex(u) || !is_vertex(v)) return false;
        if (r_ == 1) return true;  // the two endpoints of a segment
        auto cu = affine_coords(to_rational(u)), cv = affine_coords(to_rational(v));
        std::vector<std::vector<Rational>> common;
        for (const auto& [normal, rhs] : facets_) {
            Rational a(0), b(0);
            for (std::size_t j = 0; j < r_; ++j) {
                a += normal[j] * (*cu)[j];
                b += normal[j] * (*cv)[j];
            }
            if (a == rhs && b == rhs) common.push_back(normal);
        }
        return rank_rational(common) == r_ - 1;
    }

private:
    static std::vector<Rational> to_rational(const Vec& v) {
        std::vector<Rational> r(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i];
        return r;
    }

    void build_affine_coords() {
        // Greedily pick independent difference vectors as the affine basis.
        for (const Vec& p : pts_) {
            if (p == pts_[0]) continue;
            std::vector<std::vector<Rational>> cand = basis_;
            std::vector<Rational> diff(ambient_);
            for (std::size_t j = 0; j < ambient_; ++j) diff[j] = p[j] - pts_[0][j];
            cand.push_back(diff);
            if (rank_rational(cand) == cand.size()) basis_ = std::move(cand);
        }
        r_ = basis_.size();
        coords_.reserve(pts_.size());
        for (const Vec& p : pts_) coords_.push_back(*affine_coords(to_rational(p)));
    }

    /// Exact coordinates of q in the affine frame, or nullopt when q is
    /// outside the affine hull.
    [[nodiscard]] std::optional<std::vector<Rational>> affine_coords(
        const std::vector<Rational>& q) const {
        std::vector<std::vector<Rational>> a(ambient_, std::vector<Rational>(r_));
        std::vector<Rational> b(ambient_);
        for (std::size_t i = 0; i < ambient_; ++i) {
            for (std::size_t j = 0; j < r_; ++j) a[i][j] = basis_[j][i];
            b[i] = q[i] - Rational(pts_[0][i]);
        }
        auto x = solve_rational(a, b);
        if (!x) return std::nullopt;
        // Verify (free variables were zeroed; the system may be overdetermined).
        for (std::size_t i = 0; i < ambient_; ++i) {
            Rational v(0);
            for (std::size_t j = 0; j < r_; ++j) v += a[i][j] * (*x)[j];
            if (v != b[i]) return std::nullopt;
        }
        return x;
    }

    void build_facets() {
        const std::size_t n = coords_.size();
        std::set<std::pair<std::vector<Rational>, Rational>> seen;
        std::vector<std::size_t> idx(r_);
        std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t k) {
            if (k == r_) {
                try_facet(idx, seen);
                return;
            }
            for (std::size_t t = start; t + (r_ - k - 1) < n; ++t) {
                idx[k] = t;
                rec(t + 1, k + 1);
            }
        };
        rec(0, 0);
    }

    void try_facet(const std::vector<std::size_t>& idx,
                   std::set<std::pair<std::vector<Rational>, Rational>>& seen) {
        // Hyperplane through r_ points in r_-space: normal spans the nullspace
        // of the difference matrix.
        std::vector<std::vector<Rational>> rows;
        for (std::size_t t = 1; t < r_; ++t) {
            std::vector<Rational> row(r_);
            for (std::size_t j = 0; j < r_; ++j)
                row[j] = coords_[idx[t]][j] - coords_[idx[0]][j];
            rows.push_back(std::move(row));
        }
        if (rank_rational(rows) + 1 != r_) return;  // not affinely independent
        std::vector<Rational> normal = nullspace_vector(rows);
        if (normal.empty()) return;
        Rational rhs(0);
        for (std::size_t j = 0; j < r_; ++j) rhs += normal[j] * coords_[idx[0]][j];
        bool all_le = true, all_ge = true;
        for (const auto& c : coords_) {
            Rational v(0);
            for (std::size_t j = 0; j < r_; ++j) v += normal[j] * c[j];
            if (v > rhs) all_le = false;
            if (v < rhs) all_ge = false;
        }
        auto push = [&](std::vector<Rational> f, Rational b) {
            normalize(f, b);
            if (seen.insert({f, b}).second) facets_.emplace_back(std::move(f), std::move(b));
        };
        if (all_le) push(normal, rhs);
        if (all_ge) {
            for (auto& x : normal) x = -x;
            push(normal, -rhs);
        }
    }

    /// One nonzero vector in the nullspace of a (r_-1) x r_ matrix of rank r_-1.
    [[nodiscard]] std::vector<Rational> nullspace_vector(
        std::vector<std::vector<Rational>> a) const {
        const std::size_t m = a.size();
        std::vector<std::size_t> pivots;
        std::size_t r = 0;
        for (std::size_t c = 0; c < r_ && r < m; ++c) {
            std::size_t piv = r;
            while (piv < m && a[piv][c] == 0) ++piv;
            if (piv == m) continue;
            std::swap(a[piv], a[r]);
            Rational d = a[r][c];
            for (auto& x : a[r]) x /= d;
            for (std::size_t i = 0; i < m; ++i) {
                if (i == r || a[i][c] == 0) continue;
                Rational f = a[i][c];
                for (std::size_t j = 0; j < r_; ++j) a[i][j] -= f * a[r][j];
            }
            pivots.push_back(c);
            ++r;
        }
        std::vector<bool> is_pivot(r_, false);
        for (std::size_t c : pivots) is_pivot[c] = true;
        std::size_t free_col = r_;
        for (std::size_t c = 0; c < r_; ++c)
            if (!is_pivot[c]) {
                free_col = c;
                break;
            }
        if (free_col == r_) return {};
        std::vector<Rational> x(r_, Rational(0));
        x[free_col] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = -a[i][free_col];
        return x;
    }

    static void normalize(std::vector<Rational>& f, Rational& b) {
        // Scale so the first nonzero coefficient is +/-1 with positive sign.
        for (const Rational& x : f) {
            if (x == 0) continue;
            Rational s = x < 0 ? -x : x;
            if (x < 0) {
                for (auto& y : f) y = -y / s;
                b = -b / s;
            } else {
                for (auto& y : f) y /= s;
                b /= s;
            }
            break;
        }
    }

    std::vector<Vec> pts_;
    std::size_t ambient_ = 0;
    std::size_t r_ = 0;
    std::vector<std::vector<Rational>> basis_;
    std::vector<std::vector<Rational>> coords_;
    std::vector<std::pair<std::vector<Rational>, Rational>> facets_;
};

// ---------------------------------------------------------------------------
// Lattice and Minkowski oracles
// ---------------------------------------------------------------------------

/// Brute-force membership: search integer coefficients in [-bound, bound]
/// over the generator list (at most 3 generators).
inline bool lattice_member_bruteforce(const std::vector<Vec>& gens, const Vec& v,
                                      std::int64_t bound) {
    const std::size_t r = gens.size();
    std::vector<std::int64_t> c(r, -bound);
    if (r == 0) return wtpoly::vecops::is_zero(v);
    for (;;) {
        Vec acc(v.size(), 0);
        for (std::size_t t = 0; t < r; ++t)
            for (std::size_t j = 0; j < v.size(); ++j) acc[j] += c[t] * gens[t][j];
        if (acc == v) return true;
        std::size_t t = 0;
        while (t < r && c[t] == bound) c[t++] = -bound;
        if (t == r) return false;
        ++c[t];
    }
}

inline std::set<Vec> minkowski_bruteforce(const std::set<Vec>& a, const std::set<Vec>& b) {
    std::set<Vec> out;
    for (const Vec& p : a)
        for (const Vec& q : b) out.insert(wtpoly::vecops::add(p, q));
    return out;
}

inline std::set<Vec> dilate_bruteforce(const std::set<Vec>& a, std::size_t m) {
    if (a.empty()) return {};
    std::set<Vec> acc = {Vec(a.begin()->size(), 0)};
    for (std::size_t t = 0; t < m; ++t) acc = minkowski_bruteforce(acc, a);
    return acc;
}

}  // namespace oracle

#endif  // WTPOLY_TESTS_ORACLE_HPP
