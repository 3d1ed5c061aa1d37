// Exact polyhedral kernel over the rationals: simplex-based linear
// programming, hull membership with certificates, vertex and edge detection,
// lattice-point enumeration in hulls, and Minkowski sums of integer point
// sets.  All face decisions are LP-based; no general convex-hull algorithm.

#ifndef WTPOLY_POLYTOPE_HPP
#define WTPOLY_POLYTOPE_HPP

#include "wtpoly/exact.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <unordered_set>
#include <utility>
#include <vector>

namespace wtpoly {

using Vec = std::vector<std::int64_t>;

namespace vecops {

inline Vec add(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}
inline Vec sub(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}
inline Vec scale(const Vec& a, std::int64_t m) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * m;
    return r;
}
inline std::int64_t sum(const Vec& a) {
    std::int64_t s = 0;
    for (auto x : a) s += x;
    return s;
}
inline bool is_zero(const Vec& a) {
    return std::all_of(a.begin(), a.end(), [](std::int64_t x) { return x == 0; });
}

/// Divide by the gcd of the entries and normalize the first nonzero entry to
/// be positive.  The zero vector is returned unchanged.
inline Vec primitive(Vec a) {
    std::int64_t g = 0;
    for (auto x : a) g = std::gcd(g, x < 0 ? -x : x);
    if (g == 0) return a;
    for (auto& x : a) x /= g;
    for (auto x : a) {
        if (x == 0) continue;
        if (x < 0)
            for (auto& y : a) y = -y;
        break;
    }
    return a;
}

/// True when w lies on the closed segment [u, v].
inline bool on_segment(const Vec& w, const Vec& u, const Vec& v) {
    Vec d = sub(v, u), e = sub(w, u);
    // collinearity: all 2x2 minors of (e; d) vanish
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j)
            if (e[i] * d[j] != e[j] * d[i]) return false;
    // e = t*d with t in [0,1]
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] == 0) {
            if (e[i] != 0) return false;
            continue;
        }
        if (e[i] * d[i] < 0) return false;                    // t >= 0
        if ((e[i] < 0 ? -e[i] : e[i]) > (d[i] < 0 ? -d[i] : d[i])) return false;  // t <= 1
    }
    return true;
}

struct VecHash {
    std::size_t operator()(const Vec& v) const noexcept {
        std::uint64_t h = 1469598103934665603ull;
        for (std::int64_t x : v) {
            h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

}  // namespace vecops

// ---------------------------------------------------------------------------
// PointSet
// ---------------------------------------------------------------------------

/// Finite deduplicated set of integer vectors in Z^d, kept lexicographically
/// sorted; the sorted order is the canonical form compared by operator==.
class PointSet {
public:
    explicit PointSet(std::size_t dim) : dim_(dim) {}
    PointSet(std::size_t dim, std::vector<Vec> pts) : dim_(dim), pts_(std::move(pts)) {
        for (const Vec& p : pts_)
            if (p.size() != dim_) throw DimensionError("PointSet: point dimension mismatch");
        canonicalize();
    }

    [[nodiscard]] std::size_t dim() const { return dim_; }
    [[nodiscard]] std::size_t size() const { return pts_.size(); }
    [[nodiscard]] bool empty() const { return pts_.empty(); }
    [[nodiscard]] const std::vector<Vec>& points() const { return pts_; }
    [[nodiscard]] const Vec& operator[](std::size_t i) const { return pts_[i]; }

    [[nodiscard]] bool contains(const Vec& p) const {
        return std::binary_search(pts_.begin(), pts_.end(), p);
    }

    void insert(Vec p) {
        if (p.size() != dim_) throw DimensionError("PointSet: point dimension mismatch");
        auto it = std::lower_bound(pts_.begin(), pts_.end(), p);
        if (it == pts_.end() || *it != p) pts_.insert(it, std::move(p));
    }

    [[nodiscard]] PointSet translated(const Vec& t) const {
        std::vector<Vec> out;
        out.reserve(pts_.size());
        for (const Vec& p : pts_) out.push_back(vecops::add(p, t));
        return PointSet(dim_, std::move(out));
    }

    /// Componentwise bounding box (lo, hi); requires a nonempty set.
    [[nodiscard]] std::pair<Vec, Vec> bounding_box() const {
        if (pts_.empty()) throw std::logic_error("PointSet: bounding box of empty set");
        Vec lo = pts_.front(), hi = pts_.front();
        for (const Vec& p : pts_)
            for (std::size_t j = 0; j < dim_; ++j) {
                lo[j] = std::min(lo[j], p[j]);
                hi[j] = std::max(hi[j], p[j]);
            }
        return {lo, hi};
    }

    friend bool operator==(const PointSet& a, const PointSet& b) {
        return a.dim_ == b.dim_ && a.pts_ == b.pts_;
    }

private:
    void canonicalize() {
        std::sort(pts_.begin(), pts_.end());
        pts_.erase(std::unique(pts_.begin(), pts_.end()), pts_.end());
    }

    std::size_t dim_;
    std::vector<Vec> pts_;
};

// ---------------------------------------------------------------------------
// Linear programming (exact two-phase simplex with Bland's rule)
// ---------------------------------------------------------------------------

enum class Rel { Le, Eq, Ge };
enum class LpStatus { Optimal, Infeasible, Unbounded };

struct Constraint {
    std::vector<Rational> coeffs;
    Rel rel;
    Rational rhs;
};

/// maximize objective . x subject to the constraints; variables are free.
struct LinearProgram {
    std::vector<Rational> objective;
    std::vector<Constraint> constraints;
};

struct LpSolution {
    LpStatus status;
    Rational value;                ///< objective value when optimal
    std::vector<Rational> point;   ///< witness when optimal
};

namespace detail {

/// Simplex core over nonnegative variables: maximize c.x s.t. A x rel b, x >= 0.
struct CoreProblem {
    std::size_t nvars = 0;
    std::vector<std::vector<Rational>> rows;  // one coefficient vector per constraint
    std::vector<Rel> rels;
    std::vector<Rational> rhs;
    std::vector<Rational> objective;          // size nvars (empty means feasibility)
};

struct CoreSolution {
    LpStatus status;
    Rational value;
    std::vector<Rational> x;  // size nvars
};

class SimplexTableau {
public:
    explicit SimplexTableau(const CoreProblem& p) : n_(p.nvars) {
        const std::size_t m = p.rows.size();
        // Column layout: [structural | slack/surplus | artificial], rhs kept
        // separately per row.
        nslack_ = 0;
        for (Rel r : p.rels)
            if (r != Rel::Eq) ++nslack_;
        art_begin_ = n_ + nslack_;
        ncols_ = art_begin_ + m;  // upper bound; unused artificial columns stay zero
        rows_.assign(m, std::vector<Rational>(ncols_ + 1));
        basis_.assign(m, 0);
        is_artificial_.assign(ncols_, false);

        std::size_t slack_at = n_;
        std::size_t nart = 0;
        for (std::size_t i = 0; i < m; ++i) {
            auto& row = rows_[i];
            bool flip = p.rhs[i] < 0;
            for (std::size_t j = 0; j < n_; ++j) row[j] = flip ? -p.rows[i][j] : p.rows[i][j];
            row[ncols_] = flip ? -p.rhs[i] : p.rhs[i];
            Rel rel = p.rels[i];
            if (flip) {
                if (rel == Rel::Le) rel = Rel::Ge;
                else if (rel == Rel::Ge) rel = Rel::Le;
            }
            if (rel != Rel::Eq) {
                row[slack_at] = (rel == Rel::Le) ? 1 : -1;
                if (rel == Rel::Le) {
                    basis_[i] = slack_at;  // slack starts basic
                } else {
                    basis_[i] = make_artificial(i, nart);
                }
                ++slack_at;
            } else {
                basis_[i] = make_artificial(i, nart);
            }
            if (is_artificial_[basis_[i]]) rows_[i][basis_[i]] = 1;
        }
    }

    /// Phase 1: drive the artificial variables to zero.  Returns false when
    /// the problem is infeasible.
    bool phase1() {
        std::vector<Rational> obj(ncols_ + 1);
        bool any = false;
        for (std::size_t j = art_begin_; j < ncols_; ++j)
            if (is_artificial_[j]) {
                obj[j] = -1;
                any = true;
            }
        if (!any) return true;
        reduce_objective(obj);
        run(obj, /*allow_artificial=*/true);
        if (-obj[ncols_] != 0) return false;  // leftover infeasibility
        expel_artificials();
        return true;
    }

    /// Phase 2: maximize the structural objective.  Returns the status.
    LpStatus phase2(const std::vector<Rational>& c, Rational& value) {
        std::vector<Rational> obj(ncols_ + 1);
        for (std::size_t j = 0; j < c.size() && j < n_; ++j) obj[j] = c[j];
        reduce_objective(obj);
        bool bounded = run(obj, /*allow_artificial=*/false);
        if (!bounded) return LpStatus::Unbounded;
        value = -obj[ncols_];
        return LpStatus::Optimal;
    }

    [[nodiscard]] std::vector<Rational> solution() const {
        std::vector<Rational> x(n_);
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (basis_[i] < n_) x[basis_[i]] = rows_[i][ncols_];
        return x;
    }

private:
    std::size_t make_artificial(std::size_t row, std::size_t& nart) {
        std::size_t col = art_begin_ + nart++;
        is_artificial_[col] = true;
        (void)row;
        return col;
    }

    // Express the objective in terms of the nonbasic variables.
    void reduce_objective(std::vector<Rational>& obj) {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const Rational f = obj[basis_[i]];
            if (f == 0) continue;
            for (std::size_t j = 0; j <= ncols_; ++j) obj[j] -= f * rows_[i][j];
        }
    }

    // Bland's rule simplex loop; returns false on unboundedness.
    bool run(std::vector<Rational>& obj, bool allow_artificial) {
        for (;;) {
            std::size_t enter = ncols_;
            for (std::size_t j = 0; j < ncols_; ++j) {
                if (!allow_artificial && is_artificial_[j]) continue;
                if (obj[j] > 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == ncols_) return true;  // optimal
            std::size_t leave = rows_.size();
            Rational best;
            for (std::size_t i = 0; i < rows_.size(); ++i) {
                if (rows_[i][enter] <= 0) continue;
                Rational ratio = rows_[i][ncols_] / rows_[i][enter];
                if (leave == rows_.size() || ratio < best ||
                    (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == rows_.size()) return false;  // unbounded direction
            pivot(leave, enter, obj);
        }
    }

    void pivot(std::size_t r, std::size_t c, std::vector<Rational>& obj) {
        auto& prow = rows_[r];
        const Rational piv = prow[c];
        for (auto& x : prow) x /= piv;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (i == r || rows_[i][c] == 0) continue;
            const Rational f = rows_[i][c];
            for (std::size_t j = 0; j <= ncols_; ++j) rows_[i][j] -= f * prow[j];
        }
        if (obj[c] != 0) {
            const Rational f = obj[c];
            for (std::size_t j = 0; j <= ncols_; ++j) obj[j] -= f * prow[j];
        }
        basis_[r] = c;
    }

    // Pivot zero-level artificials out of the basis; drop redundant rows.
    void expel_artificials() {
        for (std::size_t i = 0; i < rows_.size();) {
            if (!is_artificial_[basis_[i]]) {
                ++i;
                continue;
            }
            std::size_t col = ncols_;
            for (std::size_t j = 0; j < art_begin_; ++j)
                if (rows_[i][j] != 0) {
                    col = j;
                    break;
                }
            if (col == ncols_) {
                rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
                basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
            } else {
                std::vector<Rational> dummy(ncols_ + 1);
                pivot(i, col, dummy);
                ++i;
            }
        }
    }

    std::size_t n_, nslack_ = 0, art_begin_ = 0, ncols_ = 0;
    std::vector<std::vector<Rational>> rows_;
    std::vector<std::size_t> basis_;
    std::vector<bool> is_artificial_;
};

inline CoreSolution core_solve(const CoreProblem& p) {
    SimplexTableau t(p);
    if (!t.phase1()) return {LpStatus::Infeasible, Rational(0), {}};
    Rational value(0);
    std::vector<Rational> c = p.objective;
    c.resize(p.nvars);
    LpStatus st = t.phase2(c, value);
    if (st == LpStatus::Unbounded) return {LpStatus::Unbounded, Rational(0), {}};
    return {LpStatus::Optimal, value, t.solution()};
}

}  // namespace detail

/// Exact rational simplex over free variables.  All outcomes are values; no
/// exceptions are thrown for infeasible or unbounded programs.
inline LpSolution lp_solve(const LinearProgram& lp) {
    const std::size_t d = lp.objective.size();
    detail::CoreProblem p;
    p.nvars = 2 * d;  // free variable split x = x+ - x-
    p.objective.resize(2 * d);
    for (std::size_t j = 0; j < d; ++j) {
        p.objective[2 * j] = lp.objective[j];
        p.objective[2 * j + 1] = -lp.objective[j];
    }
    for (const Constraint& c : lp.constraints) {
        if (c.coeffs.size() != d) throw DimensionError("lp_solve: constraint dimension mismatch");
        std::vector<Rational> row(2 * d);
        for (std::size_t j = 0; j < d; ++j) {
            row[2 * j] = c.coeffs[j];
            row[2 * j + 1] = -c.coeffs[j];
        }
        p.rows.push_back(std::move(row));
        p.rels.push_back(c.rel);
        p.rhs.push_back(c.rhs);
    }
    detail::CoreSolution s = detail::core_solve(p);
    LpSolution out{s.status, s.value, {}};
    if (s.status == LpStatus::Optimal) {
        out.point.resize(d);
        for (std::size_t j = 0; j < d; ++j) out.point[j] = s.x[2 * j] - s.x[2 * j + 1];
    }
    return out;
}

// ---------------------------------------------------------------------------
// Hull membership
// ---------------------------------------------------------------------------

/// Certificate for a hull-membership query: barycentric weights over the
/// point set when inside, otherwise a functional with f.q >= bound + 1 and
/// f.p <= bound for every p in the set.
struct HullCertificate {
    bool inside = false;
    std::vector<Rational> weights;
    std::vector<Rational> functional;
    Rational bound;
};

namespace detail {

inline void check_hull_args(const std::vector<Rational>& q, const PointSet& a) {
    if (a.empty()) throw std::invalid_argument("hull_member: empty point set");
    if (q.size() != a.dim()) throw DimensionError("hull_member: dimension mismatch");
}

inline bool hull_member_impl(const std::vector<Rational>& q, const PointSet& a,
                             std::vector<Rational>* weights) {
    check_hull_args(q, a);
    const std::size_t d = a.dim(), npts = a.size();
    CoreProblem p;
    p.nvars = npts;
    for (std::size_t j = 0; j < d; ++j) {
        std::vector<Rational> row(npts);
        for (std::size_t i = 0; i < npts; ++i) row[i] = a[i][j];
        p.rows.push_back(std::move(row));
        p.rels.push_back(Rel::Eq);
        p.rhs.push_back(q[j]);
    }
    p.rows.emplace_back(npts, Rational(1));
    p.rels.push_back(Rel::Eq);
    p.rhs.push_back(1);
    CoreSolution s = core_solve(p);
    if (s.status != LpStatus::Optimal) return false;
    if (weights) *weights = s.x;
    return true;
}

/// Find a separating functional for q outside conv(a):  f.p - c <= 0 on a,
/// f.q - c >= 1.  Must be called only when q is outside the hull.
inline std::pair<std::vector<Rational>, Rational> separating_functional(
    const std::vector<Rational>& q, const PointSet& a) {
    const std::size_t d = a.dim();
    CoreProblem p;
    p.nvars = 2 * d + 2;  // f split, c split
    for (const Vec& pt : a.points()) {
        std::vector<Rational> row(p.nvars);
        for (std::size_t j = 0; j < d; ++j) {
            row[2 * j] = pt[j];
            row[2 * j + 1] = -Rational(pt[j]);
        }
        row[2 * d] = -1;
        row[2 * d + 1] = 1;
        p.rows.push_back(std::move(row));
        p.rels.push_back(Rel::Le);
        p.rhs.push_back(0);
    }
    std::vector<Rational> row(p.nvars);
    for (std::size_t j = 0; j < d; ++j) {
        row[2 * j] = q[j];
        row[2 * j + 1] = -q[j];
    }
    row[2 * d] = -1;
    row[2 * d + 1] = 1;
    p.rows.push_back(std::move(row));
    p.rels.push_back(Rel::Ge);
    p.rhs.push_back(1);
    CoreSolution s = core_solve(p);
    if (s.status != LpStatus::Optimal)
        throw std::logic_error("separating_functional: query point is not outside the hull");
    std::vector<Rational> f(d);
    for (std::size_t j = 0; j < d; ++j) f[j] = s.x[2 * j] - s.x[2 * j + 1];
    Rational c = s.x[2 * d] - s.x[2 * d + 1];
    return {std::move(f), std::move(c)};
}

inline std::vector<Rational> to_rational(const Vec& v) {
    std::vector<Rational> r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i];
    return r;
}

}  // namespace detail

/// True iff q is a convex combination of the points of a.
inline bool hull_member(const std::vector<Rational>& q, const PointSet& a) {
    return detail::hull_member_impl(q, a, nullptr);
}
inline bool hull_member(const Vec& q, const PointSet& a) {
    return hull_member(detail::to_rational(q), a);
}

/// Hull membership with an explicit certificate for either answer.
inline HullCertificate hull_member_certified(const std::vector<Rational>& q, const PointSet& a) {
    HullCertificate cert;
    std::vector<Rational> w;
    if (detail::hull_member_impl(q, a, &w)) {
        cert.inside = true;
        cert.weights = std::move(w);
        return cert;
    }
    auto [f, c] = detail::separating_functional(q, a);
    cert.inside = false;
    cert.functional = std::move(f);
    cert.bound = std::move(c);
    return cert;
}

/// Incrementally reusable membership tester: separating functionals found for
/// earlier queries screen later ones without an LP.
class HullMembershipTester {
public:
    explicit HullMembershipTester(const PointSet& a) : a_(a) {
        if (a.empty()) throw std::invalid_argument("HullMembershipTester: empty point set");
    }

    bool contains(const std::vector<Rational>& q) {
        for (const auto& f : cache_) {
            Rational fq(0);
            for (std::size_t j = 0; j < q.size(); ++j) fq += f.first[j] * q[j];
            if (fq > f.second) return false;  // separated by a known functional
        }
        if (detail::hull_member_impl(q, a_, nullptr)) return true;
        auto [f, c] = detail::separating_functional(q, a_);
        // Tighten the bound to the actual maximum over the set.
        Rational best;
        bool first = true;
        for (const Vec& p : a_.points()) {
            Rational v(0);
            for (std::size_t j = 0; j < q.size(); ++j) v += f[j] * p[j];
            if (first || v > best) {
                best = v;
                first = false;
            }
        }
        cache_.emplace_back(std::move(f), std::move(best));
        return false;
    }
    bool contains(const Vec& q) { return contains(detail::to_rational(q)); }

private:
    const PointSet& a_;
    std::vector<std::pair<std::vector<Rational>, Rational>> cache_;
};

// ---------------------------------------------------------------------------
// Vertices and edges
// ---------------------------------------------------------------------------

/// Subset of a consisting of the points not in the hull of the others.
inline PointSet vertices(const PointSet& a) {
    if (a.empty()) throw std::invalid_argument("vertices: empty point set");
    std::vector<Vec> out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::vector<Vec> others;
        others.reserve(a.size() - 1);
        for (std::size_t j = 0; j < a.size(); ++j)
            if (j != i) others.push_back(a[j]);
        if (others.empty()) {
            out.push_back(a[i]);
            continue;
        }
        PointSet rest(a.dim(), std::move(others));
        if (!hull_member(a[i], rest)) out.push_back(a[i]);
    }
    return PointSet(a.dim(), std::move(out));
}

namespace detail {

/// LP encoding of "some functional attains its maximum over `others` + {u,v}
/// exactly on {u,v}": maximize the margin delta subject to f(u) = f(v) and
/// f(u) >= f(w) + delta, delta <= 1; accept iff the optimum is positive.
inline bool edge_lp(const Vec& u, const Vec& v, const std::vector<const Vec*>& others) {
    const std::size_t d = u.size();
    CoreProblem p;
    p.nvars = 2 * d + 2;  // f split, delta split
    const std::size_t dp = 2 * d, dn = 2 * d + 1;
    {
        std::vector<Rational> row(p.nvars);
        for (std::size_t j = 0; j < d; ++j) {
            row[2 * j] = u[j] - v[j];
            row[2 * j + 1] = -Rational(u[j] - v[j]);
        }
        p.rows.push_back(std::move(row));
        p.rels.push_back(Rel::Eq);
        p.rhs.push_back(0);
    }
    for (const Vec* w : others) {
        std::vector<Rational> row(p.nvars);
        for (std::size_t j = 0; j < d; ++j) {
            row[2 * j] = u[j] - (*w)[j];
            row[2 * j + 1] = -Rational(u[j] - (*w)[j]);
        }
        row[dp] = -1;
        row[dn] = 1;
        p.rows.push_back(std::move(row));
        p.rels.push_back(Rel::Ge);
        p.rhs.push_back(0);
    }
    {
        std::vector<Rational> row(p.nvars);
        row[dp] = 1;
        row[dn] = -1;
        p.rows.push_back(std::move(row));
        p.rels.push_back(Rel::Le);
        p.rhs.push_back(1);
    }
    p.objective.assign(p.nvars, Rational(0));
    p.objective[dp] = 1;
    p.objective[dn] = -1;
    CoreSolution s = core_solve(p);
    return s.status == LpStatus::Optimal && s.value > 0;
}

}  // namespace detail

/// Unordered vertex pairs {u,v} such that some linear functional attains its
/// maximum over a exactly on {u,v}.  Tie-breaking is exact; no tolerance.
inline std::vector<std::pair<Vec, Vec>> edges(const PointSet& a) {
    if (a.empty()) throw std::invalid_argument("edges: empty point set");
    PointSet v = vertices(a);
    std::vector<std::pair<Vec, Vec>> out;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j) {
            std::vector<const Vec*> others;
            others.reserve(v.size() - 2);
            for (std::size_t k = 0; k < v.size(); ++k)
                if (k != i && k != j) others.push_back(&v[k]);
            if (detail::edge_lp(v[i], v[j], others)) out.emplace_back(v[i], v[j]);
        }
    return out;
}

/// Edge test against an arbitrary point set: points of the set lying on the
/// closed segment [u,v] do not block the margin.  Used by saturation checks,
/// where sets carry their interior lattice points.
inline bool is_edge(const Vec& u, const Vec& v, const PointSet& a) {
    std::vector<const Vec*> others;
    for (const Vec& w : a.points()) {
        if (w == u || w == v) continue;
        if (vecops::on_segment(w, u, v)) continue;
        others.push_back(&w);
    }
    return detail::edge_lp(u, v, others);
}

// ---------------------------------------------------------------------------
// Lattice point enumeration
// ---------------------------------------------------------------------------

namespace detail {

inline Integer floor_div(const Integer& a, const Integer& b) {
    Integer q = a / b;
    if (q * b > a) q -= 1;
    return q;
}
inline Integer ceil_div(const Integer& a, const Integer& b) {
    Integer q = a / b;
    if (q * b < a) q += 1;
    return q;
}

}  // namespace detail

/// Visit every point of (shift + l) inside the integer box [lo, hi].
/// Enumeration walks the Hermite basis triangularly, pruning each coordinate
/// as soon as it is determined.
inline void enumerate_affine_lattice_box(const IntegerLattice& l, const Vec& shift, const Vec& lo,
                                         const Vec& hi,
                                         const std::function<void(const Vec&)>& visit) {
    const std::size_t d = l.ambient_dim();
    if (shift.size() != d || lo.size() != d || hi.size() != d)
        throw DimensionError("enumerate_affine_lattice_box: dimension mismatch");
    for (std::size_t j = 0; j < d; ++j)
        if (lo[j] > hi[j]) return;
    const IntMat& b = l.hnf_basis();
    const std::size_t r = b.rows();
    std::vector<std::size_t> piv = l.pivot_columns();

    // Columns before the first pivot are fixed by the shift alone.
    std::size_t first_piv = (r == 0) ? d : piv[0];
    for (std::size_t j = 0; j < first_piv; ++j)
        if (shift[j] < lo[j] || shift[j] > hi[j]) return;

    std::vector<Integer> part(d);
    for (std::size_t j = 0; j < d; ++j) part[j] = shift[j];

    std::function<void(std::size_t)> rec = [&](std::size_t t) {
        if (t == r) {
            Vec x(d);
            for (std::size_t j = 0; j < d; ++j) x[j] = static_cast<std::int64_t>(part[j]);
            visit(x);
            return;
        }
        const std::size_t pc = piv[t];
        const Integer& pivval = b.at(t, pc);  // positive by HNF convention
        // x[pc] = part[pc] + c * pivval must land in [lo, hi]
        Integer cmin = detail::ceil_div(Integer(lo[pc]) - part[pc], pivval);
        Integer cmax = detail::floor_div(Integer(hi[pc]) - part[pc], pivval);
        const std::size_t next_piv = (t + 1 < r) ? piv[t + 1] : d;
        for (Integer c = cmin; c <= cmax; ++c) {
            if (c != 0)
                for (std::size_t j = pc; j < d; ++j) part[j] += c * b.at(t, j);
            // Columns in [pc, next_piv) are now final; prune on the box.
            bool ok = true;
            for (std::size_t j = pc; j < next_piv && ok; ++j)
                ok = part[j] >= lo[j] && part[j] <= hi[j];
            if (ok) rec(t + 1);
            if (c != 0)
                for (std::size_t j = pc; j < d; ++j) part[j] -= c * b.at(t, j);
        }
    };
    rec(0);
}

/// All points of shift + l inside conv(a).  Requires (and checks) that every
/// point of a lies in shift + l.
inline PointSet lattice_points_in_hull(const PointSet& a, const IntegerLattice& l,
                                       const Vec& shift) {
    if (a.empty()) throw std::invalid_argument("lattice_points_in_hull: empty point set");
    if (l.ambient_dim() != a.dim() || shift.size() != a.dim())
        throw DimensionError("lattice_points_in_hull: dimension mismatch");
    for (const Vec& p : a.points())
        if (!lattice_member(l, vecops::sub(p, shift)))
            throw LatticeError("lattice_points_in_hull: a point of the set is outside shift + lattice");

    auto [lo, hi] = a.bounding_box();
    HullMembershipTester tester(a);
    std::vector<Vec> found;
    enumerate_affine_lattice_box(l, shift, lo, hi, [&](const Vec& x) {
        if (a.contains(x) || tester.contains(x)) found.push_back(x);
    });
    return PointSet(a.dim(), std::move(found));
}

// ---------------------------------------------------------------------------
// Minkowski sums
// ---------------------------------------------------------------------------

/// Deduplicated pairwise-sum set {p + q : p in a, q in b}.
inline PointSet minkowski_sum(const PointSet& a, const PointSet& b) {
    if (a.dim() != b.dim()) throw DimensionError("minkowski_sum: dimension mismatch");
    std::unordered_set<Vec, vecops::VecHash> seen;
    seen.reserve(a.size() * b.size());
    for (const Vec& p : a.points())
        for (const Vec& q : b.points()) seen.insert(vecops::add(p, q));
    std::vector<Vec> out(seen.begin(), seen.end());
    return PointSet(a.dim(), std::move(out));
}

/// m-fold Minkowski sum of a with itself; dilate(a, 0) = {0}.
inline PointSet dilate(const PointSet& a, std::size_t m) {
    PointSet acc(a.dim(), {Vec(a.dim(), 0)});
    for (std::size_t t = 0; t < m; ++t) acc = minkowski_sum(acc, a);
    return acc;
}

}  // namespace wtpoly

#endif  // WTPOLY_POLYTOPE_HPP
