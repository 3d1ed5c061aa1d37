// Type-A root and weight conventions: graded integer weight vectors, GL
// lifts of dominant weights, fundamental-weight decompositions, root sets
// with their lattices, and constructive extension of independent roots to a
// lattice basis via spanning forests of the complete graph.

#ifndef WTPOLY_ROOTS_HPP
#define WTPOLY_ROOTS_HPP

#include "wtpoly/exact.hpp"
#include "wtpoly/polytope.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <variant>
#include <vector>

namespace wtpoly {

// ---------------------------------------------------------------------------
// Weight vectors
// ---------------------------------------------------------------------------

/// Integer vector in Z^n carrying its grading (the coordinate sum).
class WeightVec {
public:
    explicit WeightVec(Vec coords) : coords_(std::move(coords)) {}

    [[nodiscard]] std::size_t n() const { return coords_.size(); }
    [[nodiscard]] const Vec& coords() const { return coords_; }
    [[nodiscard]] std::int64_t grading() const { return vecops::sum(coords_); }

    friend bool operator==(const WeightVec& a, const WeightVec& b) {
        return a.coords_ == b.coords_;
    }

private:
    Vec coords_;
};

/// Shift a weight by a constant vector so that its grading becomes g; only
/// possible when (g - grading) is divisible by n.
inline std::optional<WeightVec> normalize_to_grading(const WeightVec& v, std::int64_t g) {
    const auto n = static_cast<std::int64_t>(v.n());
    if (n == 0) return std::nullopt;
    std::int64_t diff = g - v.grading();
    if (diff % n != 0) return std::nullopt;
    std::int64_t c = diff / n;
    Vec out = v.coords();
    for (auto& x : out) x += c;
    return WeightVec(std::move(out));
}

/// GL lift of a dominant weight: weakly decreasing coordinates with the last
/// one equal to zero.
class DominantWeight {
public:
    explicit DominantWeight(Vec lambda_tilde) : lt_(std::move(lambda_tilde)) {
        if (lt_.coords().empty())
            throw std::invalid_argument("DominantWeight: empty coordinate vector");
        const Vec& c = lt_.coords();
        for (std::size_t i = 0; i + 1 < c.size(); ++i)
            if (c[i] < c[i + 1])
                throw std::invalid_argument("DominantWeight: coordinates must be weakly decreasing");
        if (c.back() != 0)
            throw std::invalid_argument("DominantWeight: last coordinate must be zero");
    }

    [[nodiscard]] std::size_t n() const { return lt_.n(); }
    [[nodiscard]] const WeightVec& lambda_tilde() const { return lt_; }
    [[nodiscard]] const Vec& coords() const { return lt_.coords(); }
    [[nodiscard]] std::int64_t total() const { return lt_.grading(); }

    [[nodiscard]] DominantWeight scaled(std::int64_t m) const {
        if (m < 0) throw std::invalid_argument("DominantWeight: negative scale");
        return DominantWeight(vecops::scale(coords(), m));
    }

    friend bool operator==(const DominantWeight& a, const DominantWeight& b) {
        return a.lt_ == b.lt_;
    }

private:
    WeightVec lt_;
};

/// Coefficients a_1..a_{n-1} with sum_k a_k * (e_1 + ... + e_k) reconstructing
/// the lift.
struct FundDecomp {
    std::vector<std::int64_t> a;
};

inline FundDecomp fundamental_decomposition(const DominantWeight& l) {
    const Vec& c = l.coords();
    FundDecomp d;
    d.a.resize(c.size() - 1);
    for (std::size_t k = 0; k + 1 < c.size(); ++k) d.a[k] = c[k] - c[k + 1];
    return d;
}

// ---------------------------------------------------------------------------
// Root sets
// ---------------------------------------------------------------------------

/// A finite set of roots closed under negation together with the lattice it
/// spans.
struct RootSet {
    std::size_t dim;
    PointSet roots;
    IntegerLattice lattice;
};

/// Roots e_i - e_j (i != j) of the rank n-1 type-A system embedded in Z^n;
/// their lattice is the zero-coordinate-sum sublattice.
inline RootSet type_a_roots(std::size_t n) {
    if (n < 2) throw std::invalid_argument("type_a_roots: need n >= 2");
    std::vector<Vec> roots;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            Vec r(n, 0);
            r[i] = 1;
            r[j] = -1;
            roots.push_back(std::move(r));
        }
    std::vector<std::vector<std::int64_t>> gens;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        std::vector<std::int64_t> g(n, 0);
        g[i] = 1;
        g[i + 1] = -1;
        gens.push_back(std::move(g));
    }
    return {n, PointSet(n, std::move(roots)), IntegerLattice::from_generators(n, gens)};
}

/// The eight roots of the rank-2 system with two root lengths, in the
/// standard Z^2 coordinates; they span all of Z^2.
inline RootSet b2_roots() {
    std::vector<Vec> roots = {{1, 0},  {-1, 0}, {0, 1},  {0, -1},
                              {1, 1},  {-1, -1}, {1, -1}, {-1, 1}};
    return {2, PointSet(2, std::move(roots)),
            IntegerLattice::from_generators(2, {{1, 0}, {0, 1}})};
}

/// grading == 0, i.e. the vector lies in the type-A root lattice of its
/// ambient Z^n.
inline bool in_root_lattice(const WeightVec& v) { return v.grading() == 0; }

// ---------------------------------------------------------------------------
// Weyl hull membership (majorization)
// ---------------------------------------------------------------------------

/// True iff mu lies in the convex hull of all coordinate permutations of the
/// lift: every partial sum of the decreasingly sorted mu is bounded by the
/// corresponding partial sum of the lift, with equal totals.
inline bool weyl_hull_member(const WeightVec& mu, const DominantWeight& l) {
    if (mu.n() != l.n()) throw DimensionError("weyl_hull_member: size mismatch");
    if (mu.grading() != l.total())
        throw GradingError("weyl_hull_member: grading mismatch");
    Vec s = mu.coords();
    std::sort(s.begin(), s.end(), std::greater<>());
    std::int64_t pm = 0, pl = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        pm += s[i];
        pl += l.coords()[i];
        if (pm > pl) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Basis extension for independent roots
// ---------------------------------------------------------------------------

/// Reported when the input roots are linearly dependent: the ground-set
/// vertices of a cycle in the corresponding graph, plus the positions of the
/// input roots involved.
struct IndependenceFailure {
    std::vector<std::size_t> cycle_vertices;      // 0-based vertices of K_n
    std::vector<std::size_t> cycle_input_roots;   // indices into the input list
};

struct BasisExtension {
    std::vector<Vec> basis;                 // n-1 roots, input first
    std::vector<Integer> invariant_factors; // certificate: all 1
};

namespace detail {

/// Decode a type-A root e_i - e_j into (i, j); throws on anything else.
inline std::pair<std::size_t, std::size_t> decode_type_a_root(const Vec& r) {
    std::size_t pos = r.size(), neg = r.size();
    for (std::size_t t = 0; t < r.size(); ++t) {
        if (r[t] == 0) continue;
        if (r[t] == 1 && pos == r.size()) pos = t;
        else if (r[t] == -1 && neg == r.size()) neg = t;
        else throw std::invalid_argument("extend_to_root_basis: input is not a type-A root");
    }
    if (pos == r.size() || neg == r.size())
        throw std::invalid_argument("extend_to_root_basis: input is not a type-A root");
    return {pos, neg};
}

}  // namespace detail

/// Extend a linearly independent set of type-A roots to a basis of the root
/// lattice.  Roots are oriented edges of the complete graph; independence is
/// the forest condition and the extension completes the forest to a spanning
/// tree, taking the lexicographically smallest available edge at every step.
/// The returned invariant factors certify lattice index 1.
inline std::variant<BasisExtension, IndependenceFailure> extend_to_root_basis(
    const std::vector<Vec>& roots, std::size_t n) {
    if (n < 2) throw std::invalid_argument("extend_to_root_basis: need n >= 2");

    // Union-find over the vertices of K_n, with parent edges kept for cycle
    // recovery.
    std::vector<std::size_t> comp(n);
    std::iota(comp.begin(), comp.end(), std::size_t{0});
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(n);  // (neighbor, root idx)

    auto find = [&](std::size_t x) {
        while (comp[x] != x) x = comp[x];
        return x;
    };

    for (std::size_t idx = 0; idx < roots.size(); ++idx) {
        if (roots[idx].size() != n)
            throw DimensionError("extend_to_root_basis: root dimension mismatch");
        auto [i, j] = detail::decode_type_a_root(roots[idx]);
        std::size_t ci = find(i), cj = find(j);
        if (ci == cj) {
            // Dependent: recover the path i .. j in the forest built so far.
            std::vector<std::size_t> prev(n, n), prev_edge(n, roots.size());
            std::vector<std::size_t> stack{i};
            prev[i] = i;
            while (!stack.empty()) {
                std::size_t x = stack.back();
                stack.pop_back();
                for (auto [y, e] : adj[x])
                    if (prev[y] == n) {
                        prev[y] = x;
                        prev_edge[y] = e;
                        stack.push_back(y);
                    }
            }
            IndependenceFailure fail;
            for (std::size_t x = j; x != i; x = prev[x]) {
                fail.cycle_vertices.push_back(x);
                fail.cycle_input_roots.push_back(prev_edge[x]);
            }
            fail.cycle_vertices.push_back(i);
            fail.cycle_input_roots.push_back(idx);
            std::reverse(fail.cycle_vertices.begin(), fail.cycle_vertices.end());
            std::reverse(fail.cycle_input_roots.begin(), fail.cycle_input_roots.end());
            return fail;
        }
        comp[ci] = cj;
        adj[i].emplace_back(j, idx);
        adj[j].emplace_back(i, idx);
    }

    BasisExtension ext;
    ext.basis = roots;
    for (std::size_t i = 0; i < n && ext.basis.size() < n - 1; ++i)
        for (std::size_t j = i + 1; j < n && ext.basis.size() < n - 1; ++j) {
            std::size_t ci = find(i), cj = find(j);
            if (ci == cj) continue;
            comp[ci] = cj;
            Vec r(n, 0);
            r[i] = 1;
            r[j] = -1;
            ext.basis.push_back(std::move(r));
        }

    // Certificate: the Smith form of the basis matrix must have all invariant
    // factors equal to 1.
    IntMat m(ext.basis.size(), n);
    for (std::size_t i = 0; i < ext.basis.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = ext.basis[i][j];
    ext.invariant_factors = snf(m).diag;
    for (const Integer& dv : ext.invariant_factors)
        if (dv != 1)
            throw std::logic_error("extend_to_root_basis: spanning-tree completion is not index 1");
    return ext;
}

}  // namespace wtpoly

#endif  // WTPOLY_ROOTS_HPP
