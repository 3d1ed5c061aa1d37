// Matroids from matrices, the basis-exchange axiom, matroid polytopes, and
// the correspondence between basis exchanges and root-parallel polytope
// edges, checked in both directions.

#ifndef WTPOLY_MATROID_HPP
#define WTPOLY_MATROID_HPP

#include "wtpoly/exact.hpp"
#include "wtpoly/polytope.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace wtpoly {

/// Ground set {1,..,n} with an explicit sorted basis list; bases are stored
/// 0-based internally and exposed 1-based in all I/O.
class Matroid {
public:
    Matroid(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>> bases)
        : n_(n), k_(k), bases_(std::move(bases)) {
        if (bases_.empty()) throw std::invalid_argument("Matroid: empty basis list");
        for (auto& b : bases_) {
            std::sort(b.begin(), b.end());
            if (b.size() != k_ || std::unique(b.begin(), b.end()) != b.end() ||
                (!b.empty() && b.back() >= n_))
                throw std::invalid_argument("Matroid: malformed basis");
        }
        std::sort(bases_.begin(), bases_.end());
        bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());
    }

    [[nodiscard]] std::size_t ground_size() const { return n_; }
    [[nodiscard]] std::size_t rank() const { return k_; }
    [[nodiscard]] const std::vector<std::vector<std::size_t>>& bases() const { return bases_; }

    [[nodiscard]] bool is_basis(const std::vector<std::size_t>& b) const {
        return std::binary_search(bases_.begin(), bases_.end(), b);
    }

    [[nodiscard]] Vec indicator(const std::vector<std::size_t>& b) const {
        Vec v(n_, 0);
        for (std::size_t e : b) v[e] = 1;
        return v;
    }

    friend bool operator==(const Matroid& a, const Matroid& b) {
        return a.n_ == b.n_ && a.k_ == b.k_ && a.bases_ == b.bases_;
    }

private:
    std::size_t n_, k_;
    std::vector<std::vector<std::size_t>> bases_;
};

/// The matroid of the row configuration of the first k columns of g: a
/// k-subset I of rows is a basis iff the I-th minor on those columns is
/// nonzero.
inline Matroid matroid_from_matrix(const Mat& g, std::size_t k) {
    const std::size_t n = g.rows();
    if (g.cols() != n) throw DimensionError("matroid_from_matrix: matrix must be square");
    if (k < 1 || k > n) throw std::invalid_argument("matroid_from_matrix: need 1 <= k <= n");

    std::vector<std::size_t> cols(k);
    for (std::size_t j = 0; j < k; ++j) cols[j] = j;

    std::vector<std::vector<std::size_t>> bases;
    std::vector<std::size_t> idx(k);
    for (std::size_t j = 0; j < k; ++j) idx[j] = j;
    for (;;) {
        if (!det(g.submatrix(idx, cols)).is_zero()) bases.push_back(idx);
        // next k-combination of {0..n-1}
        std::size_t t = k;
        while (t > 0 && idx[t - 1] == n - k + t - 1) --t;
        if (t == 0) break;
        ++idx[t - 1];
        for (std::size_t j = t; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (bases.empty())
        throw SingularMatrixError("matroid_from_matrix: first k columns are rank deficient");
    return Matroid(n, k, std::move(bases));
}

/// First exchange-axiom violation in lexicographic scan order, if any.
struct ExchangeViolation {
    std::vector<std::size_t> b1, b2;
    std::size_t x;  // element of b1 \ b2 with no valid replacement
};

inline std::optional<ExchangeViolation> check_exchange(const Matroid& m) {
    const auto& bs = m.bases();
    for (const auto& b1 : bs)
        for (const auto& b2 : bs) {
            if (b1 == b2) continue;
            for (std::size_t x : b1) {
                if (std::binary_search(b2.begin(), b2.end(), x)) continue;
                bool found = false;
                for (std::size_t y : b2) {
                    if (std::binary_search(b1.begin(), b1.end(), y)) continue;
                    std::vector<std::size_t> cand;
                    cand.reserve(b1.size());
                    for (std::size_t e : b1)
                        if (e != x) cand.push_back(e);
                    cand.push_back(y);
                    std::sort(cand.begin(), cand.end());
                    if (m.is_basis(cand)) {
                        found = true;
                        break;
                    }
                }
                if (!found) return ExchangeViolation{b1, b2, x};
            }
        }
    return std::nullopt;
}

/// Indicator vectors of the bases, one point per basis.
inline PointSet matroid_polytope(const Matroid& m) {
    std::vector<Vec> pts;
    pts.reserve(m.bases().size());
    for (const auto& b : m.bases()) pts.push_back(m.indicator(b));
    return PointSet(m.ground_size(), std::move(pts));
}

namespace detail {

/// Difference of two 0/1 indicators is parallel to e_i - e_j iff it has
/// exactly one +1 and one -1.
inline bool is_single_exchange_direction(const Vec& d) {
    int pos = 0, neg = 0;
    for (auto x : d) {
        if (x == 1) ++pos;
        else if (x == -1) ++neg;
        else if (x != 0) return false;
    }
    return pos == 1 && neg == 1;
}

inline std::string subset_to_string(const std::vector<std::size_t>& b) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < b.size(); ++i) os << (i ? "," : "") << (b[i] + 1);
    os << "}";
    return os.str();
}

}  // namespace detail

/// Result of checking (a) every hull edge direction is a root direction and
/// (b) a vertex pair is an edge iff the bases differ by a single exchange.
struct GgmsReport {
    bool pass = true;
    std::size_t edge_count = 0;
    std::string first_counterexample;  // empty when pass
};

inline GgmsReport verify_ggms(const Matroid& m) {
    GgmsReport rep;
    PointSet pts = matroid_polytope(m);
    auto edge_list = edges(pts);
    rep.edge_count = edge_list.size();

    std::vector<std::pair<Vec, Vec>> sorted_edges = edge_list;
    for (auto& e : sorted_edges)
        if (e.second < e.first) std::swap(e.first, e.second);
    std::sort(sorted_edges.begin(), sorted_edges.end());
    auto is_edge_pair = [&](Vec a, Vec b) {
        if (b < a) std::swap(a, b);
        return std::binary_search(sorted_edges.begin(), sorted_edges.end(), std::make_pair(a, b));
    };

    for (const auto& [u, v] : edge_list) {
        if (!detail::is_single_exchange_direction(vecops::sub(u, v))) {
            rep.pass = false;
            rep.first_counterexample = "edge with non-root direction";
            return rep;
        }
    }
    const auto& bs = m.bases();
    for (std::size_t i = 0; i < bs.size(); ++i)
        for (std::size_t j = i + 1; j < bs.size(); ++j) {
            std::vector<std::size_t> diff;
            std::set_difference(bs[i].begin(), bs[i].end(), bs[j].begin(), bs[j].end(),
                                std::back_inserter(diff));
            bool single = diff.size() == 1;
            bool edge = is_edge_pair(m.indicator(bs[i]), m.indicator(bs[j]));
            if (single != edge) {
                rep.pass = false;
                rep.first_counterexample = "bases " + detail::subset_to_string(bs[i]) + " and " +
                                           detail::subset_to_string(bs[j]) +
                                           (single ? " differ by one exchange but are not an edge"
                                                   : " form an edge but differ by more than one exchange");
                return rep;
            }
        }
    return rep;
}

/// Why a 0/1 point set fails to be a matroid polytope vertex set.
struct NotAMatroid {
    Vec edge_u, edge_v;  // hull edge with a non-root direction
};

/// Interpret equal-sum 0/1 points as basis indicators.  Accepts iff every
/// hull edge is root-parallel; the resulting basis family is then re-verified
/// against the exchange axiom, which must pass.
inline std::variant<Matroid, NotAMatroid> matroid_from_root_edge_polytope(const PointSet& a) {
    if (a.empty()) throw std::invalid_argument("matroid_from_root_edge_polytope: empty point set");
    std::int64_t k = -1;
    for (const Vec& p : a.points()) {
        std::int64_t s = 0;
        for (auto x : p) {
            if (x != 0 && x != 1)
                throw std::invalid_argument("matroid_from_root_edge_polytope: points must be 0/1 vectors");
            s += x;
        }
        if (k < 0) k = s;
        else if (s != k)
            throw std::invalid_argument("matroid_from_root_edge_polytope: mixed coordinate sums");
    }
    if (k == 0) throw std::invalid_argument("matroid_from_root_edge_polytope: zero-sum indicators");

    for (const auto& [u, v] : edges(a))
        if (!detail::is_single_exchange_direction(vecops::sub(u, v)))
            return NotAMatroid{u, v};

    std::vector<std::vector<std::size_t>> bases;
    for (const Vec& p : a.points()) {
        std::vector<std::size_t> b;
        for (std::size_t e = 0; e < p.size(); ++e)
            if (p[e] == 1) b.push_back(e);
        bases.push_back(std::move(b));
    }
    Matroid m(a.dim(), static_cast<std::size_t>(k), std::move(bases));
    if (check_exchange(m))
        throw std::logic_error(
            "matroid_from_root_edge_polytope: root-parallel edges but exchange axiom failed");
    return m;
}

}  // namespace wtpoly

#endif  // WTPOLY_MATROID_HPP
