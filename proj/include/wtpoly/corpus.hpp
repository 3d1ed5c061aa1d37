// Seeded random corpora and the property-suite drivers.  All randomness
// flows from a splittable 64-bit generator; instance i of a run is derived
// from (seed, i) only, so identical specs reproduce identical streams on any
// platform.

#ifndef WTPOLY_CORPUS_HPP
#define WTPOLY_CORPUS_HPP

#include "wtpoly/exact.hpp"
#include "wtpoly/io.hpp"
#include "wtpoly/matroid.hpp"
#include "wtpoly/normality.hpp"
#include "wtpoly/polytope.hpp"
#include "wtpoly/roots.hpp"
#include "wtpoly/weights.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace wtpoly {

// ---------------------------------------------------------------------------
// Deterministic RNG
// ---------------------------------------------------------------------------

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t state) : s_(state) {}

    std::uint64_t next() {
        s_ += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = s_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform-ish draw in [0, bound); bound must be positive.  Modulo bias
    /// is irrelevant here, determinism is what matters.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::uint64_t s_;
};

/// Generator for instance `index` of the stream identified by `seed`.
inline SplitMix64 instance_rng(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 mixer(seed);
    std::uint64_t base = mixer.next();
    return SplitMix64(base ^ (index * 0x9e3779b97f4a7c15ull + 0xd1b54a32d192ed03ull));
}

// ---------------------------------------------------------------------------
// Random instances
// ---------------------------------------------------------------------------

struct CorpusSpec {
    std::uint64_t seed = 7;
    std::size_t count = 100;
    std::size_t n_max = 5;
    std::int64_t entry_bound = 9;
    std::int64_t lambda_sum_max = 8;
};

/// Integer entries uniform in [-bound, bound], resampled until invertible.
inline Mat random_invertible_matrix(SplitMix64& rng, std::size_t n, std::int64_t bound) {
    for (;;) {
        std::vector<GaussianRational> entries;
        entries.reserve(n * n);
        for (std::size_t t = 0; t < n * n; ++t)
            entries.emplace_back(rng.range(-bound, bound));
        Mat g(n, n, std::move(entries));
        if (!det(g).is_zero()) return g;
    }
}

/// Random nonzero lift with total at most sum_max, drawn through fundamental
/// coefficients.
inline DominantWeight random_dominant_weight(SplitMix64& rng, std::size_t n,
                                             std::int64_t sum_max) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<std::int64_t> a(n - 1);
        std::int64_t total = 0;
        for (std::size_t k = 1; k < n; ++k) {
            a[k - 1] = rng.range(0, sum_max / static_cast<std::int64_t>(k));
            total += a[k - 1] * static_cast<std::int64_t>(k);
        }
        if (total < 1 || total > sum_max) continue;
        Vec c(n, 0);
        for (std::size_t j = 0; j + 1 < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) c[j] += a[k - 1];
        return DominantWeight(std::move(c));
    }
    Vec c(n, 0);
    c[0] = 1;
    return DominantWeight(std::move(c));  // fundamental weight fallback
}

/// Random root-lattice vector: a short sum of type-A roots.
inline Vec random_root_lattice_vector(SplitMix64& rng, std::size_t n, std::size_t max_terms) {
    Vec t(n, 0);
    std::size_t terms = rng.below(max_terms + 1);
    for (std::size_t s = 0; s < terms; ++s) {
        auto i = static_cast<std::size_t>(rng.below(n));
        auto j = static_cast<std::size_t>(rng.below(n));
        if (i == j) continue;
        t[i] += 1;
        t[j] -= 1;
    }
    return t;
}

struct MatrixWeightInstance {
    std::size_t n;
    Mat g;
    DominantWeight lambda;
};

inline MatrixWeightInstance make_matrix_weight_instance(const CorpusSpec& spec,
                                                        std::size_t index) {
    SplitMix64 rng = instance_rng(spec.seed, index);
    auto n = static_cast<std::size_t>(rng.range(2, static_cast<std::int64_t>(spec.n_max)));
    Mat g = random_invertible_matrix(rng, n, spec.entry_bound);
    DominantWeight l = random_dominant_weight(rng, n, spec.lambda_sum_max);
    return {n, std::move(g), std::move(l)};
}

// ---------------------------------------------------------------------------
// Suites
// ---------------------------------------------------------------------------

struct SuiteResult {
    std::string suite;
    std::size_t count = 0;
    std::size_t passes = 0;
    io::json first_counterexample;  // null when everything passed

    [[nodiscard]] bool all_passed() const { return passes == count; }
};

namespace detail {

inline io::json instance_json(std::size_t index, const Mat& g, const DominantWeight* l) {
    io::json j;
    j["index"] = index;
    j["matrix"] = io::mat_to_json(g);
    if (l) j["lambda"] = l->coords();
    return j;
}

}  // namespace detail

/// Matroid polytopes of random matrices, all ranks: every hull edge must be a
/// single-exchange direction and vice versa.
inline SuiteResult run_ggms_suite(const CorpusSpec& spec) {
    SuiteResult res{"ggms", spec.count, 0, nullptr};
    for (std::size_t i = 0; i < spec.count; ++i) {
        SplitMix64 rng = instance_rng(spec.seed, i);
        auto n = static_cast<std::size_t>(rng.range(2, static_cast<std::int64_t>(spec.n_max)));
        Mat g = random_invertible_matrix(rng, n, spec.entry_bound);
        bool ok = true;
        for (std::size_t k = 1; k < n && ok; ++k) {
            GgmsReport rep = verify_ggms(matroid_from_matrix(g, k));
            if (!rep.pass) {
                ok = false;
                if (res.first_counterexample.is_null()) {
                    io::json j = detail::instance_json(i, g, nullptr);
                    j["k"] = k;
                    j["detail"] = rep.first_counterexample;
                    res.first_counterexample = std::move(j);
                }
            }
        }
        if (ok) ++res.passes;
    }
    return res;
}

/// Weight sets of random (matrix, weight) pairs are root-saturated, and so is
/// every translated fundamental weight set on the way.
inline SuiteResult run_saturation_suite(const CorpusSpec& spec) {
    SuiteResult res{"saturation", spec.count, 0, nullptr};
    for (std::size_t i = 0; i < spec.count; ++i) {
        auto inst = make_matrix_weight_instance(spec, i);
        RootSet roots = type_a_roots(inst.n);
        bool ok = true;
        std::string detail_msg;

        for (std::size_t k = 1; k < inst.n && ok; ++k) {
            Vec fund(inst.n, 0);
            for (std::size_t j = 0; j < k; ++j) fund[j] = 1;
            SaturationReport rep =
                root_saturation_check(fundamental_weight_set(inst.g, k).points, roots, fund);
            if (!rep.is_saturated) {
                ok = false;
                detail_msg = "fundamental weight set k=" + std::to_string(k) + " not saturated";
            }
        }
        if (ok) {
            WeightSet w = weight_set(inst.g, inst.lambda);
            SaturationReport rep =
                root_saturation_check(w.points, roots, inst.lambda.coords());
            if (!rep.is_saturated) {
                ok = false;
                detail_msg = "weight set not saturated";
                if (res.first_counterexample.is_null()) {
                    io::json j = detail::instance_json(i, inst.g, &inst.lambda);
                    j["detail"] = detail_msg;
                    j["report"] = io::saturation_report_to_json(rep);
                    res.first_counterexample = std::move(j);
                }
            }
        } else if (res.first_counterexample.is_null()) {
            io::json j = detail::instance_json(i, inst.g, &inst.lambda);
            j["detail"] = detail_msg;
            res.first_counterexample = std::move(j);
        }
        if (ok) ++res.passes;
    }
    return res;
}

/// Degree scaling: for every lattice point of the hull slice, membership of
/// N*mu at level N agrees with membership of mu at level 1, N in {2,3}.
inline SuiteResult run_scaling_suite(const CorpusSpec& spec) {
    SuiteResult res{"sat-lemma", spec.count, 0, nullptr};
    for (std::size_t i = 0; i < spec.count; ++i) {
        auto inst = make_matrix_weight_instance(spec, i);
        RootSet roots = type_a_roots(inst.n);
        WeightSet w = weight_set(inst.g, inst.lambda);
        PointSet slice = lattice_points_in_hull(w.points, roots.lattice, inst.lambda.coords());
        bool ok = true;
        for (std::int64_t big_n : {std::int64_t{2}, std::int64_t{3}}) {
            WeightSet wn = weight_set(inst.g, inst.lambda.scaled(big_n));
            for (const Vec& mu : slice.points()) {
                bool base = w.points.contains(mu);
                bool scaled = wn.points.contains(vecops::scale(mu, big_n));
                if (base != scaled) {
                    ok = false;
                    if (res.first_counterexample.is_null()) {
                        io::json j = detail::instance_json(i, inst.g, &inst.lambda);
                        j["mu"] = mu;
                        j["N"] = big_n;
                        j["base_member"] = base;
                        j["scaled_member"] = scaled;
                        res.first_counterexample = std::move(j);
                    }
                }
            }
        }
        if (ok) ++res.passes;
    }
    return res;
}

namespace detail {

/// LP feasibility of conv(A) meeting conv(B).
inline bool hulls_intersect(const PointSet& a, const PointSet& b) {
    const std::size_t d = a.dim();
    CoreProblem p;
    p.nvars = a.size() + b.size();
    for (std::size_t j = 0; j < d; ++j) {
        std::vector<Rational> row(p.nvars);
        for (std::size_t t = 0; t < a.size(); ++t) row[t] = a[t][j];
        for (std::size_t t = 0; t < b.size(); ++t) row[a.size() + t] = -Rational(b[t][j]);
        p.rows.push_back(std::move(row));
        p.rels.push_back(Rel::Eq);
        p.rhs.push_back(0);
    }
    for (int side = 0; side < 2; ++side) {
        std::vector<Rational> row(p.nvars);
        for (std::size_t t = 0; t < (side == 0 ? a.size() : b.size()); ++t)
            row[(side == 0 ? 0 : a.size()) + t] = 1;
        p.rows.push_back(std::move(row));
        p.rels.push_back(Rel::Eq);
        p.rhs.push_back(1);
    }
    return core_solve(p).status == LpStatus::Optimal;
}

}  // namespace detail

/// Pairs of root-lattice-translated matroid polytopes whose hulls intersect
/// must share a point.
inline SuiteResult run_intersection_suite(const CorpusSpec& spec) {
    SuiteResult res{"intersection", spec.count, 0, nullptr};
    for (std::size_t i = 0; i < spec.count; ++i) {
        SplitMix64 rng = instance_rng(spec.seed, i);
        auto n = static_cast<std::size_t>(rng.range(2, static_cast<std::int64_t>(spec.n_max)));
        Mat g1 = random_invertible_matrix(rng, n, spec.entry_bound);
        Mat g2 = random_invertible_matrix(rng, n, spec.entry_bound);
        auto k1 = static_cast<std::size_t>(rng.range(1, static_cast<std::int64_t>(n - 1)));
        auto k2 = static_cast<std::size_t>(rng.range(1, static_cast<std::int64_t>(n - 1)));

        auto translate_fund = [n](const PointSet& pts, std::size_t k) {
            Vec fund(n, 0);
            for (std::size_t j = 0; j < k; ++j) fund[j] = -1;
            return pts.translated(fund);
        };
        PointSet a = translate_fund(matroid_polytope(matroid_from_matrix(g1, k1)), k1);
        PointSet b0 = translate_fund(matroid_polytope(matroid_from_matrix(g2, k2)), k2);

        PointSet b = b0;
        bool meet = false;
        for (int attempt = 0; attempt < 20 && !meet; ++attempt) {
            Vec tau = attempt == 0 ? Vec(n, 0) : random_root_lattice_vector(rng, n, 3);
            b = b0.translated(tau);
            meet = detail::hulls_intersect(a, b);
        }
        if (!meet) {
            // Force a common point; still LP-verified below.
            b = b0.translated(vecops::sub(a[0], b0[0]));
            meet = detail::hulls_intersect(a, b);
        }

        bool point_meet = false;
        for (const Vec& p : a.points())
            if (b.contains(p)) {
                point_meet = true;
                break;
            }
        if (meet && point_meet) {
            ++res.passes;
        } else if (res.first_counterexample.is_null()) {
            io::json j;
            j["index"] = i;
            j["matrix1"] = io::mat_to_json(g1);
            j["matrix2"] = io::mat_to_json(g2);
            j["k1"] = k1;
            j["k2"] = k2;
            j["set_a"] = io::pointset_to_json(a);
            j["set_b"] = io::pointset_to_json(b);
            j["hulls_intersect"] = meet;
            res.first_counterexample = std::move(j);
        }
    }
    return res;
}

/// Weight-set semigroups of random orbits have no holes up to the degree
/// bound.
inline SuiteResult run_normality_suite(const CorpusSpec& spec, std::size_t max_degree = 4) {
    SuiteResult res{"normality", spec.count, 0, nullptr};
    for (std::size_t i = 0; i < spec.count; ++i) {
        auto inst = make_matrix_weight_instance(spec, i);
        HoleReport rep = orbit_closure_normality(inst.g, inst.lambda, max_degree);
        if (rep.normal_up_to_degree) {
            ++res.passes;
        } else if (res.first_counterexample.is_null()) {
            io::json j = detail::instance_json(i, inst.g, &inst.lambda);
            j["report"] = io::hole_report_to_json(rep);
            res.first_counterexample = std::move(j);
        }
    }
    return res;
}

/// Random forests extend to spanning trees whose roots form an index-1 basis
/// of the root lattice.
inline SuiteResult run_basis_suite(const CorpusSpec& spec) {
    SuiteResult res{"basis", spec.count, 0, nullptr};
    for (std::size_t i = 0; i < spec.count; ++i) {
        SplitMix64 rng = instance_rng(spec.seed, i);
        auto n = static_cast<std::size_t>(rng.range(2, static_cast<std::int64_t>(spec.n_max)));

        std::vector<std::pair<std::size_t, std::size_t>> all_edges;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b) all_edges.emplace_back(a, b);
        for (std::size_t t = all_edges.size(); t > 1; --t)
            std::swap(all_edges[t - 1], all_edges[rng.below(t)]);

        auto m = static_cast<std::size_t>(rng.range(0, static_cast<std::int64_t>(n - 1)));
        std::vector<std::size_t> comp(n);
        std::iota(comp.begin(), comp.end(), std::size_t{0});
        auto find = [&](std::size_t x) {
            while (comp[x] != x) x = comp[x];
            return x;
        };
        std::vector<Vec> forest;
        for (const auto& [a, b] : all_edges) {
            if (forest.size() == m) break;
            std::size_t ca = find(a), cb = find(b);
            if (ca == cb) continue;
            comp[ca] = cb;
            Vec r(n, 0);
            bool flip = rng.below(2) == 1;
            r[a] = flip ? -1 : 1;
            r[b] = flip ? 1 : -1;
            forest.push_back(std::move(r));
        }

        bool ok = false;
        io::json detail_j;
        try {
            auto out = extend_to_root_basis(forest, n);
            if (auto* ext = std::get_if<BasisExtension>(&out)) {
                ok = std::all_of(ext->invariant_factors.begin(), ext->invariant_factors.end(),
                                 [](const Integer& d) { return d == 1; });
                std::vector<std::vector<std::int64_t>> gens;
                for (const Vec& r : ext->basis) gens.emplace_back(r.begin(), r.end());
                auto idx = lattice_index(IntegerLattice::from_generators(n, gens),
                                         type_a_roots(n).lattice);
                ok = ok && idx && *idx == 1;
                if (!ok) detail_j["detail"] = "completion is not an index-1 basis";
            } else {
                detail_j["detail"] = "forest input reported as dependent";
            }
        } catch (const std::exception& e) {
            detail_j["detail"] = std::string("exception: ") + e.what();
        }
        if (ok) {
            ++res.passes;
        } else if (res.first_counterexample.is_null()) {
            detail_j["index"] = i;
            detail_j["n"] = n;
            io::json fj = io::json::array();
            for (const Vec& r : forest) fj.push_back(r);
            detail_j["forest"] = fj;
            res.first_counterexample = std::move(detail_j);
        }
    }
    return res;
}

inline SuiteResult run_suite(const std::string& name, const CorpusSpec& spec) {
    if (name == "ggms") return run_ggms_suite(spec);
    if (name == "saturation") return run_saturation_suite(spec);
    if (name == "sat-lemma") return run_scaling_suite(spec);
    if (name == "intersection") return run_intersection_suite(spec);
    if (name == "normality") return run_normality_suite(spec);
    if (name == "basis") return run_basis_suite(spec);
    throw std::invalid_argument("unknown suite: " + name);
}

/// Suite-appropriate corpus defaults; explicit CLI flags override these.
inline CorpusSpec default_spec_for(const std::string& name) {
    CorpusSpec spec;
    if (name == "ggms") {
        spec.n_max = 6;
        spec.count = 200;
    } else if (name == "saturation" || name == "sat-lemma") {
        spec.n_max = 5;
        spec.lambda_sum_max = 8;
    } else if (name == "intersection") {
        spec.n_max = 5;
    } else if (name == "normality") {
        spec.n_max = 4;
        spec.lambda_sum_max = 5;
        spec.count = 50;
    } else if (name == "basis") {
        spec.n_max = 8;
        spec.count = 1000;
    }
    return spec;
}

// ---------------------------------------------------------------------------
// Exhaustive exchange/edge equivalence at small size
// ---------------------------------------------------------------------------

struct ExhaustiveGgmsResult {
    std::size_t families = 0;
    std::size_t discrepancies = 0;
    io::json first_counterexample;
};

/// Over every nonempty family of k-subsets of {1..n} for n <= n_max: the
/// exchange axiom holds iff all hull edges of the indicator polytope are
/// single-exchange directions.
inline ExhaustiveGgmsResult exhaustive_exchange_edge_equivalence(std::size_t n_max) {
    ExhaustiveGgmsResult res;
    for (std::size_t n = 1; n <= n_max; ++n)
        for (std::size_t k = 1; k <= n; ++k) {
            std::vector<std::vector<std::size_t>> subsets;
            std::vector<std::size_t> idx(k);
            std::iota(idx.begin(), idx.end(), std::size_t{0});
            for (;;) {
                subsets.push_back(idx);
                std::size_t t = k;
                while (t > 0 && idx[t - 1] == n - k + t - 1) --t;
                if (t == 0) break;
                ++idx[t - 1];
                for (std::size_t j = t; j < k; ++j) idx[j] = idx[j - 1] + 1;
            }
            const std::size_t total = std::size_t{1} << subsets.size();
            for (std::size_t mask = 1; mask < total; ++mask) {
                std::vector<std::vector<std::size_t>> bases;
                for (std::size_t t = 0; t < subsets.size(); ++t)
                    if (mask & (std::size_t{1} << t)) bases.push_back(subsets[t]);
                Matroid m(n, k, bases);
                bool exchange_ok = !check_exchange(m).has_value();
                bool edges_ok = true;
                for (const auto& [u, v] : edges(matroid_polytope(m)))
                    if (!detail::is_single_exchange_direction(vecops::sub(u, v))) {
                        edges_ok = false;
                        break;
                    }
                ++res.families;
                if (exchange_ok != edges_ok) {
                    ++res.discrepancies;
                    if (res.first_counterexample.is_null()) {
                        io::json j;
                        j["n"] = n;
                        j["k"] = k;
                        j["bases"] = io::matroid_to_json(m)["bases"];
                        j["exchange_ok"] = exchange_ok;
                        j["edges_ok"] = edges_ok;
                        res.first_counterexample = std::move(j);
                    }
                }
            }
        }
    return res;
}

// ---------------------------------------------------------------------------
// The isotropic-line demo
// ---------------------------------------------------------------------------

struct So5Report {
    PointSet weight_set{2};
    SaturationReport saturation;
    bool origin_in_square = false;
    bool matches_expected = false;
};

/// Weight set of the isotropic line through (1, i, 0, i, 1) under the
/// diagonal rank-2 torus: four points forming a square whose hull contains
/// the origin, which is missing from the set itself; the origin reappears in
/// the Minkowski square.
inline So5Report so5_demo() {
    std::vector<GaussianRational> v = {GaussianRational(1), GaussianRational::i(),
                                       GaussianRational(0), GaussianRational::i(),
                                       GaussianRational(1)};
    std::vector<Vec> coord_weights = {{1, 0}, {0, 1}, {0, 0}, {0, -1}, {-1, 0}};
    So5Report rep;
    rep.weight_set = projective_point_weight_set(v, coord_weights);
    rep.saturation = root_saturation_check(rep.weight_set, b2_roots(), {1, 0});
    PointSet square2 = minkowski_sum(rep.weight_set, rep.weight_set);
    rep.origin_in_square = square2.contains({0, 0});

    PointSet expected(2, {{1, 0}, {0, 1}, {0, -1}, {-1, 0}});
    PointSet expected_missing(2, {{0, 0}});
    rep.matches_expected = rep.weight_set == expected && !rep.saturation.is_saturated &&
                           rep.saturation.edge_violations.empty() &&
                           rep.saturation.missing_points == expected_missing &&
                           rep.origin_in_square;
    return rep;
}

}  // namespace wtpoly

#endif  // WTPOLY_CORPUS_HPP
