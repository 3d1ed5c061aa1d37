#include "wtpoly/corpus.hpp"
#include "wtpoly/weights.hpp"

#include "oracle.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <set>

using namespace wtpoly;

namespace {

Mat vandermonde3() {
    return Mat::from_int_rows({{1, 1, 1}, {1, 2, 4}, {1, 3, 9}});
}

DominantWeight dw(std::vector<std::int64_t> v) { return DominantWeight(Vec(v.begin(), v.end())); }

/// Reference saturation check routed through the public edge enumeration.
SaturationReport saturation_via_edges(const PointSet& a, const RootSet& rs, const Vec& shift) {
    SaturationReport rep;
    std::unordered_set<Vec, vecops::VecHash> root_dirs;
    for (const Vec& r : rs.roots.points()) root_dirs.insert(vecops::primitive(r));
    for (const auto& [u, v] : edges(a))
        if (!root_dirs.count(vecops::primitive(vecops::sub(u, v)))) {
            Vec lo = std::min(u, v), hi = std::max(u, v);
            rep.edge_violations.emplace_back(std::move(lo), std::move(hi));
        }
    std::sort(rep.edge_violations.begin(), rep.edge_violations.end());
    PointSet inside = lattice_points_in_hull(a, rs.lattice, shift);
    std::vector<Vec> missing;
    for (const Vec& p : inside.points())
        if (!a.contains(p)) missing.push_back(p);
    rep.missing_points = PointSet(a.dim(), std::move(missing));
    rep.is_saturated = rep.edge_violations.empty() && rep.missing_points.empty();
    return rep;
}

}  // namespace

TEST_CASE("fundamental weight sets") {
    CHECK(fundamental_weight_set(Mat::identity(3), 1).points == PointSet(3, {{1, 0, 0}}));
    CHECK(fundamental_weight_set(vandermonde3(), 1).points ==
          PointSet(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    CHECK(fundamental_weight_set(Mat::identity(3), 2).points == PointSet(3, {{1, 1, 0}}));
    CHECK(fundamental_weight_set(vandermonde3(), 2).grading == 2);

    Mat singular = Mat::from_int_rows({{1, 1, 1}, {1, 1, 1}, {0, 0, 1}});
    CHECK_THROWS_AS(fundamental_weight_set(singular, 1), SingularMatrixError);
}

TEST_CASE("weight sets from fundamental decompositions") {
    SECTION("zero weight") {
        WeightSet w = weight_set(vandermonde3(), dw({0, 0, 0}));
        CHECK(w.points == PointSet(3, {{0, 0, 0}}));
        CHECK(w.grading == 0);
    }
    SECTION("generic 3x3 at (2,1,0): the seven graded points") {
        WeightSet w = weight_set(vandermonde3(), dw({2, 1, 0}));
        // brute force: {e_i} + {e_i + e_j}
        std::set<Vec> ones = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
        std::set<Vec> twos = {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}};
        auto brute = oracle::minkowski_bruteforce(ones, twos);
        CHECK(brute.size() == 7);
        CHECK(w.points.size() == 7);
        for (const Vec& p : brute) CHECK(w.points.contains(p));
    }
    SECTION("identity at (1,1,0)") {
        CHECK(weight_set(Mat::identity(3), dw({1, 1, 0})).points == PointSet(3, {{1, 1, 0}}));
    }
    SECTION("grading invariant") {
        SplitMix64 rng(2);
        for (int trial = 0; trial < 8; ++trial) {
            auto n = static_cast<std::size_t>(rng.range(2, 4));
            Mat g = random_invertible_matrix(rng, n, 9);
            DominantWeight l = random_dominant_weight(rng, n, 6);
            WeightSet w = weight_set(g, l);
            for (const Vec& p : w.points.points()) CHECK(vecops::sum(p) == l.total());
        }
    }
    SECTION("additivity in the weight: a regression guard on the sum engine") {
        SplitMix64 rng(3);
        for (int trial = 0; trial < 6; ++trial) {
            auto n = static_cast<std::size_t>(rng.range(2, 4));
            Mat g = random_invertible_matrix(rng, n, 9);
            DominantWeight l1 = random_dominant_weight(rng, n, 4);
            DominantWeight l2 = random_dominant_weight(rng, n, 4);
            Vec sum = vecops::add(l1.coords(), l2.coords());
            WeightSet w12 = weight_set(g, DominantWeight(sum));
            CHECK(w12.points ==
                  minkowski_sum(weight_set(g, l1).points, weight_set(g, l2).points));
        }
    }
}

TEST_CASE("root saturation checking") {
    SECTION("weight set of a generic matrix is saturated") {
        WeightSet w = weight_set(vandermonde3(), dw({2, 1, 0}));
        SaturationReport rep =
            root_saturation_check(w.points, type_a_roots(3), {2, 1, 0});
        CHECK(rep.is_saturated);
    }
    SECTION("the four-point square misses the origin") {
        PointSet square(2, {{1, 0}, {0, 1}, {0, -1}, {-1, 0}});
        SaturationReport rep = root_saturation_check(square, b2_roots(), {1, 0});
        CHECK_FALSE(rep.is_saturated);
        CHECK(rep.edge_violations.empty());
        CHECK(rep.missing_points == PointSet(2, {{0, 0}}));
    }
    SECTION("single point is saturated vacuously") {
        SaturationReport rep =
            root_saturation_check(PointSet(2, {{1, -1}}), type_a_roots(2), {0, 0});
        CHECK(rep.is_saturated);
    }
    SECTION("non-root edges are detected") {
        PointSet two(4, {{0, 0, 0, 0}, {1, 1, -1, -1}});
        SaturationReport rep = root_saturation_check(two, type_a_roots(4), {0, 0, 0, 0});
        REQUIRE(rep.edge_violations.size() == 1);
        CHECK_FALSE(rep.is_saturated);
    }
    SECTION("precondition violations") {
        PointSet p(2, {{1, 0}});
        CHECK_THROWS_AS(root_saturation_check(p, type_a_roots(2), {0, 0}), LatticeError);
    }
    SECTION("translation equivalence: checking W at shift lambda matches W - lambda at 0") {
        WeightSet w = weight_set(vandermonde3(), dw({2, 1, 0}));
        SaturationReport at_lambda = root_saturation_check(w.points, type_a_roots(3), {2, 1, 0});
        PointSet translated = w.points.translated({-2, -1, 0});
        SaturationReport at_zero = root_saturation_check(translated, type_a_roots(3), {0, 0, 0});
        CHECK(at_lambda.is_saturated == at_zero.is_saturated);
        CHECK(at_lambda.missing_points.size() == at_zero.missing_points.size());
    }
    SECTION("pruned scan agrees with the edge-enumeration route") {
        SplitMix64 rng(42);
        RootSet r3 = type_a_roots(3);
        for (int trial = 0; trial < 12; ++trial) {
            // small random sets inside the root lattice
            std::vector<Vec> pts;
            std::size_t count = 2 + rng.below(5);
            for (std::size_t t = 0; t < count; ++t) {
                std::int64_t a = rng.range(-2, 2), b = rng.range(-2, 2);
                pts.push_back({a, b, -a - b});
            }
            PointSet set(3, std::move(pts));
            SaturationReport fast = root_saturation_check(set, r3, {0, 0, 0});
            SaturationReport slow = saturation_via_edges(set, r3, {0, 0, 0});
            CHECK(fast.edge_violations == slow.edge_violations);
            CHECK(fast.missing_points == slow.missing_points);
            CHECK(fast.is_saturated == slow.is_saturated);
        }
        // and on the rank-2 square fixture
        PointSet square(2, {{1, 0}, {0, 1}, {0, -1}, {-1, 0}});
        SaturationReport fast = root_saturation_check(square, b2_roots(), {1, 0});
        SaturationReport slow = saturation_via_edges(square, b2_roots(), {1, 0});
        CHECK(fast.edge_violations == slow.edge_violations);
        CHECK(fast.missing_points == slow.missing_points);
    }
}

TEST_CASE("degree scaling of weight-set membership") {
    SECTION("level 1 is the same computation twice") {
        ScalingReport rep =
            saturation_lemma_check(vandermonde3(), dw({1, 0, 0}), WeightVec(Vec{0, 1, 0}), 1);
        CHECK(rep.agree());
        CHECK(rep.base_member);
    }
    SECTION("generic matrix, N = 2") {
        ScalingReport rep =
            saturation_lemma_check(vandermonde3(), dw({1, 0, 0}), WeightVec(Vec{0, 1, 0}), 2);
        CHECK(rep.base_member);
        CHECK(rep.scaled_member);
    }
    SECTION("identity matrix, N = 2: both sides empty") {
        ScalingReport rep =
            saturation_lemma_check(Mat::identity(3), dw({1, 0, 0}), WeightVec(Vec{0, 1, 0}), 2);
        CHECK_FALSE(rep.base_member);
        CHECK_FALSE(rep.scaled_member);
    }
    SECTION("grading mismatch is rejected") {
        CHECK_THROWS_AS(
            saturation_lemma_check(vandermonde3(), dw({1, 0, 0}), WeightVec(Vec{1, 1, 0}), 2),
            GradingError);
    }
}

TEST_CASE("semistability decisions") {
    SECTION("identity flag is unstable off its own weight") {
        SemistabilityReport rep =
            semistable(Mat::identity(3), dw({1, 0, 0}), WeightVec(Vec{0, 1, 0}));
        CHECK_FALSE(rep.semistable);
        CHECK(rep.in_root_lattice_case);
        CHECK_FALSE(rep.witness.has_value());
        REQUIRE_FALSE(rep.hull_certificate.inside);
        // the separating functional must actually separate
        Rational fq(0);
        for (std::size_t j = 0; j < 3; ++j)
            fq += rep.hull_certificate.functional[j] * Rational(rep.normalized_target[j]);
        CHECK(fq > rep.hull_certificate.bound);
    }
    SECTION("generic flag at (2,1,0) with the democratic weight: degree-1 witness") {
        SemistabilityReport rep =
            semistable(vandermonde3(), dw({2, 1, 0}), WeightVec(Vec{1, 1, 1}));
        REQUIRE(rep.semistable);
        CHECK(rep.in_root_lattice_case);
        CHECK(rep.witness_degree == 1);
        REQUIRE(rep.witness.has_value());
        REQUIRE(rep.witness->factors.size() == 2);
        CHECK(rep.witness->factors[0].k == 1);
        CHECK(rep.witness->factors[0].rows == std::vector<std::size_t>{0});
        CHECK(rep.witness->factors[1].k == 2);
        CHECK(rep.witness->factors[1].rows == std::vector<std::size_t>{1, 2});
        CHECK_FALSE(bracket_evaluate(*rep.witness, vandermonde3()).is_zero());
        CHECK(bracket_weight(*rep.witness, 3) == Vec{1, 1, 1});
    }
    SECTION("zero weight pair is semistable with an empty witness") {
        SemistabilityReport rep = semistable(vandermonde3(), dw({0, 0, 0}), WeightVec(Vec{0, 0, 0}));
        CHECK(rep.semistable);
        REQUIRE(rep.witness.has_value());
        CHECK(rep.witness->factors.empty());
    }
    SECTION("weight outside the permutation hull is rejected with a certificate") {
        SemistabilityReport rep =
            semistable(vandermonde3(), dw({2, 1, 0}), WeightVec(Vec{3, 0, 0}));
        CHECK_FALSE(rep.semistable);
        Rational fq(0), cap(0);
        for (std::size_t j = 0; j < 3; ++j)
            fq += rep.hull_certificate.functional[j] * Rational(rep.normalized_target[j]);
        CHECK(fq > rep.hull_certificate.bound);
        WeightSet w = weight_set(vandermonde3(), dw({2, 1, 0}));
        for (const Vec& p : w.points.points()) {
            Rational v(0);
            for (std::size_t j = 0; j < 3; ++j)
                v += rep.hull_certificate.functional[j] * Rational(p[j]);
            CHECK(v <= rep.hull_certificate.bound);
        }
    }
    SECTION("weight difference outside the root lattice: minimal level witness") {
        SemistabilityReport rep =
            semistable(vandermonde3(), dw({1, 0, 0}), WeightVec(Vec{0, 0, 0}));
        REQUIRE(rep.semistable);
        CHECK_FALSE(rep.in_root_lattice_case);
        CHECK(rep.witness_degree == 3);
        CHECK(rep.normalized_target == Vec{1, 1, 1});
        REQUIRE(rep.witness.has_value());
        CHECK(rep.witness->factors.size() == 3);
        CHECK(bracket_weight(*rep.witness, 3) == Vec{1, 1, 1});
        CHECK_FALSE(bracket_evaluate(*rep.witness, vandermonde3()).is_zero());
    }
}

TEST_CASE("every weight-set member carries a valid bracket witness") {
    SplitMix64 rng(64);
    for (int trial = 0; trial < 6; ++trial) {
        auto n = static_cast<std::size_t>(rng.range(2, 4));
        Mat g = random_invertible_matrix(rng, n, 9);
        DominantWeight l = random_dominant_weight(rng, n, 5);
        WeightSet w = weight_set(g, l);
        FundDecomp a = fundamental_decomposition(l);
        for (const Vec& mu : w.points.points()) {
            auto mono = bracket_witness(g, l, mu);
            REQUIRE(mono.has_value());
            CHECK(bracket_weight(*mono, n) == mu);
            CHECK_FALSE(bracket_evaluate(*mono, g).is_zero());
            std::vector<std::int64_t> level_count(n, 0);
            for (const auto& f : mono->factors) ++level_count[f.k - 1];
            for (std::size_t k = 1; k < n; ++k) CHECK(level_count[k - 1] == a.a[k - 1]);
        }
        // a point off the set has no witness
        Vec off = w.points[0];
        off[0] += 1;
        if (!w.points.contains(off)) CHECK_FALSE(bracket_witness(g, l, off).has_value());
    }
}

TEST_CASE("weight sets of projective points") {
    SECTION("the isotropic line fixture") {
        std::vector<GaussianRational> v = {GaussianRational(1), GaussianRational::i(),
                                           GaussianRational(0), GaussianRational::i(),
                                           GaussianRational(1)};
        std::vector<Vec> cw = {{1, 0}, {0, 1}, {0, 0}, {0, -1}, {-1, 0}};
        CHECK(projective_point_weight_set(v, cw) ==
              PointSet(2, {{1, 0}, {0, 1}, {0, -1}, {-1, 0}}));
    }
    SECTION("single nonzero coordinate") {
        std::vector<GaussianRational> v = {GaussianRational(1), GaussianRational(0)};
        CHECK(projective_point_weight_set(v, {{3, 1}, {0, 1}}) == PointSet(2, {{3, 1}}));
    }
    SECTION("all nonzero") {
        std::vector<GaussianRational> v = {GaussianRational(2), GaussianRational(0, 1)};
        CHECK(projective_point_weight_set(v, {{1, 0}, {0, 1}}).size() == 2);
    }
    SECTION("zero vector rejected") {
        std::vector<GaussianRational> v = {GaussianRational(0)};
        CHECK_THROWS_AS(projective_point_weight_set(v, {{1, 0}}), std::invalid_argument);
    }
}

TEST_CASE("intersection of translated matroid polytopes") {
    CorpusSpec spec = default_spec_for("intersection");
    spec.count = 20;
    spec.seed = 21;
    SuiteResult res = run_intersection_suite(spec);
    CHECK(res.passes == res.count);
}

TEST_CASE("fundamental weight sets are saturated after translation") {
    SplitMix64 rng(1000);
    for (int trial = 0; trial < 5; ++trial) {
        auto n = static_cast<std::size_t>(rng.range(2, 5));
        Mat g = random_invertible_matrix(rng, n, 9);
        RootSet roots = type_a_roots(n);
        for (std::size_t k = 1; k < n; ++k) {
            Vec fund(n, 0);
            for (std::size_t j = 0; j < k; ++j) fund[j] = 1;
            SaturationReport rep =
                root_saturation_check(fundamental_weight_set(g, k).points, roots, fund);
            CHECK(rep.is_saturated);
        }
    }
}
